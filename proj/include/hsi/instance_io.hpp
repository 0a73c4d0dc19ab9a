#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "hsi/hypergraph.hpp"

namespace hsi {

/// A hypergraph plus the generation metadata carried in instance files.
struct Instance {
    Hypergraph graph;
    std::optional<double> p;
    std::optional<std::uint64_t> seed;

    friend bool operator==(const Instance&, const Instance&) = default;
};

/// Canonical one-line text form:
///   {"n":N,"d":D,"edges":[[a,b,c],...],"p":P,"seed":S}
/// Edges are lexicographic, vertices ascending; p and seed are omitted when
/// absent.
std::string serialize_instance(const Instance& instance);

/// Parses the canonical form. Unknown keys, duplicate edges and malformed
/// edges are rejected with UsageError.
Instance parse_instance(std::string_view text);

Instance read_instance_file(const std::filesystem::path& path);
void write_instance_file(const std::filesystem::path& path, const Instance& instance);

}  // namespace hsi
