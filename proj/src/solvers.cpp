#include "hsi/solvers.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <string>

#include "hsi/combinatorics.hpp"
#include "hsi/errors.hpp"

namespace hsi {

namespace {

enum class Target { dominating, quasi };

struct BlockResult {
    std::uint64_t count = 0;
    std::vector<VertexSet> witnesses;
    std::vector<Vertex> missed;
};

// Visits every k-subset whose largest element is `top`, in colex order,
// keeping a running union of closed-neighborhood masks per depth.
template <std::size_t FixedWords>
class SubsetWalker {
public:
    SubsetWalker(const Hypergraph& g, std::size_t k, Target target, std::size_t cap)
        : g_(g), k_(k), words_(FixedWords ? FixedWords : g.mask_words()), target_(target), cap_(cap),
          acc_(k * words_, 0), chosen_(k, 0), full_(words_, ~std::uint64_t{0}) {
        const std::size_t tail = g.n() % 64;
        if (tail != 0) full_.back() = (std::uint64_t{1} << tail) - 1;
    }

    BlockResult run(Vertex top) {
        result_ = {};
        chosen_[k_ - 1] = top;
        const auto row = g_.mask(top);
        std::copy(row.begin(), row.end(), level(k_ - 1));
        descend(k_ - 1);
        return std::move(result_);
    }

private:
    std::uint64_t* level(std::size_t pos) { return acc_.data() + pos * words_; }

    // acc at `pos` holds the union for chosen_[pos..k-1]; pick chosen_[pos-1].
    void descend(std::size_t pos) {
        if (pos == 0) {
            evaluate(level(0));
            return;
        }
        const std::uint64_t* above = level(pos);
        std::uint64_t* here = level(pos - 1);
        for (Vertex c = static_cast<Vertex>(pos - 1); c < chosen_[pos]; ++c) {
            chosen_[pos - 1] = c;
            const std::uint64_t* row = g_.mask(c).data();
            for (std::size_t w = 0; w < words_; ++w) here[w] = above[w] | row[w];
            descend(pos - 1);
        }
    }

    void evaluate(const std::uint64_t* acc) {
        if (target_ == Target::dominating) {
            for (std::size_t w = 0; w < words_; ++w)
                if (acc[w] != full_[w]) return;
            record(0);
            return;
        }
        int missing = 0;
        Vertex missed = 0;
        for (std::size_t w = 0; w < words_; ++w) {
            const std::uint64_t hole = full_[w] & ~acc[w];
            if (hole == 0) continue;
            missing += std::popcount(hole);
            if (missing > 1) return;
            missed = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(hole)));
        }
        if (missing == 1) record(missed);
    }

    void record(Vertex missed) {
        ++result_.count;
        if (result_.witnesses.size() < cap_) {
            result_.witnesses.emplace_back(chosen_);
            if (target_ == Target::quasi) result_.missed.push_back(missed);
        }
    }

    const Hypergraph& g_;
    std::size_t k_;
    std::size_t words_;
    Target target_;
    std::size_t cap_;
    std::vector<std::uint64_t> acc_;
    std::vector<Vertex> chosen_;
    std::vector<std::uint64_t> full_;
    BlockResult result_;
};

template <std::size_t FixedWords>
void run_blocks(const Hypergraph& g, std::size_t k, Target target, const SolveOptions& options,
                std::vector<BlockResult>& blocks) {
    const std::size_t first = k - 1;
    const auto count = static_cast<std::int64_t>(g.n() - first);
    if (options.execution == Execution::serial) {
        SubsetWalker<FixedWords> walker(g, k, target, options.witness_cap);
        for (std::int64_t b = 0; b < count; ++b) blocks[b] = walker.run(static_cast<Vertex>(first + b));
        return;
    }
#pragma omp parallel num_threads(worker_count())
    {
        SubsetWalker<FixedWords> walker(g, k, target, options.witness_cap);
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t b = 0; b < count; ++b) blocks[b] = walker.run(static_cast<Vertex>(first + b));
    }
}

SolveReport enumerate(const Hypergraph& g, std::size_t k, Target target, const SolveOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    if (k < 1 || k > g.n()) throw UsageError("k must lie in [1, n]");
    if (!g.has_masks()) {
        throw SizeError("enumeration needs neighborhood masks (n <= " + std::to_string(kMaskVertexLimit) + ")");
    }
    std::uint64_t subsets = 0;
    try {
        subsets = binomial(static_cast<std::int64_t>(g.n()), static_cast<std::int64_t>(k));
    } catch (const SizeError&) {
        throw SizeError("C(n,k) exceeds 64 bits; budget " + std::to_string(options.budget) + " exceeded");
    }
    if (subsets > options.budget) {
        throw SizeError("C(" + std::to_string(g.n()) + "," + std::to_string(k) + ") = " + std::to_string(subsets) +
                        " subsets exceeds budget " + std::to_string(options.budget));
    }

    std::vector<BlockResult> blocks(g.n() - (k - 1));
    if (g.mask_words() == 1) run_blocks<1>(g, k, target, options, blocks);
    else run_blocks<0>(g, k, target, options, blocks);

    SolveReport report;
    report.k = k;
    report.subsets_examined = subsets;
    for (BlockResult& block : blocks) {
        report.count += block.count;
        for (std::size_t j = 0; j < block.witnesses.size() && report.witnesses.size() < options.witness_cap; ++j) {
            report.witnesses.push_back(std::move(block.witnesses[j]));
            if (target == Target::quasi) report.missed.push_back(block.missed[j]);
        }
    }
    report.unique = report.count == 1;
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

class ExistenceSearch {
public:
    explicit ExistenceSearch(const Hypergraph& g) : g_(g), words_(g.mask_words()) {
        for (std::size_t u = 0; u < g.n(); ++u) {
            std::size_t size = 0;
            for (std::uint64_t w : g.mask(static_cast<Vertex>(u))) size += static_cast<std::size_t>(std::popcount(w));
            sizes_.push_back(size);
            widest_ = std::max(widest_, size);
        }
    }

    bool run(std::size_t picks) {
        std::vector<std::uint64_t> covered(words_, 0);
        return search(covered, picks);
    }

private:
    bool search(const std::vector<std::uint64_t>& covered, std::size_t picks) {
        std::size_t uncovered = 0;
        Vertex branch = 0;
        std::size_t branch_size = SIZE_MAX;
        for (std::size_t v = 0; v < g_.n(); ++v) {
            if ((covered[v / 64] >> (v % 64)) & 1U) continue;
            ++uncovered;
            if (sizes_[v] < branch_size) {
                branch_size = sizes_[v];
                branch = static_cast<Vertex>(v);
            }
        }
        if (uncovered == 0) return true;
        if (picks == 0 || uncovered > picks * widest_) return false;
        std::vector<std::uint64_t> next(words_);
        // some member of S_branch must be picked
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t bits = g_.mask(branch)[w];
            while (bits != 0) {
                const auto u = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
                const auto row = g_.mask(u);
                for (std::size_t x = 0; x < words_; ++x) next[x] = covered[x] | row[x];
                if (search(next, picks - 1)) return true;
            }
        }
        return false;
    }

    const Hypergraph& g_;
    std::size_t words_;
    std::vector<std::size_t> sizes_;
    std::size_t widest_ = 0;
};

}  // namespace

SolveReport enumerate_dominating_sets(const Hypergraph& g, std::size_t k, const SolveOptions& options) {
    return enumerate(g, k, Target::dominating, options);
}

SolveReport enumerate_quasi_dominating_sets(const Hypergraph& g, std::size_t k, const SolveOptions& options) {
    return enumerate(g, k, Target::quasi, options);
}

bool has_dominating_set(const Hypergraph& g, std::size_t k) {
    if (k > g.n()) throw UsageError("k must not exceed n");
    if (g.n() == 0) return true;
    if (!g.has_masks()) throw SizeError("existence search needs neighborhood masks");
    return ExistenceSearch(g).run(k);
}

bool is_vertex_cover(const Hypergraph& g, const VertexSet& s) {
    check_vertex_set(g, s);
    return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
        return std::any_of(e.begin(), e.end(), [&](Vertex v) { return s.contains(v); });
    });
}

}  // namespace hsi
