#pragma once

#include <string>

#include "hsi/selfref.hpp"
#include "hsi/solvers.hpp"

namespace hsi {

std::string to_json(const SolveReport& report, bool quasi);
std::string to_json(const SwapRecord& record);
std::string to_json(const SelfRefPair& pair);

}  // namespace hsi
