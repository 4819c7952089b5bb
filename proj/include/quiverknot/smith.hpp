#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace quiverknot {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Diagonal of the Smith normal form of an integer matrix: min(rows, cols)
/// non-negative entries with d[i] | d[i+1], zeros last.
std::vector<BigInt> smith_diagonal(IntMatrix m);

}  // namespace quiverknot
