#pragma once

#include "modcheck/exact.hpp"

#include <vector>

namespace modcheck::linalg {

using exact::Rational;
using Rows = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Rows& rows, std::size_t ncols);
std::size_t rank(Rows rows, std::size_t ncols);
// Basis of {x : rows * x = 0}.
Rows kernel(Rows rows, std::size_t ncols);

}  // namespace modcheck::linalg
