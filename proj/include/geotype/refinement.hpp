#ifndef GEOTYPE_REFINEMENT_HPP
#define GEOTYPE_REFINEMENT_HPP

#include <utility>

#include "geotype/core.hpp"

namespace geotype {

// Rank of a horizontal label under the lexicographic order on (i, j):
// r(i0, j0) = sum of h_i for i < i0, plus j0. A bijection onto 1..alpha.
// Throws std::invalid_argument if the label is out of range for t.
long long lex_index(const GeometricType& t, const HLabel& lbl);

// The geometric type of the partition whose rectangles are the horizontal
// subrectangles of t, reindexed lexicographically. Its incidence matrix is
// binary. Throws std::invalid_argument if t is invalid.
GeometricType binary_refinement(const GeometricType& t);

// Returns (t, false) when the incidence matrix of t is already binary,
// otherwise (binary_refinement(t), true).
std::pair<GeometricType, bool> refine_if_needed(const GeometricType& t);

}  // namespace geotype

#endif  // GEOTYPE_REFINEMENT_HPP
