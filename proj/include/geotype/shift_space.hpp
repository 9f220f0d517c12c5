#ifndef GEOTYPE_SHIFT_SPACE_HPP
#define GEOTYPE_SHIFT_SPACE_HPP

#include <stdexcept>
#include <vector>

#include "geotype/boundary.hpp"
#include "geotype/codes.hpp"
#include "geotype/core.hpp"

namespace geotype {

// Raised when an enumeration would exceed its configured budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// True iff every adjacent symbol pair of w has incidence entry 1. Requires a
// binary incidence matrix; throws std::domain_error otherwise (refine the
// type first).
bool is_admissible(const GeometricType& t, const BiCode& w);
bool is_admissible(const IncidenceMatrix& a, const BiCode& w);

// Admissibility of a one-sided code (pairs read along the stated direction).
bool is_admissible(const GeometricType& t, const OneSidedCode& c);
bool is_admissible(const IncidenceMatrix& a, const OneSidedCode& c);

// The sequence re-indexed by z -> z + steps.
BiCode shift(const BiCode& w, long long steps);

OneSidedCode positive_part(const BiCode& w);
OneSidedCode negative_part(const BiCode& w);

struct ClassificationFlags {
    bool in_s = false;
    bool in_u = false;
    bool interior() const { return !in_s && !in_u; }
    auto operator<=>(const ClassificationFlags&) const = default;
};

// Whether some forward shift of w has a boundary positive part (in_s) and
// some backward shift a boundary negative part (in_u). Both flags false
// means the code is totally interior. Requires t binary and w admissible.
ClassificationFlags classify(const GeometricType& t, const BiCode& w);

// Same decision against a prebuilt table, for callers in a loop.
ClassificationFlags classify(const GeometricType& t, const BoundaryCodeTable& table,
                             const BiCode& w);

// All purely periodic admissible codes with primitive period length <= p, in
// canonical form, sorted. Shifted codes are distinct codes. Throws
// BudgetError when p * n^p exceeds the budget.
std::vector<BiCode> enumerate_periodic(const GeometricType& t, int p,
                                       long long budget = 1'000'000);

}  // namespace geotype

#endif  // GEOTYPE_SHIFT_SPACE_HPP
