#ifndef GEOTYPE_BOUNDARY_HPP
#define GEOTYPE_BOUNDARY_HPP

#include <compare>
#include <optional>
#include <vector>

#include "geotype/codes.hpp"
#include "geotype/core.hpp"

namespace geotype {

enum class Flavor { s, u };

// Boundary side of a rectangle. Sign -1 is the lower stable / left unstable
// side, +1 the upper / right one.
struct BoundaryLabel {
    int idx = 0;
    int sign = 0;
    Flavor flavor = Flavor::s;
    auto operator<=>(const BoundaryLabel&) const = default;
};

// All 2n labels of one flavor, ordered (1,-1), (1,+1), (2,-1), ...
std::vector<BoundaryLabel> all_boundary_labels(const GeometricType& t, Flavor flavor);

// theta picks the horizontal subrectangle carrying the given stable side:
// (i,-1) -> (i,1) and (i,+1) -> (i,h_i). Throws std::domain_error on a
// u-flavored label.
HLabel theta(const GeometricType& t, const BoundaryLabel& lbl);

// eta picks the vertical subrectangle carrying the given unstable side:
// (k,-1) -> (k,1) and (k,+1) -> (k,v_k). Throws on an s-flavored label.
VLabel eta(const GeometricType& t, const BoundaryLabel& lbl);

// Forward step of a stable side: where rho sends the extremal horizontal
// subrectangle, with the sign multiplied by the orientation of that label.
BoundaryLabel gamma(const GeometricType& t, const BoundaryLabel& lbl);

// Backward step of an unstable side, via rho^{-1} on the extremal vertical
// subrectangle.
BoundaryLabel upsilon(const GeometricType& t, const BoundaryLabel& lbl);

// Orbit of a label under gamma (s flavor) or upsilon (u flavor), split into
// the transient prefix and the cycle. Total length is at most 2n.
struct OrbitDecomposition {
    std::vector<BoundaryLabel> transient;
    std::vector<BoundaryLabel> cycle;
};

OrbitDecomposition orbit(const GeometricType& t, const BoundaryLabel& lbl);

// Positive code of a stable side: first components along the gamma orbit.
OneSidedCode s_boundary_code(const GeometricType& t, const BoundaryLabel& lbl);

// Negative code of an unstable side: first components along the upsilon
// orbit, read leftward.
OneSidedCode u_boundary_code(const GeometricType& t, const BoundaryLabel& lbl);

// True iff the 2n s-codes are pairwise distinct and the 2n u-codes are
// pairwise distinct. Guaranteed for binary mixing types with n >= 2; can
// legitimately fail otherwise and then returns false rather than erroring.
bool check_injectivity(const GeometricType& t);

// Precomputed boundary codes of a type, used by classification and the
// equivalence relations.
struct BoundaryCodeTable {
    std::vector<std::pair<BoundaryLabel, OneSidedCode>> s_codes;  // 2n, label order
    std::vector<std::pair<BoundaryLabel, OneSidedCode>> u_codes;

    bool contains_s(const OneSidedCode& code) const;
    bool contains_u(const OneSidedCode& code) const;
    std::optional<BoundaryLabel> s_label_of(const OneSidedCode& code) const;
    std::optional<BoundaryLabel> u_label_of(const OneSidedCode& code) const;
    const OneSidedCode& s_code_of(const BoundaryLabel& lbl) const;
    const OneSidedCode& u_code_of(const BoundaryLabel& lbl) const;
};

BoundaryCodeTable build_boundary_table(const GeometricType& t);

}  // namespace geotype

#endif  // GEOTYPE_BOUNDARY_HPP
