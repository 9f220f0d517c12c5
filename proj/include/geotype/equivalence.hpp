#ifndef GEOTYPE_EQUIVALENCE_HPP
#define GEOTYPE_EQUIVALENCE_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "geotype/boundary.hpp"
#include "geotype/codes.hpp"
#include "geotype/core.hpp"
#include "geotype/shift_space.hpp"

namespace geotype {

// Precomputed data for repeated relation queries against a single type.
// Every relation operation has an overload taking one of these; the
// one-shot overloads build it per call.
struct TypeContext {
    GeometricType t;
    IncidenceMatrix a;
    bool binary = false;
    bool mixing = false;
    BoundaryCodeTable table;
    std::vector<HLabel> rho_inv;

    explicit TypeContext(GeometricType type);
};

// Raised when a class closure hit its cap, so a membership answer would be
// a guess rather than a result.
struct IndeterminateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Witness data for a validated stable (or unstable) identification: the
// pivot index, the shared symbol there, the adjacent subrectangle position,
// which of the two orientation cases applied, and the tail signs.
struct PartnerCertificate {
    long long k = 0;
    int i = 0;
    int j = 0;
    int orientation_case = 0;  // 1 or 2
    int delta_w = 0;
    int delta_v = 0;
};

// Pivot of a non-periodic stable-side code: the unique k such that the
// positive part of shift(w, k) is not a boundary code but that of
// shift(w, k+1) is. Throws std::domain_error if w is periodic or not a
// stable-side code.
long long s_pivot(const GeometricType& t, const BiCode& w);
long long s_pivot(const TypeContext& ctx, const BiCode& w);

// Mirror for unstable-side codes: the unique z such that the negative part
// of shift(w, z) is not a boundary code but that of shift(w, z-1) is.
long long u_pivot(const GeometricType& t, const BiCode& w);
long long u_pivot(const TypeContext& ctx, const BiCode& w);

// The unique partner code stably identified with w, when the adjacency and
// sign system at the pivot is solvable; absent when w's side is an
// outermost boundary. Requires t binary mixing and w a non-periodic
// stable-side code.
std::optional<std::pair<BiCode, PartnerCertificate>> s_partner(const GeometricType& t,
                                                               const BiCode& w);
std::optional<std::pair<BiCode, PartnerCertificate>> s_partner(const TypeContext& ctx,
                                                               const BiCode& w);

std::optional<std::pair<BiCode, PartnerCertificate>> u_partner(const GeometricType& t,
                                                               const BiCode& w);
std::optional<std::pair<BiCode, PartnerCertificate>> u_partner(const TypeContext& ctx,
                                                               const BiCode& w);

// The stable identification relation. Non-periodic pairs are checked
// against the defining conditions directly; periodic pairs through the
// finite witness search; mixed pairs are unrelated. Both codes must lie in
// the stable stratum (std::domain_error otherwise).
bool sim_s(const GeometricType& t, const BiCode& w, const BiCode& v);
bool sim_s(const TypeContext& ctx, const BiCode& w, const BiCode& v);

bool sim_u(const GeometricType& t, const BiCode& w, const BiCode& v);
bool sim_u(const TypeContext& ctx, const BiCode& w, const BiCode& v);

struct ClassOptions {
    size_t cap = 16;  // closure size limit; hitting it flags the report
};

struct ChainEdge {
    BiCode from;
    char relation = 's';  // 's' or 'u'
    BiCode to;
};

// A full identification class: breadth-first closure under stable and
// unstable partners. Interior codes are singletons.
struct ClassReport {
    std::vector<BiCode> members;  // sorted
    std::vector<ChainEdge> chain;
    bool truncated = false;
};

ClassReport class_of(const GeometricType& t, const BiCode& w, const ClassOptions& opts = {});
ClassReport class_of(const TypeContext& ctx, const BiCode& w, const ClassOptions& opts = {});

// Whether w and v belong to the same identification class. Throws
// IndeterminateError if the closure was truncated before v was found.
bool sim_T(const GeometricType& t, const BiCode& w, const BiCode& v,
           const ClassOptions& opts = {});
bool sim_T(const TypeContext& ctx, const BiCode& w, const BiCode& v,
           const ClassOptions& opts = {});

enum class CompareVerdict { same_invariant, invariant_distinct };

struct CompareReport {
    bool inputs_equal = false;
    bool refined_equal = false;
    bool applied1 = false;
    bool applied2 = false;
    GeometricType refined1;
    GeometricType refined2;
    CompareVerdict verdict = CompareVerdict::invariant_distinct;
};

// Compares two types through their refined forms, refining both sides
// whenever either incidence matrix is non-binary. Equal refined types
// certify conjugacy of any realizations; unequal refined types are reported
// as distinct invariants without any claim about non-conjugacy.
CompareReport compare_types(const GeometricType& t1, const GeometricType& t2);

}  // namespace geotype

#endif  // GEOTYPE_EQUIVALENCE_HPP
