#ifndef GEOTYPE_CORE_HPP
#define GEOTYPE_CORE_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace geotype {

using BigInt = boost::multiprecision::cpp_int;

// Horizontal label (i, j): rectangle i, horizontal position j (both 1-based).
struct HLabel {
    int i = 0;
    int j = 0;
    auto operator<=>(const HLabel&) const = default;
};

// Vertical label (k, l): rectangle k, vertical position l (both 1-based).
struct VLabel {
    int k = 0;
    int l = 0;
    auto operator<=>(const VLabel&) const = default;
};

// The quadruple (n, {(h_i, v_i)}, rho, eps).
//
// rho and eps are stored over horizontal labels in lexicographic (i, j)
// order: entry 0 is (1,1), entry 1 is (1,2), ..., entry h_1 is (2,1), etc.
// All public indices are 1-based; the flat storage never leaks.
struct GeometricType {
    int n = 0;
    std::vector<std::pair<int, int>> hv;  // (h_i, v_i) per rectangle
    std::vector<VLabel> rho;              // alpha entries, lex order
    std::vector<int> eps;                 // alpha entries of -1 / +1

    int h(int i) const { return hv[static_cast<size_t>(i - 1)].first; }
    int v(int i) const { return hv[static_cast<size_t>(i - 1)].second; }

    // Flat position of (i, j) in lex order; valid only on a validated type.
    size_t h_ordinal(const HLabel& lbl) const;
    size_t v_ordinal(const VLabel& lbl) const;
    HLabel h_label_at(size_t ordinal) const;

    VLabel rho_at(const HLabel& lbl) const { return rho[h_ordinal(lbl)]; }
    int eps_at(const HLabel& lbl) const { return eps[h_ordinal(lbl)]; }

    auto operator<=>(const GeometricType&) const = default;
};

// Sum of the h_i (equals the sum of the v_i for a valid type).
long long alpha(const GeometricType& t);

struct Violation {
    std::string axiom;   // short id, e.g. "balance"
    std::string detail;  // human-readable explanation
};

struct ValidationReport {
    bool ok = false;
    std::vector<Violation> violations;
};

// Checks every axiom of the quadruple: positivity, balance, totality and
// range of rho/eps, bijectivity of rho. Malformed shapes (wrong array
// lengths, out-of-range indices) land in the report, never crash.
ValidationReport validate(const GeometricType& t);

// Throws std::invalid_argument with the report details if t is invalid.
void require_valid(const GeometricType& t);

// rho^{-1} as a table indexed by vertical-label ordinal. Requires valid t.
std::vector<HLabel> rho_inverse(const GeometricType& t);

// n x n nonnegative integer matrix; a(i, k) counts horizontal labels of
// rectangle i whose rho-target lies in rectangle k.
struct IncidenceMatrix {
    int n = 0;
    std::vector<long long> entries;  // row-major

    long long at(int i, int k) const {
        return entries[static_cast<size_t>(i - 1) * n + (k - 1)];
    }
    long long& at(int i, int k) {
        return entries[static_cast<size_t>(i - 1) * n + (k - 1)];
    }

    auto operator<=>(const IncidenceMatrix&) const = default;
};

IncidenceMatrix incidence_matrix(const GeometricType& t);

// True iff every entry is 0 or 1.
bool is_binary(const IncidenceMatrix& a);

// True iff some power of a is entrywise positive. Decided by testing the
// Wielandt exponent (n-1)^2 + 1, which is exact for primitivity.
bool is_mixing(const IncidenceMatrix& a);

// Number of admissible words of length m over {1..n}: n for m = 1, and the
// sum of the entries of a^(m-1) for m >= 2. Exact arbitrary precision.
// Requires a binary; throws std::domain_error otherwise.
BigInt word_count(const IncidenceMatrix& a, int m);

}  // namespace geotype

#endif  // GEOTYPE_CORE_HPP
