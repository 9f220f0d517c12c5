#include "geotype/shift_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace geotype {

namespace {

void require_binary(const IncidenceMatrix& a) {
    if (!is_binary(a)) {
        throw std::domain_error(
            "operation requires a binary incidence matrix; apply refine_if_needed first");
    }
}

bool pair_ok(const IncidenceMatrix& a, int from, int to) {
    if (from < 1 || from > a.n || to < 1 || to > a.n) return false;
    return a.at(from, to) == 1;
}

}  // namespace

bool is_admissible(const GeometricType& t, const BiCode& w) {
    return is_admissible(incidence_matrix(t), w);
}

bool is_admissible(const IncidenceMatrix& a, const BiCode& w) {
    require_binary(a);

    const long long q = static_cast<long long>(w.left_period.size());
    const long long p = static_cast<long long>(w.right_period.size());
    // Cyclic pairs inside each period word.
    for (long long m = 0; m < q; ++m) {
        if (!pair_ok(a, w.left_period[static_cast<size_t>(m)],
                     w.left_period[static_cast<size_t>((m + 1) % q)]))
            return false;
    }
    for (long long m = 0; m < p; ++m) {
        if (!pair_ok(a, w.right_period[static_cast<size_t>(m)],
                     w.right_period[static_cast<size_t>((m + 1) % p)]))
            return false;
    }
    // A window across the junctions covers the phase transitions.
    const long long from = w.core_start - q - 1;
    const long long to = w.right_ray_start() + p + 1;
    for (long long z = from; z + 1 < to; ++z) {
        if (!pair_ok(a, w.at(z), w.at(z + 1))) return false;
    }
    return true;
}

bool is_admissible(const GeometricType& t, const OneSidedCode& c) {
    return is_admissible(incidence_matrix(t), c);
}

bool is_admissible(const IncidenceMatrix& a, const OneSidedCode& c) {
    require_binary(a);
    const size_t span = c.transient.size() + 2 * c.period.size();
    for (size_t m = 0; m + 1 < span; ++m) {
        const int x = c.at(m);
        const int y = c.at(m + 1);
        const bool ok = c.dir == CodeDir::positive ? pair_ok(a, x, y) : pair_ok(a, y, x);
        if (!ok) return false;
    }
    return true;
}

BiCode shift(const BiCode& w, long long steps) { return w.shifted(steps); }

OneSidedCode positive_part(const BiCode& w) { return w.positive_part(); }

OneSidedCode negative_part(const BiCode& w) { return w.negative_part(); }

ClassificationFlags classify(const GeometricType& t, const BoundaryCodeTable& table,
                             const BiCode& w) {
    const IncidenceMatrix a = incidence_matrix(t);
    require_binary(a);
    if (!is_admissible(a, w)) throw std::invalid_argument("code is not admissible for the type");

    // Membership under forward shifts is upward-closed and, once the
    // positive part is purely periodic, equivalent to matching one of the
    // periodic boundary codes at phase 0. Dually for the negative side.
    const OneSidedCode right_tail = w.positive_part_from(w.right_ray_start());
    const OneSidedCode left_tail = w.negative_part_from(w.core_start - 1);

    ClassificationFlags flags;
    for (const auto& [lbl, code] : table.s_codes) {
        if (code.is_periodic() && code == right_tail) {
            flags.in_s = true;
            break;
        }
    }
    for (const auto& [lbl, code] : table.u_codes) {
        if (code.is_periodic() && code == left_tail) {
            flags.in_u = true;
            break;
        }
    }
    return flags;
}

ClassificationFlags classify(const GeometricType& t, const BiCode& w) {
    return classify(t, build_boundary_table(t), w);
}

std::vector<BiCode> enumerate_periodic(const GeometricType& t, int p, long long budget) {
    const IncidenceMatrix a = incidence_matrix(t);
    require_binary(a);
    if (p < 1) throw std::invalid_argument("period bound must be >= 1");

    long long work = 0;
    long long pw = 1;
    for (int len = 1; len <= p; ++len) {
        if (pw > budget / t.n) {
            pw = budget + 1;
        } else {
            pw *= t.n;
        }
        work += static_cast<long long>(len) * std::min(pw, budget + 1);
        if (work > budget) {
            throw BudgetError("periodic enumeration budget exceeded: p * n^p > " +
                              std::to_string(budget));
        }
    }

    std::vector<BiCode> out;
    std::vector<int> word;
    auto emit = [&](const std::vector<int>& wd) {
        // Cyclic admissibility including the wrap pair.
        for (size_t m = 0; m < wd.size(); ++m) {
            if (!pair_ok(a, wd[m], wd[(m + 1) % wd.size()])) return;
        }
        if (primitive_root(wd).size() != wd.size()) return;
        out.push_back(BiCode::periodic(wd));
    };
    auto rec = [&](auto&& self, int len) -> void {
        if (static_cast<int>(word.size()) == len) {
            emit(word);
            return;
        }
        for (int s = 1; s <= t.n; ++s) {
            if (!word.empty() && !pair_ok(a, word.back(), s)) continue;
            word.push_back(s);
            self(self, len);
            word.pop_back();
        }
    };
    for (int len = 1; len <= p; ++len) rec(rec, len);

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace geotype
