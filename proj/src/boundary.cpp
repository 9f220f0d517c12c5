#include "geotype/boundary.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace geotype {

namespace {

void check_flavor(const BoundaryLabel& lbl, Flavor expected, const char* op) {
    if (lbl.flavor != expected) {
        throw std::domain_error(std::string(op) + " expects a " +
                                (expected == Flavor::s ? "stable" : "unstable") +
                                "-flavored boundary label");
    }
}

void check_range(const GeometricType& t, const BoundaryLabel& lbl) {
    if (lbl.idx < 1 || lbl.idx > t.n || (lbl.sign != 1 && lbl.sign != -1)) {
        throw std::invalid_argument("boundary label out of range");
    }
}

}  // namespace

std::vector<BoundaryLabel> all_boundary_labels(const GeometricType& t, Flavor flavor) {
    std::vector<BoundaryLabel> out;
    out.reserve(2 * static_cast<size_t>(t.n));
    for (int i = 1; i <= t.n; ++i) {
        out.push_back({i, -1, flavor});
        out.push_back({i, +1, flavor});
    }
    return out;
}

HLabel theta(const GeometricType& t, const BoundaryLabel& lbl) {
    check_flavor(lbl, Flavor::s, "theta");
    check_range(t, lbl);
    return {lbl.idx, lbl.sign == -1 ? 1 : t.h(lbl.idx)};
}

VLabel eta(const GeometricType& t, const BoundaryLabel& lbl) {
    check_flavor(lbl, Flavor::u, "eta");
    check_range(t, lbl);
    return {lbl.idx, lbl.sign == -1 ? 1 : t.v(lbl.idx)};
}

BoundaryLabel gamma(const GeometricType& t, const BoundaryLabel& lbl) {
    const HLabel extremal = theta(t, lbl);
    const VLabel target = t.rho_at(extremal);
    return {target.k, lbl.sign * t.eps_at(extremal), Flavor::s};
}

BoundaryLabel upsilon(const GeometricType& t, const BoundaryLabel& lbl) {
    const VLabel extremal = eta(t, lbl);
    // rho is a bijection, so the preimage exists and is unique.
    for (int i = 1; i <= t.n; ++i) {
        for (int j = 1; j <= t.h(i); ++j) {
            if (t.rho_at({i, j}) == extremal) {
                return {i, lbl.sign * t.eps_at({i, j}), Flavor::u};
            }
        }
    }
    throw std::logic_error("rho has no preimage for a vertical label");
}

OrbitDecomposition orbit(const GeometricType& t, const BoundaryLabel& lbl) {
    check_range(t, lbl);
    std::vector<BoundaryLabel> seq;
    std::map<BoundaryLabel, size_t> seen;
    BoundaryLabel cur = lbl;
    while (!seen.contains(cur)) {
        seen[cur] = seq.size();
        seq.push_back(cur);
        cur = lbl.flavor == Flavor::s ? gamma(t, cur) : upsilon(t, cur);
    }
    const size_t cycle_start = seen[cur];
    OrbitDecomposition out;
    out.transient.assign(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(cycle_start));
    out.cycle.assign(seq.begin() + static_cast<std::ptrdiff_t>(cycle_start), seq.end());
    return out;
}

namespace {

OneSidedCode code_from_orbit(const GeometricType& t, const BoundaryLabel& lbl, CodeDir dir) {
    const OrbitDecomposition dec = orbit(t, lbl);
    std::vector<int> transient;
    for (const auto& x : dec.transient) transient.push_back(x.idx);
    std::vector<int> period;
    for (const auto& x : dec.cycle) period.push_back(x.idx);
    return OneSidedCode::make(std::move(transient), std::move(period), dir);
}

}  // namespace

OneSidedCode s_boundary_code(const GeometricType& t, const BoundaryLabel& lbl) {
    check_flavor(lbl, Flavor::s, "s_boundary_code");
    return code_from_orbit(t, lbl, CodeDir::positive);
}

OneSidedCode u_boundary_code(const GeometricType& t, const BoundaryLabel& lbl) {
    check_flavor(lbl, Flavor::u, "u_boundary_code");
    return code_from_orbit(t, lbl, CodeDir::negative);
}

bool check_injectivity(const GeometricType& t) {
    std::set<OneSidedCode> s_set;
    for (const auto& lbl : all_boundary_labels(t, Flavor::s)) {
        s_set.insert(s_boundary_code(t, lbl));
    }
    if (s_set.size() != 2 * static_cast<size_t>(t.n)) return false;
    std::set<OneSidedCode> u_set;
    for (const auto& lbl : all_boundary_labels(t, Flavor::u)) {
        u_set.insert(u_boundary_code(t, lbl));
    }
    return u_set.size() == 2 * static_cast<size_t>(t.n);
}

bool BoundaryCodeTable::contains_s(const OneSidedCode& code) const {
    return s_label_of(code).has_value();
}

bool BoundaryCodeTable::contains_u(const OneSidedCode& code) const {
    return u_label_of(code).has_value();
}

std::optional<BoundaryLabel> BoundaryCodeTable::s_label_of(const OneSidedCode& code) const {
    for (const auto& [lbl, c] : s_codes) {
        if (c == code) return lbl;
    }
    return std::nullopt;
}

std::optional<BoundaryLabel> BoundaryCodeTable::u_label_of(const OneSidedCode& code) const {
    for (const auto& [lbl, c] : u_codes) {
        if (c == code) return lbl;
    }
    return std::nullopt;
}

const OneSidedCode& BoundaryCodeTable::s_code_of(const BoundaryLabel& lbl) const {
    for (const auto& [l, c] : s_codes) {
        if (l == lbl) return c;
    }
    throw std::invalid_argument("label not in table");
}

const OneSidedCode& BoundaryCodeTable::u_code_of(const BoundaryLabel& lbl) const {
    for (const auto& [l, c] : u_codes) {
        if (l == lbl) return c;
    }
    throw std::invalid_argument("label not in table");
}

BoundaryCodeTable build_boundary_table(const GeometricType& t) {
    BoundaryCodeTable table;
    for (const auto& lbl : all_boundary_labels(t, Flavor::s)) {
        table.s_codes.emplace_back(lbl, s_boundary_code(t, lbl));
    }
    for (const auto& lbl : all_boundary_labels(t, Flavor::u)) {
        table.u_codes.emplace_back(lbl, u_boundary_code(t, lbl));
    }
    return table;
}

}  // namespace geotype
