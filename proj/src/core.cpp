#include "geotype/core.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace geotype {

size_t GeometricType::h_ordinal(const HLabel& lbl) const {
    size_t pos = 0;
    for (int i = 1; i < lbl.i; ++i) pos += static_cast<size_t>(h(i));
    return pos + static_cast<size_t>(lbl.j - 1);
}

size_t GeometricType::v_ordinal(const VLabel& lbl) const {
    size_t pos = 0;
    for (int k = 1; k < lbl.k; ++k) pos += static_cast<size_t>(v(k));
    return pos + static_cast<size_t>(lbl.l - 1);
}

HLabel GeometricType::h_label_at(size_t ordinal) const {
    int i = 1;
    while (ordinal >= static_cast<size_t>(h(i))) {
        ordinal -= static_cast<size_t>(h(i));
        ++i;
    }
    return {i, static_cast<int>(ordinal) + 1};
}

long long alpha(const GeometricType& t) {
    long long sum = 0;
    for (const auto& [hi, vi] : t.hv) sum += hi;
    return sum;
}

namespace {

std::string fmt_label(int a, int b) {
    std::ostringstream os;
    os << "(" << a << "," << b << ")";
    return os.str();
}

}  // namespace

ValidationReport validate(const GeometricType& t) {
    ValidationReport rep;
    auto flag = [&rep](const std::string& axiom, const std::string& detail) {
        rep.violations.push_back({axiom, detail});
    };

    if (t.n < 1) flag("shape", "n must be a positive integer, got " + std::to_string(t.n));
    if (t.hv.size() != static_cast<size_t>(std::max(t.n, 0))) {
        flag("shape", "hv has " + std::to_string(t.hv.size()) + " entries, expected n = " +
                          std::to_string(t.n));
    }

    long long sum_h = 0;
    long long sum_v = 0;
    for (size_t idx = 0; idx < t.hv.size(); ++idx) {
        const auto& [hi, vi] = t.hv[idx];
        if (hi < 1 || vi < 1) {
            flag("positivity", "rectangle " + std::to_string(idx + 1) + " has (h,v) = " +
                                   fmt_label(hi, vi) + ", both must be >= 1");
        }
        sum_h += hi;
        sum_v += vi;
    }
    if (sum_h != sum_v) {
        std::ostringstream os;
        os << "balance: sum h = " << sum_h << " != sum v = " << sum_v;
        flag("balance", os.str());
    }

    const size_t a = sum_h > 0 ? static_cast<size_t>(sum_h) : 0;
    if (t.rho.size() != a) {
        flag("rho-totality", "rho has " + std::to_string(t.rho.size()) +
                                 " entries, expected alpha = " + std::to_string(a));
    }
    if (t.eps.size() != a) {
        flag("eps-totality", "epsilon has " + std::to_string(t.eps.size()) +
                                 " entries, expected alpha = " + std::to_string(a));
    }

    const bool shape_ok = t.n >= 1 && t.hv.size() == static_cast<size_t>(t.n);
    if (shape_ok) {
        std::set<std::pair<int, int>> seen;
        for (size_t ord = 0; ord < t.rho.size(); ++ord) {
            const VLabel& target = t.rho[ord];
            if (target.k < 1 || target.k > t.n || target.l < 1 ||
                (target.k >= 1 && target.k <= t.n && target.l > t.v(target.k))) {
                flag("rho-range", "rho entry " + std::to_string(ord + 1) + " targets " +
                                      fmt_label(target.k, target.l) +
                                      ", outside the vertical label set");
                continue;
            }
            if (!seen.insert({target.k, target.l}).second) {
                flag("rho-bijective", "rho not injective: target " +
                                          fmt_label(target.k, target.l) + " repeated");
            }
        }
    }
    for (size_t ord = 0; ord < t.eps.size(); ++ord) {
        if (t.eps[ord] != 1 && t.eps[ord] != -1) {
            flag("eps-range", "epsilon entry " + std::to_string(ord + 1) + " is " +
                                  std::to_string(t.eps[ord]) + ", must be -1 or 1");
        }
    }

    rep.ok = rep.violations.empty();
    return rep;
}

void require_valid(const GeometricType& t) {
    ValidationReport rep = validate(t);
    if (rep.ok) return;
    std::ostringstream os;
    os << "invalid geometric type:";
    for (const auto& v : rep.violations) os << " [" << v.axiom << "] " << v.detail << ";";
    throw std::invalid_argument(os.str());
}

std::vector<HLabel> rho_inverse(const GeometricType& t) {
    std::vector<HLabel> inv(t.rho.size());
    for (size_t ord = 0; ord < t.rho.size(); ++ord) {
        inv[t.v_ordinal(t.rho[ord])] = t.h_label_at(ord);
    }
    return inv;
}

IncidenceMatrix incidence_matrix(const GeometricType& t) {
    IncidenceMatrix a;
    a.n = t.n;
    a.entries.assign(static_cast<size_t>(t.n) * t.n, 0);
    for (int i = 1; i <= t.n; ++i) {
        for (int j = 1; j <= t.h(i); ++j) {
            a.at(i, t.rho_at({i, j}).k) += 1;
        }
    }
    return a;
}

bool is_binary(const IncidenceMatrix& a) {
    return std::all_of(a.entries.begin(), a.entries.end(),
                       [](long long e) { return e == 0 || e == 1; });
}

namespace {

using BoolMat = std::vector<char>;

BoolMat bool_mul(const BoolMat& x, const BoolMat& y, int n) {
    BoolMat out(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            if (!x[static_cast<size_t>(i) * n + k]) continue;
            for (int j = 0; j < n; ++j) {
                out[static_cast<size_t>(i) * n + j] |= y[static_cast<size_t>(k) * n + j];
            }
        }
    }
    return out;
}

}  // namespace

bool is_mixing(const IncidenceMatrix& a) {
    const int n = a.n;
    if (n < 1) return false;
    long long wielandt = static_cast<long long>(n - 1) * (n - 1) + 1;

    BoolMat base(a.entries.size());
    for (size_t idx = 0; idx < a.entries.size(); ++idx) base[idx] = a.entries[idx] > 0;

    // base^wielandt by repeated squaring
    BoolMat acc(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) acc[static_cast<size_t>(i) * n + i] = 1;
    long long e = wielandt;
    BoolMat p = base;
    while (e > 0) {
        if (e & 1) acc = bool_mul(acc, p, n);
        p = bool_mul(p, p, n);
        e >>= 1;
    }
    return std::all_of(acc.begin(), acc.end(), [](char c) { return c != 0; });
}

BigInt word_count(const IncidenceMatrix& a, int m) {
    if (!is_binary(a)) throw std::domain_error("word_count requires a binary incidence matrix");
    if (m < 1) throw std::invalid_argument("word length must be >= 1");
    const int n = a.n;
    if (m == 1) return n;

    using Mat = std::vector<BigInt>;
    auto mul = [n](const Mat& x, const Mat& y) {
        Mat out(static_cast<size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const BigInt& xv = x[static_cast<size_t>(i) * n + k];
                if (xv == 0) continue;
                for (int j = 0; j < n; ++j)
                    out[static_cast<size_t>(i) * n + j] += xv * y[static_cast<size_t>(k) * n + j];
            }
        return out;
    };

    Mat base(a.entries.size());
    for (size_t idx = 0; idx < a.entries.size(); ++idx) base[idx] = a.entries[idx];
    Mat acc(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) acc[static_cast<size_t>(i) * n + i] = 1;
    int e = m - 1;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    BigInt total = 0;
    for (const BigInt& x : acc) total += x;
    return total;
}

}  // namespace geotype
