// Shared fixtures and independent oracles for the test suites.
#ifndef GEOTYPE_TESTS_FIXTURES_HPP
#define GEOTYPE_TESTS_FIXTURES_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "geotype/boundary.hpp"
#include "geotype/codes.hpp"
#include "geotype/core.hpp"

namespace fixtures {

using geotype::BiCode;
using geotype::GeometricType;
using geotype::HLabel;
using geotype::IncidenceMatrix;
using geotype::VLabel;

// n=1, hv=(2,2), rho identity-shaped, eps all +1. Incidence [[2]].
inline GeometricType t0() {
    GeometricType t;
    t.n = 1;
    t.hv = {{2, 2}};
    t.rho = {{1, 1}, {1, 2}};
    t.eps = {1, 1};
    return t;
}

// n=1, hv=(2,2), rho swaps the two labels, eps = (+1, -1).
inline GeometricType t1() {
    GeometricType t;
    t.n = 1;
    t.hv = {{2, 2}};
    t.rho = {{1, 2}, {1, 1}};
    t.eps = {1, -1};
    return t;
}

// The minimal identity-shaped type: n=1, h=v=1.
inline GeometricType unit_type() {
    GeometricType t;
    t.n = 1;
    t.hv = {{1, 1}};
    t.rho = {{1, 1}};
    t.eps = {1};
    return t;
}

// n=2 binary mixing fixture whose stable generating function has three
// separate cycles; gives genuinely unrelated periodic codes.
inline GeometricType split_type() {
    GeometricType t;
    t.n = 2;
    t.hv = {{2, 2}, {2, 2}};
    t.rho = {{2, 1}, {1, 1}, {1, 2}, {2, 2}};
    t.eps = {1, 1, 1, 1};
    return t;
}

// Uniform valid type with n <= max_n and h_i, v_i <= max_hv. The v-side is
// sampled inside the running-sum window that keeps a balanced completion
// reachable, so every draw is valid by construction.
inline GeometricType random_type(std::mt19937& rng, int max_n = 6, int max_hv = 4) {
    GeometricType t;
    t.n = std::uniform_int_distribution<int>(1, max_n)(rng);
    long long alpha = 0;
    for (int i = 0; i < t.n; ++i) {
        const int h = std::uniform_int_distribution<int>(1, max_hv)(rng);
        alpha += h;
        t.hv.emplace_back(h, 1);
    }
    long long rem = alpha;
    for (int i = 0; i < t.n; ++i) {
        const int left = t.n - i - 1;
        const int lo = static_cast<int>(std::max<long long>(1, rem - static_cast<long long>(max_hv) * left));
        const int hi = static_cast<int>(std::min<long long>(max_hv, rem - left));
        const int v = std::uniform_int_distribution<int>(lo, hi)(rng);
        t.hv[static_cast<size_t>(i)].second = v;
        rem -= v;
    }

    std::vector<VLabel> targets;
    for (int k = 1; k <= t.n; ++k) {
        for (int l = 1; l <= t.v(k); ++l) targets.push_back({k, l});
    }
    std::shuffle(targets.begin(), targets.end(), rng);
    t.rho = std::move(targets);
    for (long long m = 0; m < alpha; ++m) {
        t.eps.push_back(std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? -1 : 1);
    }
    return t;
}

// Brute-force count of admissible words of length m; independent of the
// transfer-matrix identity it checks.
inline long long brute_word_count(const IncidenceMatrix& a, int m) {
    long long count = 0;
    std::vector<int> word;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(word.size()) == m) {
            ++count;
            return;
        }
        for (int s = 1; s <= a.n; ++s) {
            if (!word.empty() && a.at(word.back(), s) != 1) continue;
            word.push_back(s);
            self(self);
            word.pop_back();
        }
    };
    rec(rec);
    return count;
}

// Brute-force mixing check: boolean powers up to 2 n^2, looking for an
// entrywise positive one.
inline bool brute_mixing(const IncidenceMatrix& a) {
    const int n = a.n;
    std::vector<char> cur(a.entries.size());
    for (size_t idx = 0; idx < a.entries.size(); ++idx) cur[idx] = a.entries[idx] > 0;
    for (int step = 1; step <= 2 * n * n; ++step) {
        if (std::all_of(cur.begin(), cur.end(), [](char c) { return c != 0; })) return true;
        std::vector<char> nxt(cur.size(), 0);
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                if (!cur[static_cast<size_t>(i) * n + k]) continue;
                for (int j = 0; j < n; ++j) {
                    nxt[static_cast<size_t>(i) * n + j] |=
                        a.entries[static_cast<size_t>(k) * n + j] > 0;
                }
            }
        }
        cur = std::move(nxt);
    }
    return false;
}

// Deterministic admissible left extension of a positive one-sided code: a
// smallest-predecessor walk from the head symbol, split at its first
// revisit into a backward cycle and a connecting path. The code's position
// 0 lands at index 0.
inline BiCode glue_left_context(const IncidenceMatrix& a, const geotype::OneSidedCode& code) {
    auto first_pred = [&](int to) {
        for (int i = 1; i <= a.n; ++i) {
            if (a.at(i, to) == 1) return i;
        }
        return 0;
    };
    std::vector<int> wb{first_pred(code.at(0))};
    size_t idx = 0;
    for (;;) {
        const int pred = first_pred(wb.back());
        const auto it = std::find(wb.begin(), wb.end(), pred);
        if (it != wb.end()) {
            idx = static_cast<size_t>(it - wb.begin());
            break;
        }
        wb.push_back(pred);
    }
    std::vector<int> cycle(wb.rbegin(), wb.rend() - static_cast<std::ptrdiff_t>(idx));
    std::vector<int> path(wb.rend() - static_cast<std::ptrdiff_t>(idx), wb.rend());
    std::vector<int> core = path;
    core.insert(core.end(), code.transient.begin(), code.transient.end());
    return BiCode::make(cycle, core, code.period, -static_cast<long long>(path.size()));
}

// Mirror for a negative one-sided code: smallest-successor walk to the
// right, with the code occupying indices <= -1.
inline BiCode glue_right_context(const IncidenceMatrix& a, const geotype::OneSidedCode& code) {
    auto first_succ = [&](int from) {
        for (int k = 1; k <= a.n; ++k) {
            if (a.at(from, k) == 1) return k;
        }
        return 0;
    };
    std::vector<int> wf{first_succ(code.at(0))};
    size_t idx = 0;
    for (;;) {
        const int succ = first_succ(wf.back());
        const auto it = std::find(wf.begin(), wf.end(), succ);
        if (it != wf.end()) {
            idx = static_cast<size_t>(it - wf.begin());
            break;
        }
        wf.push_back(succ);
    }
    std::vector<int> path(wf.begin(), wf.begin() + static_cast<std::ptrdiff_t>(idx));
    std::vector<int> cycle(wf.begin() + static_cast<std::ptrdiff_t>(idx), wf.end());
    std::vector<int> core(code.transient.rbegin(), code.transient.rend());
    core.insert(core.end(), path.begin(), path.end());
    return BiCode::make(std::vector<int>(code.period.rbegin(), code.period.rend()), core, cycle,
                        -static_cast<long long>(code.transient.size()));
}

// Random admissible eventually periodic code over a binary type: random
// backward and forward walks from a seed symbol, each closed into a cycle
// at its first revisit.
inline BiCode random_code(const GeometricType& t, const IncidenceMatrix& a, std::mt19937& rng) {
    auto random_succ = [&](int from) {
        std::vector<int> opts;
        for (int k = 1; k <= t.n; ++k) {
            if (a.at(from, k) == 1) opts.push_back(k);
        }
        return opts[std::uniform_int_distribution<size_t>(0, opts.size() - 1)(rng)];
    };
    auto random_pred = [&](int to) {
        std::vector<int> opts;
        for (int k = 1; k <= t.n; ++k) {
            if (a.at(k, to) == 1) opts.push_back(k);
        }
        return opts[std::uniform_int_distribution<size_t>(0, opts.size() - 1)(rng)];
    };

    const int seed = std::uniform_int_distribution<int>(1, t.n)(rng);

    // wb[m] sits at index -1-m; stop when the next symbol already occurred.
    std::vector<int> wb{random_pred(seed)};
    size_t left_idx;
    for (;;) {
        const int nxt = random_pred(wb.back());
        const auto it = std::find(wb.begin(), wb.end(), nxt);
        if (it != wb.end()) {
            left_idx = static_cast<size_t>(it - wb.begin());
            break;
        }
        wb.push_back(nxt);
    }
    std::vector<int> left_cycle(wb.rbegin(), wb.rend() - static_cast<std::ptrdiff_t>(left_idx));
    std::vector<int> left_path(wb.rend() - static_cast<std::ptrdiff_t>(left_idx), wb.rend());

    // wf[m] sits at index 1+m.
    std::vector<int> wf{random_succ(seed)};
    size_t right_idx;
    for (;;) {
        const int nxt = random_succ(wf.back());
        const auto it = std::find(wf.begin(), wf.end(), nxt);
        if (it != wf.end()) {
            right_idx = static_cast<size_t>(it - wf.begin());
            break;
        }
        wf.push_back(nxt);
    }
    std::vector<int> right_path(wf.begin(), wf.begin() + static_cast<std::ptrdiff_t>(right_idx));
    std::vector<int> right_cycle(wf.begin() + static_cast<std::ptrdiff_t>(right_idx), wf.end());

    std::vector<int> core = left_path;
    core.push_back(seed);
    core.insert(core.end(), right_path.begin(), right_path.end());
    return BiCode::make(std::move(left_cycle), std::move(core), std::move(right_cycle),
                        -static_cast<long long>(left_path.size()));
}

}  // namespace fixtures

#endif  // GEOTYPE_TESTS_FIXTURES_HPP
