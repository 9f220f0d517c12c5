#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "geotype/codes.hpp"

using namespace geotype;

TEST_CASE("primitive root reduction") {
    CHECK(primitive_root({1, 2, 1, 2}) == std::vector<int>{1, 2});
    CHECK(primitive_root({1, 1, 1}) == std::vector<int>{1});
    CHECK(primitive_root({1, 2, 3}) == std::vector<int>{1, 2, 3});
    CHECK(primitive_root({1, 2, 1}) == std::vector<int>{1, 2, 1});
}

TEST_CASE("one-sided canonical form absorbs transient into the cycle") {
    // 1,2,2,2,... keeps its transient; 1,2,1,2,... does not.
    const OneSidedCode a = OneSidedCode::make({1}, {2}, CodeDir::positive);
    CHECK(a.transient == std::vector<int>{1});
    CHECK(a.period == std::vector<int>{2});

    const OneSidedCode b = OneSidedCode::make({1, 2}, {1, 2}, CodeDir::positive);
    CHECK(b.transient.empty());
    CHECK(b.period == std::vector<int>{1, 2});

    const OneSidedCode c = OneSidedCode::make({3, 1, 2}, {2, 1, 2}, CodeDir::positive);
    // 3,1,2 | 2,1,2,2,1,2... : the trailing 1,2 folds into the cycle.
    for (size_t m = 0; m < 12; ++m) {
        CHECK(c.at(m) == (m == 0 ? 3 : (m % 3 == 1 ? 1 : 2)));
    }
}

TEST_CASE("one-sided equality is equality of represented sequences") {
    const OneSidedCode a = OneSidedCode::make({1, 2}, {2}, CodeDir::positive);
    const OneSidedCode b = OneSidedCode::make({1}, {2, 2}, CodeDir::positive);
    CHECK(a == b);
    const OneSidedCode c = OneSidedCode::make({}, {2}, CodeDir::negative);
    CHECK_FALSE(b == c);  // direction is part of the identity
}

TEST_CASE("dropped_head and prepended are inverse moves") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> tr(std::uniform_int_distribution<size_t>(0, 4)(rng));
        for (auto& s : tr) s = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<int> per(std::uniform_int_distribution<size_t>(1, 4)(rng));
        for (auto& s : per) s = std::uniform_int_distribution<int>(1, 3)(rng);
        const OneSidedCode c = OneSidedCode::make(tr, per, CodeDir::positive);
        CHECK(c.prepended(7).dropped_head() == c);
        for (size_t m = 0; m < 10; ++m) CHECK(c.dropped_head().at(m) == c.at(m + 1));
    }
}

TEST_CASE("bi-code canonical form pins purely periodic sequences at anchor 0") {
    const BiCode w = BiCode::make({1, 2}, {}, {1, 2}, 5);
    CHECK(w.core_start == 0);
    CHECK(w.is_periodic());
    CHECK(w.at(5) == 1);
    CHECK(w.at(6) == 2);
    // The same sequence assembled at another anchor is the same value.
    const BiCode v = BiCode::make({2, 1}, {}, {2, 1}, 6);
    CHECK(w == v);
}

TEST_CASE("bi-code canonical form slides the junction left") {
    // ...1 1 1 (1) 2 1 2 1 2 ... : junction lands on the final 1-run symbol.
    const BiCode a = BiCode::make({1}, {}, {1, 2}, 0);
    const BiCode b = BiCode::make({1}, {1}, {2, 1}, 0);
    CHECK(a == b);
    CHECK_FALSE(a.is_periodic());
}

TEST_CASE("bi-code core absorption from both ends") {
    // ...1 1 [2] 1 1... with junk that re-folds into the periodic sides.
    const BiCode a = BiCode::make({1}, {1, 2, 1, 1}, {1}, -1);
    const BiCode b = BiCode::make({1}, {2}, {1}, 0);
    CHECK(a == b);
    CHECK(a.at(0) == 2);
    CHECK(a.at(-1) == 1);
    CHECK(a.at(1) == 1);
}

TEST_CASE("shift re-indexes and is invertible") {
    const BiCode w = BiCode::make({1}, {1, 2, 2}, {2, 1}, -1);
    CHECK(w.shifted(0) == w);
    CHECK(w.shifted(3).shifted(-3) == w);
    for (long long z = -6; z <= 6; ++z) {
        CHECK(w.shifted(2).at(z) == w.at(z + 2));
    }
    const BiCode constant = BiCode::periodic({3});
    CHECK(constant.shifted(5) == constant);
}

TEST_CASE("shifted periodic codes are distinct anchorings") {
    const BiCode w = BiCode::periodic({1, 2});
    const BiCode v = w.shifted(1);
    CHECK_FALSE(w == v);
    CHECK(v.shifted(1) == w);
}

TEST_CASE("positive and negative parts") {
    // ...1 1 | 2 2... anchored with the first 2 at index 0.
    const BiCode w = BiCode::make({1}, {}, {2}, 0);
    const OneSidedCode pos = w.positive_part();
    CHECK(pos == OneSidedCode::make({}, {2}, CodeDir::positive));
    const OneSidedCode neg = w.negative_part();
    CHECK(neg == OneSidedCode::make({2}, {1}, CodeDir::negative));

    const BiCode constant = BiCode::periodic({4});
    CHECK(constant.positive_part() == OneSidedCode::make({}, {4}, CodeDir::positive));
    CHECK(constant.negative_part() == OneSidedCode::make({}, {4}, CodeDir::negative));
}

TEST_CASE("positive_part_from matches shifting") {
    std::mt19937 rng(17);
    const auto t = fixtures::split_type();
    const auto a = geotype::incidence_matrix(t);
    for (int trial = 0; trial < 100; ++trial) {
        const BiCode w = fixtures::random_code(t, a, rng);
        for (long long z = -5; z <= 5; ++z) {
            CHECK(w.positive_part_from(z) == w.shifted(z).positive_part());
            CHECK(w.negative_part_from(z) == w.shifted(z).negative_part());
        }
    }
}

TEST_CASE("canonical form invariants hold on random codes") {
    std::mt19937 rng(271828);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<int> left(std::uniform_int_distribution<size_t>(1, 4)(rng));
        for (auto& s : left) s = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<int> core(std::uniform_int_distribution<size_t>(0, 5)(rng));
        for (auto& s : core) s = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<int> right(std::uniform_int_distribution<size_t>(1, 4)(rng));
        for (auto& s : right) s = std::uniform_int_distribution<int>(1, 3)(rng);
        const long long anchor = std::uniform_int_distribution<int>(-5, 5)(rng);
        const BiCode w = BiCode::make(left, core, right, anchor);

        // Periods primitive.
        CHECK(primitive_root(w.left_period) == w.left_period);
        CHECK(primitive_root(w.right_period) == w.right_period);
        // Core minimal: neither end can be absorbed into its regime.
        if (!w.core.empty()) {
            CHECK(w.core.back() != w.right_period.back());
            CHECK(w.core.front() != w.left_period.front());
        }
        // Purely periodic codes are pinned at anchor 0 with matching words.
        if (w.is_periodic()) {
            CHECK(w.core_start == 0);
            CHECK(w.left_period == w.right_period);
        } else if (w.core.empty()) {
            // Leftmost junction: sliding one more step must be blocked.
            CHECK(w.left_period.back() != w.right_period.back());
        }
        // The represented sequence survives re-encoding from raw windows.
        const long long lo = w.core_start - 2 * static_cast<long long>(w.left_period.size());
        const long long hi =
            w.right_ray_start() + 2 * static_cast<long long>(w.right_period.size());
        const BiCode again =
            BiCode::make(w.window(lo - static_cast<long long>(w.left_period.size()), lo),
                         w.window(lo, hi), w.window(hi, hi + static_cast<long long>(
                                                                w.right_period.size())),
                         lo);
        CHECK(again == w);
    }
}

TEST_CASE("canonical form is representation independent") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<int> left(std::uniform_int_distribution<size_t>(1, 3)(rng));
        for (auto& s : left) s = std::uniform_int_distribution<int>(1, 2)(rng);
        std::vector<int> core(std::uniform_int_distribution<size_t>(0, 4)(rng));
        for (auto& s : core) s = std::uniform_int_distribution<int>(1, 2)(rng);
        std::vector<int> right(std::uniform_int_distribution<size_t>(1, 3)(rng));
        for (auto& s : right) s = std::uniform_int_distribution<int>(1, 2)(rng);
        const long long anchor = std::uniform_int_distribution<int>(-4, 4)(rng);
        const BiCode w = BiCode::make(left, core, right, anchor);

        // Re-encode with redundant copies of the periods and re-canonicalize.
        std::vector<int> left2 = left;
        left2.insert(left2.end(), left.begin(), left.end());
        std::vector<int> core2 = left;
        core2.insert(core2.end(), core.begin(), core.end());
        core2.insert(core2.end(), right.begin(), right.end());
        std::vector<int> right2 = right;
        right2.insert(right2.end(), right.begin(), right.end());
        const BiCode v = BiCode::make(left2, core2, right2,
                                      anchor - static_cast<long long>(left.size()));
        CHECK(w == v);
        for (long long z = -8; z <= 8; ++z) CHECK(w.at(z) == v.at(z));
    }
}
