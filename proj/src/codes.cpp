#include "geotype/codes.hpp"

#include <algorithm>
#include <stdexcept>

namespace geotype {

namespace {

void check_word(const std::vector<int>& word, const char* what) {
    if (word.empty()) throw std::invalid_argument(std::string(what) + " word must be nonempty");
    for (int s : word) {
        if (s < 1) throw std::invalid_argument(std::string(what) + " word has symbol < 1");
    }
}

std::vector<int> rotate_left(std::vector<int> w, size_t d) {
    d %= w.size();
    std::rotate(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(d), w.end());
    return w;
}

std::vector<int> rotate_right(std::vector<int> w, size_t d) {
    const size_t n = w.size();
    d %= n;
    const size_t left_shift = (n - d) % n;
    return rotate_left(std::move(w), left_shift);
}

}  // namespace

std::vector<int> primitive_root(const std::vector<int>& word) {
    const size_t len = word.size();
    for (size_t d = 1; d <= len; ++d) {
        if (len % d != 0) continue;
        bool ok = true;
        for (size_t m = d; m < len && ok; ++m) ok = word[m] == word[m - d];
        if (ok) return std::vector<int>(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(d));
    }
    return word;
}

OneSidedCode OneSidedCode::make(std::vector<int> transient, std::vector<int> period, CodeDir dir) {
    check_word(period, "period");
    for (int s : transient) {
        if (s < 1) throw std::invalid_argument("transient word has symbol < 1");
    }
    period = primitive_root(period);
    while (!transient.empty() && transient.back() == period.back()) {
        transient.pop_back();
        period = rotate_right(std::move(period), 1);
    }
    OneSidedCode c;
    c.transient = std::move(transient);
    c.period = std::move(period);
    c.dir = dir;
    return c;
}

OneSidedCode OneSidedCode::dropped_head() const {
    if (!transient.empty()) {
        return make(std::vector<int>(transient.begin() + 1, transient.end()), period, dir);
    }
    return make({}, rotate_left(period, 1), dir);
}

OneSidedCode OneSidedCode::prepended(int symbol) const {
    std::vector<int> t;
    t.reserve(transient.size() + 1);
    t.push_back(symbol);
    t.insert(t.end(), transient.begin(), transient.end());
    return make(std::move(t), period, dir);
}

std::vector<int> OneSidedCode::prefix(size_t count) const {
    std::vector<int> out;
    out.reserve(count);
    for (size_t m = 0; m < count; ++m) out.push_back(at(m));
    return out;
}

int BiCode::at(long long z) const {
    if (z < core_start) {
        const long long q = static_cast<long long>(left_period.size());
        long long m = (core_start - 1 - z) % q;  // distance back from the junction
        return left_period[static_cast<size_t>(q - 1 - m)];
    }
    const long long offset = z - core_start;
    if (offset < static_cast<long long>(core.size())) return core[static_cast<size_t>(offset)];
    const long long p = static_cast<long long>(right_period.size());
    return right_period[static_cast<size_t>((offset - static_cast<long long>(core.size())) % p)];
}

BiCode BiCode::make(std::vector<int> left, std::vector<int> core, std::vector<int> right,
                    long long core_start) {
    check_word(left, "left period");
    check_word(right, "right period");
    for (int s : core) {
        if (s < 1) throw std::invalid_argument("core word has symbol < 1");
    }
    left = primitive_root(left);
    right = primitive_root(right);

    // Absorb core symbols into the right regime, then into the left regime.
    while (!core.empty() && core.back() == right.back()) {
        core.pop_back();
        right = rotate_right(std::move(right), 1);
    }
    while (!core.empty() && core.front() == left.front()) {
        core.erase(core.begin());
        left = rotate_left(std::move(left), 1);
        ++core_start;
    }

    if (core.empty()) {
        if (left == right) {
            // Purely periodic: pin the anchor at 0 and rephase the word so
            // that entry m is the symbol at index m.
            const long long p = static_cast<long long>(right.size());
            const size_t d = static_cast<size_t>(((-core_start) % p + p) % p);
            right = rotate_left(std::move(right), d);
            left = right;
            core_start = 0;
        } else {
            // Slide the junction to its leftmost admissible position. The
            // loop must stop within |L| + |R| steps: a longer match would
            // force the whole sequence periodic, i.e. left == right.
            const size_t bound = left.size() + right.size() + 1;
            size_t steps = 0;
            while (left.back() == right.back()) {
                left = rotate_right(std::move(left), 1);
                right = rotate_right(std::move(right), 1);
                --core_start;
                if (++steps > bound) throw std::logic_error("junction slide failed to terminate");
            }
        }
    }

    BiCode w;
    w.left_period = std::move(left);
    w.core = std::move(core);
    w.right_period = std::move(right);
    w.core_start = core_start;
    return w;
}

BiCode BiCode::periodic(const std::vector<int>& word) {
    return make(word, {}, word, 0);
}

BiCode BiCode::shifted(long long steps) const {
    return make(left_period, core, right_period, core_start - steps);
}

OneSidedCode BiCode::positive_part() const { return positive_part_from(0); }

OneSidedCode BiCode::negative_part() const { return negative_part_from(0); }

OneSidedCode BiCode::positive_part_from(long long z) const {
    const long long pp = right_ray_start();
    std::vector<int> transient;
    for (long long t = z; t < pp; ++t) transient.push_back(at(t));
    std::vector<int> period;
    const long long base = std::max(z, pp);
    for (long long t = base; t < base + static_cast<long long>(right_period.size()); ++t) {
        period.push_back(at(t));
    }
    return OneSidedCode::make(std::move(transient), std::move(period), CodeDir::positive);
}

OneSidedCode BiCode::negative_part_from(long long z) const {
    const long long np = core_start - 1;  // leftward ray is pure from here down
    std::vector<int> transient;
    for (long long t = z; t > np; --t) transient.push_back(at(t));
    std::vector<int> period;
    const long long base = std::min(z, np);
    for (long long t = base; t > base - static_cast<long long>(left_period.size()); --t) {
        period.push_back(at(t));
    }
    return OneSidedCode::make(std::move(transient), std::move(period), CodeDir::negative);
}

std::vector<int> BiCode::window(long long from, long long to) const {
    std::vector<int> out;
    for (long long z = from; z < to; ++z) out.push_back(at(z));
    return out;
}

}  // namespace geotype
