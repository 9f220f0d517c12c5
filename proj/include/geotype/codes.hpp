#ifndef GEOTYPE_CODES_HPP
#define GEOTYPE_CODES_HPP

#include <compare>
#include <cstdint>
#include <vector>

namespace geotype {

enum class CodeDir { positive, negative };

// One-sided eventually periodic symbol sequence: transient . period^inf.
//
// A positive code reads rightward over indices 0, 1, 2, ...; a negative code
// reads leftward, position m standing for index -m. Canonical form: the
// period is primitive and the transient is shortest (trailing symbols that
// match the cycle are absorbed into it), so equality of represented
// sequences is structural equality.
struct OneSidedCode {
    std::vector<int> transient;
    std::vector<int> period;
    CodeDir dir = CodeDir::positive;

    static OneSidedCode make(std::vector<int> transient, std::vector<int> period, CodeDir dir);

    // Symbol at position m >= 0 (index m for positive codes, -m for negative).
    int at(size_t m) const {
        if (m < transient.size()) return transient[m];
        return period[(m - transient.size()) % period.size()];
    }

    bool is_periodic() const { return transient.empty(); }

    // The sequence with its position-0 symbol removed.
    OneSidedCode dropped_head() const;

    // The sequence extended by one symbol at position 0.
    OneSidedCode prepended(int symbol) const;

    // First `count` symbols, for diagnostics and brute-force comparisons.
    std::vector<int> prefix(size_t count) const;

    auto operator<=>(const OneSidedCode&) const = default;
};

// Bi-infinite eventually periodic sequence
//
//     ... L L | core | R R ...
//
// left_period repeats toward -infinity and ends at index core_start - 1;
// core occupies [core_start, core_start + core.size()); right_period repeats
// from there on with phase 0. Canonical form: both periods primitive, the
// core minimal (absorbed into the periodic regimes from both ends), the
// junction at its leftmost admissible position, and purely periodic
// sequences pinned at core_start = 0 with the period phased so that entry m
// is the symbol at index m. Equality of represented sequences is then
// structural equality; the shift is visible as a change of core_start (or of
// period phase in the purely periodic case).
struct BiCode {
    std::vector<int> left_period;
    std::vector<int> core;
    std::vector<int> right_period;
    long long core_start = 0;

    static BiCode make(std::vector<int> left, std::vector<int> core, std::vector<int> right,
                       long long core_start);

    // The purely periodic sequence with symbol word[z mod |word|] at index z.
    static BiCode periodic(const std::vector<int>& word);

    int at(long long z) const;

    // Index from which the ray [z, infinity) is purely right-periodic.
    long long right_ray_start() const {
        return core_start + static_cast<long long>(core.size());
    }

    // The sequence re-indexed by z -> z + steps.
    BiCode shifted(long long steps) const;

    bool is_periodic() const {
        return core.empty() && left_period == right_period;
    }

    // One-sided restrictions to indices >= 0 (positive) and <= 0 (negative).
    OneSidedCode positive_part() const;
    OneSidedCode negative_part() const;

    // Positive part of the sequence shifted by z, i.e. indices >= z re-read
    // from 0; cheaper than shifted(z).positive_part().
    OneSidedCode positive_part_from(long long z) const;
    OneSidedCode negative_part_from(long long z) const;

    // Window of symbols [from, to).
    std::vector<int> window(long long from, long long to) const;

    auto operator<=>(const BiCode&) const = default;
};

// Smallest word whose repetition gives `word`.
std::vector<int> primitive_root(const std::vector<int>& word);

}  // namespace geotype

#endif  // GEOTYPE_CODES_HPP
