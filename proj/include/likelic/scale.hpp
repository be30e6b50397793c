#pragma once

// The seven-grade likeliness scale and its (max, min) algebra.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <utility>

namespace likelic {

/// A grade on the 0..6 likeliness scale.
///
/// 0 impossible, 1 conceivable, 2 unlikely, 3 neutral, 4 likely,
/// 5 typical, 6 necessary. Construction from anything outside 0..6 throws
/// std::out_of_range, so a Likeliness value is always valid.
class Likeliness {
public:
    static constexpr int kMin = 0;
    static constexpr int kMax = 6;

    constexpr Likeliness() = default;
    constexpr explicit Likeliness(int grade) : grade_(checked(grade)) {}

    static constexpr Likeliness impossible() { return Likeliness(0); }
    static constexpr Likeliness conceivable() { return Likeliness(1); }
    static constexpr Likeliness unlikely() { return Likeliness(2); }
    static constexpr Likeliness neutral() { return Likeliness(3); }
    static constexpr Likeliness likely() { return Likeliness(4); }
    static constexpr Likeliness typical() { return Likeliness(5); }
    static constexpr Likeliness necessary() { return Likeliness(6); }

    constexpr int grade() const { return grade_; }

    /// Canonical name ("impossible" .. "necessary").
    std::string_view name() const;

    /// Inverse of name(); throws std::invalid_argument for unknown names.
    static Likeliness from_name(std::string_view name);

    friend constexpr auto operator<=>(Likeliness, Likeliness) = default;

private:
    static constexpr std::uint8_t checked(int grade)
    {
        if (grade < kMin || grade > kMax)
            throw std::out_of_range("likeliness grade must be in 0..6");
        return static_cast<std::uint8_t>(grade);
    }

    std::uint8_t grade_ = 0;
};

/// x -> 6 - x
constexpr Likeliness dual(Likeliness x) { return Likeliness(Likeliness::kMax - x.grade()); }

/// Semiring addition (max). Identity 0.
constexpr Likeliness oplus(Likeliness a, Likeliness b) { return a < b ? b : a; }

/// Semiring multiplication (min). Identity 6.
constexpr Likeliness otimes(Likeliness a, Likeliness b) { return a < b ? a : b; }

/// Max over xs; 0 for an empty sequence.
Likeliness combine_or(std::span<const Likeliness> xs);

/// Min over xs. Throws std::invalid_argument on an empty sequence.
Likeliness combine_and(std::span<const Likeliness> xs);

/// A cause with its own grade and the grade of its implication to the effect.
struct Cause {
    Likeliness cause;
    Likeliness implication;
};

/// max_i min(l(B_i), l(B_i -> A)); 0 when there are no causes.
Likeliness total_likeliness(std::span<const Cause> causes);

/// Decibel log-odds, 10 log10(p / (1 - p)).
double log_odds_db(double p);

/// Inverse of log_odds_db.
double probability_from_db(double db);

/// The six probability cut points separating the seven grades.
///
/// cuts[k-1] is the lowest probability that maps to grade k. With B the
/// log-odds of the base threshold (negative), the cuts sit at B, B/sqrt10,
/// B/10, -B/10, -B/sqrt10, -B decibels.
struct BoundarySet {
    double base_odds_db = 0.0;
    std::array<double, 6> cuts{};

    /// Lower cut of grade k, k in 1..6.
    double lower_cut(int grade) const { return cuts.at(static_cast<std::size_t>(grade - 1)); }
};

/// Throws std::invalid_argument unless 0 < base_probability < 0.5.
BoundarySet boundaries(double base_probability);

/// Crisp classification: grade k on [c_k, c_{k+1}), grade 0 below c_1,
/// grade 6 on [c_6, 1]. Throws std::invalid_argument for p outside [0, 1].
Likeliness likeliness_from_probability(double p, const BoundarySet& bounds);

enum class CapacityRule {
    Additive,     ///< smallest n with n * c_k >= c_{k+1}
    Independent,  ///< smallest n with 1 - (1 - c_k)^n >= c_{k+1}
};

/// How many independent grade-k events it takes to reach the next grade's
/// lower cut. from_grade must be 1, 2 or 3 (std::invalid_argument otherwise).
long long aggregation_capacity(const BoundarySet& bounds, int from_grade,
                               CapacityRule rule = CapacityRule::Additive);

inline constexpr double kDefaultBaseProbability = 1e-9;

} // namespace likelic
