#include "likelic/scale.hpp"

#include <algorithm>
#include <cmath>

namespace likelic {

namespace {

constexpr std::array<std::string_view, 7> kNames = {
    "impossible", "conceivable", "unlikely", "neutral", "likely", "typical", "necessary",
};

} // namespace

std::string_view Likeliness::name() const { return kNames[grade_]; }

Likeliness Likeliness::from_name(std::string_view name)
{
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (kNames[i] == name)
            return Likeliness(static_cast<int>(i));
    throw std::invalid_argument("unknown likeliness name");
}

Likeliness combine_or(std::span<const Likeliness> xs)
{
    Likeliness acc = Likeliness::impossible();
    for (auto x : xs)
        acc = oplus(acc, x);
    return acc;
}

Likeliness combine_and(std::span<const Likeliness> xs)
{
    if (xs.empty())
        throw std::invalid_argument("combine_and of an empty sequence");
    Likeliness acc = Likeliness::necessary();
    for (auto x : xs)
        acc = otimes(acc, x);
    return acc;
}

Likeliness total_likeliness(std::span<const Cause> causes)
{
    Likeliness acc = Likeliness::impossible();
    for (const auto& c : causes)
        acc = oplus(acc, otimes(c.cause, c.implication));
    return acc;
}

double log_odds_db(double p) { return 10.0 * std::log10(p / (1.0 - p)); }

double probability_from_db(double db)
{
    // p = odds / (1 + odds), written to stay accurate for large |db|.
    return 1.0 / (1.0 + std::pow(10.0, -db / 10.0));
}

BoundarySet boundaries(double base_probability)
{
    if (!(base_probability > 0.0 && base_probability < 0.5))
        throw std::invalid_argument("base probability must lie in (0, 0.5)");

    BoundarySet out;
    out.base_odds_db = log_odds_db(base_probability);
    const double b = out.base_odds_db;
    const double sqrt10 = std::sqrt(10.0);
    const std::array<double, 6> db = {b, b / sqrt10, b / 10.0, -b / 10.0, -b / sqrt10, -b};
    std::transform(db.begin(), db.end(), out.cuts.begin(), probability_from_db);
    return out;
}

Likeliness likeliness_from_probability(double p, const BoundarySet& bounds)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("probability must lie in [0, 1]");
    // Number of cuts at or below p.
    const auto above = std::upper_bound(bounds.cuts.begin(), bounds.cuts.end(), p);
    return Likeliness(static_cast<int>(above - bounds.cuts.begin()));
}

long long aggregation_capacity(const BoundarySet& bounds, int from_grade, CapacityRule rule)
{
    if (from_grade < 1 || from_grade > 3)
        throw std::invalid_argument("aggregation capacity is defined for grades 1, 2 and 3");
    const double lo = bounds.lower_cut(from_grade);
    const double hi = bounds.lower_cut(from_grade + 1);

    auto reaches = [&](long long n) {
        if (rule == CapacityRule::Additive)
            return static_cast<double>(n) * lo >= hi;
        return -std::expm1(static_cast<double>(n) * std::log1p(-lo)) >= hi;
    };

    double estimate = rule == CapacityRule::Additive ? hi / lo : std::log1p(-hi) / std::log1p(-lo);
    auto n = std::max<long long>(1, static_cast<long long>(std::ceil(estimate)));
    // Correct for rounding in the closed-form estimate.
    while (n > 1 && reaches(n - 1))
        --n;
    while (!reaches(n))
        ++n;
    return n;
}

} // namespace likelic
