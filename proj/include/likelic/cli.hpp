#pragma once

#include "likelic/scale.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace likelic::cli {

enum ExitStatus : int {
    kSuccess = 0,
    kDomainError = 1,
    kUsageError = 2,
};

/// Entry point behind the `likelic` binary. `args` excludes the program
/// name. A FILE argument of "-" reads `in`.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

/// Base probability from LIKELIC_BASE, falling back to 1e-9.
/// Throws std::invalid_argument when the variable is set but unusable.
double base_from_environment();

struct DiceRow {
    std::string_view name;
    std::string_view event;
    double probability;
    Likeliness grade;
};

/// The four seventeenth-century dice probabilities graded on `bounds`.
std::vector<DiceRow> dice_rows(const BoundarySet& bounds);

std::string demo_dice(const BoundarySet& bounds);

/// "3 (neutral)"
std::string describe(Likeliness x);

} // namespace likelic::cli
