#pragma once

#include <optional>
#include <vector>

#include "frobkit/core_numeric.hpp"

namespace frobkit {

enum class UnitChoice { E1, E2 };

/// One inductive step: `to` is `from` plus the chosen minimal unit
/// expression, so to.value() == from.value() + 1 and both are acceptable.
struct StepTrace {
  Expression from;
  UnitChoice added;
  Expression to;
};

/// All acceptable expressions of one value, deduplicated and sorted by x.
struct ExpressionLevel {
  Int d;
  std::vector<Expression> expressions;
};

/// Leveled DAG of acceptable expressions: levels[k] holds every acceptable
/// expression of value root + k, edges record each acceptable addition of a
/// minimal unit expression between consecutive levels. Node identity is
/// (x, y, d); a node can have two incoming edges.
struct ExpressionTree {
  std::vector<ExpressionLevel> levels;
  std::vector<StepTrace> edges;

  const ExpressionLevel& root_level() const { return levels.front(); }
};

inline constexpr Int kDefaultTreeDepthFactor = 10;  // bound = 10 * a * b

/// The unique acceptable expression of a*b - a - b + 1, built directly from
/// the minimal unit pair: (x, y) = (b - 1 + e2.x, e2.y - 1).
Expression base_expression(const Denominations& den, const MinimalUnitPair& mu);

/// Advances an acceptable expression of value d >= a*b - a - b + 1 to one of
/// value d + 1 by adding a minimal unit expression. Tries e + e1 first, then
/// e + e2; at least one candidate is always acceptable in that range.
StepTrace step(const Denominations& den, const MinimalUnitPair& mu,
               const Expression& e);

/// Iterates step() from the base expression until value d is reached.
/// Requires d >= a*b - a - b + 1 (for a, b > 1); when a == 1 or b == 1 the
/// direct expression (d, 0) resp. (0, d) is returned instead.
Expression represent_above_frobenius(const Denominations& den, Int d);

/// Representation with the least coefficient of a: x is the unique value in
/// [0, b) with a*x == d (mod b), and d is representable iff a*x <= d.
/// Total over all d >= 0; used below the Frobenius number and as the
/// cross-check path for the recursive method.
std::optional<Expression> represent_direct(const Denominations& den, Int d);

/// Total representation query: recursive method above the Frobenius number,
/// least-x direct method at or below it. Absent iff d is a gap.
std::optional<Expression> represent(const Denominations& den, Int d);

/// Every (x, y) with x, y >= 0 and a*x + b*y == d, sorted by x. Consecutive
/// members differ by (b, -a).
ExpressionLevel all_acceptable_expressions(const Denominations& den, Int d);

/// Levels 0..depth starting at the base expression; level k+1 collects the
/// acceptable sums of level-k members with either minimal unit expression.
/// depth_bound defaults to kDefaultTreeDepthFactor * a * b.
ExpressionTree expression_tree(const Denominations& den, Int depth,
                               std::optional<Int> depth_bound = std::nullopt);

}  // namespace frobkit
