#include "frobkit/solver.hpp"

#include <algorithm>
#include <limits>

namespace frobkit {

namespace {

using Wide = __int128;

void require_unit_pair(const MinimalUnitPair& mu) {
  if (mu.e1.value() != 1 || mu.e2.value() != 1) {
    throw PreconditionError("minimal unit pair does not belong to these "
                            "denominations");
  }
}

// Unique x in [0, b) with a*x == d (mod b). gcd(a, b) == 1 is guaranteed by
// Denominations, so the Bezout coefficient of a is an inverse mod b.
Int least_residue_coefficient(const Denominations& den, Int d) {
  const Int b = den.b();
  if (b == 1) return 0;
  Int inv = extended_gcd(den.a(), b).s % b;
  if (inv < 0) inv += b;
  return static_cast<Int>((Wide(d % b) * inv) % b);
}

}  // namespace

Expression base_expression(const Denominations& den,
                           const MinimalUnitPair& mu) {
  require_unit_pair(mu);
  return Expression(den, den.b() - 1 + mu.e2.x(), mu.e2.y() - 1);
}

StepTrace step(const Denominations& den, const MinimalUnitPair& mu,
               const Expression& e) {
  require_unit_pair(mu);
  if (!e.acceptable()) {
    throw PreconditionError("step requires an acceptable expression");
  }
  if (e.value() <= frobenius_number(den)) {
    throw PreconditionError(
        "step requires a value above the Frobenius number");
  }

  const Expression with_e1(den, e.x() + mu.e1.x(), e.y() + mu.e1.y());
  if (with_e1.acceptable()) return {e, UnitChoice::E1, with_e1};
  const Expression with_e2(den, e.x() + mu.e2.x(), e.y() + mu.e2.y());
  if (with_e2.acceptable()) return {e, UnitChoice::E2, with_e2};
  // unreachable for any acceptable expression above the Frobenius number
  throw Error("internal: both step candidates were unacceptable");
}

Expression represent_above_frobenius(const Denominations& den, Int d) {
  if (den.a() == 1 || den.b() == 1) {
    if (d < 0) throw PreconditionError("value below the representable range");
    return den.a() == 1 ? Expression(den, d, 0) : Expression(den, 0, d);
  }

  const Int base_value = frobenius_number(den) + 1;
  if (d < base_value) {
    throw PreconditionError("value below the Frobenius number plus one");
  }
  const MinimalUnitPair mu = minimal_unit_expressions(den);
  Expression e = base_expression(den, mu);
  for (Int v = base_value; v < d; ++v) {
    e = step(den, mu, e).to;
  }
  return e;
}

std::optional<Expression> represent_direct(const Denominations& den, Int d) {
  if (d < 0) throw NegativeTargetError(d);
  const Int x = least_residue_coefficient(den, d);
  if (den.a() * x > d) return std::nullopt;  // x < b, so a*x < a*b fits
  return Expression(den, x, (d - den.a() * x) / den.b());
}

std::optional<Expression> represent(const Denominations& den, Int d) {
  if (d < 0) throw NegativeTargetError(d);
  if (den.a() == 1 || den.b() == 1 || d > frobenius_number(den)) {
    return represent_above_frobenius(den, d);
  }
  return represent_direct(den, d);
}

ExpressionLevel all_acceptable_expressions(const Denominations& den, Int d) {
  if (d < 0) throw NegativeTargetError(d);
  ExpressionLevel level{d, {}};
  const Int first = least_residue_coefficient(den, d);
  const Int x_max = d / den.a();
  for (Int x = first; x <= x_max;) {
    level.expressions.emplace_back(den, x, (d - den.a() * x) / den.b());
    if (x > x_max - den.b()) break;  // avoids overflow on the last increment
    x += den.b();
  }
  return level;
}

ExpressionTree expression_tree(const Denominations& den, Int depth,
                               std::optional<Int> depth_bound) {
  if (depth < 0) throw PreconditionError("tree depth must be nonnegative");
  const MinimalUnitPair mu = minimal_unit_expressions(den);

  Int bound;
  if (depth_bound) {
    bound = *depth_bound;
  } else {
    const Wide scaled = Wide(kDefaultTreeDepthFactor) * den.a() * den.b();
    bound = scaled > std::numeric_limits<Int>::max()
                ? std::numeric_limits<Int>::max()
                : static_cast<Int>(scaled);
  }
  if (depth > bound) throw DepthExceededError(depth, bound);

  ExpressionTree tree;
  const Expression root = base_expression(den, mu);
  tree.levels.push_back({root.value(), {root}});

  for (Int k = 0; k < depth; ++k) {
    const ExpressionLevel& current = tree.levels.back();
    std::vector<Expression> next;
    for (const Expression& e : current.expressions) {
      for (const UnitChoice choice : {UnitChoice::E1, UnitChoice::E2}) {
        const Expression& unit = choice == UnitChoice::E1 ? mu.e1 : mu.e2;
        const Expression candidate(den, e.x() + unit.x(), e.y() + unit.y());
        if (!candidate.acceptable()) continue;
        tree.edges.push_back({e, choice, candidate});
        next.push_back(candidate);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    tree.levels.push_back({current.d + 1, std::move(next)});
  }
  return tree;
}

}  // namespace frobkit
