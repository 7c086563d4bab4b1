#pragma once

#include <compare>
#include <ostream>

#include "frobkit/errors.hpp"

namespace frobkit {

/// A validated pair of coprime positive coin denominations.
/// The only way to obtain one is validate_denominations(), which also
/// guarantees that a*b fits into Int, so every derived quantity up to the
/// Frobenius number is exactly representable.
class Denominations {
 public:
  Int a() const { return a_; }
  Int b() const { return b_; }

  friend bool operator==(const Denominations&, const Denominations&) = default;

 private:
  friend Denominations validate_denominations(Int a, Int b);
  Denominations(Int a, Int b) : a_(a), b_(b) {}

  Int a_;
  Int b_;
};

/// A coefficient pair (x, y) together with its value d = a*x + b*y.
/// The value is computed (overflow-checked) at construction and the triple is
/// immutable afterwards. An expression is acceptable when both coefficients
/// are nonnegative.
class Expression {
 public:
  Expression(const Denominations& den, Int x, Int y);

  Int x() const { return x_; }
  Int y() const { return y_; }
  Int value() const { return d_; }
  bool acceptable() const { return x_ >= 0 && y_ >= 0; }

  // Lexicographic on (x, y, d); within a fixed value this orders by x.
  friend auto operator<=>(const Expression&, const Expression&) = default;

 private:
  Int x_;
  Int y_;
  Int d_;
};

std::ostream& operator<<(std::ostream& os, const Expression& e);

/// The two canonical integer solutions of a*x + b*y = 1:
///   e1 with 0 < x < b and -a < y < 0,
///   e2 with -b < x < 0 and 0 < y < a.
/// They satisfy e1.x - e2.x = b and e2.y - e1.y = a.
struct MinimalUnitPair {
  Expression e1;
  Expression e2;
};

struct BezoutTriple {
  Int g;  // gcd(a, b), positive
  Int s;  // coefficient of a
  Int t;  // coefficient of b
};

/// Checks a >= 1, b >= 1, gcd(a, b) == 1 and that a*b fits Int.
/// Throws NonPositiveError, NotCoprimeError or OverflowError.
Denominations validate_denominations(Int a, Int b);

/// Classical remainder recursion with base case (a, 0) -> (a, 1, 0), so the
/// returned coefficients are deterministic across platforms.
/// Requires a >= 0, b >= 0, not both zero.
BezoutTriple extended_gcd(Int a, Int b);

/// Computes the minimal unit pair by reducing the Bezout coefficient of a
/// into the residue window (0, b). Requires a > 1 and b > 1; throws
/// TrivialDenominationError otherwise.
MinimalUnitPair minimal_unit_expressions(const Denominations& den);

/// a*b - a - b for a, b > 1; -1 when a == 1 or b == 1 (every nonnegative
/// value is then representable).
Int frobenius_number(const Denominations& den);

}  // namespace frobkit
