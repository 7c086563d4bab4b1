#include "frobkit/core_numeric.hpp"

#include <limits>
#include <numeric>
#include <utility>

namespace frobkit {

namespace {

using Wide = __int128;

Int narrow_checked(Wide v, const char* context) {
  if (v < std::numeric_limits<Int>::min() || v > std::numeric_limits<Int>::max()) {
    throw OverflowError(std::string(context) + " overflows the 64-bit range");
  }
  return static_cast<Int>(v);
}

}  // namespace

Expression::Expression(const Denominations& den, Int x, Int y)
    : x_(x),
      y_(y),
      d_(narrow_checked(Wide(den.a()) * x + Wide(den.b()) * y,
                        "expression value a*x + b*y")) {}

std::ostream& operator<<(std::ostream& os, const Expression& e) {
  return os << '(' << e.x() << ", " << e.y() << ')';
}

Denominations validate_denominations(Int a, Int b) {
  if (a <= 0 || b <= 0) throw NonPositiveError(a, b);
  const Int g = std::gcd(a, b);
  if (g != 1) throw NotCoprimeError(g);
  narrow_checked(Wide(a) * b, "denomination product a*b");
  return Denominations(a, b);
}

BezoutTriple extended_gcd(Int a, Int b) {
  if (a < 0 || b < 0) {
    throw PreconditionError("extended_gcd requires nonnegative inputs");
  }
  if (a == 0 && b == 0) throw BothZeroError();

  // Iterative form of the remainder recursion with base (a, 0) -> (a, 1, 0);
  // invariant: a*s + b*t == r for each row.
  Int r0 = a, r1 = b;
  Int s0 = 1, s1 = 0;
  Int t0 = 0, t1 = 1;
  while (r1 != 0) {
    const Int q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  return {r0, s0, t0};
}

MinimalUnitPair minimal_unit_expressions(const Denominations& den) {
  const Int a = den.a();
  const Int b = den.b();
  if (a == 1 || b == 1) throw TrivialDenominationError();

  // Translate the Bezout coefficient of a into (0, b); it cannot land on 0
  // because a*x1 == 1 (mod b) and b > 1.
  Int x1 = extended_gcd(a, b).s % b;
  if (x1 <= 0) x1 += b;
  const Int y1 = (1 - a * x1) / b;  // a*x1 < a*b, exact division

  const Expression e1(den, x1, y1);
  const Expression e2(den, x1 - b, y1 + a);
  return {e1, e2};
}

Int frobenius_number(const Denominations& den) {
  if (den.a() == 1 || den.b() == 1) return -1;
  // 0 < a*b - a - b < a*b, which fits by the construction invariant
  return den.a() * den.b() - den.a() - den.b();
}

}  // namespace frobkit
