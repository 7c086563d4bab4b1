#include "frobkit/oracle.hpp"

#include <algorithm>
#include <chrono>

#include "frobkit/solver.hpp"

namespace frobkit {

namespace {

using Wide = __int128;

std::string describe(const std::optional<Expression>& e) {
  if (!e) return "absent";
  return "(" + std::to_string(e->x()) + "," + std::to_string(e->y()) + ")";
}

// Independent recomputation of the expression contract: value and signs.
bool satisfies_contract(const Denominations& den, Int d, const Expression& e) {
  return e.x() >= 0 && e.y() >= 0 &&
         Wide(den.a()) * e.x() + Wide(den.b()) * e.y() == Wide(d);
}

}  // namespace

std::optional<Expression> oracle_representable(const Denominations& den,
                                               Int d) {
  if (d < 0) throw NegativeTargetError(d);
  const Int a = den.a();
  const Int b = den.b();
  const Int x_max = d / a;
  for (Int x = 0; x <= x_max; ++x) {
    if ((d - a * x) % b == 0) return Expression(den, x, (d - a * x) / b);
  }
  return std::nullopt;
}

GapReport gaps(const Denominations& den, Int budget) {
  const Int limit = den.a() * den.b();
  if (limit > budget) throw SizeGuardError(limit, budget);

  // Sieve over 0..a*b: a value is representable iff it is zero or reachable
  // from a smaller representable value by adding a or b.
  std::vector<bool> representable(static_cast<size_t>(limit) + 1, false);
  representable[0] = true;
  for (Int v = 1; v <= limit; ++v) {
    representable[static_cast<size_t>(v)] =
        (v >= den.a() && representable[static_cast<size_t>(v - den.a())]) ||
        (v >= den.b() && representable[static_cast<size_t>(v - den.b())]);
  }

  GapReport report{den, {}, -1};
  for (Int v = 0; v <= limit; ++v) {
    if (!representable[static_cast<size_t>(v)]) report.gaps.push_back(v);
  }
  if (!report.gaps.empty()) report.frobenius = report.gaps.back();
  return report;
}

VerificationReport verify_range(const Denominations& den, Int d_lo, Int d_hi) {
  if (d_lo < 0) throw NegativeTargetError(d_lo);
  if (d_lo > d_hi) throw PreconditionError("verification range is empty");

  const auto started = std::chrono::steady_clock::now();
  VerificationReport report{den, d_lo, d_hi, 0, {}, {}};

  const bool trivial = den.a() == 1 || den.b() == 1;
  const Int f = frobenius_number(den);

  // Above the Frobenius number the recursive method is deterministic, so the
  // sweep advances one expression chain instead of re-deriving it from the
  // base for every d. Sampled full represent() calls cross-check the chain.
  std::optional<MinimalUnitPair> mu;
  std::optional<Expression> chain;
  if (!trivial && d_hi > f) {
    mu = minimal_unit_expressions(den);
    chain = base_expression(den, *mu);
    const Int start = std::max(d_lo, f + 1);
    for (Int v = f + 1; v < start; ++v) chain = step(den, *mu, *chain).to;
  }
  const Int sample_stride = std::max<Int>(1, (d_hi - d_lo) / 16);

  for (Int d = d_lo; d <= d_hi; ++d) {
    std::optional<Expression> method;
    bool on_chain = false;
    if (trivial || d <= f) {
      method = represent(den, d);
    } else {
      method = chain;
      on_chain = true;
      if (d < d_hi) chain = step(den, *mu, *chain).to;
    }
    const std::optional<Expression> oracle = oracle_representable(den, d);
    ++report.checked;

    if (method.has_value() != oracle.has_value()) {
      report.mismatches.push_back({d, describe(method), describe(oracle)});
      continue;
    }
    if (method && !satisfies_contract(den, d, *method)) {
      report.mismatches.push_back(
          {d, describe(method) + " violates the value/sign contract",
           describe(oracle)});
    }
    if (oracle && !satisfies_contract(den, d, *oracle)) {
      report.mismatches.push_back(
          {d, describe(method),
           describe(oracle) + " violates the value/sign contract"});
    }
    if (on_chain && (d - d_lo) % sample_stride == 0) {
      const auto fresh = represent(den, d);
      if (!fresh || !(*fresh == *method)) {
        report.mismatches.push_back(
            {d, "chain " + describe(method) + " != represent " +
                 describe(fresh),
             describe(oracle)});
      }
    }
  }

  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

}  // namespace frobkit
