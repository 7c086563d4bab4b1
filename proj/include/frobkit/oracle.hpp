#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "frobkit/core_numeric.hpp"

namespace frobkit {

/// Sorted non-representable values below the Frobenius number.
struct GapReport {
  Denominations den;
  std::vector<Int> gaps;  // strictly increasing
  Int frobenius;          // last gap, or -1 when there are none

  Int count() const { return static_cast<Int>(gaps.size()); }
};

struct Mismatch {
  Int d;
  std::string method;  // "(x,y)", "absent", or a contract-violation note
  std::string oracle;
};

struct VerificationReport {
  Denominations den;
  Int d_lo;
  Int d_hi;
  Int checked;
  std::vector<Mismatch> mismatches;
  std::chrono::duration<double, std::milli> elapsed;

  bool passed() const { return mismatches.empty(); }
};

inline constexpr Int kDefaultEnumBudget = 100'000'000;

/// Direct search: scans x from 0 to d/a and returns the first (x, y) with
/// b dividing d - a*x. This is the trust anchor the other methods are
/// compared against; the result, when present, has the least x.
std::optional<Expression> oracle_representable(const Denominations& den, Int d);

/// Enumerates d from 0 to a*b and collects the non-representable values.
/// Any d >= a*b is representable (the least-x candidate fits), so the scan
/// bound is safe without assuming the closed form for the largest gap.
/// Throws SizeGuardError when a*b exceeds the budget.
GapReport gaps(const Denominations& den, Int budget = kDefaultEnumBudget);

/// Differential sweep over [d_lo, d_hi]: compares the solver's represent()
/// with oracle_representable() on presence, and checks value and sign
/// contracts of every returned expression on both sides independently.
/// Mismatches are data, not errors.
VerificationReport verify_range(const Denominations& den, Int d_lo, Int d_hi);

}  // namespace frobkit
