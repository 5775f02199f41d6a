#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "twinsieve/int128.hpp"
#include "twinsieve/primes.hpp"

namespace twinsieve {

// One disagreement between a fast path and its reference.
struct Mismatch {
  std::string check;    // which pair of paths disagreed
  std::string detail;   // the inputs, e.g. "M={2,3,5} x=37"
  std::string fast_value;
  std::string oracle_value;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
  friend bool operator<(const Mismatch& a, const Mismatch& b) {
    return std::tie(a.check, a.detail, a.fast_value, a.oracle_value) <
           std::tie(b.check, b.detail, b.fast_value, b.oracle_value);
  }
};

struct VerificationReport {
  std::uint64_t cases_run = 0;
  std::vector<Mismatch> mismatches;  // sorted; empty on success
  std::chrono::milliseconds elapsed{0};
};

// Cross-checks every formula path against direct scans, over every subset
// of the pool up to max_subset_size and a fixed deterministic sample of x
// values: dense through min(1000, max_x), then stride 37 up to max_x.
//
// Checked per subset: the three discarded-cycle constructions against each
// other, the inclusion-exclusion twin count against both the sieve and the
// scanning oracle, and the Legendre and recurrence coprime counts against
// the scanning oracle.  The twin totient is checked against its gcd scan
// at every sampled x.  The report is identical for identical arguments.
VerificationReport verify_all(const Int& max_x, const PrimeSet& pool,
                              std::size_t max_subset_size);

}  // namespace twinsieve
