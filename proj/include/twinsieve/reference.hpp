#pragma once

#include <cstdint>
#include <vector>

#include "twinsieve/int128.hpp"
#include "twinsieve/primes.hpp"

namespace twinsieve {

// Reference implementations: deliberately naive direct scans, kept free of
// the formula-based fast paths so the two can check each other.  Everything
// here is O(x) or worse and meant for test-sized inputs only.

// True when no prime of m divides v.  The empty set accepts everything,
// including 0.
bool is_m_prime(const Int& v, const PrimeSet& m);

// Number of a in [1, x] with both a-1 and a+1 free of every prime in m,
// by scanning each candidate.
Int oracle_twin_count(const PrimeSet& m, const Int& x);

// Number of a in [1, x] with no prime of m dividing a, by scanning.
Int oracle_f(const PrimeSet& m, const Int& x);

// Number of a in [1, x] with gcd(a^2 - 1, x) == 1, by gcd scan.
std::uint64_t oracle_twin_totient(std::uint64_t x);

// Centers c in [lo, hi) whose wings c-1 and c+1 are both free of every
// prime in m, scanning one candidate at a time.
std::vector<Int> oracle_centers(const PrimeSet& m, const Int& lo, const Int& hi);

}  // namespace twinsieve
