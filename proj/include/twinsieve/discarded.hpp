#pragma once

#include <cstdint>
#include <vector>

#include "twinsieve/int128.hpp"
#include "twinsieve/primes.hpp"

namespace twinsieve {

// A discarded center for a prime set M is a residue z mod primorial(M)
// where every p in M divides one wing, z-1 or z+1.  These are exactly the
// residue classes that a naive per-prime count subtracts more than once,
// so they carry the whole inclusion-exclusion correction.

// One sign choice per prime of a set, aligned with the set's sorted order:
// +1 means z = +1 (mod p), -1 means z = -1 (mod p).  For p = 2 the two
// signs name the same class 1 (mod 2), so enumeration pins that entry +1.
struct SignAssignment {
  std::vector<std::int8_t> signs;

  friend bool operator==(const SignAssignment&, const SignAssignment&) = default;
};

// Every distinct assignment for m: 2^k of them, k = number of odd primes.
std::vector<SignAssignment> all_sign_assignments(const PrimeSet& m);

// The unique residue in [0, primorial(m)) matching the assignment, by
// pairwise CRT combination.  Moduli are distinct primes, hence coprime.
Int crt_center(const PrimeSet& m, const SignAssignment& sa);

// Full description of one primorial cycle for a prime set.
struct CycleProfile {
  PrimeSet prime_set;
  Int modulus;                  // primorial of the set
  std::vector<Int> discarded;   // sorted residues in [0, modulus)
  Int survivors_per_cycle;      // centers per cycle: product of (p - 2), odd p

  friend bool operator==(const CycleProfile&, const CycleProfile&) = default;
};

// Builds the profile by solving CRT for every sign assignment.
CycleProfile discarded_crt(const PrimeSet& m);

// Extends a profile by one more prime q: each residue of the base cycle
// spawns q candidates, of which exactly the ones meeting q's wing condition
// survive (two per residue for odd q, one for q = 2).
CycleProfile discarded_lift(const CycleProfile& base, std::uint64_t q);

inline constexpr std::uint64_t kDefaultScanGuard = 100'000'000;

// Brute-force check of every residue of the cycle.  Refuses moduli past
// scan_guard; this is the slow reference construction.
CycleProfile discarded_scan(const PrimeSet& m, std::uint64_t scan_guard = kDefaultScanGuard);

// How many members of the profile's discarded classes lie in [1, x]:
// sum over residues z of floor((x + modulus - z) / modulus).
Int discarded_count(const CycleProfile& profile, const Int& x);

}  // namespace twinsieve
