#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "twinsieve/int128.hpp"
#include "twinsieve/primes.hpp"

namespace twinsieve {

// A half-open range [lo, hi) together with the surviving centers in it.
// A center is a value c whose wings c-1 and c+1 are both free of every
// prime of the set; equivalently c avoids the residues +1 and -1 mod each
// prime.  Survivors repeat with period primorial(prime_set) and are
// symmetric about each cycle boundary.
struct CenterRange {
  PrimeSet prime_set;
  Int lo, hi;
  std::vector<Int> centers;  // ascending, all in [lo, hi)

  friend bool operator==(const CenterRange&, const CenterRange&) = default;
};

// Marks the two dead residues of each prime over [lo, hi) in fixed-size
// chunks.  chunk_size tunes memory only; the output never depends on it.
CenterRange twin_centers(const PrimeSet& m, const Int& lo, const Int& hi,
                         std::uint32_t chunk_size = kDefaultSegment);

// The same survivors as (c - 1, c + 1) wing pairs.
std::vector<std::pair<Int, Int>> twin_pairs(const PrimeSet& m, const Int& lo, const Int& hi,
                                            std::uint32_t chunk_size = kDefaultSegment);

// Generalization to wings at distance `gap`: c survives when no prime of m
// divides c - gap or c + gap.  gap == 1 is exactly twin_centers.  The dead
// residues +gap and -gap mod p coincide precisely when p divides 2*gap.
CenterRange gap_centers(const PrimeSet& m, const Int& gap, const Int& lo, const Int& hi,
                        std::uint32_t chunk_size = kDefaultSegment);

// Sieve survivors for the first n primes below the certification bound
// p_{n+1}^2 - 2, split by whether the wings are provably prime.
struct TrueTwinReport {
  std::size_t n = 0;
  Int bound;                               // (p_{n+1})^2 - 2
  std::vector<Int> centers;                // 3 < c < bound; wings certified prime
  std::vector<std::pair<Int, Int>> pairs;  // the certified wing pairs
  std::vector<Int> small_centers;          // survivors c <= 3, below the certified zone

  friend bool operator==(const TrueTwinReport&, const TrueTwinReport&) = default;
};

// Below p_{n+1}^2 - 2, a surviving center's wings have no prime factor at
// all if they have none from the first n primes, so every reported pair is
// a genuine twin prime pair.  Each wing is still certified by trial
// division; a failure would be a logic error and throws.
TrueTwinReport true_twin_centers(std::size_t n);

}  // namespace twinsieve
