#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "twinsieve/int128.hpp"

namespace twinsieve {

inline constexpr std::uint32_t kDefaultSegment = 1u << 16;

// Deterministic trial division.  Plenty at this project's scale, where the
// numbers that need certifying are wings of small sieve survivors.
bool is_prime(std::uint64_t n);

// All primes <= limit, ascending, via a segmented sieve.  Memory stays
// O(segment_size + sqrt(limit)); segment_size is a tuning knob only and
// never changes the result.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit,
                                        std::uint32_t segment_size = kDefaultSegment);

// A finite set of distinct primes, kept sorted ascending.  Value type;
// immutable after construction and safe to share across threads.
class PrimeSet {
 public:
  PrimeSet() = default;  // the empty set

  // Sorts, deduplicates, and validates.  Rejects anything that is not a
  // prime (including 0, 1, and negatives), naming the offending value.
  static PrimeSet of(const std::vector<long long>& values);
  static PrimeSet of(std::initializer_list<long long> values);

  // The first n primes 2, 3, 5, ...
  static PrimeSet first_n(std::size_t n);

  const std::vector<std::uint64_t>& primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }
  bool empty() const { return primes_.empty(); }
  bool contains(std::uint64_t p) const;
  bool contains_two() const { return !primes_.empty() && primes_.front() == 2; }

  PrimeSet with(std::uint64_t p) const;
  PrimeSet without(std::uint64_t p) const;

  auto begin() const { return primes_.begin(); }
  auto end() const { return primes_.end(); }

  friend bool operator==(const PrimeSet& a, const PrimeSet& b) = default;

 private:
  std::vector<std::uint64_t> primes_;
};

// The nth prime, 1-indexed: nth_prime(1) == 2.
std::uint64_t nth_prime(std::size_t n);

// Product of the set's primes; 1 for the empty set.  Throws OverflowError
// once the product leaves 128 bits.
Int primorial(const PrimeSet& m);

}  // namespace twinsieve
