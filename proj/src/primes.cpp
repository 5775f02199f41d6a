#include "twinsieve/primes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace twinsieve {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

namespace {

std::uint64_t isqrt64(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

}  // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit, std::uint32_t segment_size) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  if (segment_size == 0) segment_size = kDefaultSegment;

  std::uint64_t root = isqrt64(limit);
  std::vector<char> small(root + 1, 1);
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += i) small[j] = 0;
  }
  std::vector<std::uint64_t> base = primes;  // primes <= sqrt(limit)

  std::vector<char> seg(segment_size);
  for (std::uint64_t lo = root + 1; lo <= limit; lo += segment_size) {
    std::uint64_t hi = std::min(limit, lo + segment_size - 1);
    std::uint64_t len = hi - lo + 1;
    std::fill(seg.begin(), seg.begin() + len, 1);
    for (std::uint64_t p : base) {
      std::uint64_t first = ((lo + p - 1) / p) * p;
      for (std::uint64_t j = first; j <= hi; j += p) seg[j - lo] = 0;
    }
    for (std::uint64_t i = 0; i < len; ++i) {
      if (seg[i]) primes.push_back(lo + i);
    }
    if (hi == limit) break;  // avoid wrapping lo near the top of the range
  }
  return primes;
}

PrimeSet PrimeSet::of(const std::vector<long long>& values) {
  PrimeSet out;
  for (long long v : values) {
    if (v < 2 || !is_prime(static_cast<std::uint64_t>(v)))
      throw std::invalid_argument(std::to_string(v) + " is not prime");
    out.primes_.push_back(static_cast<std::uint64_t>(v));
  }
  std::sort(out.primes_.begin(), out.primes_.end());
  out.primes_.erase(std::unique(out.primes_.begin(), out.primes_.end()), out.primes_.end());
  return out;
}

PrimeSet PrimeSet::of(std::initializer_list<long long> values) {
  return of(std::vector<long long>(values));
}

PrimeSet PrimeSet::first_n(std::size_t n) {
  PrimeSet out;
  if (n == 0) return out;
  // Standard overshoot bound on the nth prime, grown if it falls short.
  std::uint64_t limit = 16;
  if (n >= 6) {
    double dn = static_cast<double>(n);
    limit = static_cast<std::uint64_t>(dn * (std::log(dn) + std::log(std::log(dn))) * 1.2) + 16;
  }
  std::vector<std::uint64_t> primes = primes_up_to(limit);
  while (primes.size() < n) {
    limit += limit / 2 + 16;
    primes = primes_up_to(limit);
  }
  primes.resize(n);
  out.primes_ = std::move(primes);
  return out;
}

bool PrimeSet::contains(std::uint64_t p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

PrimeSet PrimeSet::with(std::uint64_t p) const {
  std::vector<long long> values(primes_.begin(), primes_.end());
  values.push_back(static_cast<long long>(p));
  return of(values);
}

PrimeSet PrimeSet::without(std::uint64_t p) const {
  PrimeSet out;
  for (std::uint64_t q : primes_) {
    if (q != p) out.primes_.push_back(q);
  }
  return out;
}

std::uint64_t nth_prime(std::size_t n) {
  if (n == 0) throw std::invalid_argument("prime indices start at 1");
  return PrimeSet::first_n(n).primes().back();
}

Int primorial(const PrimeSet& m) {
  Int product = 1;
  for (std::uint64_t p : m) product *= Int(p);
  return product;
}

}  // namespace twinsieve
