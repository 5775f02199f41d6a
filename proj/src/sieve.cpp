#include "twinsieve/sieve.hpp"

#include <algorithm>
#include <stdexcept>

namespace twinsieve {

CenterRange gap_centers(const PrimeSet& m, const Int& gap, const Int& lo, const Int& hi,
                        std::uint32_t chunk_size) {
  if (gap < 1) throw DomainError("wing distance must be at least 1");
  if (lo < 0) throw DomainError("range start must be nonnegative");
  if (lo > hi) throw DomainError("range start exceeds range end");
  if (chunk_size == 0) chunk_size = kDefaultSegment;

  CenterRange out;
  out.prime_set = m;
  out.lo = lo;
  out.hi = hi;

  // Dead residues of each prime: +gap and -gap mod p, which collapse to one
  // class when p divides 2*gap.
  struct Dead {
    std::uint64_t p;
    std::uint64_t r[2];
    int count;
  };
  std::vector<Dead> dead;
  dead.reserve(m.size());
  for (std::uint64_t p : m) {
    std::uint64_t g = (gap % Int(p)).to_u64();
    Dead d{p, {g, (p - g) % p}, 2};
    if (d.r[0] == d.r[1]) d.count = 1;
    dead.push_back(d);
  }

  std::vector<char> alive(chunk_size);
  for (Int cur = lo; cur < hi;) {
    Int want = hi - cur;
    std::uint64_t len =
        want > Int(chunk_size) ? chunk_size : want.to_u64();
    std::fill(alive.begin(), alive.begin() + len, 1);
    for (const Dead& d : dead) {
      std::uint64_t base = (cur % Int(d.p)).to_u64();
      for (int i = 0; i < d.count; ++i) {
        for (std::uint64_t j = (d.r[i] + d.p - base) % d.p; j < len; j += d.p) alive[j] = 0;
      }
    }
    for (std::uint64_t j = 0; j < len; ++j) {
      if (alive[j]) out.centers.push_back(cur + Int(j));
    }
    cur += Int(len);
  }
  return out;
}

CenterRange twin_centers(const PrimeSet& m, const Int& lo, const Int& hi,
                         std::uint32_t chunk_size) {
  return gap_centers(m, 1, lo, hi, chunk_size);
}

std::vector<std::pair<Int, Int>> twin_pairs(const PrimeSet& m, const Int& lo, const Int& hi,
                                            std::uint32_t chunk_size) {
  CenterRange range = twin_centers(m, lo, hi, chunk_size);
  std::vector<std::pair<Int, Int>> pairs;
  pairs.reserve(range.centers.size());
  for (const Int& c : range.centers) pairs.emplace_back(c - 1, c + 1);
  return pairs;
}

TrueTwinReport true_twin_centers(std::size_t n) {
  if (n == 0) throw DomainError("need at least one sieving prime");

  TrueTwinReport out;
  out.n = n;
  PrimeSet m = PrimeSet::first_n(n);
  std::uint64_t next = nth_prime(n + 1);
  out.bound = Int(next) * Int(next) - 2;

  out.small_centers = twin_centers(m, 1, 4).centers;
  out.centers = twin_centers(m, 4, out.bound).centers;
  for (const Int& c : out.centers) {
    std::uint64_t left = (c - 1).to_u64();
    std::uint64_t right = (c + 1).to_u64();
    // Survivors below the bound cannot hide a larger prime factor; check anyway.
    if (!is_prime(left) || !is_prime(right))
      throw std::logic_error("survivor wing failed primality below the certified bound");
    out.pairs.emplace_back(Int(left), Int(right));
  }
  return out;
}

}  // namespace twinsieve
