#include "twinsieve/discarded.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace twinsieve {

namespace {

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // Extended Euclid; gcd(a, p) == 1 because p is prime and a != 0 mod p.
  long long t = 0, nt = 1;
  long long r = static_cast<long long>(p), nr = static_cast<long long>(a % p);
  while (nr != 0) {
    long long q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

Int survivors_per_cycle(const PrimeSet& m) {
  Int product = 1;
  for (std::uint64_t p : m) {
    if (p != 2) product *= Int(p - 2);
  }
  return product;
}

}  // namespace

std::vector<SignAssignment> all_sign_assignments(const PrimeSet& m) {
  std::size_t odd = 0;
  for (std::uint64_t p : m) {
    if (p != 2) ++odd;
  }
  std::vector<SignAssignment> out;
  out.reserve(std::size_t{1} << odd);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << odd); ++mask) {
    SignAssignment sa;
    sa.signs.reserve(m.size());
    std::size_t bit = 0;
    for (std::uint64_t p : m) {
      if (p == 2) {
        sa.signs.push_back(+1);
      } else {
        sa.signs.push_back((mask >> bit++) & 1 ? -1 : +1);
      }
    }
    out.push_back(std::move(sa));
  }
  return out;
}

Int crt_center(const PrimeSet& m, const SignAssignment& sa) {
  if (sa.signs.size() != m.size())
    throw std::invalid_argument("sign assignment does not match prime set size");
  Int r = 0;
  Int mod = 1;
  std::size_t i = 0;
  for (std::uint64_t p : m) {
    // Target residue mod p; note -1 and +1 coincide at p = 2.
    std::uint64_t target = sa.signs[i++] > 0 ? 1 % p : p - 1;
    std::uint64_t rp = (r % Int(p)).to_u64();
    std::uint64_t mp = (mod % Int(p)).to_u64();
    std::uint64_t delta = (target + p - rp) % p;
    std::uint64_t t = mul_mod(delta, inv_mod(mp, p), p);
    r += mod * Int(t);
    mod *= Int(p);
  }
  return r;
}

CycleProfile discarded_crt(const PrimeSet& m) {
  CycleProfile out;
  out.prime_set = m;
  out.modulus = primorial(m);
  for (const SignAssignment& sa : all_sign_assignments(m)) {
    out.discarded.push_back(crt_center(m, sa));
  }
  std::sort(out.discarded.begin(), out.discarded.end());
  out.discarded.erase(std::unique(out.discarded.begin(), out.discarded.end()),
                      out.discarded.end());
  out.survivors_per_cycle = survivors_per_cycle(m);
  return out;
}

CycleProfile discarded_lift(const CycleProfile& base, std::uint64_t q) {
  if (!is_prime(q)) throw std::invalid_argument(std::to_string(q) + " is not prime");
  if (base.prime_set.contains(q))
    throw std::invalid_argument(std::to_string(q) + " is already in the prime set");

  CycleProfile out;
  out.prime_set = base.prime_set.with(q);
  out.modulus = base.modulus * Int(q);
  Int qi = q;
  for (const Int& z0 : base.discarded) {
    for (std::uint64_t k = 0; k < q; ++k) {
      Int c = z0 + Int(k) * base.modulus;
      Int r = c % qi;
      if (r == 1 || r == qi - 1) out.discarded.push_back(c);
    }
  }
  std::sort(out.discarded.begin(), out.discarded.end());
  out.survivors_per_cycle = survivors_per_cycle(out.prime_set);
  return out;
}

CycleProfile discarded_scan(const PrimeSet& m, std::uint64_t scan_guard) {
  CycleProfile out;
  out.prime_set = m;
  out.modulus = primorial(m);
  if (out.modulus > Int(scan_guard))
    throw GuardError("scan modulus " + out.modulus.str() + " exceeds guard " +
                     std::to_string(scan_guard));
  std::uint64_t period = out.modulus.to_u64();
  const auto& primes = m.primes();
  for (std::uint64_t z = 0; z < period; ++z) {
    bool all = true;
    for (std::uint64_t p : primes) {
      if ((z + p - 1) % p != 0 && (z + 1) % p != 0) {
        all = false;
        break;
      }
    }
    if (all) out.discarded.push_back(Int(z));
  }
  out.survivors_per_cycle = survivors_per_cycle(m);
  return out;
}

Int discarded_count(const CycleProfile& profile, const Int& x) {
  if (x < 0) throw DomainError("count bound must be nonnegative");
  Int total = 0;
  for (const Int& z : profile.discarded) {
    total += (x + profile.modulus - z) / profile.modulus;
  }
  return total;
}

}  // namespace twinsieve
