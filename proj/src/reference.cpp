#include "twinsieve/reference.hpp"

#include <numeric>

namespace twinsieve {

bool is_m_prime(const Int& v, const PrimeSet& m) {
  for (std::uint64_t p : m) {
    if (v % Int(p) == 0) return false;
  }
  return true;
}

Int oracle_twin_count(const PrimeSet& m, const Int& x) {
  long long xi = x.to_i64();  // scans past 2^63 are out of the question anyway
  long long count = 0;
  for (long long a = 1; a <= xi; ++a) {
    bool ok = true;
    for (std::uint64_t p : m) {
      auto sp = static_cast<long long>(p);
      if ((a - 1) % sp == 0 || (a + 1) % sp == 0) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

Int oracle_f(const PrimeSet& m, const Int& x) {
  long long xi = x.to_i64();
  long long count = 0;
  for (long long a = 1; a <= xi; ++a) {
    bool ok = true;
    for (std::uint64_t p : m) {
      if (a % static_cast<long long>(p) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

std::uint64_t oracle_twin_totient(std::uint64_t x) {
  std::uint64_t count = 0;
  for (std::uint64_t a = 1; a <= x; ++a) {
    // gcd(a^2 - 1, x) without forming a^2 - 1: both wings separately.
    if (std::gcd(a - 1, x) == 1 && std::gcd(a + 1, x) == 1) ++count;
  }
  return count;
}

std::vector<Int> oracle_centers(const PrimeSet& m, const Int& lo, const Int& hi) {
  std::vector<Int> out;
  long long a = lo.to_i64();
  long long b = hi.to_i64();
  for (long long c = a; c < b; ++c) {
    bool ok = true;
    for (std::uint64_t p : m) {
      auto sp = static_cast<long long>(p);
      if ((c - 1) % sp == 0 || (c + 1) % sp == 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(c);
  }
  return out;
}

}  // namespace twinsieve
