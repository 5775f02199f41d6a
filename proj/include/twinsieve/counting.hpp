#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include "twinsieve/discarded.hpp"
#include "twinsieve/int128.hpp"
#include "twinsieve/primes.hpp"

namespace twinsieve {

// Counting formulas.  Everything returns exact integers; floor divisions are
// plain integer divisions of nonnegative values.

inline constexpr std::size_t kLegendreSubsetGuard = 24;  // at most 2^24 subset terms
inline constexpr std::uint64_t kDefaultTermGuard = 531441;  // 3^12 floor terms

// Integers in [1, x] with no factor in m, by signed floor terms over all
// 2^|m| subsets.  Guard: |m| <= kLegendreSubsetGuard.
Int legendre_f(const PrimeSet& m, const Int& x);

// pi(x) = n + f_n(x) - 1, valid exactly when p_n <= x < p_n^2: in that
// window the survivors of the first n primes are 1 and the primes in
// (p_n, x], and the formula corrects for both ends.
Int pi_from_legendre(std::size_t n, const Int& x);

// Same value as legendre_f over the first n primes, via the recurrence
// f_k(x) = f_{k-1}(x) - f_{k-1}(floor(x / p_k)), memoized per call.
// The recurrence holds with floors throughout because
// floor(floor(x/a)/b) == floor(x/(a*b)).
Int meissel_f(std::size_t n, const Int& x);
Int meissel_f(const PrimeSet& m, const Int& x);

// One explicit recurrence step with a caller-chosen pivot p in m:
// f_{m \ p}(x) - f_{m \ p}(floor(x / p)).  The value never depends on
// which pivot is chosen.
Int meissel_f_general(const PrimeSet& m, const Int& x, std::uint64_t p);

// Twin centers in [1, x] for a single prime, closed form:
// odd p:  x - floor((x+1)/p) - floor((x+p-1)/p)
// p = 2:  x - floor((x+1)/2)
Int twin_count_single(std::uint64_t p, const Int& x);

// Twin centers in [1, x] for a whole set, by inclusion-exclusion over the
// discarded-center classes of every nonempty subset:
//   x + sum over subsets S of (-1)^|S| * discarded_count(S, x).
// The term budget (one per floor division, one for x itself) is checked
// against term_guard before any work starts.
Int twin_count(const PrimeSet& m, const Int& x, std::uint64_t term_guard = kDefaultTermGuard);

// Euler's totient by trial-division factorization.
std::uint64_t euler_phi(std::uint64_t x);

// Twin analogue of the totient: the number of a in [1, x] with
// gcd(a^2 - 1, x) = 1.  Multiplicative with f(p^k) = p^(k-1) * (p - 2) for
// odd p and f(2^k) = 2^(k-1).
std::uint64_t twin_totient(std::uint64_t x);

// ---------------------------------------------------------------------------
// Uniform dispatch with cost metadata, shared by the CLI and benchmarks.

enum class CountKind { twin, coprime, pi, phi, twin_totient };

enum class CountMethod {
  auto_select,
  inclusion_exclusion,  // twin_count
  sieve_scan,           // enumerate the range
  single_prime,         // closed form, |m| == 1
  legendre,
  meissel,
  closed_form,          // phi / twin_totient formulas
};

const char* count_kind_name(CountKind k);
const char* count_method_name(CountMethod m);
CountKind parse_count_kind(const std::string& name);
CountMethod parse_count_method(const std::string& name);

struct CountQuery {
  CountKind kind = CountKind::twin;
  CountMethod method = CountMethod::auto_select;
  PrimeSet primes;
  std::size_t first_n = 0;  // for kind == pi
  Int x;
  std::uint64_t term_guard = kDefaultTermGuard;
};

struct CountReport {
  CountQuery query;
  CountMethod method_used = CountMethod::auto_select;
  Int value;
  std::uint64_t terms_evaluated = 0;  // floor divisions or scanned integers
  std::chrono::nanoseconds elapsed{0};
};

// Validates the kind/method combination (std::invalid_argument when they
// don't go together), resolves auto_select, runs, and times the result.
// auto_select picks sieve_scan for twin counts up to 10^6 and
// inclusion_exclusion beyond, legendre for coprime counts.
CountReport run_count(const CountQuery& query);

// Guard for explicit sieve_scan requests; scanning past this is refused.
inline constexpr std::uint64_t kSieveScanGuard = 1'000'000'000;

}  // namespace twinsieve
