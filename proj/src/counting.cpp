#include "twinsieve/counting.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "twinsieve/sieve.hpp"

namespace twinsieve {

namespace {

void require_nonneg(const Int& x) {
  if (x < 0) throw DomainError("count bound must be nonnegative");
}

// Signed sum of floor(x / prod) over all subsets extending the current one.
Int legendre_rec(const std::vector<std::uint64_t>& primes, std::size_t from, const Int& x,
                 const Int& prod, int sign, std::uint64_t& terms) {
  ++terms;
  Int sum = sign > 0 ? x / prod : Int(0) - x / prod;
  for (std::size_t j = from; j < primes.size(); ++j) {
    sum += legendre_rec(primes, j + 1, x, prod * Int(primes[j]), -sign, terms);
  }
  return sum;
}

Int legendre_eval(const PrimeSet& m, const Int& x, std::uint64_t& terms) {
  require_nonneg(x);
  if (m.size() > kLegendreSubsetGuard)
    throw GuardError("prime set of size " + std::to_string(m.size()) +
                     " exceeds the subset guard of " + std::to_string(kLegendreSubsetGuard));
  return legendre_rec(m.primes(), 0, x, 1, +1, terms);
}

struct MeisselKey {
  std::size_t k;
  Int x;
  friend bool operator==(const MeisselKey&, const MeisselKey&) = default;
};

struct MeisselKeyHash {
  std::size_t operator()(const MeisselKey& key) const noexcept {
    return std::hash<Int>{}(key.x) ^ (key.k * 0x9e3779b97f4a7c15ull);
  }
};

Int meissel_rec(const std::vector<std::uint64_t>& primes, std::size_t k, const Int& x,
                std::unordered_map<MeisselKey, Int, MeisselKeyHash>& cache,
                std::uint64_t& evals) {
  if (k == 0) {
    ++evals;
    return x;
  }
  MeisselKey key{k, x};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  ++evals;
  Int p = primes[k - 1];
  Int value = meissel_rec(primes, k - 1, x, cache, evals) -
              meissel_rec(primes, k - 1, x / p, cache, evals);
  cache.emplace(key, value);
  return value;
}

Int meissel_eval(const std::vector<std::uint64_t>& primes, const Int& x, std::uint64_t& evals) {
  require_nonneg(x);
  std::unordered_map<MeisselKey, Int, MeisselKeyHash> cache;  // per call only
  return meissel_rec(primes, primes.size(), x, cache, evals);
}

Int twin_count_eval(const PrimeSet& m, const Int& x, std::uint64_t term_guard,
                    std::uint64_t& terms) {
  require_nonneg(x);
  // Cost before work: 1 for x itself, then one floor per discarded residue,
  // giving 2 * 3^(odd primes) in total when 2 is present, 3^|m| when not.
  std::uint64_t projected = 1;
  bool over = false;
  for (std::uint64_t p : m) {
    std::uint64_t factor = p == 2 ? 2 : 3;
    if (projected > term_guard / factor) {
      over = true;
      break;
    }
    projected *= factor;
  }
  if (over || projected > term_guard)
    throw GuardError("inclusion-exclusion would evaluate more than " +
                     std::to_string(term_guard) +
                     " floor terms (raise the guard to allow it)");

  const auto& primes = m.primes();
  Int total = x;
  terms += 1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m.size()); ++mask) {
    std::vector<long long> subset;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if ((mask >> i) & 1) subset.push_back(static_cast<long long>(primes[i]));
    }
    CycleProfile profile = discarded_crt(PrimeSet::of(subset));
    Int d = discarded_count(profile, x);
    terms += profile.discarded.size();
    if (std::popcount(mask) % 2 == 1) {
      total -= d;
    } else {
      total += d;
    }
  }
  return total;
}

// Chunked scan counting integers in [1, x] divisible by no prime of m.
Int coprime_scan(const PrimeSet& m, const Int& x) {
  require_nonneg(x);
  if (x > Int(kSieveScanGuard))
    throw GuardError("scan of " + x.str() + " integers exceeds guard " +
                     std::to_string(kSieveScanGuard));
  std::uint64_t limit = x.to_u64();
  std::uint64_t count = 0;
  std::vector<char> alive(kDefaultSegment);
  for (std::uint64_t lo = 1; lo <= limit; lo += kDefaultSegment) {
    std::uint64_t len = std::min<std::uint64_t>(kDefaultSegment, limit - lo + 1);
    std::fill(alive.begin(), alive.begin() + len, 1);
    for (std::uint64_t p : m) {
      for (std::uint64_t j = (p - lo % p) % p; j < len; j += p) alive[j] = 0;
    }
    for (std::uint64_t j = 0; j < len; ++j) count += alive[j];
  }
  return Int(count);
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t x) {
  std::vector<std::uint64_t> factors;
  if (x % 2 == 0) {
    factors.push_back(2);
    while (x % 2 == 0) x /= 2;
  }
  for (std::uint64_t d = 3; d <= x / d; d += 2) {
    if (x % d == 0) {
      factors.push_back(d);
      while (x % d == 0) x /= d;
    }
  }
  if (x > 1) factors.push_back(x);
  return factors;
}

}  // namespace

Int legendre_f(const PrimeSet& m, const Int& x) {
  std::uint64_t terms = 0;
  return legendre_eval(m, x, terms);
}

Int pi_from_legendre(std::size_t n, const Int& x) {
  if (n == 0) throw std::invalid_argument("prime indices start at 1");
  PrimeSet m = PrimeSet::first_n(n);
  Int p = m.primes().back();
  // Every composite survivor of the first n primes is at least p_{n+1}^2, so the
  // identity pi(x) = n + f_n(x) - 1 holds exactly on [p_n, p_{n+1}^2).
  Int next = nth_prime(n + 1);
  Int bound = next * next;
  if (x < p || x >= bound)
    throw DomainError("x = " + x.str() + " is outside [" + p.str() + ", " + bound.str() +
                      "), where the prime-count identity holds");
  std::uint64_t terms = 0;
  return Int(n) + legendre_eval(m, x, terms) - 1;
}

Int meissel_f(std::size_t n, const Int& x) {
  std::uint64_t evals = 0;
  return meissel_eval(PrimeSet::first_n(n).primes(), x, evals);
}

Int meissel_f(const PrimeSet& m, const Int& x) {
  std::uint64_t evals = 0;
  return meissel_eval(m.primes(), x, evals);
}

Int meissel_f_general(const PrimeSet& m, const Int& x, std::uint64_t p) {
  if (!m.contains(p))
    throw DomainError(std::to_string(p) + " is not in the prime set");
  require_nonneg(x);
  PrimeSet rest = m.without(p);
  std::uint64_t evals = 0;
  return meissel_eval(rest.primes(), x, evals) -
         meissel_eval(rest.primes(), x / Int(p), evals);
}

Int twin_count_single(std::uint64_t p, const Int& x) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  require_nonneg(x);
  if (p == 2) return x - (x + 1) / 2;
  return x - (x + 1) / Int(p) - (x + Int(p - 1)) / Int(p);
}

Int twin_count(const PrimeSet& m, const Int& x, std::uint64_t term_guard) {
  std::uint64_t terms = 0;
  return twin_count_eval(m, x, term_guard, terms);
}

std::uint64_t euler_phi(std::uint64_t x) {
  if (x == 0) throw DomainError("totients start at 1");
  std::uint64_t r = x;
  for (std::uint64_t p : distinct_prime_factors(x)) r -= r / p;
  return r;
}

std::uint64_t twin_totient(std::uint64_t x) {
  if (x == 0) throw DomainError("totients start at 1");
  std::uint64_t r = x;
  // Dividing first keeps every step exact: x's copy still holds each p.
  for (std::uint64_t p : distinct_prime_factors(x)) r = r / p * (p == 2 ? 1 : p - 2);
  return r;
}

const char* count_kind_name(CountKind k) {
  switch (k) {
    case CountKind::twin: return "twin";
    case CountKind::coprime: return "coprime";
    case CountKind::pi: return "pi";
    case CountKind::phi: return "phi";
    case CountKind::twin_totient: return "twin-totient";
  }
  return "?";
}

const char* count_method_name(CountMethod m) {
  switch (m) {
    case CountMethod::auto_select: return "auto";
    case CountMethod::inclusion_exclusion: return "ie";
    case CountMethod::sieve_scan: return "sieve";
    case CountMethod::single_prime: return "single";
    case CountMethod::legendre: return "legendre";
    case CountMethod::meissel: return "meissel";
    case CountMethod::closed_form: return "formula";
  }
  return "?";
}

CountKind parse_count_kind(const std::string& name) {
  if (name == "twin") return CountKind::twin;
  if (name == "coprime") return CountKind::coprime;
  if (name == "pi") return CountKind::pi;
  if (name == "phi") return CountKind::phi;
  if (name == "twin-totient") return CountKind::twin_totient;
  throw std::invalid_argument("unknown kind \"" + name + "\"");
}

CountMethod parse_count_method(const std::string& name) {
  if (name == "auto") return CountMethod::auto_select;
  if (name == "ie") return CountMethod::inclusion_exclusion;
  if (name == "sieve") return CountMethod::sieve_scan;
  if (name == "single") return CountMethod::single_prime;
  if (name == "legendre") return CountMethod::legendre;
  if (name == "meissel") return CountMethod::meissel;
  throw std::invalid_argument("unknown method \"" + name + "\"");
}

namespace {

CountMethod resolve_method(const CountQuery& q) {
  switch (q.kind) {
    case CountKind::twin:
      if (q.method == CountMethod::auto_select)
        return q.x <= Int(1'000'000) ? CountMethod::sieve_scan
                                     : CountMethod::inclusion_exclusion;
      if (q.method == CountMethod::inclusion_exclusion ||
          q.method == CountMethod::sieve_scan)
        return q.method;
      if (q.method == CountMethod::single_prime) {
        if (q.primes.size() != 1)
          throw std::invalid_argument(
              "the single-prime method needs exactly one prime");
        return q.method;
      }
      break;
    case CountKind::coprime:
      if (q.method == CountMethod::auto_select) return CountMethod::legendre;
      if (q.method == CountMethod::legendre || q.method == CountMethod::meissel ||
          q.method == CountMethod::sieve_scan)
        return q.method;
      break;
    case CountKind::pi:
      if (q.method == CountMethod::auto_select || q.method == CountMethod::legendre)
        return CountMethod::legendre;
      break;
    case CountKind::phi:
    case CountKind::twin_totient:
      if (q.method == CountMethod::auto_select) return CountMethod::closed_form;
      break;
  }
  throw std::invalid_argument(std::string("method \"") + count_method_name(q.method) +
                              "\" does not apply to kind \"" + count_kind_name(q.kind) + "\"");
}

}  // namespace

CountReport run_count(const CountQuery& query) {
  CountReport report;
  report.query = query;
  report.method_used = resolve_method(query);

  auto start = std::chrono::steady_clock::now();
  switch (report.method_used) {
    case CountMethod::inclusion_exclusion:
      report.value = twin_count_eval(query.primes, query.x, query.term_guard,
                                     report.terms_evaluated);
      break;
    case CountMethod::sieve_scan:
      if (query.x > Int(kSieveScanGuard))
        throw GuardError("scan of " + query.x.str() + " integers exceeds guard " +
                         std::to_string(kSieveScanGuard));
      if (query.kind == CountKind::twin) {
        report.value =
            Int(twin_centers(query.primes, 1, query.x + 1).centers.size());
      } else {
        report.value = coprime_scan(query.primes, query.x);
      }
      report.terms_evaluated = query.x.to_u64();
      break;
    case CountMethod::single_prime:
      report.value = twin_count_single(query.primes.primes().front(), query.x);
      report.terms_evaluated = query.primes.primes().front() == 2 ? 2 : 3;
      break;
    case CountMethod::legendre:
      if (query.kind == CountKind::pi) {
        report.value = pi_from_legendre(query.first_n, query.x);
        report.terms_evaluated =
            std::uint64_t{1} << PrimeSet::first_n(query.first_n).size();
      } else {
        report.value = legendre_eval(query.primes, query.x, report.terms_evaluated);
      }
      break;
    case CountMethod::meissel:
      report.value =
          meissel_eval(query.primes.primes(), query.x, report.terms_evaluated);
      break;
    case CountMethod::closed_form: {
      std::uint64_t xi = query.x.to_u64();
      std::uint64_t value =
          query.kind == CountKind::phi ? euler_phi(xi) : twin_totient(xi);
      report.value = Int(value);
      report.terms_evaluated = distinct_prime_factors(xi).size();
      break;
    }
    case CountMethod::auto_select:
      throw std::logic_error("auto_select should have been resolved");
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace twinsieve
