#include "twinsieve/verify.hpp"

#include <algorithm>
#include <bit>

#include "twinsieve/counting.hpp"
#include "twinsieve/discarded.hpp"
#include "twinsieve/reference.hpp"
#include "twinsieve/sieve.hpp"

namespace twinsieve {

namespace {

std::string describe(const PrimeSet& m, const Int& x) {
  std::string out = "M={";
  bool first = true;
  for (std::uint64_t p : m) {
    if (!first) out += ",";
    out += std::to_string(p);
    first = false;
  }
  out += "} x=" + x.str();
  return out;
}

std::string describe(const PrimeSet& m) {
  std::string out = describe(m, 0);
  return out.substr(0, out.size() - 4);  // drop " x=0"
}

struct Sweep {
  VerificationReport report;

  void check(const std::string& name, const std::string& detail, const Int& fast,
             const Int& oracle) {
    ++report.cases_run;
    if (fast != oracle)
      report.mismatches.push_back({name, detail, fast.str(), oracle.str()});
  }
};

}  // namespace

VerificationReport verify_all(const Int& max_x, const PrimeSet& pool,
                              std::size_t max_subset_size) {
  auto start = std::chrono::steady_clock::now();
  Sweep sweep;

  // Dense small values catch boundary slips; strides catch cycle-scale slips.
  std::vector<Int> xs;
  Int dense_top = max_x < 1000 ? max_x : Int(1000);
  for (Int x = 0; x <= dense_top; x += 1) xs.push_back(x);
  for (Int x = dense_top + 37; x <= max_x; x += 37) xs.push_back(x);

  const auto& primes = pool.primes();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << primes.size()); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > max_subset_size) continue;
    std::vector<long long> values;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if ((mask >> i) & 1) values.push_back(static_cast<long long>(primes[i]));
    }
    PrimeSet subset = PrimeSet::of(values);
    std::string name = describe(subset);

    CycleProfile by_crt = discarded_crt(subset);
    CycleProfile by_scan = discarded_scan(subset);
    CycleProfile by_lift = discarded_crt(PrimeSet{});
    for (std::uint64_t p : subset) by_lift = discarded_lift(by_lift, p);
    ++sweep.report.cases_run;
    if (by_scan.discarded != by_crt.discarded || by_scan.modulus != by_crt.modulus)
      sweep.report.mismatches.push_back({"discarded scan vs crt", name,
                                         std::to_string(by_scan.discarded.size()) + " residues",
                                         std::to_string(by_crt.discarded.size()) + " residues"});
    ++sweep.report.cases_run;
    if (by_lift.discarded != by_crt.discarded || by_lift.modulus != by_crt.modulus)
      sweep.report.mismatches.push_back({"discarded lift vs crt", name,
                                         std::to_string(by_lift.discarded.size()) + " residues",
                                         std::to_string(by_crt.discarded.size()) + " residues"});

    std::vector<Int> sieved = twin_centers(subset, 1, max_x + 1).centers;
    std::size_t prefix = 0;

    for (const Int& x : xs) {
      std::string detail = describe(subset, x);
      while (prefix < sieved.size() && sieved[prefix] <= x) ++prefix;

      Int ie = twin_count(subset, x);
      sweep.check("twin ie vs oracle scan", detail, ie, oracle_twin_count(subset, x));
      sweep.check("twin ie vs sieve", detail, ie, Int(prefix));

      Int direct = oracle_f(subset, x);
      sweep.check("coprime legendre vs oracle scan", detail, legendre_f(subset, x), direct);
      sweep.check("coprime recurrence vs oracle scan", detail, meissel_f(subset, x), direct);
    }
  }

  for (const Int& x : xs) {
    if (x < 1) continue;
    std::uint64_t xi = x.to_u64();
    sweep.check("twin totient vs gcd scan", "x=" + x.str(), Int(twin_totient(xi)),
                Int(oracle_twin_totient(xi)));
  }

  std::sort(sweep.report.mismatches.begin(), sweep.report.mismatches.end());
  sweep.report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return sweep.report;
}

}  // namespace twinsieve
