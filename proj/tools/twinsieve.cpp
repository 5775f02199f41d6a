// twinsieve: twin-center sieving and exact counting from the command line.
//
// Subcommands: centers, discarded, count, verify, bench.  Results go to
// stdout either as CSV rows (with a leading '#' metadata line) or as a JSON
// envelope {command, params, result, elapsed_ms}; every numeric payload
// field is a decimal string so 128-bit values survive any JSON parser.
//
// Exit codes: 0 success, 1 usage, 2 domain/guard/overflow, 3 verification
// mismatch.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "twinsieve/counting.hpp"
#include "twinsieve/discarded.hpp"
#include "twinsieve/int128.hpp"
#include "twinsieve/primes.hpp"
#include "twinsieve/sieve.hpp"
#include "twinsieve/verify.hpp"

namespace ts = twinsieve;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

std::vector<long long> parse_integer_list(const std::string& csv) {
  std::vector<long long> values;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t comma = csv.find(',', pos);
    if (comma == std::string::npos) comma = csv.size();
    std::string item = csv.substr(pos, comma - pos);
    if (!item.empty()) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(item, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("\"" + item + "\" is not an integer");
      }
      if (used != item.size())
        throw std::invalid_argument("\"" + item + "\" is not an integer");
      values.push_back(v);
    }
    pos = comma + 1;
  }
  return values;
}

std::string join_primes(const ts::PrimeSet& m) {
  std::string out;
  for (std::uint64_t p : m) {
    if (!out.empty()) out += ",";
    out += std::to_string(p);
  }
  return out;
}

json primes_json(const ts::PrimeSet& m) {
  json arr = json::array();
  for (std::uint64_t p : m) arr.push_back(std::to_string(p));
  return arr;
}

json int_list_json(const std::vector<ts::Int>& values) {
  json arr = json::array();
  for (const ts::Int& v : values) arr.push_back(v.str());
  return arr;
}

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void emit_envelope(const std::string& command, json params, json result, double elapsed_ms) {
  json envelope = {{"command", command},
                   {"params", std::move(params)},
                   {"result", std::move(result)},
                   {"elapsed_ms", elapsed_ms}};
  std::cout << envelope.dump(2) << "\n";
}

std::uint64_t term_guard_from_env() {
  const char* raw = std::getenv("TWINSIEVE_GUARD_TERMS");
  if (raw == nullptr || *raw == '\0') return ts::kDefaultTermGuard;
  std::string text(raw);
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || value == 0)
    throw std::invalid_argument("TWINSIEVE_GUARD_TERMS must be a positive integer, got \"" +
                                text + "\"");
  return value;
}

// ---------------------------------------------------------------------------
// centers

struct CentersArgs {
  std::string primes_csv;
  long long first_n = -1;
  std::string lo, hi;
  std::string gap = "1";
  bool pairs = false;
  std::string format = "csv";
};

int run_centers(const CentersArgs& args, bool primes_given) {
  ts::PrimeSet m = primes_given ? ts::PrimeSet::of(parse_integer_list(args.primes_csv))
                                : ts::PrimeSet::first_n(static_cast<std::size_t>(args.first_n));
  ts::Int lo = ts::Int::parse(args.lo);
  ts::Int hi = ts::Int::parse(args.hi);
  ts::Int gap = ts::Int::parse(args.gap);
  if (lo > hi) throw std::invalid_argument("--lo must not exceed --hi");
  if (lo < 0) throw std::invalid_argument("--lo must be nonnegative");
  if (gap < 1) throw std::invalid_argument("--gap must be at least 1");

  auto start = Clock::now();
  ts::CenterRange range = ts::gap_centers(m, gap, lo, hi);
  double elapsed = ms_since(start);

  if (args.format == "csv") {
    std::cout << "# primes=" << join_primes(m) << " lo=" << lo << " hi=" << hi
              << " gap=" << gap << "\n";
    if (args.pairs) {
      std::cout << "left,right\n";
      for (const ts::Int& c : range.centers) std::cout << c - gap << "," << c + gap << "\n";
    } else {
      std::cout << "center\n";
      for (const ts::Int& c : range.centers) std::cout << c << "\n";
    }
    return 0;
  }

  json params = {{"lo", lo.str()},      {"hi", hi.str()},       {"gap", gap.str()},
                 {"pairs", args.pairs}, {"format", args.format}};
  if (primes_given) {
    params["primes"] = join_primes(m);
  } else {
    params["first_n"] = std::to_string(args.first_n);
  }
  json result = {{"prime_set", primes_json(m)},
                 {"lo", lo.str()},
                 {"hi", hi.str()},
                 {"gap", gap.str()}};
  if (args.pairs) {
    json pairs = json::array();
    for (const ts::Int& c : range.centers)
      pairs.push_back(json::array({(c - gap).str(), (c + gap).str()}));
    result["pairs"] = std::move(pairs);
  } else {
    result["centers"] = int_list_json(range.centers);
  }
  emit_envelope("centers", std::move(params), std::move(result), elapsed);
  return 0;
}

// ---------------------------------------------------------------------------
// discarded

struct DiscardedArgs {
  std::string primes_csv;
  std::string method = "crt";
  std::uint64_t scan_guard = ts::kDefaultScanGuard;
  std::string format = "csv";
};

int run_discarded(const DiscardedArgs& args) {
  ts::PrimeSet m = ts::PrimeSet::of(parse_integer_list(args.primes_csv));

  auto start = Clock::now();
  ts::CycleProfile profile;
  if (args.method == "crt") {
    profile = ts::discarded_crt(m);
  } else if (args.method == "scan") {
    profile = ts::discarded_scan(m, args.scan_guard);
  } else {
    profile = ts::discarded_crt(ts::PrimeSet{});
    for (std::uint64_t p : m) profile = ts::discarded_lift(profile, p);
  }
  double elapsed = ms_since(start);

  if (args.format == "csv") {
    std::cout << "# primes=" << join_primes(m) << " method=" << args.method
              << " modulus=" << profile.modulus
              << " survivors_per_cycle=" << profile.survivors_per_cycle << "\n";
    std::cout << "residue\n";
    for (const ts::Int& z : profile.discarded) std::cout << z << "\n";
    return 0;
  }

  json params = {{"primes", join_primes(m)},
                 {"method", args.method},
                 {"scan_guard", std::to_string(args.scan_guard)},
                 {"format", args.format}};
  json result = {{"prime_set", primes_json(m)},
                 {"method", args.method},
                 {"modulus", profile.modulus.str()},
                 {"discarded", int_list_json(profile.discarded)},
                 {"survivors_per_cycle", profile.survivors_per_cycle.str()}};
  emit_envelope("discarded", std::move(params), std::move(result), elapsed);
  return 0;
}

// ---------------------------------------------------------------------------
// count

struct CountArgs {
  std::string primes_csv;
  long long first_n = -1;
  std::string x;
  std::string kind = "twin";
  std::string method = "auto";
  std::string format = "json";
};

int run_count(const CountArgs& args, bool primes_given, bool first_n_given) {
  ts::CountQuery query;
  query.kind = ts::parse_count_kind(args.kind);
  query.method = ts::parse_count_method(args.method);
  query.x = ts::Int::parse(args.x);
  query.term_guard = term_guard_from_env();

  bool wants_primes =
      query.kind == ts::CountKind::twin || query.kind == ts::CountKind::coprime;
  if (query.kind == ts::CountKind::pi) {
    if (!first_n_given)
      throw std::invalid_argument("kind \"pi\" needs --first-n");
    if (primes_given)
      throw std::invalid_argument("kind \"pi\" takes --first-n, not --primes");
    query.first_n = static_cast<std::size_t>(args.first_n);
  } else if (!wants_primes) {
    if (primes_given || first_n_given)
      throw std::invalid_argument("kind \"" + args.kind + "\" takes no prime set");
  } else {
    if (!primes_given && !first_n_given)
      throw std::invalid_argument("kind \"" + args.kind +
                                  "\" needs --primes or --first-n");
    query.primes = primes_given
                       ? ts::PrimeSet::of(parse_integer_list(args.primes_csv))
                       : ts::PrimeSet::first_n(static_cast<std::size_t>(args.first_n));
  }

  ts::CountReport report = ts::run_count(query);
  double elapsed = std::chrono::duration<double, std::milli>(report.elapsed).count();

  if (args.format == "csv") {
    std::cout << "# kind=" << args.kind << " method=" << ts::count_method_name(report.method_used)
              << " primes=" << join_primes(query.primes) << " x=" << query.x << "\n";
    std::cout << "field,value\n";
    std::cout << "value," << report.value << "\n";
    std::cout << "terms_evaluated," << report.terms_evaluated << "\n";
    return 0;
  }

  json params = {{"kind", args.kind},
                 {"method", args.method},
                 {"x", query.x.str()},
                 {"format", args.format}};
  if (primes_given) params["primes"] = join_primes(query.primes);
  if (first_n_given) params["first_n"] = std::to_string(args.first_n);
  json result = {{"kind", args.kind},
                 {"method", ts::count_method_name(report.method_used)},
                 {"x", query.x.str()},
                 {"value", report.value.str()},
                 {"terms_evaluated", std::to_string(report.terms_evaluated)}};
  if (wants_primes) result["prime_set"] = primes_json(query.primes);
  if (query.kind == ts::CountKind::pi) result["first_n"] = std::to_string(args.first_n);
  emit_envelope("count", std::move(params), std::move(result), elapsed);
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string max_x = "2310";
  std::string pool_csv = "2,3,5,7,11";
  std::size_t max_subset = 5;
  std::string format = "json";
};

int run_verify(const VerifyArgs& args) {
  ts::PrimeSet pool = ts::PrimeSet::of(parse_integer_list(args.pool_csv));
  ts::Int max_x = ts::Int::parse(args.max_x);
  if (max_x < 0) throw std::invalid_argument("--max-x must be nonnegative");

  ts::VerificationReport report = ts::verify_all(max_x, pool, args.max_subset);

  json mismatches = json::array();
  for (const ts::Mismatch& m : report.mismatches) {
    mismatches.push_back({{"check", m.check},
                          {"detail", m.detail},
                          {"fast_value", m.fast_value},
                          {"oracle_value", m.oracle_value}});
  }
  json params = {{"max_x", max_x.str()},
                 {"pool", join_primes(pool)},
                 {"max_subset", std::to_string(args.max_subset)},
                 {"format", args.format}};
  json result = {{"cases_run", std::to_string(report.cases_run)},
                 {"mismatches", std::move(mismatches)}};
  emit_envelope("verify", std::move(params), std::move(result),
                static_cast<double>(report.elapsed.count()));
  return report.mismatches.empty() ? 0 : 3;
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
  std::string kind = "twin";
  std::string pool_csv;
  std::string x;
  std::string methods_csv = "ie,sieve";
  std::string format = "text";
};

int run_bench(const BenchArgs& args) {
  if (args.kind != "twin")
    throw std::invalid_argument("bench supports --kind twin only");
  ts::PrimeSet pool = ts::PrimeSet::of(parse_integer_list(args.pool_csv));
  if (pool.empty()) throw std::invalid_argument("--pool must not be empty");
  ts::Int x = ts::Int::parse(args.x);
  std::uint64_t guard = term_guard_from_env();

  std::vector<ts::CountMethod> methods;
  std::size_t pos = 0;
  while (pos <= args.methods_csv.size()) {
    std::size_t comma = args.methods_csv.find(',', pos);
    if (comma == std::string::npos) comma = args.methods_csv.size();
    std::string item = args.methods_csv.substr(pos, comma - pos);
    if (!item.empty()) {
      ts::CountMethod m = ts::parse_count_method(item);
      if (m != ts::CountMethod::inclusion_exclusion && m != ts::CountMethod::sieve_scan &&
          m != ts::CountMethod::single_prime)
        throw std::invalid_argument("bench supports methods ie, sieve, single");
      methods.push_back(m);
    }
    pos = comma + 1;
  }
  if (methods.empty()) throw std::invalid_argument("--methods must name at least one method");

  struct Row {
    ts::PrimeSet prefix;
    ts::CountReport report;
  };
  std::vector<Row> rows;
  bool agree = true;
  const auto& primes = pool.primes();
  for (std::size_t k = 1; k <= primes.size(); ++k) {
    std::vector<long long> prefix_values(primes.begin(), primes.begin() + k);
    ts::PrimeSet prefix = ts::PrimeSet::of(prefix_values);
    std::size_t first_row = rows.size();
    for (ts::CountMethod method : methods) {
      if (method == ts::CountMethod::single_prime && prefix.size() != 1) continue;
      ts::CountQuery query;
      query.kind = ts::CountKind::twin;
      query.method = method;
      query.primes = prefix;
      query.x = x;
      query.term_guard = guard;
      rows.push_back({prefix, ts::run_count(query)});
    }
    for (std::size_t i = first_row + 1; i < rows.size(); ++i) {
      if (rows[i].report.value != rows[first_row].report.value) agree = false;
    }
  }

  if (args.format == "json") {
    json out_rows = json::array();
    for (const Row& row : rows) {
      out_rows.push_back(
          {{"method", ts::count_method_name(row.report.method_used)},
           {"primes", primes_json(row.prefix)},
           {"value", row.report.value.str()},
           {"terms_evaluated", std::to_string(row.report.terms_evaluated)},
           {"elapsed_ms",
            std::chrono::duration<double, std::milli>(row.report.elapsed).count()}});
    }
    json params = {{"kind", args.kind},
                   {"pool", join_primes(pool)},
                   {"x", x.str()},
                   {"methods", args.methods_csv},
                   {"format", args.format}};
    json result = {{"kind", args.kind}, {"x", x.str()}, {"rows", std::move(out_rows)}};
    emit_envelope("bench", std::move(params), std::move(result), 0.0);
  } else if (args.format == "csv") {
    std::cout << "# kind=" << args.kind << " pool=" << join_primes(pool) << " x=" << x << "\n";
    std::cout << "method,primes,value,terms_evaluated,elapsed_ms\n";
    for (const Row& row : rows) {
      std::cout << ts::count_method_name(row.report.method_used) << ","
                << "\"" << join_primes(row.prefix) << "\"," << row.report.value << ","
                << row.report.terms_evaluated << ","
                << std::chrono::duration<double, std::milli>(row.report.elapsed).count()
                << "\n";
    }
  } else {
    std::printf("%-8s %-16s %14s %12s %10s\n", "method", "primes", "value", "terms", "ms");
    for (const Row& row : rows) {
      std::printf("%-8s %-16s %14s %12llu %10.3f\n",
                  ts::count_method_name(row.report.method_used),
                  join_primes(row.prefix).c_str(), row.report.value.str().c_str(),
                  static_cast<unsigned long long>(row.report.terms_evaluated),
                  std::chrono::duration<double, std::milli>(row.report.elapsed).count());
    }
  }
  if (!agree) {
    std::cerr << "error: methods disagree on at least one prefix\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twin-center sieving and exact counting"};
  app.require_subcommand(1);

  CentersArgs centers_args;
  auto* centers = app.add_subcommand("centers", "list surviving centers in a range");
  auto* centers_primes = centers->add_option("--primes", centers_args.primes_csv,
                                             "comma-separated sieving primes");
  auto* centers_first = centers->add_option("--first-n", centers_args.first_n,
                                            "sieve with the first N primes")
                            ->check(CLI::NonNegativeNumber);
  centers_primes->excludes(centers_first);
  centers_first->excludes(centers_primes);
  centers->add_option("--lo", centers_args.lo, "range start (inclusive)")->required();
  centers->add_option("--hi", centers_args.hi, "range end (exclusive)")->required();
  centers->add_option("--gap", centers_args.gap, "wing distance (default 1)");
  centers->add_flag("--pairs", centers_args.pairs, "emit wing pairs instead of centers");
  centers->add_option("--format", centers_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  DiscardedArgs discarded_args;
  auto* discarded = app.add_subcommand("discarded", "one primorial cycle of discarded centers");
  discarded->add_option("--primes", discarded_args.primes_csv, "comma-separated primes")
      ->required();
  discarded->add_option("--method", discarded_args.method, "crt, lift, or scan")
      ->check(CLI::IsMember({"crt", "lift", "scan"}));
  discarded->add_option("--scan-guard", discarded_args.scan_guard,
                        "largest modulus the scan method will accept");
  discarded->add_option("--format", discarded_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "exact counts up to a bound");
  auto* count_primes =
      count->add_option("--primes", count_args.primes_csv, "comma-separated primes");
  auto* count_first = count->add_option("--first-n", count_args.first_n,
                                        "use the first N primes")
                          ->check(CLI::NonNegativeNumber);
  count_primes->excludes(count_first);
  count_first->excludes(count_primes);
  count->add_option("--x", count_args.x, "count within [1, x]")->required();
  count->add_option("--kind", count_args.kind, "twin, coprime, pi, phi, twin-totient")
      ->check(CLI::IsMember({"twin", "coprime", "pi", "phi", "twin-totient"}));
  count->add_option("--method", count_args.method, "auto, ie, sieve, single, legendre, meissel")
      ->check(CLI::IsMember({"auto", "ie", "sieve", "single", "legendre", "meissel"}));
  count->add_option("--format", count_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "cross-check fast paths against oracles");
  verify->add_option("--max-x", verify_args.max_x, "largest sampled bound (default 2310)");
  verify->add_option("--pool", verify_args.pool_csv, "prime pool (default 2,3,5,7,11)");
  verify->add_option("--max-subset", verify_args.max_subset,
                     "largest subset size to test (default 5)");
  verify->add_option("--format", verify_args.format, "json")
      ->check(CLI::IsMember({"json"}));

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "compare counting methods over pool prefixes");
  bench->add_option("--kind", bench_args.kind, "twin")->check(CLI::IsMember({"twin"}));
  bench->add_option("--pool", bench_args.pool_csv, "comma-separated primes")->required();
  bench->add_option("--x", bench_args.x, "count within [1, x]")->required();
  bench->add_option("--methods", bench_args.methods_csv, "subset of ie,sieve,single");
  bench->add_option("--format", bench_args.format, "text, csv, or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand(centers)) {
      if (!*centers_primes && !*centers_first)
        throw std::invalid_argument("need --primes or --first-n");
      return run_centers(centers_args, static_cast<bool>(*centers_primes));
    }
    if (app.got_subcommand(discarded)) return run_discarded(discarded_args);
    if (app.got_subcommand(count))
      return run_count(count_args, static_cast<bool>(*count_primes),
                       static_cast<bool>(*count_first));
    if (app.got_subcommand(verify)) return run_verify(verify_args);
    if (app.got_subcommand(bench)) return run_bench(bench_args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ts::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ts::GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ts::OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
