#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>
#include <vector>

using nlohmann::json;

namespace {

std::string bin_path() {
  const char* env = std::getenv("TWINSIEVE_BIN");
  if (env != nullptr && *env != '\0') return env;
  return TWINSIEVE_BIN_FALLBACK;
}

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "",
                  bool merge_stderr = false) {
  std::string cmd = env_prefix + "\"" + bin_path() + "\" " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
  int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

json parse_envelope(const RunResult& result) {
  REQUIRE(result.code == 0);
  json envelope = json::parse(result.out);
  REQUIRE(envelope.contains("command"));
  REQUIRE(envelope.contains("params"));
  REQUIRE(envelope.contains("result"));
  REQUIRE(envelope["elapsed_ms"].is_number());
  return envelope;
}

// Rebuilds the command line from an envelope's own params echo.
std::string command_from_params(const json& envelope) {
  const std::string command = envelope["command"];
  const json& params = envelope["params"];
  std::string args = command;
  for (auto& [key, value] : params.items()) {
    std::string flag = "--" + key;
    for (char& c : flag) {
      if (c == '_') c = '-';
    }
    if (value.is_boolean()) {
      if (value.get<bool>()) args += " " + flag;
    } else {
      args += " " + flag + " '" + value.get<std::string>() + "'";
    }
  }
  return args;
}

}  // namespace

TEST_CASE("centers csv stream") {
  RunResult result = run_cli("centers --primes 2,3,5,7 --lo 1 --hi 211");
  REQUIRE(result.code == 0);
  std::vector<std::string> lines = lines_of(result.out);
  REQUIRE(lines.size() == 17);
  CHECK(lines[0] == "# primes=2,3,5,7 lo=1 hi=211 gap=1");
  CHECK(lines[1] == "center");
  CHECK(lines[2] == "12");
  CHECK(lines[16] == "210");
}

TEST_CASE("centers json envelope") {
  RunResult result = run_cli("centers --primes 2,3,5,7 --lo 1 --hi 211 --format json");
  json envelope = parse_envelope(result);
  CHECK(envelope["command"] == "centers");
  CHECK(envelope["params"]["primes"] == "2,3,5,7");
  const json& centers = envelope["result"]["centers"];
  REQUIRE(centers.size() == 15);
  CHECK(centers[0] == "12");
  CHECK(centers[14] == "210");
  CHECK(envelope["result"]["prime_set"] == json::array({"2", "3", "5", "7"}));
}

TEST_CASE("csv and json carry the same numbers") {
  RunResult csv = run_cli("centers --primes 2,3,5 --lo 1 --hi 211");
  RunResult js = run_cli("centers --primes 2,3,5 --lo 1 --hi 211 --format json");
  std::vector<std::string> lines = lines_of(csv.out);
  json envelope = parse_envelope(js);
  const json& centers = envelope["result"]["centers"];
  REQUIRE(lines.size() == centers.size() + 2);
  for (std::size_t i = 0; i < centers.size(); ++i) {
    CHECK(lines[i + 2] == centers[i].get<std::string>());
  }

  RunResult dcsv = run_cli("discarded --primes 5,7,11");
  RunResult djs = run_cli("discarded --primes 5,7,11 --format json");
  std::vector<std::string> dlines = lines_of(dcsv.out);
  json denvelope = parse_envelope(djs);
  const json& residues = denvelope["result"]["discarded"];
  REQUIRE(dlines.size() == residues.size() + 2);
  for (std::size_t i = 0; i < residues.size(); ++i) {
    CHECK(dlines[i + 2] == residues[i].get<std::string>());
  }
  CHECK(dlines[0].find("modulus=" + denvelope["result"]["modulus"].get<std::string>()) !=
        std::string::npos);

  RunResult ccsv = run_cli("count --primes 2,3,5,7 --x 210 --method ie --format csv");
  json cenvelope =
      parse_envelope(run_cli("count --primes 2,3,5,7 --x 210 --method ie --format json"));
  std::vector<std::string> clines = lines_of(ccsv.out);
  REQUIRE(clines.size() == 4);
  CHECK(clines[2] == "value," + cenvelope["result"]["value"].get<std::string>());
  CHECK(clines[3] ==
        "terms_evaluated," + cenvelope["result"]["terms_evaluated"].get<std::string>());
}

TEST_CASE("json output round-trips through its own params") {
  for (const std::string& args :
       {std::string("centers --primes 2,3,5,7 --lo 1 --hi 211 --format json"),
        std::string("centers --first-n 2 --lo 1 --hi 61 --pairs --format json"),
        std::string("discarded --primes 5,7,11 --method lift --format json"),
        std::string("count --primes 5,7 --x 35 --method ie --format json"),
        std::string("count --kind pi --first-n 4 --x 100 --format json"),
        std::string("verify --max-x 60 --pool 2,3 --max-subset 2 --format json")}) {
    CAPTURE(args);
    RunResult first = run_cli(args);
    json envelope = parse_envelope(first);
    RunResult second = run_cli(command_from_params(envelope));
    json replay = parse_envelope(second);
    CHECK(envelope["result"].dump() == replay["result"].dump());
    CHECK(envelope["params"].dump() == replay["params"].dump());
  }
}

TEST_CASE("pairs output") {
  RunResult result = run_cli("centers --primes 2,3 --lo 1 --hi 61 --pairs");
  REQUIRE(result.code == 0);
  std::vector<std::string> lines = lines_of(result.out);
  REQUIRE(lines.size() == 12);
  CHECK(lines[1] == "left,right");
  CHECK(lines[2] == "5,7");
  CHECK(lines[11] == "59,61");
}

TEST_CASE("gap centers through the cli") {
  RunResult result = run_cli("centers --primes 3,5 --gap 2 --lo 0 --hi 15");
  REQUIRE(result.code == 0);
  std::vector<std::string> lines = lines_of(result.out);
  REQUIRE(lines.size() == 5);
  CHECK(lines[2] == "0");
  CHECK(lines[3] == "6");
  CHECK(lines[4] == "9");
}

TEST_CASE("first-n and an explicit list agree") {
  json a = parse_envelope(run_cli("centers --first-n 4 --lo 1 --hi 211 --format json"));
  json b = parse_envelope(run_cli("centers --primes 2,3,5,7 --lo 1 --hi 211 --format json"));
  CHECK(a["result"].dump() == b["result"].dump());
}

TEST_CASE("empty range gives an empty stream") {
  RunResult result = run_cli("centers --primes 5 --lo 0 --hi 0");
  CHECK(result.code == 0);
  std::vector<std::string> lines = lines_of(result.out);
  CHECK(lines.size() == 2);  // metadata and header only
}

TEST_CASE("discarded methods agree") {
  json crt = parse_envelope(run_cli("discarded --primes 5,7,11 --format json"));
  CHECK(crt["result"]["modulus"] == "385");
  CHECK(crt["result"]["survivors_per_cycle"] == "135");  // (5-2)(7-2)(11-2)
  CHECK(crt["result"]["discarded"] ==
        json::array({"1", "34", "76", "111", "274", "309", "351", "384"}));
  for (const std::string& method : {std::string("lift"), std::string("scan")}) {
    json other =
        parse_envelope(run_cli("discarded --primes 5,7,11 --format json --method " + method));
    CHECK(other["result"]["discarded"] == crt["result"]["discarded"]);
    CHECK(other["result"]["modulus"] == crt["result"]["modulus"]);
  }
}

TEST_CASE("count kinds") {
  CHECK(parse_envelope(run_cli("count --primes 2,3,5,7 --x 210 --method ie --format json"))
            ["result"]["value"] == "15");
  CHECK(parse_envelope(run_cli("count --kind pi --first-n 4 --x 100 --format json"))["result"]
            ["value"] == "25");
  CHECK(parse_envelope(run_cli("count --kind phi --x 30 --format json"))["result"]["value"] ==
        "8");
  CHECK(parse_envelope(run_cli("count --kind twin-totient --x 30 --format json"))["result"]
            ["value"] == "3");
  json single = parse_envelope(run_cli("count --primes 7 --x 23 --method single --format json"));
  CHECK(single["result"]["value"] == "16");
  CHECK(single["result"]["terms_evaluated"] == "3");
  json ie = parse_envelope(run_cli("count --primes 2,3,5,7 --x 210 --method ie --format json"));
  CHECK(ie["result"]["terms_evaluated"] == "54");  // 2 * 3^3 signed divisor terms
}

TEST_CASE("usage errors exit 1") {
  CHECK(run_cli("").code == 1);
  CHECK(run_cli("centers --lo 1 --hi 10").code == 1);          // no prime selection
  CHECK(run_cli("centers --primes 5 --lo 9 --hi 2").code == 1);  // reversed range
  CHECK(run_cli("count --x 10").code == 1);                    // no prime selection
  CHECK(run_cli("count --kind pi --x 10").code == 1);          // pi needs --first-n
  CHECK(run_cli("count --kind phi --primes 3 --x 10").code == 1);
  CHECK(run_cli("count --primes 3 --x 10 --method single --kind coprime").code == 1);
  CHECK(run_cli("bench --pool 5 --x 10 --kind coprime").code == 1);
  CHECK(run_cli("bench --pool 5 --x 10 --methods legendre").code == 1);
  CHECK(run_cli("discarded --primes 5 --method magic").code == 1);
  CHECK(run_cli("centers --primes 5 --lo 1 --hi 10 --format yaml").code == 1);

  RunResult named = run_cli("centers --primes 4,7 --lo 1 --hi 10", "", true);
  CHECK(named.code == 1);
  CHECK(named.out.find("4 is not prime") != std::string::npos);
}

TEST_CASE("domain and guard errors exit 2") {
  CHECK(run_cli("count --kind pi --first-n 4 --x 121").code == 2);
  CHECK(run_cli("count --kind pi --first-n 4 --x 6").code == 2);
  CHECK(run_cli("discarded --primes 2,3,5,7,11,13,17,19,23,29 --method scan").code == 2);
  CHECK(run_cli("count --primes 2,3,5,7,11,13,17,19,23,29,31,37,41 --x 99 --method ie").code ==
        2);
}

TEST_CASE("term guard honors the environment override") {
  RunResult blocked =
      run_cli("count --primes 5,7 --x 35 --method ie --format json", "TWINSIEVE_GUARD_TERMS=8 ");
  CHECK(blocked.code == 2);
  RunResult allowed =
      run_cli("count --primes 5,7 --x 35 --method ie --format json", "TWINSIEVE_GUARD_TERMS=9 ");
  json envelope = parse_envelope(allowed);
  CHECK(envelope["result"]["value"] == "15");
  CHECK(envelope["result"]["terms_evaluated"] == "9");
  CHECK(run_cli("count --primes 5 --x 1 --method ie", "TWINSIEVE_GUARD_TERMS=zero ").code == 1);
}

TEST_CASE("verify subcommand") {
  json envelope = parse_envelope(run_cli("verify --max-x 60 --pool 2,3 --max-subset 2"));
  CHECK(envelope["result"]["mismatches"].empty());
  CHECK(json::parse(envelope["result"]["cases_run"].get<std::string>().c_str()).is_number());
}

TEST_CASE("bench sweeps pool prefixes") {
  RunResult result = run_cli("bench --kind twin --pool 5,7,11 --x 1000 --methods ie,sieve "
                             "--format json");
  json envelope = parse_envelope(result);
  const json& rows = envelope["result"]["rows"];
  REQUIRE(rows.size() == 6);

  std::vector<std::string> ie_terms;
  for (const json& row : rows) {
    if (row["method"] == "ie") ie_terms.push_back(row["terms_evaluated"].get<std::string>());
  }
  CHECK(ie_terms == std::vector<std::string>{"3", "9", "27"});

  for (std::size_t i = 0; i < rows.size(); i += 2) {
    CHECK(rows[i]["value"] == rows[i + 1]["value"]);
    CHECK(rows[i]["primes"] == rows[i + 1]["primes"]);
  }

  RunResult text = run_cli("bench --kind twin --pool 5,7 --x 100 --methods ie,sieve");
  CHECK(text.code == 0);
  CHECK(text.out.find("ie") != std::string::npos);
  CHECK(text.out.find("sieve") != std::string::npos);
}
