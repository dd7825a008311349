#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "su2/io.hpp"

using namespace su2;

namespace {

std::string tool;

int run(const std::string& args) {
  const int raw = std::system((tool + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string fresh(const std::string& name) {
  const std::string path = "cli_" + name;
  std::filesystem::remove(path);
  return path;
}

}  // namespace

TEST_CASE("input and config errors") {
  const auto bad = fresh("malformed.json");
  write_text(bad, "{\"band_limit_twol\": 2, ");
  const auto out = fresh("never.json");
  CHECK(run("transform --input " + bad + " --out " + out) == 2);
  CHECK_FALSE(std::filesystem::exists(out));
  CHECK(run("transform --input cli_missing.json --out " + out) == 2);
  CHECK(run("bounds --symbol no-such-kind --out " + out) == 3);
  CHECK(run("verify necessity --p 1.5 --out " + out) == 3);
  CHECK(run("verify no-such-suite --out " + out) == 3);
  CHECK(run("verify hy --p 0.5 --out " + out) == 3);
  CHECK(run("verify hy --band-limit -2 --out " + out) == 3);
  CHECK(run("bounds --symbol heat --out " + out) == 3);
  CHECK(run("verify hy --no-such-flag 1") == 2);
  CHECK(run("") == 2);
  CHECK_FALSE(std::filesystem::exists(out));
}

TEST_CASE("transform") {
  const auto out = fresh("transform.json");
  REQUIRE(run("transform --function random --seed 42 --band-limit 8 --out " + out) == 0);
  const auto j = read_json(out);
  CHECK(j["report"]["round_trip_residual"].get<double>() <= 1e-9);
  CHECK(j["config"]["seed"] == 42);

  const auto constant = fresh("constant.json");
  REQUIRE(run("transform --function constant --band-limit 6 --out " + constant) == 0);
  CHECK(read_json(constant)["report"]["nonzero_blocks"] == Json::array({0}));

  // coefficient file in, same coefficients out
  std::mt19937_64 rng(7);
  const auto c = random_coefficients(TwoL(5), rng);
  const auto input = fresh("input.json");
  write_text(input, canonical_dump(to_json(c)));
  const auto round = fresh("round.json");
  REQUIRE(run("transform --input " + input + " --out " + round) == 0);
  CHECK(max_entry_difference(coefficients_from_json(read_json(round)["report"]["forward"]), c) < 1e-12);
}

TEST_CASE("verify") {
  const auto hy = fresh("hy.json");
  REQUIRE(run("verify hy --p 1.5 --ensemble 100 --band-limit 6 --out " + hy) == 0);
  const auto j = read_json(hy);
  CHECK(j["report"]["ratios"].size() == 100);
  for (const auto& r : j["report"]["ratios"]) CHECK(r.get<double>() <= 1 + 1e-9);
  CHECK(j["config"]["suite"] == "hy");

  const auto hl = fresh("hl.json");
  REQUIRE(run("verify hl --p 2 --ensemble 10 --out " + hl) == 0);
  CHECK(std::abs(read_json(hl)["report"]["ratio"].get<double>() - 1) < 1e-9);

  const auto gp = fresh("gp.json");
  REQUIRE(run("verify general-paley --p 1.5 --b 2 --symbol heat --tau 0.5 --ensemble 5 --out " + gp) == 0);
  CHECK(read_json(gp)["report"]["endpoint_error"].get<double>() <= 1e-10);
}

TEST_CASE("bounds") {
  const auto id = fresh("identity.json");
  REQUIRE(run("bounds --symbol identity --p 2 --q 2 --band-limit 6 --ensemble 4 --out " + id) == 0);
  const auto r = read_json(id)["report"];
  for (const char* key : {"lower_diag", "lower_trace", "upper"}) CHECK(std::abs(r[key].get<double>() - 1) < 1e-6);
  CHECK(std::abs(r["empirical"]["value"].get<double>() - 1) < 1e-6);

  const auto proj = fresh("projection.json");
  CHECK(run("bounds --symbol projection:2 --p 1.3333333333333333 --q 4 --band-limit 6 --ensemble 4 --slack 1e-3 --out " +
            proj) == 0);
  CHECK(read_json(proj)["report"]["sandwich_ok"] == true);

  // heat(1) from L^{4/3} to L^4 has norm above the upper bound taken with constant 1:
  // the report is still written and the exit status flags the ordering
  const auto heat = fresh("heat.json");
  CHECK(run("bounds --symbol heat --tau 1 --p 1.3333333333333333 --q 4 --band-limit 6 --ensemble 4 --slack 1e-3 --out " +
            heat) == 1);
  const auto h = read_json(heat)["report"];
  CHECK(h["lower_ok"] == true);
  CHECK(h["upper_ok"] == false);
  CHECK(h["empirical"]["value"].get<double>() > 1.08);
}

TEST_CASE("config file and determinism") {
  const auto config = fresh("config.json");
  write_text(config, R"({"p": 1.25, "ensemble": 6, "band-limit": 4, "seed": 9})");
  const auto a = fresh("a.json"), b = fresh("b.json");
  REQUIRE(run("verify hy --config " + config + " --p 1.5 --out " + a) == 0);
  REQUIRE(run("verify hy --config " + config + " --p 1.5 --out " + b) == 0);
  CHECK(slurp(a) == slurp(b));
  const auto j = read_json(a);
  CHECK(j["config"]["p"] == 1.5);  // flag wins
  CHECK(j["config"]["ensemble"] == 6);
  CHECK(j["config"]["seed"] == 9);

  const auto bad = fresh("bad_config.json");
  write_text(bad, R"({"p": "two"})");
  CHECK(run("verify hy --config " + bad) == 2);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path to su2tool> [doctest options]\n");
    return 2;
  }
  tool = argv[1];
  doctest::Context context;
  context.applyCommandLine(argc - 1, argv + 1);
  return context.run();
}
