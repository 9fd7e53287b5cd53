#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "oracle.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(ULTRAMEASURE_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("ultrameasure_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  auto path = scratch() / name;
  std::ofstream(path) << text;
  return path.string();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("gen writes reproducible instance files") {
  auto a = scratch() / "a.json", b = scratch() / "b.json";
  CHECK(run("gen --measure random --seed 42 --out " + a.string()).code == 0);
  CHECK(run("gen --measure random --seed 42 --out " + b.string()).code == 0);
  CHECK(slurp(a) == slurp(b));
  auto c = scratch() / "c.json";
  CHECK(run("gen --measure random --seed 43 --out " + c.string()).code == 0);
  CHECK(slurp(a) != slurp(c));

  auto haar = run("gen --group cyclic:3:2 --measure haar");
  REQUIRE(haar.code == 0);
  auto doc = json::parse(haar.out);
  for (const auto& [k, v] : doc["measure"]["atoms"].items()) CHECK(v == "1/9");

  auto heis = json::parse(run("gen --group heisenberg:3:1").out);
  CHECK(heis["group"]["kind"] == "heisenberg");
  CHECK(heis["chain"]["levels"][0].size() == 27);
}

TEST_CASE("seed defaults to the environment variable") {
  auto a = run("gen --measure random --seed 5").out;
  auto b = run("gen --measure random").out;
  const std::string env = "ULTRAMEASURE_SEED=5 " + std::string(ULTRAMEASURE_CLI) + " gen --measure random";
  FILE* pipe = popen(env.c_str(), "r");
  std::string c;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) c.append(buf.data(), n);
  pclose(pipe);
  CHECK(a == c);
  CHECK(a != b);
}

TEST_CASE("invalid arguments exit with code 2") {
  CHECK(run("gen --group dihedral:3:1").code == 2);
  CHECK(run("gen --group cyclic:3:9").code == 2);
  CHECK(run("gen --measure uniform").code == 2);
  CHECK(run("verify nosuch").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("rho " + (scratch() / "missing.json").string()).code == 2);
  CHECK(run("rho " + write("broken.json", "{not json")).code == 2);
  CHECK(run("rho " + write("bad_prob.json",
                           R"({"group":{"kind":"cyclic","p":3,"n":1},"atoms":{"0":"1/2"},"probability":true})"))
            .code == 2);
}

TEST_CASE("rho on Haar is constant one and a zero atom exits with code 3") {
  auto haar = write("haar.json", R"({"group":{"kind":"cyclic","p":3,"n":1},
    "atoms":{"0":"1/3","1":"1/3","2":"1/3"},"probability":true})");
  auto res = run("rho " + haar + " --format json");
  REQUIRE(res.code == 0);
  auto doc = json::parse(res.out);
  for (const auto& [phi, row] : doc["rho"].items()) {
    for (const auto& [g, v] : row.items()) CHECK(v == "1/1");
  }
  auto holes = write("holes.json", R"({"group":{"kind":"cyclic","p":3,"n":1},
    "atoms":{"0":"1/1"},"probability":true})");
  CHECK(run("rho " + holes).code == 3);
}

TEST_CASE("convolve on Z/3 matches the oracle") {
  auto nu = write("nu.json", R"({"group":{"kind":"cyclic","p":3,"n":1},
    "atoms":{"0":"5/6","1":"1/12","2":"1/12"},"probability":true})");
  auto out = scratch() / "conv.json";
  REQUIRE(run("convolve " + nu + " " + nu + " --out " + out.string()).code == 0);
  auto doc = json::parse(slurp(out));
  oracle::Values v{mpq_class(5, 6), mpq_class(1, 12), mpq_class(1, 12)};
  std::vector<bool> all(3, true);
  auto expected = oracle::convolve_measures({false, 3}, all, v, v);
  for (int x = 0; x < 3; ++x) {
    mpq_class got(doc["result"]["atoms"][std::to_string(x)].get<std::string>());
    got.canonicalize();
    CHECK(got == expected[x]);
  }
}

TEST_CASE("star on the indicator tower keeps the indicators") {
  auto bundle = scratch() / "haar_bundle.json";
  REQUIRE(run("gen --group cyclic:3:2 --measure haar --out " + bundle.string()).code == 0);
  auto doc = json::parse(slurp(bundle));
  auto tower = doc["tower"];
  for (std::size_t i = 0; i < tower["components"].size(); ++i) {
    json values = json::object();
    for (auto idx : doc["chain"]["levels"][i]) values[std::to_string(idx.get<int>())] = "1/1";
    tower["components"][i]["values"] = values;
  }
  auto path = write("ones.json", tower.dump());
  auto res = run("star " + path + " " + path + " --format json");
  REQUIRE(res.code == 0);
  auto product = json::parse(res.out)["result"]["components"];
  const std::size_t m = product.size();
  for (std::size_t i = 0; i + 1 < m; ++i) CHECK(product[i]["values"] == tower["components"][i]["values"]);
}

TEST_CASE("norms reports each kind") {
  auto bundle = scratch() / "rand_bundle.json";
  REQUIRE(run("gen --group heisenberg:3:1 --measure random --seed 3 --out " + bundle.string()).code == 0);
  auto doc = json::parse(slurp(bundle));
  auto tower_norms = json::parse(run("norms " + bundle.string() + " --format json").out);
  CHECK(tower_norms["kind"] == "tower");
  CHECK(tower_norms["levels"].size() == 4);
  auto measure_path = write("m.json", doc["measure"].dump());
  auto measure_norms = json::parse(run("norms " + measure_path + " --format json").out);
  CHECK(measure_norms["probability"] == true);
  auto f_path = write("f.json", doc["function"].dump());
  auto f_norms = json::parse(run("norms " + f_path + " --measure " + measure_path + " --format json").out);
  CHECK(f_norms.contains("norm_L"));
}

TEST_CASE("verify reports") {
  auto empty = run("verify lemma2 --trials 0 --format json");
  CHECK(empty.code == 0);
  CHECK(json::parse(empty.out)["properties"].empty());

  auto ideals = run("verify ideals --seed 1 --trials 5 --format json");
  CHECK(ideals.code == 0);
  bool pinned = false;
  const auto ideals_doc = json::parse(ideals.out);
  for (const auto& p : ideals_doc["properties"]) {
    if (p["name"] == "ideals.K_right_strict_witness") pinned = p.contains("witness") && p["status"] == "pass";
  }
  CHECK(pinned);

  auto first = run("verify all --seed 7 --trials 20 --format json");
  auto second = run("verify all --seed 7 --trials 20 --format json");
  CHECK(first.out == second.out);
  auto report = json::parse(first.out);
  CHECK(first.code == (report["passed"].get<bool>() ? 0 : 1));
  for (const auto& p : report["properties"]) {
    if (p["status"] == "fail") {
      CHECK(p["name"] == "note19.norm_bound");
      CHECK(p.contains("witness"));
    }
  }
}
