// Command-line driver over the ultrameasure library.
//
// Exit codes: 0 success, 1 a verified property failed, 2 malformed input or
// arguments, 3 a mathematical precondition was violated.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ultrameasure/convolve.hpp"
#include "ultrameasure/errors.hpp"
#include "ultrameasure/json_io.hpp"
#include "ultrameasure/measure.hpp"
#include "ultrameasure/random.hpp"
#include "ultrameasure/rep.hpp"
#include "ultrameasure/tower.hpp"
#include "ultrameasure/verify.hpp"

namespace um = ultrameasure;
using nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kPropertyFailure = 1, kInvalid = 2, kPrecondition = 3 };

struct Common {
  std::uint64_t seed = 0;
  std::size_t trials = 200;
  std::string out;
  std::string format = "table";
  std::uint64_t q = 5;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ULTRAMEASURE_SEED")) {
    try {
      std::size_t used = 0;
      auto value = std::stoull(env, &used);
      if (used == std::string(env).size()) return value;
    } catch (const std::exception&) {
    }
    throw um::InputError(std::string("ULTRAMEASURE_SEED is not an unsigned integer: ") + env);
  }
  return 0;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw um::InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw um::ValidationError(path + ": " + e.what());
  }
}

/// Pulls `key` out of a gen bundle; a bare object is returned unchanged.
json unwrap(const json& j, const char* key) {
  if (j.is_object() && j.contains(key) && j.contains("group") && !j.contains("kind")) return j.at(key);
  return j;
}

bool looks_like_measure(const json& j) { return j.is_object() && j.contains("atoms"); }

void emit(const Common& opts, const json& result, const std::string& table) {
  if (!opts.out.empty()) {
    std::ofstream out(opts.out);
    if (!out) throw um::InputError("cannot write " + opts.out);
    out << result.dump(2) << '\n';
  }
  if (opts.format == "json") {
    if (opts.out.empty()) std::cout << result.dump(2) << '\n';
  } else {
    std::cout << table;
  }
}

std::string measure_table(const um::Measure& mu, std::uint64_t q) {
  std::ostringstream os;
  os << std::left << std::setw(12) << "element" << std::setw(20) << "atom" << "N_mu\n";
  for (auto x : mu.domain().elements()) {
    os << std::setw(12) << mu.group().label(x) << std::setw(20) << mu.atom(x).str()
       << um::pointwise_norm(mu, x, q).str() << '\n';
  }
  os << "total mass " << mu.total_mass().str() << ", norm " << um::measure_norm(mu, q).str() << '\n';
  return os.str();
}

std::string function_table(const um::ScalarFunction& f, std::uint64_t q) {
  std::ostringstream os;
  os << std::left << std::setw(12) << "element" << std::setw(20) << "value" << "|value|\n";
  for (auto x : f.domain().elements()) {
    os << std::setw(12) << f.group().label(x) << std::setw(20) << f(x).str() << um::abs_q(f(x), q).str()
       << '\n';
  }
  return os.str();
}

// gen ----------------------------------------------------------------------------

um::GroupPtr parse_group_spec(const std::string& spec) {
  std::istringstream in(spec);
  std::string kind, p_text, n_text;
  std::getline(in, kind, ':');
  std::getline(in, p_text, ':');
  std::getline(in, n_text, ':');
  std::uint32_t p = 0, n = 0;
  try {
    p = static_cast<std::uint32_t>(std::stoul(p_text));
    n = static_cast<std::uint32_t>(std::stoul(n_text));
  } catch (const std::exception&) {
    throw um::InputError("group must look like cyclic:P:N or heisenberg:P:N, got '" + spec + "'");
  }
  if (kind == "cyclic") return std::make_shared<const um::FiniteGroup>(um::FiniteGroup::cyclic(p, n));
  if (kind == "heisenberg") return std::make_shared<const um::FiniteGroup>(um::FiniteGroup::heisenberg(p, n));
  throw um::InputError("unknown group kind '" + kind + "'");
}

int run_gen(const Common& opts, const std::string& group_spec, const std::string& measure_kind) {
  auto group = parse_group_spec(group_spec);
  auto chain = um::SubgroupChain::standard(group);
  um::Rng rng(opts.seed);

  std::shared_ptr<const um::MeasuredChain> measured;
  if (measure_kind == "haar") {
    measured = std::make_shared<const um::MeasuredChain>(um::MeasuredChain::haar(chain));
  } else if (measure_kind == "random") {
    measured = std::make_shared<const um::MeasuredChain>(um::random_measured_chain(rng, chain, opts.q));
  } else {
    throw um::InputError("--measure must be haar or random");
  }
  auto function = um::random_function(rng, chain.level(0), opts.q);
  auto tower = um::random_tower(rng, measured, opts.q);

  json bundle = {{"group", um::io::to_json(*group)},
                 {"chain", um::io::to_json(chain)},
                 {"measure", um::io::to_json(measured->measure(0))},
                 {"function", um::io::to_json(function)},
                 {"tower", um::io::to_json(tower)},
                 {"seed", opts.seed}};

  std::ostringstream table;
  table << group->name() << ": order " << group->order() << (group->is_abelian() ? ", abelian" : ", non-abelian")
        << "\nchain sizes";
  for (auto s : chain.sizes()) table << ' ' << s;
  table << "\nmeasure (" << measure_kind << ")\n" << measure_table(measured->measure(0), opts.q);

  Common gen_opts = opts;
  if (gen_opts.out.empty() && gen_opts.format == "table") gen_opts.format = "json";
  emit(gen_opts, bundle, table.str());
  return kOk;
}

// convolve ---------------------------------------------------------------------

int run_convolve(const Common& opts, const std::string& left_path, const std::string& right_path,
                 const std::string& measure_path) {
  auto left = read_json(left_path);
  auto right = read_json(right_path);
  if (looks_like_measure(unwrap(left, "measure")) && looks_like_measure(unwrap(right, "measure")) &&
      measure_path.empty()) {
    auto nu = um::io::measure_from_json(unwrap(left, "measure"));
    auto mu = um::io::measure_from_json(unwrap(right, "measure"), nu.domain().group_ptr());
    auto result = um::convolve_measures(nu, mu);
    json out = {{"operation", "convolve_measures"}, {"result", um::io::to_json(result)},
                {"norm", um::io::to_json(um::measure_norm(result, opts.q))},
                {"bound", um::io::to_json(um::measure_norm(nu, opts.q) * um::measure_norm(mu, opts.q))}};
    emit(opts, out, measure_table(result, opts.q));
    return kOk;
  }
  if (measure_path.empty()) {
    throw um::InputError("convolving functions needs --measure for the measure on the inner subgroup");
  }
  auto qf = um::io::function_from_json(unwrap(left, "function"));
  auto f = um::io::function_from_json(unwrap(right, "function"), qf.domain().group_ptr());
  auto nu = um::io::measure_from_json(unwrap(read_json(measure_path), "measure"), qf.domain().group_ptr());
  auto result = um::convolve_functions(qf, f, nu);
  json out = {{"operation", "convolve_functions"}, {"result", um::io::to_json(result)}};
  emit(opts, out, function_table(result, opts.q));
  return kOk;
}

// star ---------------------------------------------------------------------------

std::string tower_table(const um::TowerElement& t, std::uint64_t q) {
  std::ostringstream os;
  auto norms = um::tower_level_norms(t, q);
  for (std::size_t i = 0; i < t.length(); ++i) {
    os << "level " << i << " (|G_i| = " << t.chain().level(i).size() << "), norm " << norms[i].level.str()
       << '\n'
       << function_table(t.component(i), q);
  }
  os << "algebra norm " << um::algebra_norm(t, q).str() << '\n';
  return os.str();
}

int run_star(const Common& opts, const std::string& left_path, const std::string& right_path) {
  auto f = um::io::tower_from_json(unwrap(read_json(left_path), "tower"));
  auto g_json = unwrap(read_json(right_path), "tower");
  auto g = um::io::tower_from_json(g_json);
  if (!(f.chain() == g.chain())) throw um::InputError("star: towers live on different measured chains");
  g = um::TowerElement(f.chain_ptr(), g.components());
  auto product = um::star(f, g);
  json out = {{"operation", "star"}, {"result", um::io::to_json(product)},
              {"norm", um::io::to_json(um::algebra_norm(product, opts.q))}};
  emit(opts, out, tower_table(product, opts.q));
  return kOk;
}

// norms --------------------------------------------------------------------------

int run_norms(const Common& opts, const std::string& path, const std::string& measure_path) {
  auto doc = read_json(path);
  if (doc.is_object() && (doc.contains("components") || (doc.contains("tower") && !doc.contains("kind")))) {
    auto t = um::io::tower_from_json(unwrap(doc, "tower"));
    json levels = json::array();
    for (const auto& n : um::tower_level_norms(t, opts.q)) {
      levels.push_back({{"square_part", um::io::to_json(n.square_part)},
                        {"primed", um::io::to_json(n.primed)},
                        {"level", um::io::to_json(n.level)}});
    }
    json out = {{"kind", "tower"}, {"levels", levels}, {"norm", um::io::to_json(um::algebra_norm(t, opts.q))}};
    emit(opts, out, tower_table(t, opts.q));
    return kOk;
  }
  if (looks_like_measure(doc)) {
    auto mu = um::io::measure_from_json(doc);
    json out = {{"kind", "measure"}, {"norm", um::io::to_json(um::measure_norm(mu, opts.q))},
                {"total_mass", um::io::to_json(mu.total_mass())},
                {"probability", mu.is_probability(opts.q)}};
    emit(opts, out, measure_table(mu, opts.q));
    return kOk;
  }
  auto f = um::io::function_from_json(unwrap(doc, "function"));
  json out = {{"kind", "function"}};
  std::string table = function_table(f, opts.q);
  if (!measure_path.empty()) {
    auto mu = um::io::measure_from_json(unwrap(read_json(measure_path), "measure"), f.domain().group_ptr());
    auto n = um::norm_L(f, mu, opts.q);
    out["norm_L"] = um::io::to_json(n);
    table += "L norm " + n.str() + '\n';
  }
  emit(opts, out, table);
  return kOk;
}

// rho ----------------------------------------------------------------------------

int run_rho(const Common& opts, const std::string& path) {
  auto mu = um::io::measure_from_json(unwrap(read_json(path), "measure"));
  mu.require_full_support("rho");
  const auto& g = mu.group();
  json rows = json::object();
  std::ostringstream table;
  table << "rho(phi, g): rows phi, columns g\n" << std::left << std::setw(10) << "";
  for (auto x : mu.domain().elements()) table << std::setw(12) << g.label(x);
  table << '\n';
  for (auto phi : mu.domain().elements()) {
    auto rho = um::radon_nikodym(mu, phi);
    rows[std::to_string(phi.index)] = um::io::to_json(rho)["values"];
    table << std::setw(10) << g.label(phi);
    for (auto x : mu.domain().elements()) table << std::setw(12) << rho(x).str();
    table << '\n';
  }
  json out = {{"operation", "rho"}, {"rho", rows}};
  emit(opts, out, table.str());
  return kOk;
}

// verify -------------------------------------------------------------------------

int run_verify_cmd(const Common& opts, const std::string& suite_text) {
  auto suite = um::parse_suite(suite_text);
  if (!suite) throw um::InputError("unknown suite '" + suite_text + "'");
  auto report = um::run_verify(*suite, opts.seed, opts.trials, opts.q);
  auto doc = report.to_json();

  std::ostringstream table;
  for (const auto& p : report.properties) {
    const char* status = p.status == um::PropertyStatus::pass   ? "pass"
                         : p.status == um::PropertyStatus::fail ? "FAIL"
                                                                : "skip";
    table << std::left << std::setw(6) << status << std::setw(36) << p.name << p.checks << " checks\n";
  }
  table << (report.passed() ? "all properties passed" : "property failures: " + std::to_string(report.failures().size()))
        << '\n';
  emit(opts, doc, table.str());
  return report.passed() ? kOk : kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact non-Archimedean measures, convolutions and tower algebras on finite groups"};
  app.require_subcommand(1);

  Common opts;
  std::string group_spec = "cyclic:3:2";
  std::string measure_kind = "haar";
  std::string left, right, measure_path, suite = "all";
  bool seed_given = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", opts.seed, "RNG seed (default $ULTRAMEASURE_SEED or 0)")
        ->each([&](const std::string&) { seed_given = true; });
    sub->add_option("--out", opts.out, "write the JSON result to this path");
    sub->add_option("--format", opts.format, "stdout format")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--q", opts.q, "prime base of the absolute value on Q");
  };

  auto* gen = app.add_subcommand("gen", "generate an instance bundle");
  add_common(gen);
  gen->add_option("--group", group_spec, "cyclic:P:N or heisenberg:P:N");
  gen->add_option("--measure", measure_kind, "haar or random")->check(CLI::IsMember({"haar", "random"}));

  auto* conv = app.add_subcommand("convolve", "convolve two measures, or two functions against --measure");
  add_common(conv);
  conv->add_option("left", left, "measure or function file")->required();
  conv->add_option("right", right, "measure or function file")->required();
  conv->add_option("--measure", measure_path, "measure on the inner subgroup for function convolution");

  auto* st = app.add_subcommand("star", "tower algebra product");
  add_common(st);
  st->add_option("left", left, "tower file")->required();
  st->add_option("right", right, "tower file")->required();

  auto* norms = app.add_subcommand("norms", "norms of a measure, function or tower");
  add_common(norms);
  norms->add_option("input", left, "instance file")->required();
  norms->add_option("--measure", measure_path, "weighting measure for a function");

  auto* rho = app.add_subcommand("rho", "quasi-invariance factors of a measure");
  add_common(rho);
  rho->add_option("input", left, "measure file")->required();

  auto* ver = app.add_subcommand("verify", "run the property suites");
  add_common(ver);
  ver->add_option("suite", suite, "all|lemma2|cocycle|prop5|lemma16|note19|ideals|isometry");
  ver->add_option("--trials", opts.trials, "random instances per family");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (!seed_given) opts.seed = default_seed();
    if (!um::is_prime(opts.q)) throw um::InputError("--q must be prime");
    if (*gen) return run_gen(opts, group_spec, measure_kind);
    if (*conv) return run_convolve(opts, left, right, measure_path);
    if (*st) return run_star(opts, left, right);
    if (*norms) return run_norms(opts, left, measure_path);
    if (*rho) return run_rho(opts, left);
    if (*ver) return run_verify_cmd(opts, suite);
  } catch (const um::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const json::exception& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::domain_error& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}
