// Command-line front end: classify predicates, build and verify sparsifiers,
// inspect the cover reduction, and generate/certify lower-bound instances.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cspar/cover.hpp"
#include "cspar/csp.hpp"
#include "cspar/hardness.hpp"
#include "cspar/json_io.hpp"
#include "cspar/predicate.hpp"
#include "cspar/sparsify.hpp"
#include "cspar/version.hpp"

namespace {

using namespace cspar;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalidInput = 2;

struct RunConfig {
  std::string gen_kind;
  std::filesystem::path input;
  std::filesystem::path input2;
  std::filesystem::path predicate_path;
  std::filesystem::path output;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t max_bruteforce = kDefaultBruteforceCap;
  int jobs = 1;
  int grid_n = 0;
  int cube_q = 0;
  bool verify_after = false;
  bool random_weights = false;
  std::string family = "auto";
};

std::string witness_str(const SingletonWitness& w) {
  return "B={" + std::to_string(w.left_pair.lo) + "," + std::to_string(w.left_pair.hi) +
         "} C={" + std::to_string(w.right_pair.lo) + "," + std::to_string(w.right_pair.hi) +
         "} cell=(" + std::to_string(w.supported_cell.first) + "," +
         std::to_string(w.supported_cell.second) + ")";
}

std::string assignment_str(const Assignment& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

void emit(const std::filesystem::path& output, const std::string& text) {
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) fail(errc::parse_error, "cannot write " + output.string());
    out << text;
  }
}

int run_classify(const RunConfig& cfg) {
  const KaryPredicate p = io::read_predicate_file(cfg.input);
  const Classification cls = classify(p);
  if (cls.sparsifiable) {
    const Colouring c = biclique_colouring(p);
    std::cout << "SPARSIFIABLE, ell=" << c.colour_count << "\n";
  } else {
    std::cout << "NOT SPARSIFIABLE, " << witness_str(*cls.witness) << "\n";
  }
  return kExitOk;
}

int run_cover(const RunConfig& cfg) {
  const KaryPredicate p = io::read_predicate_file(cfg.input);
  const std::string bundle = io::cover_bundle_to_json(p);
  emit(cfg.output, bundle);
  if (!cfg.output.empty()) {
    const Colouring c = biclique_colouring(p);
    std::cout << "ell=" << c.colour_count << ", " << p.support_size()
              << " support edges\n";
  }
  return kExitOk;
}

int run_sparsify(const RunConfig& cfg) {
  auto doc = io::read_instance_file(cfg.input);
  SparsifyOptions options{cfg.max_bruteforce, cfg.jobs};
  auto [sparse, report] = sparsify_csp(doc.instance, cfg.epsilon, cfg.seed, options);
  io::write_instance_file(cfg.output, sparse, &report);
  std::cout << "kept " << report.retained.size() << "/"
            << doc.instance.constraint_count() << " constraints, epsilon="
            << cfg.epsilon << ", seed=" << cfg.seed << ", rounds="
            << report.oversampling_rounds << "\n";
  if (cfg.verify_after) {
    const VerifyResult res = verify_sparsifier(doc.instance, sparse, cfg.epsilon,
                                               cfg.max_bruteforce, cfg.jobs);
    if (!res.pass) {
      std::cout << "FAIL: witness assignment " << assignment_str(*res.witness) << "\n";
      return kExitVerifyFailed;
    }
    std::cout << "verified: all assignments within bound\n";
  }
  return kExitOk;
}

int run_verify(const RunConfig& cfg) {
  auto full = io::read_instance_file(cfg.input);
  auto sparse = io::read_instance_file(cfg.input2);
  const VerifyResult res = verify_sparsifier(full.instance, sparse.instance,
                                             cfg.epsilon, cfg.max_bruteforce, cfg.jobs);
  if (!res.pass) {
    std::cout << "FAIL: witness assignment " << assignment_str(*res.witness) << "\n";
    return kExitVerifyFailed;
  }
  std::cout << "PASS: every assignment within (1±" << cfg.epsilon << ")\n";
  return kExitOk;
}

std::vector<double> random_weights(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> w(count);
  for (double& x : w) x = static_cast<double>(1 + rng() % 5);
  return w;
}

int run_gen(const RunConfig& cfg) {
  const KaryPredicate p = io::read_predicate_file(cfg.predicate_path);
  if (cfg.gen_kind == "grid") {
    auto witness = find_singleton_subpredicate(p);
    if (!witness)
      fail(errc::not_sparsifiable,
           "predicate has no singleton 2x2 restriction; the grid "
           "construction needs one");
    std::vector<double> weights;
    if (cfg.random_weights)
      weights = random_weights(static_cast<std::size_t>(cfg.grid_n) * cfg.grid_n, cfg.seed);
    GridInstance grid = grid_instance(p, *witness, cfg.grid_n, std::move(weights));
    io::write_instance_file(cfg.output, grid.instance);
    std::cout << "grid: " << grid.instance.variable_count() << " variables, "
              << grid.instance.constraint_count() << " constraints\n";
    return kExitOk;
  }
  auto witness = find_singleton_lcube(p, 2);
  if (!witness)
    fail(errc::not_sparsifiable,
         "predicate contains no singleton 2-cube; the hypergraph "
         "construction needs one");
  CubeInstance cube = cube_hypergraph(p, *witness, cfg.cube_q);
  CspInstance inst = instance_of(cube.hypergraph, p);
  if (cfg.random_weights) {
    std::vector<double> weights = random_weights(inst.constraint_count(), cfg.seed);
    std::vector<Constraint> constraints = inst.constraints();
    for (std::size_t i = 0; i < constraints.size(); ++i)
      constraints[i].weight = weights[i];
    inst = CspInstance(inst.variables(), inst.domains(), inst.predicate(),
                       std::move(constraints));
  }
  io::write_instance_file(cfg.output, inst);
  std::cout << "cube: " << inst.variable_count() << " variables, "
            << inst.constraint_count() << " constraints\n";
  return kExitOk;
}

int run_lowerbound(const RunConfig& cfg) {
  if (cfg.family != "auto")
    fail(errc::bad_parameters, "only --family auto is supported");
  auto doc = io::read_instance_file(cfg.input);
  const CspInstance& inst = doc.instance;

  // Every positive-value assignment yields a support set; keep one assignment
  // per distinct minimal set.
  std::vector<Assignment> family;
  std::vector<std::vector<int>> sets;
  std::set<std::vector<int>> seen;
  Tuple t(inst.predicate().arity());
  for (const Assignment& a : enumerate_assignments(inst, cfg.max_bruteforce)) {
    std::vector<int> satisfied;
    for (std::size_t i = 0; i < inst.constraint_count(); ++i) {
      const Constraint& c = inst.constraints()[i];
      for (std::size_t pos = 0; pos < c.scope.size(); ++pos) t[pos] = a[c.scope[pos]];
      if (inst.predicate().holds(t)) satisfied.push_back(static_cast<int>(i));
    }
    if (satisfied.empty() || !seen.insert(satisfied).second) continue;
    sets.push_back(std::move(satisfied));
    family.push_back(a);
  }
  // Drop supersets; they cannot tighten the hitting bound.
  std::vector<Assignment> minimal_family;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < sets.size() && !dominated; ++j)
      if (i != j && std::includes(sets[i].begin(), sets[i].end(),
                                  sets[j].begin(), sets[j].end()) &&
          sets[i] != sets[j])
        dominated = true;
    if (!dominated) minimal_family.push_back(family[i]);
  }

  LowerBoundCertificate cert =
      minimal_family.empty()
          ? LowerBoundCertificate{{}, {}, 0, true}
          : hitting_lower_bound(inst, minimal_family);
  emit(cfg.output, io::certificate_to_json(cert));
  if (!cfg.output.empty())
    std::cout << "lower bound " << cert.bound << (cert.exact ? " (exact)" : " (greedy, not certified)")
              << " from " << cert.family.size() << " assignments\n";
  return cert.exact ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CSP sparsification toolkit: predicate classification, "
               "cut-sparsifier pipeline, and lower-bound certificates"};
  app.set_version_flag("--version", cspar::kVersion);
  app.require_subcommand(1);

  RunConfig cfg;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a binary predicate");
  classify_cmd->add_option("predicate", cfg.input, "predicate JSON file")->required();

  auto* cover_cmd = app.add_subcommand("cover", "Emit the auxiliary graph, complement, and colouring");
  cover_cmd->add_option("predicate", cfg.input, "predicate JSON file")->required();
  cover_cmd->add_option("-o,--output", cfg.output, "output JSON file (default stdout)");

  auto* sparsify_cmd = app.add_subcommand("sparsify", "Sparsify a CSP instance");
  sparsify_cmd->add_option("instance", cfg.input, "instance JSON file")->required();
  sparsify_cmd->add_option("--epsilon", cfg.epsilon, "accuracy in (0,1)")->required();
  sparsify_cmd->add_option("--seed", cfg.seed, "sampling seed");
  sparsify_cmd->add_flag("--verify", cfg.verify_after, "re-verify the output exhaustively");
  sparsify_cmd->add_option("--max-bruteforce", cfg.max_bruteforce, "assignment-space cap");
  sparsify_cmd->add_option("--jobs", cfg.jobs, "verification workers");
  sparsify_cmd->add_option("-o,--output", cfg.output, "output JSON file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check the (1±eps) bound exhaustively");
  verify_cmd->add_option("instance", cfg.input, "full instance JSON file")->required();
  verify_cmd->add_option("sparsifier", cfg.input2, "sparsified instance JSON file")->required();
  verify_cmd->add_option("--epsilon", cfg.epsilon, "accuracy in (0,1)")->required();
  verify_cmd->add_option("--max-bruteforce", cfg.max_bruteforce, "assignment-space cap");
  verify_cmd->add_option("--jobs", cfg.jobs, "verification workers");

  auto* gen_cmd = app.add_subcommand("gen", "Generate a lower-bound instance");
  auto* grid_cmd = gen_cmd->add_subcommand("grid", "complete bipartite grid instance");
  grid_cmd->add_option("--pred", cfg.predicate_path, "predicate JSON file")->required();
  grid_cmd->add_option("--n", cfg.grid_n, "grid size (2n variables, n^2 constraints)")->required();
  grid_cmd->add_flag("--random-weights", cfg.random_weights, "integer weights in 1..5");
  grid_cmd->add_option("--seed", cfg.seed, "weight seed");
  grid_cmd->add_option("-o,--output", cfg.output, "output JSON file")->required();
  auto* cube_cmd = gen_cmd->add_subcommand("cube", "complete k-partite hypergraph instance");
  cube_cmd->add_option("--pred", cfg.predicate_path, "predicate JSON file")->required();
  cube_cmd->add_option("--q", cfg.cube_q, "vertices per part")->required();
  cube_cmd->add_flag("--random-weights", cfg.random_weights, "integer weights in 1..5");
  cube_cmd->add_option("--seed", cfg.seed, "weight seed");
  cube_cmd->add_option("-o,--output", cfg.output, "output JSON file")->required();
  gen_cmd->require_subcommand(1);

  auto* lb_cmd = app.add_subcommand("lowerbound", "Certify a retention lower bound");
  lb_cmd->add_option("instance", cfg.input, "instance JSON file")->required();
  lb_cmd->add_option("--family", cfg.family, "assignment family source (auto)");
  lb_cmd->add_option("--max-bruteforce", cfg.max_bruteforce, "assignment-space cap");
  lb_cmd->add_option("-o,--output", cfg.output, "output JSON file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if ((sparsify_cmd->parsed() || verify_cmd->parsed()) &&
        !(cfg.epsilon > 0.0 && cfg.epsilon < 1.0))
      fail(errc::bad_epsilon, "epsilon must lie in (0, 1)");
    if (classify_cmd->parsed()) return run_classify(cfg);
    if (cover_cmd->parsed()) return run_cover(cfg);
    if (sparsify_cmd->parsed()) return run_sparsify(cfg);
    if (verify_cmd->parsed()) return run_verify(cfg);
    if (gen_cmd->parsed()) {
      cfg.gen_kind = grid_cmd->parsed() ? "grid" : "cube";
      return run_gen(cfg);
    }
    if (lb_cmd->parsed()) return run_lowerbound(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
