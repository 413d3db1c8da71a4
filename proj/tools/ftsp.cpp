// Command-line front end: witness construction, calibration checks, the
// small-scale tour oracle, and grid/set exports. Exit codes: 0 success,
// 1 verification failure, 2 invalid input or a cap exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ftsp/json_io.hpp"
#include "ftsp/oracle.hpp"
#include "ftsp/witness.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 20240817ull;

struct Options {
  std::string command;
  std::string xi;
  std::string lambda = "26/10";
  std::string alphabet = "std2";
  std::optional<int> n;
  int samples = 200;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  std::string set_out;
  std::string instance;
  std::string export_instance;
  int max_radius = 14;
  int max_tour = 18;
  int n_max = 201;
  bool corrupt_generators = false;
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << std::endl;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write to " + path);
  out << text << '\n';
}

int cmd_witness(const Options& opt) {
  const ftsp::SupportPair pair = ftsp::pair_by_selector(opt.alphabet);
  const ftsp::LetterSeq xi = ftsp::parse_word(pair.alphabet, opt.xi);
  ftsp::BuildOptions build;
  build.n_override = opt.n;
  build.n_max = opt.n_max;
  const ftsp::WitnessReport report =
      ftsp::build_witness(pair, xi, ftsp::parse_rational(opt.lambda), build);
  write_output(opt.out, ftsp::witness_report_to_json(report).dump(2));
  return 0;
}

int cmd_check(const Options& opt) {
  ftsp::SupportPair pair = ftsp::pair_by_selector(opt.alphabet);
  if (opt.corrupt_generators && pair.alphabet.size() >= 2)
    std::swap(pair.alphabet.gens[0].map, pair.alphabet.gens[1].map);
  const ftsp::CheckSummary s = ftsp::run_check_suite(pair, opt.samples, opt.seed);
  std::cout << "relations   " << s.relations_pass << "/" << s.relations_total << "\n"
            << "supports    " << s.support_pass << "/" << s.support_total << "\n"
            << "family      " << s.family_pass << "/" << s.family_total << "\n"
            << "conjugation " << s.conj_pass << "/" << s.conj_total << "\n"
            << "mixed       " << s.mixed_pass << "/" << s.mixed_total << "\n";
  if (!s.all_pass()) {
    std::cerr << "FAILED: " << s.first_failure << "\n";
    return 1;
  }
  return 0;
}

int cmd_oracle(const Options& opt) {
  ftsp::TourInstance inst;
  nlohmann::ordered_json j;
  if (!opt.instance.empty()) {
    std::ifstream in(opt.instance);
    if (!in) throw std::invalid_argument("cannot open instance file: " + opt.instance);
    nlohmann::json src;
    in >> src;
    inst = ftsp::tour_instance_from_json(src, opt.max_radius);
    j["instance"] = opt.instance;
    j["card"] = inst.points.size();
  } else {
    const ftsp::SupportPair pair = ftsp::pair_by_selector(opt.alphabet);
    const ftsp::LetterSeq xi = ftsp::parse_word(pair.alphabet, opt.xi);
    const ftsp::ConjugationWitness lw = ftsp::conjugation_witness(pair, xi);
    const int n = opt.n.value_or(2);
    const ftsp::GridSet grid = ftsp::build_grid_set(lw, pair, n);
    if (grid.card() > opt.max_tour)
      throw ftsp::cap_error("witness set of " + std::to_string(grid.card()) +
                            " points exceeds tour cap " + std::to_string(opt.max_tour));
    const ftsp::CayleyBall ball =
        ftsp::cayley_ball(pair.alphabet, std::min(8, opt.max_radius), opt.max_radius);
    inst = ftsp::make_tour_instance(pair.alphabet, grid.elements, grid.words, opt.max_radius,
                                    &ball);

    const long L = static_cast<long>(pair.u_word.size() + pair.v_word.size());
    const long xi_len = static_cast<long>(xi.size());
    const long NN = n + 1;
    const long formula_len = L * (NN * NN - 1) + (4 * NN - 2) * xi_len;
    mpq_class witness_ratio(formula_len, grid.card());
    witness_ratio.canonicalize();
    const mpq_class bound = ftsp::make_rational(L, 2) + ftsp::make_rational(2 * xi_len, NN);
    j["xi"] = opt.xi;
    j["epsilon"] = lw.epsilon;
    j["n"] = n;
    j["N"] = grid.N;
    j["card"] = grid.card();
    j["degenerate"] = grid.degenerate;
    j["witness_path_length"] = formula_len;
    j["witness_ratio"] = ftsp::rational_str(witness_ratio);
    j["ratio_bound"] = ftsp::rational_str(bound);
  }

  ftsp::check_metric_axioms(inst);
  const ftsp::TourResult tour = ftsp::exact_tour(inst, opt.max_tour);
  nlohmann::ordered_json oracle;
  oracle["tour_length"] = tour.length;
  oracle["tau"] = ftsp::rational_str(tour.tau);
  oracle["order"] = tour.order;
  j["oracle"] = std::move(oracle);

  if (!opt.export_instance.empty())
    write_output(opt.export_instance, ftsp::tour_instance_to_json(inst).dump(2));
  write_output(opt.out, j.dump(2));
  return 0;
}

int cmd_export(const Options& opt) {
  const int n = opt.n.value_or(4);
  write_output(opt.out, ftsp::gamma_dot(n));
  if (!opt.set_out.empty()) {
    const ftsp::SupportPair pair = ftsp::pair_by_selector(opt.alphabet);
    const ftsp::LetterSeq xi = ftsp::parse_word(pair.alphabet, opt.xi);
    const ftsp::ConjugationWitness lw = ftsp::conjugation_witness(pair, xi);
    const ftsp::GridSet grid = ftsp::build_grid_set(lw, pair, n);
    write_output(opt.set_out, ftsp::grid_set_to_json(grid, pair.alphabet).dump(2));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"exact witness sets and covering tours on the Cayley graph of F"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--alphabet", opt.alphabet, "std2|x012|mirror3|@file.json");
    cmd->add_option("--xi", opt.xi, "word in compact letters, e.g. abA");
    cmd->add_option("--n", opt.n, "grid size override");
    cmd->add_option("--out", opt.out, "write the main output here instead of stdout");
    cmd->add_option("--max-radius", opt.max_radius, "distance search cap");
    cmd->add_option("--max-tour", opt.max_tour, "exact tour size cap");
    cmd->add_option("--n-max", opt.n_max, "largest n tried in the degenerate branch");
  };

  CLI::App* witness = app.add_subcommand("witness", "build and verify a witness set and tour");
  add_common(witness);
  witness->add_option("--lambda", opt.lambda, "target ratio as p/q");

  CLI::App* check = app.add_subcommand("check", "calibration and randomized identity checks");
  add_common(check);
  check->add_option("--samples", opt.samples, "randomized samples per suite");
  check->add_option("--seed", opt.seed, "RNG seed");
  check->add_flag("--corrupt-generators", opt.corrupt_generators)->group("");  // test hook

  CLI::App* oracle = app.add_subcommand("oracle", "exact shortest covering tour on a small set");
  add_common(oracle);
  oracle->add_option("--instance", opt.instance, "load a tour instance from JSON");
  oracle->add_option("--export-instance", opt.export_instance, "write the instance as JSON");

  CLI::App* exp = app.add_subcommand("export", "emit the two-layer grid as DOT, and the set");
  add_common(exp);
  exp->add_option("--set-out", opt.set_out, "also write the witness set as JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (witness->parsed()) return cmd_witness(opt);
    if (check->parsed()) return cmd_check(opt);
    if (oracle->parsed()) return cmd_oracle(opt);
    if (exp->parsed()) return cmd_export(opt);
  } catch (const ftsp::verification_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const ftsp::cap_error& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
