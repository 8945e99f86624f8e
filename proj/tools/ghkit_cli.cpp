// ghkit: exact Gromov-Hausdorff / Euclidean-Hausdorff distances and
// verification drivers for the coarse-geometry constructions.
//
// Results go to stdout as JSON, diagnostics to stderr.
// Exit codes: 0 success, 1 input or validation error, 2 verification failure.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ghkit/assouad.hpp"
#include "ghkit/covers.hpp"
#include "ghkit/embeddings.hpp"
#include "ghkit/errors.hpp"
#include "ghkit/gromov_hausdorff.hpp"
#include "ghkit/hausdorff1d.hpp"
#include "ghkit/io.hpp"
#include "ghkit/metric.hpp"
#include "ghkit/suites.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerify = 2;

void emit(const ghkit::json& j) { std::cout << j.dump(2) << '\n'; }

int verdict(bool clean) { return clean ? kExitOk : kExitVerify; }

std::vector<double> parse_csv(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw ghkit::InvalidInput("cannot parse coordinate '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) {
      throw ghkit::InvalidInput("cannot parse coordinate '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace ghkit;

  CLI::App app{"Exact Gromov-Hausdorff and Euclidean-Hausdorff distances on small inputs"};
  app.require_subcommand(1);

  std::uint64_t seed = 42;
  std::int64_t trials = 200;
  double tolerance = kEps;
  std::size_t guard = SearchOptions{}.guard;

  auto add_common = [&](CLI::App* cmd, bool randomized) {
    cmd->add_option("--tolerance", tolerance, "Absolute tolerance")->check(CLI::PositiveNumber);
    if (randomized) {
      cmd->add_option("--seed", seed, "Seed of all randomized draws");
      cmd->add_option("--trials", trials, "Number of trials")->check(CLI::PositiveNumber);
    }
  };

  // gh
  std::string x_file, y_file, method = "exact";
  auto* gh = app.add_subcommand("gh", "Gromov-Hausdorff distance of two finite metric spaces");
  gh->add_option("x", x_file, "Metric space or point set JSON")->required();
  gh->add_option("y", y_file, "Metric space or point set JSON")->required();
  gh->add_option("--method", method, "exact | bruteforce")
      ->check(CLI::IsMember({"exact", "bruteforce"}));
  gh->add_option("--guard", guard, "Maximum points per space for exact search");

  // eh
  auto* eh = app.add_subcommand("eh", "Euclidean-Hausdorff distance of two point sets on the line");
  eh->add_option("x", x_file, "Point set JSON")->required();
  eh->add_option("y", y_file, "Point set JSON")->required();

  // embed
  std::int64_t m = 1, n = 1;
  std::string point_text;
  auto* embed = app.add_subcommand("embed", "Image of a cube point under the block embedding");
  embed->add_option("--m", m, "Cube side")->required()->check(CLI::PositiveNumber);
  embed->add_option("--n", n, "Cube dimension")->required()->check(CLI::PositiveNumber);
  embed->add_option("--point", point_text, "Comma-separated coordinates")->required();

  // kuratowski
  auto* kura = app.add_subcommand("kuratowski", "Isometric embedding into a sup-metric cube");
  kura->add_option("x", x_file, "Metric space or point set JSON")->required();

  // assouad
  double alpha = 1.0, big_c = 1.0, big_r = 1.0;
  bool do_verify = false;
  auto* assouad = app.add_subcommand("assouad", "Generate an Assouad witness family");
  assouad->add_option("--alpha", alpha)->required()->check(CLI::PositiveNumber);
  assouad->add_option("--C", big_c)->required()->check(CLI::PositiveNumber);
  assouad->add_option("--R", big_r)->required()->check(CLI::PositiveNumber);
  assouad->add_flag("--verify", do_verify, "Verify the family with the exact solver");
  add_common(assouad, false);

  // cover
  auto* cover = app.add_subcommand("cover", "Cover constructions and checks");
  cover->require_subcommand(1);
  double r = 1.0, xmax = 20.0;
  std::int64_t samples = 200;
  auto* cover_x1 = cover->add_subcommand("x1", "Two-class cover of sampled {0, x} elements");
  cover_x1->add_option("--r", r)->check(CLI::PositiveNumber);
  cover_x1->add_option("--xmax", xmax)->check(CLI::PositiveNumber);
  cover_x1->add_option("--samples", samples)->check(CLI::PositiveNumber);
  cover_x1->add_option("--seed", seed);
  std::string sample_file, cover_file;
  auto* cover_check = cover->add_subcommand("check", "Verify a cover file against a sample file");
  cover_check->add_option("sample", sample_file, "Sample JSON")->required();
  cover_check->add_option("cover", cover_file, "Cover JSON")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Randomized verification suites");
  verify->require_subcommand(1);
  std::size_t max_points = 5;
  auto* v_bilip = verify->add_subcommand("bilipschitz", "0.8 eh <= gh <= eh on random point sets");
  v_bilip->add_option("--max-points", max_points)->check(CLI::PositiveNumber);
  v_bilip->add_option("--guard", guard);
  add_common(v_bilip, true);
  auto* v_embed = verify->add_subcommand("embedding", "Control functions of the block embedding");
  v_embed->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  v_embed->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  add_common(v_embed, true);
  auto* v_witness = verify->add_subcommand("witness", "Verify an Assouad witness family");
  v_witness->add_option("--alpha", alpha)->required()->check(CLI::PositiveNumber);
  v_witness->add_option("--C", big_c)->required()->check(CLI::PositiveNumber);
  v_witness->add_option("--R", big_r)->check(CLI::PositiveNumber);
  add_common(v_witness, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  auto witness_json = [&](bool verify_it) {
    const WitnessFamily w = generate_witness(alpha, big_c, big_r);
    json out = to_json(w);
    if (!verify_it) return std::pair{out, kExitOk};
    const WitnessReport rep = verify_witness(w, tolerance);
    out["report"] = to_json(rep);
    if (rep.clean()) {
      const auto cert = ball_covering_certificate(w, rep);
      out["certificate"] = {{"M", cert.M}, {"bound", cert.bound}, {"text", cert.text}};
    }
    return std::pair{out, verdict(rep.clean())};
  };

  try {
    if (*gh) {
      const FiniteMetricSpace x = metric_space_from_json(read_json_file(x_file));
      const FiniteMetricSpace y = metric_space_from_json(read_json_file(y_file));
      const GHResult res = method == "exact" ? gh_exact(x, y, SearchOptions{guard})
                                             : gh_bruteforce(x, y);
      emit(to_json(res));
      return kExitOk;
    }
    if (*eh) {
      const Point1DSet x = point_set_from_json(read_json_file(x_file));
      const Point1DSet y = point_set_from_json(read_json_file(y_file));
      emit(to_json(eh_distance(x, y)));
      return kExitOk;
    }
    if (*embed) {
      const CubePoint p(BlockIndex{m, n}, parse_csv(point_text));
      json out = to_json(phi(p));
      out["T"] = pairing_T(m, n);
      out["D"] = separation_constant(m, n);
      emit(out);
      return kExitOk;
    }
    if (*kura) {
      const FiniteMetricSpace x = metric_space_from_json(read_json_file(x_file));
      emit(json{{"cube_side", kuratowski_cube_side(x)}, {"vectors", kuratowski_embed(x)}});
      return kExitOk;
    }
    if (*assouad) {
      auto [out, code] = witness_json(do_verify);
      emit(out);
      return code;
    }
    if (*cover_x1) {
      const CoverReport rep = x1_cover_suite(r, xmax, samples, seed);
      json out = to_json(rep);
      out["r"] = r;
      out["xmax"] = xmax;
      out["samples"] = samples;
      out["seed"] = seed;
      emit(out);
      return verdict(rep.clean());
    }
    if (*cover_check) {
      const SampledSpace s = sample_from_json(read_json_file(sample_file));
      const CoverFamily c = cover_from_json(read_json_file(cover_file));
      const CoverReport rep = verify_cover(s, c);
      emit(to_json(rep));
      return verdict(rep.clean());
    }
    if (*v_bilip) {
      const BilipschitzReport rep =
          verify_bilipschitz(trials, max_points, seed, tolerance, SearchOptions{guard});
      emit(json{{"trials", rep.trials},
                {"max_points", max_points},
                {"seed", seed},
                {"violations", rep.violations},
                {"lower_bound_violations", rep.lower_bound_violations},
                {"min_ratio", rep.min_ratio},
                {"max_ratio", rep.max_ratio},
                {"details", rep.details}});
      return verdict(rep.clean());
    }
    if (*v_embed) {
      const ControlReport rep = verify_control_functions(BlockIndex{m, n}, trials, seed, tolerance);
      json out = to_json(rep);
      out["seed"] = seed;
      emit(out);
      return verdict(rep.clean());
    }
    if (*v_witness) {
      auto [out, code] = witness_json(true);
      emit(out);
      return code;
    }
  } catch (const ghkit::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
