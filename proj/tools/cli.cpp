#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lqw/lqw.hpp"

namespace lqw::cli {
namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FamilyArgs {
  std::string family;
  std::optional<std::size_t> n, k, dim, side, q, order, m;
};

struct RunArgs {
  double loop = 0.0;
  std::optional<std::size_t> horizon;
  std::optional<std::size_t> steps;
  Vertex marked = 0;
  std::string peak_mode = "first";
  std::size_t window = 5;
  std::string out;
  std::string format = "csv";
  bool timing = false;
  unsigned threads = 1;
};

void add_family_options(CLI::App* app, FamilyArgs& f) {
  app->add_option("--family", f.family,
                  "complete|cycle|torus|bipartite|paley|latin|triangular|"
                  "johnson|hypercube")
      ->required();
  app->add_option("--n", f.n, "vertex count (complete, cycle, bipartite) or "
                              "symbol count (johnson)");
  app->add_option("--k", f.k, "subset size (johnson)");
  app->add_option("--dim", f.dim, "dimension (torus, hypercube)");
  app->add_option("--side", f.side, "side length (torus)");
  app->add_option("--q", f.q, "prime modulus (paley)");
  app->add_option("--order", f.order, "Latin square order (latin)");
  app->add_option("--m", f.m, "ground set size (triangular)");
}

std::size_t need(const std::optional<std::size_t>& v, const char* flag,
                 const std::string& family) {
  if (!v) {
    throw Error(ErrorCode::kInvalidInput,
                "family '" + family + "' needs " + flag);
  }
  return *v;
}

Graph build_graph(const FamilyArgs& f) {
  const auto family = parse_family(f.family);
  if (!family || *family == Family::kCustom) {
    throw Error(ErrorCode::kInvalidInput, "unknown family '" + f.family + "'");
  }
  const std::string& name = f.family;
  switch (*family) {
    case Family::kComplete: return build_complete(need(f.n, "--n", name));
    case Family::kCycle: return build_cycle(need(f.n, "--n", name));
    case Family::kTorus:
      return build_torus_lattice(f.dim.value_or(2), need(f.side, "--side", name));
    case Family::kBipartite:
      return build_complete_bipartite_regular(need(f.n, "--n", name));
    case Family::kPaley: return build_paley(need(f.q, "--q", name));
    case Family::kLatin: return build_latin_square(need(f.order, "--order", name));
    case Family::kTriangular: return build_triangular(need(f.m, "--m", name));
    case Family::kJohnson:
      return build_johnson(need(f.n, "--n", name), need(f.k, "--k", name));
    case Family::kHypercube: return build_hypercube(need(f.dim, "--dim", name));
    case Family::kCustom: break;
  }
  throw Error(ErrorCode::kInvalidInput, "unknown family '" + f.family + "'");
}

PeakSpec peak_spec(const RunArgs& r) {
  PeakSpec spec;
  spec.window = r.window;
  spec.mode = r.peak_mode == "global" ? PeakMode::kGlobalMax
                                      : PeakMode::kFirstLocalMax;
  return spec;
}

// --steps wins over --horizon; both win over the heuristic.
std::optional<std::size_t> explicit_horizon(const RunArgs& r) {
  return r.steps ? r.steps : r.horizon;
}

void add_run_options(CLI::App* app, RunArgs& r) {
  app->add_option("--horizon", r.horizon, "number of steps");
  app->add_option("--steps", r.steps, "number of steps; overrides --horizon");
  app->add_option("--marked", r.marked, "marked vertex (default 0)");
  app->add_option("--peak-mode", r.peak_mode, "first|global")
      ->check(CLI::IsMember({"first", "global"}));
  app->add_option("--window", r.window, "first-local-max half width")
      ->check(CLI::PositiveNumber);
  app->add_option("--out", r.out, "output path");
  app->add_option("--format", r.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
}

std::ofstream open_out(const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path + " for writing");
  return file;
}

void close_out(std::ofstream& file, const std::string& path) {
  file.close();
  if (!file) throw IoError("failed writing " + path);
}

std::string metadata_path(const std::string& csv_path) {
  std::filesystem::path p(csv_path);
  if (p.extension() == ".csv") return p.replace_extension(".json").string();
  return csv_path + ".json";
}

std::string fmt(double x, int digits = 12) {
  std::ostringstream s;
  s << std::setprecision(digits) << x;
  return s.str();
}

std::vector<double> parse_list(const std::string& text, const char* flag) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidInput,
                  std::string("bad number '") + item + "' in " + flag);
    }
  }
  if (values.empty()) {
    throw Error(ErrorCode::kInvalidInput, std::string(flag) + " is empty");
  }
  return values;
}

int cmd_run(const FamilyArgs& f, const RunArgs& r, std::ostream& out) {
  const Graph g = build_graph(f);
  SearchConfig cfg;
  cfg.loop_weight = r.loop;
  cfg.marked = r.marked;
  const auto fixed = explicit_horizon(r);
  cfg.horizon = fixed.value_or(default_horizon(g, r.loop));

  const auto start = std::chrono::steady_clock::now();
  const RunRecord run = evolve(g, cfg, peak_spec(r));
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();

  RunMetadata meta;
  meta.family = g.family();
  meta.n_vertices = g.n_vertices();
  meta.degree = g.degree();
  meta.config = cfg;
  meta.horizon_source = fixed ? HorizonSource::kExplicit : HorizonSource::kHeuristic;
  if (r.timing) meta.wall_time_ms = ms;

  if (!r.out.empty()) {
    if (r.format == "json") {
      auto j = run_metadata_json(meta, run);
      j["probabilities"] = run.probabilities;
      auto file = open_out(r.out);
      file << j.dump(2) << '\n';
      close_out(file, r.out);
    } else {
      auto csv = open_out(r.out);
      write_run_csv(csv, run);
      close_out(csv, r.out);
      const std::string meta_path = metadata_path(r.out);
      auto json = open_out(meta_path);
      json << run_metadata_json(meta, run).dump(2) << '\n';
      close_out(json, meta_path);
    }
  }

  out << to_string(g.family()) << ' ' << g.n_vertices() << ' ' << g.degree()
      << ' ' << fmt(cfg.loop_weight) << ' ' << run.peak_time << ' '
      << fmt(run.peak_probability) << '\n';
  return kOk;
}

void print_sweep(const SweepRecord& sweep, std::ostream& out) {
  out << "# " << to_string(sweep.family) << " N=" << sweep.n_vertices
      << " d=" << sweep.degree
      << " d/N=" << fmt(sweep.hypothesized_loop_weight) << '\n';
  for (const SweepEntry& e : sweep.entries) {
    out << fmt(e.loop_weight) << ' ' << e.peak_time << ' '
        << fmt(e.peak_probability) << '\n';
  }
}

void write_sweep_output(const RunArgs& r, const SweepRecord& sweep,
                        const nlohmann::json& json) {
  if (r.out.empty()) return;
  auto file = open_out(r.out);
  if (r.format == "json") {
    file << json.dump(2) << '\n';
  } else {
    write_sweep_csv(file, sweep);
  }
  close_out(file, r.out);
}

SweepOptions sweep_options(const RunArgs& r) {
  SweepOptions o;
  o.horizon = explicit_horizon(r);
  o.peak = peak_spec(r);
  o.marked = r.marked;
  o.threads = r.threads;
  return o;
}

int cmd_sweep(const FamilyArgs& f, const RunArgs& r, const std::string& weights,
              std::ostream& out) {
  const Graph g = build_graph(f);
  const auto list = parse_list(weights, "--weights");
  const SweepRecord sweep = sweep_loop_weight(g, list, sweep_options(r));
  print_sweep(sweep, out);
  out << "best loop_weight " << fmt(sweep.best().loop_weight) << " peak "
      << fmt(sweep.best().peak_probability) << '\n';
  write_sweep_output(r, sweep, sweep_json(sweep));
  return kOk;
}

int cmd_hypothesis(const FamilyArgs& f, const RunArgs& r,
                   const std::string& multipliers, double tolerance,
                   double scaling_fraction, std::ostream& out) {
  const Graph g = build_graph(f);
  HypothesisOptions o;
  if (!multipliers.empty()) o.multipliers = parse_list(multipliers, "--multipliers");
  o.tolerance = tolerance;
  o.scaling_fraction = scaling_fraction;
  o.sweep = sweep_options(r);
  const HypothesisResult result = hypothesis_check(g, o);
  print_sweep(result.sweep, out);
  out << to_string(result.verdict) << " l=d/N=" << g.degree() << '/'
      << g.n_vertices() << '=' << fmt(result.sweep.hypothesized_loop_weight, 6)
      << " p*=" << fmt(result.reference_probability)
      << " best_multiplier=" << fmt(result.best_multiplier)
      << " best_p*=" << fmt(result.best_probability) << '\n';
  write_sweep_output(r, result.sweep, hypothesis_json(result));
  return result.verdict == Verdict::kNotSupported ? kHypothesisRejected : kOk;
}

int cmd_reduced_compare(std::size_t n, const RunArgs& r, std::ostream& out) {
  // Validate the cheap reduced-model preconditions before building K_N.
  const reduced::PerturbationPrediction pred = reduced::predict(n, r.loop);
  const Graph g = build_complete(n);
  const std::size_t horizon =
      explicit_horizon(r).value_or(default_horizon(g, r.loop));

  SearchConfig cfg;
  cfg.loop_weight = r.loop;
  cfg.horizon = horizon;
  const RunRecord full = evolve(g, cfg, peak_spec(r));
  const std::vector<double> red = reduced::evolve(n, r.loop, horizon);

  double max_diff = 0.0;
  for (std::size_t t = 0; t < red.size(); ++t) {
    max_diff = std::max(max_diff, std::abs(full.probabilities[t] - red[t]));
  }
  if (!r.out.empty()) {
    auto file = open_out(r.out);
    write_comparison_csv(file, full.probabilities, red);
    close_out(file, r.out);
  }
  out << "max_abs_diff " << fmt(max_diff, 6) << '\n';
  out << "sigma " << fmt(pred.sigma, 6) << " t_star " << std::fixed
      << std::setprecision(2) << pred.t_star << std::defaultfloat
      << " p_star " << fmt(pred.p_star, 6) << '\n';
  out << "full_peak_time " << full.peak_time << " full_peak_probability "
      << fmt(full.peak_probability) << '\n';
  if (!pred.in_asymptotic_range) {
    out << "warning: 2(l+1)/N >= 1, prediction outside its asymptotic range\n";
  }
  return kOk;
}

int cmd_graph_info(const FamilyArgs& f, bool srg, const std::string& path,
                   std::ostream& out) {
  const Graph g = build_graph(f);
  out << to_string(g.family()) << " N=" << g.n_vertices()
      << " d=" << g.degree() << " amplitudes=" << g.amplitude_count()
      << " d/N=" << fmt(static_cast<double>(g.degree()) /
                        static_cast<double>(g.n_vertices()))
      << '\n';
  if (srg) {
    const SrgCheck check = validate_strongly_regular(g);
    if (check.params) {
      const SrgParams& p = *check.params;
      out << "strongly regular (" << p.n << ',' << p.k << ',' << p.lambda << ','
          << p.mu << ")\n";
    } else {
      const SrgViolation& v = *check.violation;
      out << "not strongly regular: pair (" << v.u << ',' << v.v << ") "
          << (v.adjacent ? "adjacent" : "non-adjacent") << " has " << v.common
          << " common neighbours, expected " << v.expected << '\n';
    }
  }
  if (!path.empty()) {
    auto file = open_out(path);
    write_edge_list(file, g);
    close_out(file, path);
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lackadaisical quantum walk search simulator"};
  app.require_subcommand(1);

  FamilyArgs family;
  RunArgs args;
  std::string weights;
  std::string multipliers;
  double tolerance = 0.02;
  double scaling_fraction = 0.5;
  std::size_t reduced_n = 0;
  bool srg = false;
  std::string edge_list;

  auto* run_cmd = app.add_subcommand("run", "evolve one search and report its peak");
  add_family_options(run_cmd, family);
  add_run_options(run_cmd, args);
  run_cmd->add_option("--loop", args.loop, "self-loop weight l")->required();
  run_cmd->add_flag("--timing", args.timing, "record wall_time_ms in metadata");

  auto* sweep_cmd = app.add_subcommand("sweep", "peak per self-loop weight");
  add_family_options(sweep_cmd, family);
  add_run_options(sweep_cmd, args);
  sweep_cmd->add_option("--weights", weights, "comma separated weights")->required();
  sweep_cmd->add_option("--threads", args.threads, "worker threads, 0 = all cores");

  auto* hyp_cmd = app.add_subcommand("hypothesis", "test l = d/N against multiples");
  add_family_options(hyp_cmd, family);
  add_run_options(hyp_cmd, args);
  hyp_cmd->add_option("--multipliers", multipliers,
                      "comma separated multiples of d/N (default 0.25,0.5,1,2,4)");
  hyp_cmd->add_option("--tolerance", tolerance, "allowed shortfall of p*(d/N)")
      ->check(CLI::NonNegativeNumber);
  hyp_cmd->add_option("--scaling-fraction", scaling_fraction,
                      "NOT-STRICT if p*(d/N) reaches this fraction of the best peak")
      ->check(CLI::Range(0.0, 1.0));
  hyp_cmd->add_option("--threads", args.threads, "worker threads, 0 = all cores");

  auto* red_cmd = app.add_subcommand("reduced-compare",
                                     "full complete-graph run vs 4D model");
  red_cmd->add_option("--n", reduced_n, "vertex count")->required();
  red_cmd->add_option("--loop", args.loop, "self-loop weight l > 0")->required();
  add_run_options(red_cmd, args);

  auto* info_cmd = app.add_subcommand("graph-info", "describe or export a graph");
  add_family_options(info_cmd, family);
  info_cmd->add_flag("--srg", srg, "check strong regularity by brute force");
  info_cmd->add_option("--out", edge_list, "write the edge list here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*run_cmd) return cmd_run(family, args, out);
    if (*sweep_cmd) return cmd_sweep(family, args, weights, out);
    if (*hyp_cmd) return cmd_hypothesis(family, args, multipliers, tolerance, scaling_fraction, out);
    if (*red_cmd) return cmd_reduced_compare(reduced_n, args, out);
    if (*info_cmd) return cmd_graph_info(family, srg, edge_list, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return e.code() == ErrorCode::kIo ? kIoFailure : kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace lqw::cli
