// Batch command-line surface over the library: transforms, inversions,
// completion, phase-factor solving, diagnostics, benchmarks.
//
// Exit codes: 0 success, 2 invalid input, 3 numerical failure, 4 I/O.
// NLFFT_LOG={error,info,debug} controls stderr verbosity. Results go to
// files named by --out, or to stdout when --out is omitted.

#include <CLI11.hpp>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "nlfft/complement.hpp"
#include "nlfft/diagnostics.hpp"
#include "nlfft/errors.hpp"
#include "nlfft/inverse.hpp"
#include "nlfft/json_io.hpp"
#include "nlfft/qsp.hpp"
#include "nlfft/sampling.hpp"

namespace {

using namespace nlfft;
using Clock = std::chrono::steady_clock;

enum class LogLevel { error = 0, info = 1, debug = 2 };

LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("NLFFT_LOG");
    if (env == nullptr) return LogLevel::error;
    const std::string v(env);
    if (v == "debug") return LogLevel::debug;
    if (v == "info") return LogLevel::info;
    return LogLevel::error;
  }();
  return level;
}

void log(LogLevel lvl, const std::string& msg) {
  if (static_cast<int>(lvl) <= static_cast<int>(log_level())) {
    std::cerr << "[nlfft] " << msg << '\n';
  }
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Shortest decimal representation that round-trips the double.
std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    save_json_file(out_path, j);
  }
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw IoError("cannot open for writing: " + out_path);
    out << text;
    if (!out) throw IoError("write failed: " + out_path);
  }
}

double fit_loglog_slope(const std::vector<double>& ns, const std::vector<double>& ts) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double x = std::log2(ns[i]);
    const double y = std::log2(std::max(ts[i], 1e-12));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

struct BenchRow {
  std::size_t n;
  double t_layer;
  double t_fast;
  double diff;
};

int run_forward(const std::string& in, const std::string& out, const std::string& method) {
  const auto t0 = Clock::now();
  const ComplexSequence g = sequence_from_json(load_json_file(in));
  const NlftPair pair =
      method == "naive" ? forward_nlft_naive(g) : forward_nlft_fast(g);
  const PairReport rep = pair_check(pair);
  emit(to_json(pair), out);
  std::cout << "forward: n=" << g.size() << " method=" << method
            << " unitarity_residual=" << fmt(rep.residual)
            << " time=" << fmt(seconds_since(t0)) << "s\n";
  return 0;
}

int run_invert(const std::string& in, const std::string& out, const std::string& method,
               double tol, int leaf) {
  const auto t0 = Clock::now();
  const NlftPair pair = pair_from_json(load_json_file(in));
  InverseFftOptions opts;
  opts.leaf_size = leaf;
  const ComplexSequence g = inverse_nlft(
      pair, method == "layer" ? InverseMethod::layer : InverseMethod::fast, tol, opts);
  const double residual = residual_on_circle(pair, g);
  emit(to_json(g), out);
  std::cout << "invert: n=" << g.size() << " method=" << method
            << " roundtrip_residual=" << fmt(residual)
            << " time=" << fmt(seconds_since(t0)) << "s\n";
  return 0;
}

int run_complete(const std::string& in, const std::string& out, const std::string& all_out) {
  const auto t0 = Clock::now();
  const LaurentPoly b = laurent_from_json(load_json_file(in));
  const NlftPair pair = complete_b_outer(b);
  const PairReport rep = pair_check(pair, 1e-6);
  emit(to_json(pair), out);
  std::size_t count = 1;
  if (!all_out.empty()) {
    json list = json::array();
    for (const NlftPair& p : enumerate_complements(b)) list.push_back(to_json(p));
    count = list.size();
    save_json_file(all_out, list);
  }
  std::cout << "complete: span=" << (b.high_deg() - b.low_deg())
            << " residual=" << fmt(rep.residual) << " complements=" << count
            << " time=" << fmt(seconds_since(t0)) << "s\n";
  return 0;
}

int run_flip(const std::string& in, const std::string& out) {
  const NlftPair pair = pair_from_json(load_json_file(in));
  const NlftPair flipped = flip_to_antiouter(pair);
  const PairReport rep = pair_check(flipped, 1e-6);
  emit(to_json(flipped), out);
  std::cout << "flip: residual=" << fmt(rep.residual) << " pass=" << rep.pass << "\n";
  return 0;
}

int run_qsp(const std::string& target, const std::string& out) {
  const auto t0 = Clock::now();
  const QspTarget f = qsp_target_from_json(load_json_file(target));
  const PhaseFactorSet phases = solve_qsp(f);
  emit(to_json(phases), out);
  std::cout << "qsp solve: degree=" << f.degree() << " residual=" << fmt(phases.residual)
            << " margin=" << fmt(qsp_target_margin(f))
            << " time=" << fmt(seconds_since(t0)) << "s\n";
  return 0;
}

int run_gqsp(const std::string& target, const std::string& out) {
  const auto t0 = Clock::now();
  const GqspTarget q = gqsp_target_from_json(load_json_file(target));
  const PhaseFactorSet phases = solve_gqsp(q);
  emit(to_json(phases), out);
  std::cout << "gqsp solve: degree=" << q.degree() << " residual=" << fmt(phases.residual)
            << " margin=" << fmt(gqsp_target_margin(q))
            << " time=" << fmt(seconds_since(t0)) << "s\n";
  return 0;
}

int run_diagnose_pair(const std::string& in, const std::string& out) {
  const NlftPair pair = pair_from_json(load_json_file(in));
  json report;
  report["pair_check"] = to_json(pair_check(pair));
  report["eta_hat"] = eta_of(pair);

  const StripMatrices sm = build_strip_matrices(pair);
  const Mat ldl = sm.L * sm.d.cast<cd>().asDiagonal() * sm.L.adjoint();
  const double ldl_rel = (sm.K - ldl).norm() / sm.K.norm();
  std::vector<cd> a0(sm.b0.size());
  for (std::size_t j = 0; j < a0.size(); ++j) {
    a0[j] = std::conj(pair.a.coeff(-static_cast<int>(j)));
  }
  report["ldl_rel_residual"] = ldl_rel;
  report["displacement_residual"] = displacement_residual(sm.K, a0, sm.b0);
  report["l_system_residual"] = verify_L_system(pair).residual_inf;

  std::ostringstream table;
  table << "metric                 value\n";
  table << "eta_hat                " << fmt(report["eta_hat"].get<double>()) << "\n";
  table << "ldl_rel_residual       " << fmt(ldl_rel) << "\n";
  table << "displacement_residual  " << fmt(report["displacement_residual"].get<double>())
        << "\n";
  table << "l_system_residual      " << fmt(report["l_system_residual"].get<double>()) << "\n";
  try {
    const NormBoundsReport nb = norm_bounds_report(pair);
    report["norm_bounds"] = to_json(nb);
    table << "norm_bounds_pass       " << (nb.pass ? "yes" : "no") << "\n";
  } catch (const InvalidInput& e) {
    report["norm_bounds"] = nullptr;
    table << "norm_bounds_pass       skipped (" << e.what() << ")\n";
  }
  emit(report, out);
  std::cout << table.str();
  return 0;
}

int run_diagnose_instability(int n, std::uint64_t seed, std::size_t grid,
                             const std::string& out, const std::string& errors_out) {
  const auto t0 = Clock::now();
  const InstabilityResult r = instability_experiment(n, seed, grid);
  std::ostringstream csv;
  csv << "n,residual_outer,residual_flipped\n";
  csv << r.n << ',' << fmt(r.residual_outer) << ',' << fmt(r.residual_flipped) << '\n';
  emit_text(csv.str(), out);
  if (!errors_out.empty()) {
    std::ostringstream ec;
    ec << "k,error\n";
    for (std::size_t k = 0; k < r.flipped_entry_error.size(); ++k) {
      ec << k << ',' << fmt(r.flipped_entry_error[k]) << '\n';
    }
    emit_text(ec.str(), errors_out);
  }
  std::cout << "instability: n=" << r.n << " outer=" << fmt(r.residual_outer)
            << " flipped=" << fmt(r.residual_flipped) << " fit_slope=" << fmt(r.fit_slope)
            << " time=" << fmt(seconds_since(t0)) << "s\n";
  return 0;
}

int run_diagnose_lipschitz(int n, std::uint64_t seed, int trials) {
  int held = 0;
  for (int t = 0; t < trials; ++t) {
    const ComplexSequence g1 = random_sequence(n, 0.7, seed + 2 * static_cast<std::uint64_t>(t));
    const ComplexSequence g2 =
        random_sequence(n, 0.7, seed + 2 * static_cast<std::uint64_t>(t) + 1);
    const double norms[3] = {1.0, 2.0, std::numeric_limits<double>::infinity()};
    bool ok = true;
    for (double p : norms) {
      for (double q : norms) {
        for (double r : norms) {
          ok = ok && nlft_lipschitz_check(g1, g2, p, q, r).holds;
        }
      }
    }
    held += ok ? 1 : 0;
  }
  std::cout << "lipschitz: n=" << n << " trials=" << trials << " held=" << held << "/"
            << trials << "\n";
  return held == trials ? 0 : 3;
}

int run_bench(std::size_t min_n, std::size_t max_n, int reps, std::uint64_t seed,
              const std::string& out, bool cross_check) {
  if (min_n < 2 || (min_n & (min_n - 1)) != 0 || (max_n & (max_n - 1)) != 0 ||
      max_n < min_n) {
    throw InvalidInput("bench: --min/--max must be powers of two with min <= max");
  }
  std::vector<BenchRow> rows;
  for (std::size_t n = min_n; n <= max_n; n <<= 1) {
    log(LogLevel::info, "bench n=" + std::to_string(n));
    const ComplexSequence g = random_sequence_with_eta(
        static_cast<int>(n), 0.2, seed + static_cast<std::uint64_t>(n));
    const NlftPair pair = forward_nlft_fast(g);

    std::vector<double> t_layer, t_fast;
    ComplexSequence out_layer, out_fast;
    for (int r = 0; r < reps; ++r) {
      auto t0 = Clock::now();
      out_layer = inverse_nlft(pair, InverseMethod::layer);
      t_layer.push_back(seconds_since(t0));
      t0 = Clock::now();
      out_fast = inverse_nlft(pair, InverseMethod::fast);
      t_fast.push_back(seconds_since(t0));
    }
    std::sort(t_layer.begin(), t_layer.end());
    std::sort(t_fast.begin(), t_fast.end());

    double diff = 0.0;
    if (cross_check) {
      for (std::size_t j = 0; j < out_layer.size(); ++j) {
        diff = std::max(diff, std::abs(out_layer.values[j] - out_fast.values[j]));
      }
      if (diff > 1e-9) {
        throw NumericalFailure("bench: layer/fast outputs diverged by " + fmt(diff));
      }
    }
    rows.push_back({n, t_layer[static_cast<std::size_t>(reps / 2)],
                    t_fast[static_cast<std::size_t>(reps / 2)], diff});
  }

  std::ostringstream csv;
  csv << "n,t_layer,t_fast\n";
  std::vector<double> ns, tl, tf;
  for (const BenchRow& r : rows) {
    csv << r.n << ',' << fmt(r.t_layer) << ',' << fmt(r.t_fast) << '\n';
    ns.push_back(static_cast<double>(r.n));
    tl.push_back(r.t_layer);
    tf.push_back(r.t_fast);
  }
  emit_text(csv.str(), out);
  if (rows.size() >= 2) {
    std::cout << "bench: slope_layer=" << fmt(fit_loglog_slope(ns, tl))
              << " slope_fast=" << fmt(fit_loglog_slope(ns, tf))
              << " cross_check=" << (cross_check ? "on" : "off") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SU(2) nonlinear Fourier transform toolkit"};
  app.require_subcommand(1);

  std::string in, out, all_out, errors_out, target;
  std::string method = "fast";
  double tol = config::kPairCheckTol;
  int leaf = config::kDefaultInverseLeaf;
  int n = 80;
  int trials = 8;
  std::uint64_t seed = 1;
  std::size_t grid = 0;
  std::size_t min_n = 1024, max_n = 16384;
  int reps = 3;
  bool no_check = false;

  auto* forward = app.add_subcommand("forward", "transform a sequence to a pair");
  forward->add_option("--in", in, "sequence JSON")->required();
  forward->add_option("--out", out, "pair JSON (stdout if omitted)");
  forward->add_option("--method", method, "naive|fast")
      ->check(CLI::IsMember({"naive", "fast"}));

  auto* invert = app.add_subcommand("invert", "recover the sequence of a pair");
  invert->add_option("--in", in, "pair JSON")->required();
  invert->add_option("--out", out, "sequence JSON (stdout if omitted)");
  invert->add_option("--method", method, "layer|fast")
      ->check(CLI::IsMember({"layer", "fast"}));
  invert->add_option("--tol", tol, "membership tolerance");
  invert->add_option("--leaf", leaf, "fast-path leaf window (0 = pure recursion)");

  auto* complete = app.add_subcommand("complete", "complement b with a zero-free a*");
  complete->add_option("--in", in, "b JSON")->required();
  complete->add_option("--out", out, "pair JSON (stdout if omitted)");
  complete->add_option("--all", all_out, "also enumerate every complement to this file");

  auto* flip = app.add_subcommand("flip", "reflect a to its non-outer counterpart");
  flip->add_option("--in", in, "pair JSON")->required();
  flip->add_option("--out", out, "pair JSON (stdout if omitted)");

  auto* qsp = app.add_subcommand("qsp", "signal-processing phase factors");
  auto* qsp_solve = qsp->add_subcommand("solve", "solve for phase factors");
  qsp_solve->add_option("--target", target, "Chebyshev target JSON")->required();
  qsp_solve->add_option("--out", out, "phases JSON (stdout if omitted)");

  auto* gqsp = app.add_subcommand("gqsp", "generalized phase factors");
  auto* gqsp_solve = gqsp->add_subcommand("solve", "solve for phase factors");
  gqsp_solve->add_option("--target", target, "monomial target JSON")->required();
  gqsp_solve->add_option("--out", out, "phases JSON (stdout if omitted)");

  auto* diagnose = app.add_subcommand("diagnose", "structural and stability checks");
  auto* diag_pair = diagnose->add_subcommand("pair", "triangular-factor report for a pair");
  diag_pair->add_option("--in", in, "pair JSON")->required();
  diag_pair->add_option("--out", out, "report JSON (stdout if omitted)");
  auto* diag_inst = diagnose->add_subcommand("instability", "reflected-complement contrast");
  diag_inst->add_option("--n", n, "support length")->check(CLI::Range(4, 4096));
  diag_inst->add_option("--seed", seed, "PRNG seed");
  diag_inst->add_option("--grid", grid, "residual grid (0 = default)");
  diag_inst->add_option("--out", out, "CSV (stdout if omitted)");
  diag_inst->add_option("--errors", errors_out, "per-entry error CSV");
  auto* diag_lip = diagnose->add_subcommand("lipschitz", "transform-side estimates");
  diag_lip->add_option("--n", n, "support length");
  diag_lip->add_option("--seed", seed, "PRNG seed");
  diag_lip->add_option("--trials", trials, "number of random pairs");

  auto* bench = app.add_subcommand("bench", "time both inverse solvers");
  bench->add_option("--min", min_n, "smallest n (power of two)");
  bench->add_option("--max", max_n, "largest n (power of two)");
  bench->add_option("--reps", reps, "repetitions per size")->check(CLI::Range(1, 99));
  bench->add_option("--seed", seed, "PRNG seed");
  bench->add_option("--out", out, "CSV (stdout if omitted)");
  bench->add_flag("--no-check", no_check, "skip the layer/fast output cross-check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*forward) return run_forward(in, out, method);
    if (*invert) {
      if (method == "naive") method = "fast";
      return run_invert(in, out, method, tol, leaf);
    }
    if (*complete) return run_complete(in, out, all_out);
    if (*flip) return run_flip(in, out);
    if (*qsp_solve) return run_qsp(target, out);
    if (*gqsp_solve) return run_gqsp(target, out);
    if (*diag_pair) return run_diagnose_pair(in, out);
    if (*diag_inst) return run_diagnose_instability(n, seed, grid, out, errors_out);
    if (*diag_lip) return run_diagnose_lipschitz(n, seed, trials);
    if (*bench) return run_bench(min_n, max_n, reps, seed, out, !no_check);
    std::cerr << app.help();
    return 2;
  } catch (const Error& e) {
    log(LogLevel::error, e.what());
    std::cout << json{{"error", e.what()}, {"code", e.code}}.dump() << '\n';
    return e.code;
  } catch (const std::exception& e) {
    log(LogLevel::error, e.what());
    std::cout << json{{"error", e.what()}, {"code", 3}}.dump() << '\n';
    return 3;
  }
}
