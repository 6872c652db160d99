#include "runner.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "fdo/coherent.hpp"
#include "fdo/phasespace.hpp"
#include "fdo/potential.hpp"
#include "fdo/schedule.hpp"
#include "fdo/spectral.hpp"
#include "svg.hpp"

namespace fs = std::filesystem;

namespace fdo::cli {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_file_atomic(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("short write to " + tmp.string());
    }
  }
  fs::rename(tmp, path);
}

void parallel_for(int n, const std::function<void(int)>& fn) {
  const int workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::mutex err_mutex;
  std::exception_ptr err;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!err) err = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

void require_resolution(const Grid& grid, const PotentialSpec& spec,
                        double lambda_max) {
  const ResolutionDiagnostics diag = resolution_check(grid, spec, lambda_max, 2.0);
  if (!diag.ok()) {
    std::ostringstream msg;
    msg << "grid cannot resolve lambda_max = " << lambda_max
        << " (frequency headroom " << diag.frequency_headroom
        << ", domain headroom " << diag.domain_headroom << ")";
    throw resolution_error(msg.str());
  }
}

}  // namespace

int worker_count() {
  if (const char* env = std::getenv("FDO_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

void run_spectrum(const RunConfig& cfg, const fs::path& outdir) {
  const Grid grid = build_grid(cfg.grid_half_extent, cfg.grid_points);
  const PotentialSpec spec(cfg.p, cfg.beta);
  if (!cfg.lambdas.empty()) require_resolution(grid, spec, cfg.lambdas.back());
  const SymOperator op = assemble(grid, spec);
  const SpectrumResult spectrum = eigenvalues(op);

  std::ostringstream csv;
  csv << "kind,key,value\n";
  for (std::size_t j = 0; j < spectrum.eigenvalues.size(); ++j) {
    csv << "eigenvalue," << j << "," << num(spectrum.eigenvalues[j]) << "\n";
  }
  for (double lambda : cfg.lambdas) {
    csv << "count_below," << num(lambda) << "," << count_below(op, lambda) << "\n";
  }
  write_file_atomic(outdir / "spectrum.csv", csv.str());

  if (cfg.emit_svg) {
    Series s{"eigenvalue", "#1f77b4", {}};
    for (std::size_t j = 0; j < spectrum.eigenvalues.size(); ++j) {
      s.points.emplace_back(static_cast<double>(j), spectrum.eigenvalues[j]);
    }
    write_file_atomic(outdir / "spectrum.svg",
                      render_svg("spectrum", {s}, false, true));
  }
}

void run_bounds(const RunConfig& cfg, const fs::path& outdir) {
  const Grid grid = build_grid(cfg.grid_half_extent, cfg.grid_points);
  const PotentialSpec spec(cfg.p, cfg.beta);
  if (cfg.lambdas.empty()) throw config_error("lambdas: bounds needs a sweep");
  require_resolution(grid, spec, cfg.lambdas.back());
  const SpectrumResult spectrum = eigenvalues(assemble(grid, spec));

  std::vector<BoundReport> reports(cfg.lambdas.size());
  parallel_for(static_cast<int>(cfg.lambdas.size()), [&](int i) {
    const double lambda = cfg.lambdas[i];
    const ScaleSchedule sched =
        make_schedule(spec, lambda, cfg.a_override, cfg.epsilon_override);
    BoundReport r{};
    r.lambda = lambda;
    r.lower = lower_bound(spec, sched);
    r.upper = upper_bound(spec, sched);
    r.riesz = riesz_mean(spectrum, lambda);
    r.leading = evaluate(leading_term_for(spec), lambda);
    r.riesz_over_leading = r.riesz / r.leading;
    r.lower_over_leading = r.lower / r.leading;
    r.upper_over_leading = r.upper / r.leading;
    reports[i] = r;
  });
  for (const auto& r : reports) {
    if (r.lower > r.upper * (1.0 + 1e-12)) {
      throw numeric_error("bounds: lower bound exceeded upper bound");
    }
    const double slack = 0.005 * r.riesz;
    if (r.riesz < r.lower - slack || r.riesz > r.upper + slack) {
      std::ostringstream msg;
      msg << "bounds: sandwich violated at lambda = " << r.lambda;
      throw numeric_error(msg.str());
    }
  }

  std::ostringstream csv;
  csv << "lambda,lower,riesz,upper,leading,riesz_over_leading,lower_over_leading,"
         "upper_over_leading\n";
  for (const auto& r : reports) {
    csv << num(r.lambda) << "," << num(r.lower) << "," << num(r.riesz) << ","
        << num(r.upper) << "," << num(r.leading) << "," << num(r.riesz_over_leading)
        << "," << num(r.lower_over_leading) << "," << num(r.upper_over_leading)
        << "\n";
  }
  write_file_atomic(outdir / "bounds.csv", csv.str());

  if (cfg.emit_svg) {
    Series lo{"lower", "#2ca02c", {}}, ri{"riesz", "#1f77b4", {}},
        up{"upper", "#d62728", {}};
    for (const auto& r : reports) {
      lo.points.emplace_back(r.lambda, std::max(r.lower, 1e-12));
      ri.points.emplace_back(r.lambda, std::max(r.riesz, 1e-12));
      up.points.emplace_back(r.lambda, std::max(r.upper, 1e-12));
    }
    write_file_atomic(outdir / "bounds.svg",
                      render_svg("Riesz-mean sandwich", {lo, ri, up}, true, true));
  }
}

void run_phasespace(const RunConfig& cfg, const fs::path& outdir) {
  const PotentialSpec spec(cfg.p, cfg.beta);
  if (cfg.lambdas.empty()) throw config_error("lambdas: phasespace needs a sweep");
  struct Row {
    double lambda, quadrant, cosh_value, leading, ratio;
  };
  std::vector<Row> rows(cfg.lambdas.size());
  parallel_for(static_cast<int>(cfg.lambdas.size()), [&](int i) {
    const double lambda = cfg.lambdas[i];
    const PhaseSpaceQuery q(lambda, 1.0, spec);
    Row r{};
    r.lambda = lambda;
    r.quadrant = quadrant_integral(q);
    r.cosh_value = cosh_integral(q);
    r.leading = evaluate(leading_term_for(spec), lambda);
    r.ratio = r.quadrant / r.leading;
    rows[i] = r;
  });

  std::ostringstream csv;
  csv << "lambda,quadrant,cosh,leading,quadrant_over_leading\n";
  for (const auto& r : rows) {
    csv << num(r.lambda) << "," << num(r.quadrant) << "," << num(r.cosh_value) << ","
        << num(r.leading) << "," << num(r.ratio) << "\n";
  }
  write_file_atomic(outdir / "phasespace.csv", csv.str());

  if (cfg.emit_svg) {
    Series s{"quadrant/leading", "#1f77b4", {}};
    for (const auto& r : rows) s.points.emplace_back(r.lambda, r.ratio);
    write_file_atomic(outdir / "phasespace.svg",
                      render_svg("phase-space ratio", {s}, true, false));
  }
}

void run_asymptotics(const RunConfig& cfg, const fs::path& outdir) {
  const PotentialSpec spec(cfg.p, cfg.beta);
  if (cfg.lambdas.size() < 3) {
    throw config_error("lambdas: asymptotics needs at least 3 points");
  }
  std::vector<double> measured(cfg.lambdas.size());
  parallel_for(static_cast<int>(cfg.lambdas.size()), [&](int i) {
    measured[i] =
        quadrant_integral(PhaseSpaceQuery(cfg.lambdas[i], 1.0, spec));
  });
  std::vector<std::pair<double, double>> values;
  for (std::size_t i = 0; i < cfg.lambdas.size(); ++i) {
    values.emplace_back(cfg.lambdas[i], measured[i]);
  }
  const LeadingTerm predictor = leading_term_for(spec);
  const RatioDiagnostics diag = ratio_series(values, predictor);

  std::ostringstream csv;
  csv << "lambda,measured,predicted,ratio,delta,monotone_trend\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    csv << num(values[i].first) << "," << num(values[i].second) << ","
        << num(evaluate(predictor, values[i].first)) << "," << num(diag.ratios[i])
        << "," << num(i == 0 ? 0.0 : diag.deltas[i - 1]) << ","
        << (diag.monotone_trend ? 1 : 0) << "\n";
  }
  write_file_atomic(outdir / "asymptotics.csv", csv.str());

  if (cfg.emit_svg) {
    Series s{"measured/predicted", "#1f77b4", {}};
    for (std::size_t i = 0; i < values.size(); ++i) {
      s.points.emplace_back(values[i].first, diag.ratios[i]);
    }
    write_file_atomic(outdir / "asymptotics.svg",
                      render_svg("ratio convergence", {s}, true, false));
  }
}

void run_verify(const RunConfig& cfg, const fs::path& outdir) {
  struct Check {
    std::string name;
    double value;
    double threshold;
  };
  std::vector<Check> checks;

  // Identity suite on the fixed reference potential: the marginal and
  // potential identities are potential-independent statements, checked where
  // the smoothing exists for every window scale.
  const PotentialSpec reference(2.0, 0.0);
  for (double a : {0.5, 1.0, 4.0}) {
    const GaussianParam g(a);
    const std::string suffix = "_a" + num(a);
    for (const char* kind : {"gaussian", "hermite1"}) {
      const TestFunction psi = kind[0] == 'g' ? TestFunction::gaussian(1.0)
                                              : TestFunction::hermite(1);
      const MarginalResiduals r = marginal_residuals(psi, g, reference);
      checks.push_back({std::string("marginal_rk_") + kind + suffix, r.r_k, 1e-8});
      checks.push_back({std::string("marginal_ry_") + kind + suffix, r.r_y, 1e-8});
      checks.push_back({std::string("marginal_rw_") + kind + suffix, r.r_w, 1e-8});
    }
    checks.push_back({"kinetic_residual" + suffix, kinetic_multiplier_residual(g), 1e-8});
  }

  checks.push_back({"ibp_power_l100_c1_p2", ibp_residual_power(100.0, 1.0, 2.0), 1e-9});
  checks.push_back({"ibp_power_l10_c5_p1", ibp_residual_power(10.0, 5.0, 1.0), 1e-9});
  checks.push_back({"ibp_power_l10_c9.99_p1", ibp_residual_power(10.0, 9.99, 1.0), 1e-9});
  checks.push_back({"ibp_exp_l1e3_c1_L10_r1", ibp_residual_exp(1e3, 1.0, 10.0, 1.0), 1e-9});
  checks.push_back({"ibp_exp_l1e3_c1_L10_r0.5", ibp_residual_exp(1e3, 1.0, 10.0, 0.5), 1e-9});
  checks.push_back(
      {"ibp_exp_l1e4_c10_Le2_r2", ibp_residual_exp(1e4, 10.0, std::exp(2.0), 2.0), 1e-9});

  // Config-driven rows: layer-cake residuals on the computed spectrum and
  // reduction equivalence for the configured potential.
  const Grid grid = build_grid(cfg.grid_half_extent, cfg.grid_points);
  const PotentialSpec spec(cfg.p, cfg.beta);
  if (!cfg.lambdas.empty()) {
    require_resolution(grid, spec, cfg.lambdas.back());
    const SpectrumResult spectrum = eigenvalues(assemble(grid, spec));
    for (double lambda : cfg.lambdas) {
      const double riesz = riesz_mean(spectrum, lambda);
      checks.push_back({"karamata_lambda" + num(lambda),
                        karamata_check(spectrum, lambda) / (1.0 + riesz), 1e-12});
    }
  }
  for (double lambda : {10.0, 100.0}) {
    const PhaseSpaceQuery q(lambda, 1.0, spec);
    const double reduced = quadrant_integral(q);
    const double direct = quadrant_integral_2d(q);
    const double rel =
        std::abs(reduced - direct) / std::max(std::abs(direct), 1e-300);
    checks.push_back({"reduction_lambda" + num(lambda), rel, 1e-6});
  }

  bool all_pass = true;
  std::ostringstream csv;
  csv << "check_name,value,threshold,pass\n";
  for (const auto& c : checks) {
    const bool pass = c.value < c.threshold;
    all_pass = all_pass && pass;
    csv << c.name << "," << num(c.value) << "," << num(c.threshold) << ","
        << (pass ? 1 : 0) << "\n";
  }
  write_file_atomic(outdir / "verify.csv", csv.str());
  if (!all_pass) throw numeric_error("verify: at least one residual check failed");
}

}  // namespace

void run(const RunConfig& cfg) {
  const fs::path outdir(cfg.output_dir);
  fs::create_directories(outdir);
  switch (cfg.command) {
    case Command::spectrum: run_spectrum(cfg, outdir); break;
    case Command::bounds: run_bounds(cfg, outdir); break;
    case Command::phasespace: run_phasespace(cfg, outdir); break;
    case Command::verify: run_verify(cfg, outdir); break;
    case Command::asymptotics: run_asymptotics(cfg, outdir); break;
  }
}

int run_guarded(const RunConfig& cfg) noexcept {
  try {
    run(cfg);
    return kExitOk;
  } catch (const resolution_error& e) {
    std::fprintf(stderr, "resolution failure: %s\n", e.what());
    return kExitResolution;
  } catch (const certificate_error& e) {
    std::fprintf(stderr, "certificate failure: %s\n", e.what());
    return kExitCertificate;
  } catch (const numeric_error& e) {
    std::fprintf(stderr, "numerical contract failure: %s\n", e.what());
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  }
}

}  // namespace fdo::cli
