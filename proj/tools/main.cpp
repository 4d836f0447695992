// meanforge command-line tool: closed-form means, representation
// kernels, residual verification sweeps, function-class checks, and
// contour reconstruction.  Tables go to stdout (CSV or JSON rows),
// diagnostics to stderr.  Exit codes: 0 ok, 1 verification failure,
// 2 usage/domain error, 3 quadrature non-convergence.
#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "cli_support.hpp"
#include "meanforge/classcheck.hpp"
#include "meanforge/contour.hpp"
#include "meanforge/kernels.hpp"
#include "meanforge/means.hpp"
#include "meanforge/representations.hpp"
#include "meanforge/sweep.hpp"

using namespace meanforge;
using cli::CliConfig;
using cli::OutputFormat;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct VerifyArgs {
  std::string identity;
  std::string x = "2", y = "1", lambda = "0.5", alpha = "0.5";
  std::string s = "1", t = "0";
  std::vector<std::string> z;
  std::vector<std::string> tuples;
  bool parallel = false;
};

std::vector<means::EvalPoint> parse_points(const std::vector<std::string>& z) {
  std::vector<means::EvalPoint> pts;
  if (z.empty()) {
    pts.emplace_back(1.0);
    return pts;
  }
  for (const auto& spec : z) {
    const std::complex<double> c = cli::parse_complex(spec);
    if (c.imag() == 0.0) {
      pts.emplace_back(c.real());
    } else {
      pts.emplace_back(c);
    }
  }
  return pts;
}

int emit_reports(const std::vector<repr::ResidualReport>& rows,
                 const CliConfig& cfg) {
  if (cfg.format == OutputFormat::csv) {
    std::printf("%s\n", cli::csv_header().c_str());
    for (const auto& r : rows) std::printf("%s\n", cli::csv_row(r).c_str());
  } else {
    for (const auto& r : rows) std::printf("%s\n", cli::json_row(r).c_str());
  }
  std::size_t passed = 0;
  bool converged = true;
  double worst_rel = 0.0;
  for (const auto& r : rows) {
    if (cli::row_passes(r)) ++passed;
    converged = converged && r.converged;
    worst_rel = std::max(worst_rel, r.rel_residual);
  }
  std::fprintf(stderr, "rows=%zu passed=%zu max_rel_res=%.3g\n", rows.size(),
               passed, worst_rel);
  if (!converged) return 3;
  return passed == rows.size() ? 0 : 1;
}

int run_verify(const VerifyArgs& a, const CliConfig& cfg) {
  const auto xs = cli::parse_range(a.x);
  const auto ys = cli::parse_range(a.y);
  const auto lams = cli::parse_range(a.lambda);
  const auto alphas = cli::parse_range(a.alpha);
  const auto shifts = cli::parse_range(a.s);
  const auto ts = cli::parse_range(a.t);
  const auto zs = parse_points(a.z);

  std::vector<std::function<repr::ResidualReport()>> jobs;
  const quad::QuadConfig& q = cfg.quad;

  if (a.identity == "h-alpha") {
    for (double al : alphas) {
      for (const auto& z : zs) {
        jobs.push_back([=] { return repr::h_alpha_repr(al, z, q); });
      }
    }
  } else if (a.identity == "weighted-geometric") {
    for (double x : xs)
      for (double y : ys)
        for (double lam : lams)
          for (const auto& z : zs) {
            jobs.push_back([=] {
              return repr::weighted_geometric_repr({{x, y}, lam}, z, q);
            });
          }
  } else if (a.identity == "am-gm") {
    for (double x : xs)
      for (double y : ys)
        for (double lam : lams) {
          jobs.push_back(
              [=] { return repr::weighted_am_gm_diff({{x, y}, lam}, q); });
        }
  } else if (a.identity == "log-mean") {
    for (double x : xs)
      for (double y : ys)
        for (const auto& z : zs) {
          jobs.push_back([=] { return repr::log_mean_repr({x, y}, z, q); });
        }
  } else if (a.identity == "a-l") {
    for (double x : xs)
      for (double y : ys) {
        jobs.push_back([=] { return repr::a_l_diff({x, y}, q); });
      }
  } else if (a.identity == "geometric-rho") {
    for (double x : xs)
      for (double y : ys)
        for (const auto& z : zs) {
          jobs.push_back(
              [=] { return repr::geometric_repr_rho({x, y}, z, q); });
        }
  } else if (a.identity == "harmonic") {
    for (double x : xs)
      for (double y : ys)
        for (double sh : shifts) {
          for (int part = 0; part < 3; ++part) {
            jobs.push_back([=] {
              return repr::harmonic_repr({x, y}, sh, q)[part];
            });
          }
        }
  } else if (a.identity == "gn") {
    std::vector<std::string> tuples = a.tuples;
    if (tuples.empty()) tuples.push_back("1,2,4");
    for (const auto& spec : tuples) {
      const auto vals = cli::parse_range(spec);
      for (const auto& z : zs) {
        jobs.push_back([=] {
          return repr::gn_repr(means::PositiveTuple(vals), z, q);
        });
      }
    }
  } else if (a.identity == "log-integral") {
    for (double x : xs)
      for (double y : ys) {
        jobs.push_back(
            [=] { return repr::log_mean_integral_form({x, y}, q); });
      }
  } else if (a.identity == "identric") {
    for (double x : xs)
      for (double y : ys)
        for (double t : ts) {
          jobs.push_back([=] { return repr::identric_closed({x, y}, t, q); });
        }
  } else {
    throw std::domain_error("unknown identity: " + a.identity);
  }

  std::vector<std::size_t> idx(jobs.size());
  std::iota(idx.begin(), idx.end(), 0);
  const auto rows = sweep<repr::ResidualReport>(
      idx, [&](std::size_t i) { return jobs[i](); },
      a.parallel ? ExecPolicy::parallel : ExecPolicy::serial);
  return emit_reports(rows, cfg);
}

int run_mean(const std::string& kind, double x, double y, double r, double s,
             double lambda, const std::string& tuple, const std::string& z) {
  const std::complex<double> zc = cli::parse_complex(z);
  std::complex<double> value;
  if (kind == "stolarsky") {
    value = means::stolarsky({r, s}, {x, y});
  } else if (kind == "gn") {
    const means::PositiveTuple a(cli::parse_range(tuple));
    value = means::gn(a, zc.imag() == 0.0 ? means::EvalPoint{zc.real()}
                                          : means::EvalPoint{zc});
  } else if (kind == "weighted-geometric") {
    value = means::weighted_geometric(
        {{x, y}, lambda}, zc.imag() == 0.0 ? means::EvalPoint{zc.real()}
                                           : means::EvalPoint{zc});
  } else if (kind == "weighted-arithmetic") {
    value = means::weighted_arithmetic({{x, y}, lambda});
  } else if (kind == "power") {
    value = means::mean(means::MeanKind::power, {x, y}, r);
  } else {
    value = means::mean(means::mean_kind_from_string(kind), {x, y});
  }
  std::printf("%s\n", cli::format_complex(value).c_str());
  return 0;
}

int run_kernel(const std::string& name, double u, double s, double lambda,
               double alpha, double x, double y, const std::string& mode,
               const CliConfig& cfg) {
  kernels::KernelValue kv;
  char buf[160];
  if (name == "q") {
    kv.value = kernels::q_weight(u);
    std::snprintf(buf, sizeof(buf), "u=%.10g", u);
  } else if (name == "rho") {
    kv = kernels::rho(s, cfg.quad);
    std::snprintf(buf, sizeof(buf), "s=%.10g", s);
  } else if (name == "rho-alt") {
    kv = kernels::rho_alt(s, cfg.quad);
    std::snprintf(buf, sizeof(buf), "s=%.10g", s);
  } else if (name == "f") {
    kv = kernels::f_kernel(lambda, s, cfg.quad);
    std::snprintf(buf, sizeof(buf), "lambda=%.10g;s=%.10g", lambda, s);
  } else if (name == "q-lambda") {
    kv.value = kernels::q_lambda(lambda, u);
    std::snprintf(buf, sizeof(buf), "lambda=%.10g;u=%.10g", lambda, u);
  } else if (name == "p") {
    if (mode == "both") {
      kv = kernels::p_kernel_checked({x, y}, s, cfg.quad);
    } else {
      kv = kernels::p_kernel({x, y}, s, cfg.quad,
                             mode == "direct" ? kernels::PMode::direct
                                              : kernels::PMode::fast);
    }
    std::snprintf(buf, sizeof(buf), "x=%.10g;y=%.10g;s=%.10g;mode=%s", x, y, s,
                  mode.c_str());
  } else if (name == "h-density") {
    kv.value = kernels::h_density(alpha, u);
    std::snprintf(buf, sizeof(buf), "alpha=%.10g;u=%.10g", alpha, u);
  } else {
    throw std::domain_error("unknown kernel: " + name);
  }
  if (cfg.format == OutputFormat::csv) {
    std::printf("kernel,params,value,err_est,evals,converged\n");
    std::printf("%s,%s,%s,%s,%ld,%d\n", name.c_str(), buf,
                cli::format_number(kv.value).c_str(),
                cli::format_number(kv.err_estimate).c_str(), kv.evals,
                kv.converged ? 1 : 0);
  } else {
    std::printf(
        "{\"kernel\":\"%s\",\"params\":\"%s\",\"value\":%s,\"err_est\":%s,"
        "\"evals\":%ld,\"converged\":%s}\n",
        name.c_str(), buf, cli::format_number(kv.value).c_str(),
        cli::format_number(kv.err_estimate).c_str(), kv.evals,
        kv.converged ? "true" : "false");
  }
  return kv.converged ? 0 : 3;
}

void print_verdict_header(const CliConfig& cfg) {
  if (cfg.format == OutputFormat::csv) {
    std::printf(
        "class,function,order,step,pass,inconclusive,worst_margin,"
        "witness_t,witness_order\n");
  }
}

void print_verdict(const classcheck::ClassVerdict& v, double step,
                   const CliConfig& cfg) {
  if (cfg.format == OutputFormat::csv) {
    std::printf("%s,%s,%d,%s,%d,%d,%s,%s,%d\n", v.class_name.c_str(),
                v.function_name.c_str(), v.order_tested,
                cli::format_number(step).c_str(), v.pass ? 1 : 0,
                v.inconclusive ? 1 : 0,
                cli::format_number(v.worst_margin).c_str(),
                cli::format_number(v.witness.t).c_str(), v.witness.order);
  } else {
    std::printf(
        "{\"class\":\"%s\",\"function\":\"%s\",\"order\":%d,\"step\":%s,"
        "\"pass\":%s,\"inconclusive\":%s,\"worst_margin\":%s,"
        "\"witness_t\":%s,\"witness_order\":%d}\n",
        v.class_name.c_str(), v.function_name.c_str(), v.order_tested,
        cli::format_number(step).c_str(), v.pass ? "true" : "false",
        v.inconclusive ? "true" : "false",
        cli::format_number(v.worst_margin).c_str(),
        cli::format_number(v.witness.t).c_str(), v.witness.order);
  }
}

classcheck::FunctionHandle builtin_handle(const std::string& name) {
  classcheck::FunctionHandle h;
  h.name = name;
  h.domain = {0.0, 1e12};
  if (name == "exp-neg") {
    h.evaluator = [](double t) { return std::exp(-t); };
  } else if (name == "exp") {
    h.evaluator = [](double t) { return std::exp(t); };
  } else if (name == "identity") {
    h.evaluator = [](double t) { return t; };
  } else if (name == "recip-linear") {
    h.evaluator = [](double t) { return 1.0 / (1.0 + t); };
  } else if (name == "h-alpha-half") {
    h.evaluator = [](double t) { return std::sqrt(1.0 + 1.0 / t); };
  } else {
    throw std::domain_error("unknown builtin function: " + name);
  }
  return h;
}

int run_classcheck(const std::string& fname, const std::string& cls,
                   double alpha, int order, double step,
                   const CliConfig& cfg) {
  print_verdict_header(cfg);
  if (fname.empty() && cls != "stieltjes") {
    // full corpus; exit 0 only when every verdict matches expectation
    const auto corpus = classcheck::standard_corpus();
    const auto verdicts = classcheck::run_corpus(corpus, order, step);
    bool ok = true;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      print_verdict(verdicts[i], step, cfg);
      ok = ok && (verdicts[i].pass == corpus[i].expect_pass);
    }
    return ok ? 0 : 1;
  }
  classcheck::ClassVerdict verdict;
  if (cls == "stieltjes") {
    verdict = classcheck::stieltjes_density_check(alpha, cfg.quad);
  } else {
    const auto handle = builtin_handle(fname);
    const std::vector<double> grid{0.3, 0.7, 1.2, 2.0, 3.5, 5.0};
    if (cls == "cm") {
      verdict = classcheck::cm_check(handle, order, grid, step);
    } else if (cls == "bernstein") {
      verdict = classcheck::bernstein_check(handle, order, grid, step);
    } else if (cls == "lcm") {
      verdict = classcheck::lcm_check(handle, order, grid, step);
    } else if (cls == "cm-order-1") {
      verdict = classcheck::cm_order_check(handle, 1, order, grid, step);
    } else {
      throw std::domain_error("unknown class: " + cls);
    }
  }
  print_verdict(verdict, step, cfg);
  return verdict.pass ? 0 : 1;
}

int run_contour(double alpha, const std::string& z, const std::string& eps,
                const std::string& rs, const CliConfig& cfg) {
  const std::complex<double> zc = cli::parse_complex(z);
  std::vector<repr::ResidualReport> rows;
  for (double e : cli::parse_range(eps)) {
    for (double r : cli::parse_range(rs)) {
      const auto rep =
          contour::cauchy_contour_eval(alpha, zc, {e, r}, cfg.quad);
      rows.push_back(rep.report);
      std::fprintf(stderr,
                   "eps=%.1e r=%.1e |small_arc|=%.6e large_arc_dev=%.6e\n", e,
                   r, std::abs(rep.pieces.small_arc),
                   std::abs(rep.pieces.large_arc /
                                std::complex<double>(0.0, 2.0 * kPi) -
                            1.0));
    }
  }
  return emit_reports(rows, cfg);
}

}  // namespace

int main(int argc, char** argv) {
  CliConfig cfg;
  try {
    cfg = cli::config_from_environment();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  CLI::App app{"Stolarsky-family means and their integral representations"};
  app.require_subcommand(1);

  std::string format = cfg.format == OutputFormat::json ? "json" : "csv";
  app.add_option("--format", format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--abs-tol", cfg.quad.abs_tol,
                 "quadrature absolute tolerance");
  app.add_option("--rel-tol", cfg.quad.rel_tol,
                 "quadrature relative tolerance");
  app.add_option("--max-depth", cfg.quad.max_depth, "refinement depth limit");
  app.add_option("--max-evals", cfg.quad.max_evals, "integrand eval budget");
  app.add_option("--threads", cfg.threads, "worker threads for grid sweeps");

  // mean
  auto* mean_cmd = app.add_subcommand("mean", "evaluate a closed-form mean");
  std::string kind;
  double mx = 2, my = 1, mr = 0, ms = 0, mlam = 0.5;
  std::string mtuple = "1,2,4", mz = "0";
  mean_cmd->add_option("--kind", kind, "mean kind")->required();
  mean_cmd->add_option("--x", mx);
  mean_cmd->add_option("--y", my);
  mean_cmd->add_option("--r", mr);
  mean_cmd->add_option("--s", ms);
  mean_cmd->add_option("--lambda", mlam);
  mean_cmd->add_option("--a", mtuple, "tuple entries, comma separated");
  mean_cmd->add_option("--t,--z", mz, "shift t or complex point re,im");

  // verify and grid share the argument block
  VerifyArgs va;
  auto add_verify_options = [&](CLI::App* cmd) {
    cmd->add_option("identity", va.identity, "identity to verify")
        ->required();
    cmd->add_option("--x", va.x,
                    "x values (v | a,b,c | lo:hi:n | log:lo:hi:n)");
    cmd->add_option("--y", va.y, "y values");
    cmd->add_option("--lambda", va.lambda, "lambda values");
    cmd->add_option("--alpha", va.alpha, "alpha values");
    cmd->add_option("--s", va.s, "shift values (harmonic)");
    cmd->add_option("--t", va.t, "shift values (identric)");
    cmd->add_option("--z", va.z, "evaluation point re[,im]; repeatable");
    cmd->add_option("--a", va.tuples, "tuple spec for gn; repeatable");
  };
  auto* verify_cmd =
      app.add_subcommand("verify", "residual-check one identity");
  add_verify_options(verify_cmd);
  auto* grid_cmd = app.add_subcommand(
      "grid", "parallel residual sweep over a parameter grid");
  add_verify_options(grid_cmd);

  // kernel
  auto* kernel_cmd = app.add_subcommand("kernel", "evaluate a density kernel");
  std::string kname, kmode = "fast";
  double ku = 0.5, ks = 1.0, klam = 0.5, kalpha = 0.5, kx = 2, ky = 1;
  kernel_cmd
      ->add_option("--name", kname, "q|rho|rho-alt|f|q-lambda|p|h-density")
      ->required();
  kernel_cmd->add_option("--u", ku);
  kernel_cmd->add_option("--s", ks);
  kernel_cmd->add_option("--lambda", klam);
  kernel_cmd->add_option("--alpha", kalpha);
  kernel_cmd->add_option("--x", kx);
  kernel_cmd->add_option("--y", ky);
  kernel_cmd->add_option("--mode", kmode, "p-kernel mode: fast|direct|both")
      ->check(CLI::IsMember({"fast", "direct", "both"}));

  // classcheck
  auto* class_cmd =
      app.add_subcommand("classcheck", "function-class membership tests");
  std::string cfname, cclass;
  double calpha = 0.5, cstep = 1e-2;
  int corder = 8;
  class_cmd->add_option("--f", cfname,
                        "builtin function (omit to run the full corpus)");
  class_cmd->add_option("--class", cclass,
                        "cm|bernstein|lcm|cm-order-1|stieltjes");
  class_cmd->add_option("--alpha", calpha, "alpha for stieltjes");
  class_cmd->add_option("--order", corder, "difference order cap");
  class_cmd->add_option("--step", cstep, "difference step");

  // contour
  auto* contour_cmd =
      app.add_subcommand("contour", "Cauchy contour reconstruction");
  double ct_alpha = 0.5;
  std::string ct_z = "1", ct_eps = "1e-2,1e-3,1e-4", ct_r = "1e2,1e3,1e4";
  contour_cmd->add_option("--alpha", ct_alpha);
  contour_cmd->add_option("--z", ct_z, "target point re[,im]");
  contour_cmd->add_option("--epsilon", ct_eps, "epsilon schedule");
  contour_cmd->add_option("--r", ct_r, "outer radius schedule");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  }

  cfg.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
  set_sweep_threads(cfg.threads);

  try {
    if (mean_cmd->parsed()) {
      return run_mean(kind, mx, my, mr, ms, mlam, mtuple, mz);
    }
    if (verify_cmd->parsed()) {
      va.parallel = false;
      return run_verify(va, cfg);
    }
    if (grid_cmd->parsed()) {
      va.parallel = true;
      return run_verify(va, cfg);
    }
    if (kernel_cmd->parsed()) {
      return run_kernel(kname, ku, ks, klam, kalpha, kx, ky, kmode, cfg);
    }
    if (class_cmd->parsed()) {
      return run_classcheck(cfname, cclass, calpha, corder, cstep, cfg);
    }
    if (contour_cmd->parsed()) {
      return run_contour(ct_alpha, ct_z, ct_eps, ct_r, cfg);
    }
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "argument error: %s\n", e.what());
    return 2;
  } catch (const std::runtime_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
