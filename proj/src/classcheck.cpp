#include "meanforge/classcheck.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "meanforge/calculus.hpp"
#include "meanforge/kernels.hpp"
#include "meanforge/means.hpp"
#include "meanforge/representations.hpp"

namespace meanforge::classcheck {

namespace {

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

// Delta^k g(t) from tabulated values g(t + j step), j = 0..k
double forward_diff(const std::vector<double>& vals, int k) {
  double acc = 0.0;
  for (int j = 0; j <= k; ++j) {
    const double sign = ((k - j) % 2 == 0) ? 1.0 : -1.0;
    acc += sign * binomial(k, j) * vals[j];
  }
  return acc;
}

struct MarginAccum {
  double worst = std::numeric_limits<double>::infinity();
  Witness witness;
  int worst_noise_order = 0;

  void offer(double margin, double t, int order) {
    if (margin < worst) {
      worst = margin;
      witness = {t, order};
      worst_noise_order = order;
    }
  }
};

ClassVerdict seal(std::string class_name, const FunctionHandle& f,
                  int max_order, std::vector<double> grid,
                  const MarginAccum& acc, double margin_tol) {
  ClassVerdict v;
  v.class_name = std::move(class_name);
  v.function_name = f.name;
  v.order_tested = max_order;
  v.grid = std::move(grid);
  v.worst_margin = acc.worst;
  v.margin_tolerance = margin_tol;
  v.witness = acc.witness;
  v.pass = acc.worst >= -margin_tol;
  if (!v.pass) {
    // violations inside the rounding noise floor are inconclusive
    const double noise =
        8.0 * std::ldexp(1.0, acc.worst_noise_order) * 2.2e-16;
    v.inconclusive = std::abs(acc.worst) <= noise;
  }
  return v;
}

void require_grid(const FunctionHandle& f, const std::vector<double>& grid,
                  int steps_needed, double step) {
  if (grid.empty()) throw std::domain_error("empty evaluation grid");
  if (!(step > 0.0)) throw std::domain_error("step must be positive");
  for (double t : grid) {
    if (!(t > f.domain.lo) || !(t + steps_needed * step < f.domain.hi)) {
      throw std::domain_error("grid escapes the function domain");
    }
  }
}

std::vector<double> tabulate(const FunctionHandle& f, double t, double step,
                             int count) {
  std::vector<double> vals(count + 1);
  for (int j = 0; j <= count; ++j) vals[j] = f.evaluator(t + j * step);
  return vals;
}

double table_scale(const std::vector<std::vector<double>>& tables) {
  double s = 1.0;
  for (const auto& row : tables) {
    for (double v : row) s = std::max(s, std::abs(v));
  }
  return s;
}

// exact-derivative margins, each order scaled by its own magnitude
void offer_derivative_margins(const FunctionHandle& f,
                              const std::vector<double>& grid, int k_lo,
                              int k_hi, int deriv_offset, MarginAccum& acc) {
  if (!f.derivative) return;
  for (int k = k_lo; k <= k_hi; ++k) {
    double scale = 1.0;
    std::vector<double> d(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      d[i] = f.derivative(k + deriv_offset, grid[i]);
      scale = std::max(scale, std::abs(d[i]));
    }
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      acc.offer(sign * d[i] / scale, grid[i], k);
    }
  }
}

}  // namespace

ClassVerdict cm_check(const FunctionHandle& f, int max_order,
                      const std::vector<double>& grid, double step,
                      double margin_tol) {
  require_grid(f, grid, max_order, step);
  std::vector<std::vector<double>> tables;
  tables.reserve(grid.size());
  for (double t : grid) tables.push_back(tabulate(f, t, step, max_order));
  const double scale = table_scale(tables);

  MarginAccum acc;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (int k = 0; k <= max_order; ++k) {
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      acc.offer(sign * forward_diff(tables[i], k) / scale, grid[i], k);
    }
  }
  offer_derivative_margins(f, grid, 0, max_order, 0, acc);
  return seal("cm", f, max_order, grid, acc, margin_tol);
}

ClassVerdict bernstein_check(const FunctionHandle& f, int max_order,
                             const std::vector<double>& grid, double step,
                             double margin_tol) {
  require_grid(f, grid, max_order + 1, step);
  std::vector<std::vector<double>> tables;
  tables.reserve(grid.size());
  for (double t : grid) tables.push_back(tabulate(f, t, step, max_order + 1));
  const double scale = table_scale(tables);

  MarginAccum acc;
  // nonnegativity of f itself
  for (std::size_t i = 0; i < grid.size(); ++i) {
    acc.offer(tables[i][0] / scale, grid[i], 0);
  }
  // CM of the first difference quotient: (-1)^k Delta^{k+1} f / step
  double qscale = 1.0;
  for (const auto& row : tables) {
    qscale = std::max(qscale, std::abs((row[1] - row[0]) / step));
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (int k = 0; k <= max_order; ++k) {
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      const double quotient = forward_diff(tables[i], k + 1) / step;
      acc.offer(sign * quotient / qscale, grid[i], k + 1);
    }
  }
  offer_derivative_margins(f, grid, 0, max_order, 1, acc);
  return seal("bernstein", f, max_order, grid, acc, margin_tol);
}

ClassVerdict lcm_check(const FunctionHandle& f, int max_order,
                       const std::vector<double>& grid, double step,
                       double margin_tol) {
  require_grid(f, grid, max_order, step);
  MarginAccum acc;
  std::vector<std::vector<double>> tables;
  for (double t : grid) {
    auto vals = tabulate(f, t, step, max_order);
    for (auto& v : vals) {
      if (!(v > 0.0)) {
        throw std::domain_error("lcm_check requires a strictly positive f");
      }
      v = std::log(v);
    }
    tables.push_back(std::move(vals));
  }
  const double scale = table_scale(tables);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (int k = 1; k <= max_order; ++k) {
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      acc.offer(sign * forward_diff(tables[i], k) / scale, grid[i], k);
    }
  }
  return seal("lcm", f, max_order, grid, acc, margin_tol);
}

ClassVerdict cm_order_check(const FunctionHandle& f, int k, int max_order,
                            const std::vector<double>& grid, double step,
                            double margin_tol) {
  require_grid(f, grid, max_order + k, step);
  const double hk = std::pow(step, k);
  std::vector<std::vector<double>> tables;
  for (double t : grid) tables.push_back(tabulate(f, t, step, max_order + k));

  double qscale = 1.0;
  for (const auto& row : tables) {
    qscale = std::max(qscale, std::abs(forward_diff(row, k) / hk));
  }
  MarginAccum acc;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (int j = 0; j <= max_order; ++j) {
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      const double val = forward_diff(tables[i], j + k) / hk;
      acc.offer(sign * val / qscale, grid[i], j);
    }
  }
  return seal("cm-order-" + std::to_string(k), f, max_order, grid, acc,
              margin_tol);
}

ClassVerdict stieltjes_density_check(double alpha,
                                     const quad::QuadConfig& cfg) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::domain_error(
        "stieltjes_density_check applies to alpha in (0,1); for negative "
        "alpha the membership claim is Bernstein, not Stieltjes");
  }
  ClassVerdict v;
  v.class_name = "stieltjes";
  v.function_name = "h-alpha";
  v.order_tested = 0;
  v.margin_tolerance = kDefaultMarginTol;

  MarginAccum acc;
  for (int i = 1; i <= 49; ++i) {
    const double u = i / 50.0;
    v.grid.push_back(u);
    acc.offer(kernels::h_density(alpha, u), u, 0);
  }
  constexpr double kResTol = 1e-8;
  for (double z : {0.5, 1.0, 2.0, 5.0, 10.0}) {
    const auto rep = repr::h_alpha_repr(alpha, z, cfg);
    acc.offer((kResTol - rep.rel_residual) / kResTol, z, 0);
  }
  v.worst_margin = acc.worst;
  v.witness = acc.witness;
  v.pass = acc.worst >= -v.margin_tolerance;
  return v;
}

std::vector<CorpusEntry> standard_corpus() {
  using means::MeanKind;
  std::vector<CorpusEntry> corpus;

  auto shift_handle = [](std::string name, double x, double y,
                         std::function<double(double)> f) {
    FunctionHandle h;
    h.name = std::move(name);
    h.evaluator = std::move(f);
    h.domain = {-std::min(x, y), 1e12};
    return h;
  };

  corpus.push_back({shift_handle("a-shift(2,1)", 2, 1,
                                 [](double t) { return 1.5 + t; }),
                    "bernstein", true});
  corpus.push_back({shift_handle("h-shift(2,1)", 2, 1,
                                 [](double t) {
                                   return means::mean(MeanKind::harmonic,
                                                      {2 + t, 1 + t});
                                 }),
                    "bernstein", true});
  corpus.push_back({shift_handle("i-shift(2,1)", 2, 1,
                                 [](double t) {
                                   return means::mean(MeanKind::identric,
                                                      {2 + t, 1 + t});
                                 }),
                    "bernstein", true});
  corpus.push_back({shift_handle("i-shift(2,1)", 2, 1,
                                 [](double t) {
                                   return means::mean(MeanKind::identric,
                                                      {2 + t, 1 + t});
                                 }),
                    "cm-order-1", true});
  corpus.push_back({shift_handle("l-shift(2,1)", 2, 1,
                                 [](double t) {
                                   return means::mean(MeanKind::logarithmic,
                                                      {2 + t, 1 + t});
                                 }),
                    "bernstein", true});

  {
    // weighted geometric shift, with the exact derivative chain
    // G^{(m)}(t) = l(1-l) H_l^{(m-1)}((y+t)/(x-y)) / (x-y)^{m-1}
    FunctionHandle g = shift_handle(
        "g-weighted-shift(2,1,1/3)", 2, 1, [](double t) {
          return means::weighted_geometric({{2, 1}, 1.0 / 3.0}, t);
        });
    g.derivative = [](int m, double t) {
      const double lam = 1.0 / 3.0;
      if (m == 0) return means::weighted_geometric({{2, 1}, lam}, t);
      return lam * (1.0 - lam) * calculus::H_deriv(lam, m - 1, 1.0 + t);
    };
    corpus.push_back({g, "bernstein", true});
  }

  corpus.push_back({shift_handle("gn-shift(1,2,4)", 1, 1,
                                 [](double t) {
                                   return means::gn(
                                       means::PositiveTuple({1, 2, 4}), t);
                                 }),
                    "bernstein", true});

  {
    FunctionHandle h;
    h.name = "h-alpha(0.5)";
    h.evaluator = [](double t) { return calculus::h_deriv(0.5, 0, t); };
    h.derivative = [](int m, double t) { return calculus::h_deriv(0.5, m, t); };
    h.domain = {0.0, 1e12};
    corpus.push_back({h, "cm", true});
  }
  {
    FunctionHandle h;
    h.name = "h-alpha(-0.5)";
    h.evaluator = [](double t) { return calculus::h_deriv(-0.5, 0, t); };
    h.derivative = [](int m, double t) {
      return calculus::h_deriv(-0.5, m, t);
    };
    h.domain = {0.0, 1e12};
    corpus.push_back({h, "bernstein", true});
  }
  {
    FunctionHandle h;
    h.name = "H-alpha(0.5)";
    h.evaluator = [](double t) { return calculus::H_deriv(0.5, 0, t); };
    h.derivative = [](int m, double t) { return calculus::H_deriv(0.5, m, t); };
    h.domain = {0.0, 1e12};
    corpus.push_back({h, "cm", true});
  }

  {
    FunctionHandle h;
    h.name = "exp-neg";
    h.evaluator = [](double t) { return std::exp(-t); };
    h.domain = {0.0, 1e12};
    corpus.push_back({h, "cm", true});
    corpus.push_back({h, "bernstein", false});  // f' < 0
  }
  {
    FunctionHandle h;
    h.name = "recip-linear";
    h.evaluator = [](double t) { return 1.0 / (1.0 + t); };
    h.domain = {0.0, 1e12};
    corpus.push_back({h, "lcm", true});
  }
  {
    FunctionHandle h;
    h.name = "recip-g-weighted(2,1,1/3)";
    h.evaluator = [](double t) {
      return 1.0 / means::weighted_geometric({{2, 1}, 1.0 / 3.0}, t);
    };
    h.domain = {-1.0, 1e12};
    corpus.push_back({h, "lcm", true});
  }
  {
    FunctionHandle h;
    h.name = "identity";
    h.evaluator = [](double t) { return t; };
    h.domain = {0.0, 1e12};
    corpus.push_back({h, "cm", false});
  }
  {
    FunctionHandle h;
    h.name = "exp";
    h.evaluator = [](double t) { return std::exp(t); };
    h.domain = {0.0, 1e12};
    corpus.push_back({h, "lcm", false});
  }
  return corpus;
}

std::vector<ClassVerdict> run_corpus(const std::vector<CorpusEntry>& corpus,
                                     int max_order, double step,
                                     double margin_tol) {
  std::vector<ClassVerdict> out;
  out.reserve(corpus.size());
  for (const auto& e : corpus) {
    std::vector<double> grid;
    const double lo = e.handle.domain.lo;
    for (double offset : {0.3, 0.7, 1.2, 2.0, 3.5, 5.0}) {
      grid.push_back(lo + offset);
    }
    if (e.class_name == "cm") {
      out.push_back(cm_check(e.handle, max_order, grid, step, margin_tol));
    } else if (e.class_name == "bernstein") {
      out.push_back(
          bernstein_check(e.handle, max_order, grid, step, margin_tol));
    } else if (e.class_name == "lcm") {
      out.push_back(lcm_check(e.handle, max_order, grid, step, margin_tol));
    } else if (e.class_name == "cm-order-1") {
      out.push_back(
          cm_order_check(e.handle, 1, max_order, grid, step, margin_tol));
    } else {
      throw std::domain_error("unknown corpus class: " + e.class_name);
    }
  }
  return out;
}

}  // namespace meanforge::classcheck
