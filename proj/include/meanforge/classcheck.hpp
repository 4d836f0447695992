#ifndef MEANFORGE_CLASSCHECK_HPP
#define MEANFORGE_CLASSCHECK_HPP

#include <functional>
#include <string>
#include <vector>

#include "meanforge/quadrature.hpp"

/// Numerical membership tests for the classical function classes:
/// completely monotonic (CM), CM of k-th order, logarithmically
/// completely monotonic, Bernstein, and Stieltjes.  The derivative
/// conditions are tested through alternating forward differences,
/// which is the standard finite surrogate; orders are capped at 8 in
/// double precision.
namespace meanforge::classcheck {

struct Interval {
  double lo;
  double hi;
};

struct FunctionHandle {
  std::string name;
  std::function<double(double)> evaluator;
  Interval domain{0.0, 1e9};
  /// optional closed-form derivative (order m, point t); empty when the
  /// handle only supports evaluation
  std::function<double(int, double)> derivative;
};

struct Witness {
  double t = 0.0;
  int order = 0;
};

struct ClassVerdict {
  std::string class_name;
  std::string function_name;
  int order_tested = 0;
  std::vector<double> grid;
  bool pass = false;
  /// set when the worst violation is within the rounding noise floor,
  /// in which case pass is not revoked into a hard fail
  bool inconclusive = false;
  double worst_margin = 0.0;   // scaled by the function magnitude
  double margin_tolerance = 0.0;
  Witness witness;
};

/// default margin tolerance: 1e-9 x function scale
inline constexpr double kDefaultMarginTol = 1e-9;

/// Tests (-1)^k Delta_step^k f(t) >= -tol for k = 0..max_order on the
/// grid; when the handle carries exact derivatives those are tested as
/// well (scaled per order).
ClassVerdict cm_check(const FunctionHandle& f, int max_order,
                      const std::vector<double>& grid, double step,
                      double margin_tol = kDefaultMarginTol);

/// f >= 0 on the grid plus cm_check of the first difference quotient.
ClassVerdict bernstein_check(const FunctionHandle& f, int max_order,
                             const std::vector<double>& grid, double step,
                             double margin_tol = kDefaultMarginTol);

/// cm_check applied to ln f for orders k = 1..max_order.
ClassVerdict lcm_check(const FunctionHandle& f, int max_order,
                       const std::vector<double>& grid, double step,
                       double margin_tol = kDefaultMarginTol);

/// CM of k-th order: cm_check of the k-th difference quotient.
ClassVerdict cm_order_check(const FunctionHandle& f, int k, int max_order,
                            const std::vector<double>& grid, double step,
                            double margin_tol = kDefaultMarginTol);

/// Stieltjes membership of h_alpha for alpha in (0,1): density
/// nonnegativity on a u-grid plus representation residuals at five real
/// points.  Negative alpha is rejected (the claim there is Bernstein).
ClassVerdict stieltjes_density_check(double alpha,
                                     const quad::QuadConfig& cfg = {});

/// One corpus row: the handle, the class claim to test, and whether the
/// claim is expected to hold (negative controls set expect_pass=false).
struct CorpusEntry {
  FunctionHandle handle;
  std::string class_name;  // cm | bernstein | lcm | cm-order-1
  bool expect_pass = true;
};

/// The standard claims corpus: every shifted mean the library covers,
/// the h/H families, reciprocal-of-Bernstein members, and the canonical
/// negative controls.
std::vector<CorpusEntry> standard_corpus();

std::vector<ClassVerdict> run_corpus(const std::vector<CorpusEntry>& corpus,
                                     int max_order, double step,
                                     double margin_tol = kDefaultMarginTol);

}  // namespace meanforge::classcheck

#endif  // MEANFORGE_CLASSCHECK_HPP
