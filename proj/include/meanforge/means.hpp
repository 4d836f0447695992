#ifndef MEANFORGE_MEANS_HPP
#define MEANFORGE_MEANS_HPP

#include <complex>
#include <string>
#include <vector>

/// Closed-form evaluation of the two-parameter (Stolarsky) mean family,
/// its named special cases, shifted variants M(x+t, y+t), and the
/// multivariate arithmetic/geometric means.  Degenerate parameter
/// regions are routed to series/limit branches (see stolarsky()).
namespace meanforge::means {

struct MeanPair {
  double x;
  double y;
  MeanPair(double x_, double y_);
  double min() const { return x < y ? x : y; }
  double max() const { return x < y ? y : x; }
};

struct StolarskyParams {
  double r;
  double s;
};

struct WeightedPair {
  MeanPair pair;
  double lambda;  // in (0,1)
  WeightedPair(MeanPair p, double lam);
};

/// Sorted tuple of n >= 2 positive reals (input order is irrelevant).
class PositiveTuple {
 public:
  explicit PositiveTuple(std::vector<double> values);
  const std::vector<double>& values() const { return a_; }
  std::size_t n() const { return a_.size(); }
  double min() const { return a_.front(); }

 private:
  std::vector<double> a_;
};

/// Real shift t or complex point z; validated against the branch cut
/// (-inf, -m] of the pair/tuple it is used with.
class EvalPoint {
 public:
  EvalPoint(double t) : z_(t, 0.0), real_(true) {}  // NOLINT(runtime/explicit)
  EvalPoint(std::complex<double> z)                 // NOLINT(runtime/explicit)
      : z_(z), real_(z.imag() == 0.0) {}

  bool is_real() const { return real_; }
  std::complex<double> value() const { return z_; }
  double real_value() const { return z_.real(); }

  /// Throws std::domain_error when the point lies on (-inf, -cut_min].
  void require_off_cut(double cut_min) const;

 private:
  std::complex<double> z_;
  bool real_;
};

enum class MeanKind {
  arithmetic,
  geometric,
  harmonic,
  logarithmic,
  identric,
  power,
};

MeanKind mean_kind_from_string(const std::string& name);

/// Extended mean E(r,s;x,y).  Exact parameter coincidences and
/// near-degenerate windows (relative gap below 1e-8 resp. 1e-5) are
/// routed to limit/series branches; symmetric in (r,s) and (x,y).
double stolarsky(const StolarskyParams& p, const MeanPair& m);

/// Named special cases; `power_r` only applies to MeanKind::power.
double mean(MeanKind kind, const MeanPair& m, double power_r = 1.0);

/// (x+z)^l (y+z)^{1-l} with the principal branch taken per factor.
std::complex<double> weighted_geometric(const WeightedPair& w,
                                        const EvalPoint& p);
double weighted_geometric(const WeightedPair& w, double t);

double weighted_arithmetic(const WeightedPair& w);

/// Geometric mean of the shifted tuple, principal branch per factor.
std::complex<double> gn(const PositiveTuple& a, const EvalPoint& p);
double gn(const PositiveTuple& a, double t);

double an(const PositiveTuple& a);

}  // namespace meanforge::means

#endif  // MEANFORGE_MEANS_HPP
