#include "meanforge/calculus.hpp"

#include <cmath>
#include <stdexcept>

namespace meanforge::calculus {

AlphaPoly::AlphaPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
  trim();
}

AlphaPoly AlphaPoly::constant(BigInt c) {
  AlphaPoly p;
  p.c_.push_back(std::move(c));
  p.trim();
  return p;
}

void AlphaPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

AlphaPoly AlphaPoly::operator+(const AlphaPoly& o) const {
  std::vector<BigInt> out(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < c_.size()) out[i] += c_[i];
    if (i < o.c_.size()) out[i] += o.c_[i];
  }
  return AlphaPoly(std::move(out));
}

AlphaPoly AlphaPoly::operator*(const AlphaPoly& o) const {
  if (c_.empty() || o.c_.empty()) return AlphaPoly{};
  std::vector<BigInt> out(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      out[i + j] += c_[i] * o.c_[j];
    }
  }
  return AlphaPoly(std::move(out));
}

AlphaPoly AlphaPoly::scaled(const BigInt& k) const {
  std::vector<BigInt> out(c_);
  for (auto& v : out) v *= k;
  return AlphaPoly(std::move(out));
}

AlphaPoly AlphaPoly::times_linear(long ell) const {
  // (alpha + ell) * this
  std::vector<BigInt> out(c_.size() + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    out[i + 1] += c_[i];
    out[i] += c_[i] * ell;
  }
  return AlphaPoly(std::move(out));
}

double AlphaPoly::eval(double alpha) const {
  double acc = 0.0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * alpha + c_[i].convert_to<double>();
  }
  return acc;
}

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt num = 1;
  for (int i = 0; i < k; ++i) num *= n - i;
  return num / factorial(k);
}

void require_mk(int m, int k) {
  if (m < 1) throw std::domain_error("coefficient order m must be >= 1");
  if (k < 0 || k >= m) {
    throw std::domain_error("coefficient index k must satisfy 0 <= k < m");
  }
}

}  // namespace

AlphaPoly a_coeff(int m, int k) {
  require_mk(m, k);
  AlphaPoly p =
      AlphaPoly::constant(factorial(k) * binom(m, k) * binom(m - 1, k));
  for (long ell = 0; ell <= m - k - 1; ++ell) p = p.times_linear(ell);
  return p;
}

AlphaPoly b_coeff(int m, int k) {
  require_mk(m, k);
  AlphaPoly p =
      AlphaPoly::constant(factorial(k) * binom(m + 1, k) * binom(m - 1, k));
  for (long ell = 1; ell <= m - k - 1; ++ell) p = p.times_linear(ell);
  return p;
}

CoeffTable a_table(int m) {
  CoeffTable t;
  t.m = m;
  t.entries.reserve(m);
  for (int k = 0; k < m; ++k) t.entries.push_back(a_coeff(m, k));
  return t;
}

CoeffTable b_table(int m) {
  CoeffTable t;
  t.m = m;
  t.entries.reserve(m);
  for (int k = 0; k < m; ++k) t.entries.push_back(b_coeff(m, k));
  return t;
}

std::optional<std::pair<int, int>> a_recurrence_check(int m_max) {
  for (int m = 1; m <= m_max; ++m) {
    const CoeffTable cur = a_table(m);
    const CoeffTable nxt = a_table(m + 1);
    for (int k = 0; k <= m; ++k) {
      AlphaPoly expect;
      if (k == 0) {
        // a_{m+1,0} = (m+alpha) a_{m,0}
        expect = cur.entries[0].times_linear(m);
      } else if (k == m) {
        // a_{m+1,m} = (m+1) a_{m,m-1}
        expect = cur.entries[m - 1].scaled(m + 1);
      } else {
        expect = cur.entries[k].times_linear(m - k) +
                 cur.entries[k - 1].scaled(2 * m - k + 1);
      }
      if (!(expect == nxt.entries[k])) return std::make_pair(m, k);
    }
  }
  return std::nullopt;
}

namespace {

// eagerly built read-only coefficient caches; orders above the cache
// fall back to direct construction
constexpr int kCachedOrders = 16;

const std::vector<CoeffTable>& cached_a() {
  static const std::vector<CoeffTable> tables = [] {
    std::vector<CoeffTable> t;
    for (int m = 1; m <= kCachedOrders; ++m) t.push_back(a_table(m));
    return t;
  }();
  return tables;
}

const std::vector<CoeffTable>& cached_b() {
  static const std::vector<CoeffTable> tables = [] {
    std::vector<CoeffTable> t;
    for (int m = 1; m <= kCachedOrders; ++m) t.push_back(b_table(m));
    return t;
  }();
  return tables;
}

double poly_sum_in_t(const CoeffTable& table, double alpha, double t) {
  double acc = 0.0;
  for (int k = table.m; k-- > 0;) {
    acc = acc * t + table.entries[k].eval(alpha);
  }
  return acc;
}

void require_positive_t(double t) {
  if (!(t > 0.0)) throw std::domain_error("derivative requires t > 0");
}

}  // namespace

double h_deriv(double alpha, int m, double t) {
  require_positive_t(t);
  if (m < 0) throw std::domain_error("derivative order must be >= 0");
  const double base = std::pow(1.0 + 1.0 / t, alpha);
  if (m == 0) return base;
  const CoeffTable& table = m <= kCachedOrders ? cached_a()[m - 1] : a_table(m);
  const double sum = poly_sum_in_t(table, alpha, t);
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  return sign * base * sum / std::pow(t * (1.0 + t), m);
}

double H_deriv(double alpha, int m, double t) {
  require_positive_t(t);
  if (m < 0) throw std::domain_error("derivative order must be >= 0");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::domain_error("H_deriv requires alpha in (0,1)");
  }
  if (m == 0) {
    return h_deriv(alpha, 0, t) / alpha -
           h_deriv(alpha - 1.0, 0, t) / (alpha - 1.0);
  }
  const CoeffTable& table = m <= kCachedOrders ? cached_b()[m - 1] : b_table(m);
  const double sum = poly_sum_in_t(table, alpha, t);
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const double base = std::pow(1.0 + 1.0 / t, alpha);
  return sign * base * sum / (std::pow(t, m) * std::pow(1.0 + t, m + 1));
}

double g_prime(const means::WeightedPair& w, double t) {
  double x = w.pair.x, y = w.pair.y, lam = w.lambda;
  if (x == y) return 1.0;  // G(t) = x + t
  if (y > x) {
    std::swap(x, y);
    lam = 1.0 - lam;
  }
  if (!(t > -y)) {
    throw std::domain_error("g_prime requires t > -min(x,y)");
  }
  return lam * (1.0 - lam) * H_deriv(lam, 0, (y + t) / (x - y));
}

}  // namespace meanforge::calculus
