#include "octslice/taylor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace octslice {

MultiIndex::MultiIndex(std::vector<int> a) : a_(std::move(a)) {
  for (int v : a_)
    if (v < 0) throw std::invalid_argument("multi-index entries must be nonnegative");
}

MultiIndex MultiIndex::unit(std::size_t n, std::size_t l) {
  if (l >= n) throw std::out_of_range("multi-index slot out of range");
  std::vector<int> a(n, 0);
  a[l] = 1;
  return MultiIndex(std::move(a));
}

int MultiIndex::order() const { return std::accumulate(a_.begin(), a_.end(), 0); }

bool MultiIndex::le(const MultiIndex& b) const {
  if (dim() != b.dim()) throw std::invalid_argument("multi-index dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i)
    if (a_[i] > b.a_[i]) return false;
  return true;
}

double MultiIndex::factorial() const {
  double f = 1.0;
  for (int v : a_) f *= std::tgamma(v + 1.0);
  return f;
}

MultiIndex MultiIndex::operator-(const MultiIndex& b) const {
  if (!b.le(*this)) throw std::invalid_argument("multi-index difference would be negative");
  std::vector<int> d(dim());
  for (std::size_t i = 0; i < dim(); ++i) d[i] = a_[i] - b.a_[i];
  return MultiIndex(std::move(d));
}

MultiIndex MultiIndex::operator+(const MultiIndex& b) const {
  if (dim() != b.dim()) throw std::invalid_argument("multi-index dimension mismatch");
  std::vector<int> s(dim());
  for (std::size_t i = 0; i < dim(); ++i) s[i] = a_[i] + b.a_[i];
  return MultiIndex(std::move(s));
}

double binomial(const MultiIndex& alpha, const MultiIndex& beta) {
  if (!beta.le(alpha)) return 0.0;
  double b = 1.0;
  for (std::size_t i = 0; i < alpha.dim(); ++i) {
    const int n = alpha[i], k = beta[i];
    double c = 1.0;
    for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
    b *= c;
  }
  return b;
}

std::vector<MultiIndex> sub_indices(const MultiIndex& alpha) {
  std::vector<MultiIndex> out;
  std::vector<int> cur(alpha.dim(), 0);
  for (;;) {
    out.emplace_back(cur);
    std::size_t i = 0;
    while (i < cur.size() && cur[i] == alpha[i]) cur[i++] = 0;
    if (i == cur.size()) break;
    ++cur[i];
  }
  return out;
}

std::vector<MultiIndex> indices_up_to(std::size_t n, int degree) {
  std::vector<MultiIndex> out;
  for (const MultiIndex& a : sub_indices(MultiIndex(std::vector<int>(n, degree))))
    if (a.order() <= degree) out.push_back(a);
  std::stable_sort(out.begin(), out.end(), [](const MultiIndex& a, const MultiIndex& b) {
    return a.order() != b.order() ? a.order() < b.order() : a < b;
  });
  return out;
}

Mat8 operator_power(const std::vector<Octonion>& q, const MultiIndex& beta) {
  if (q.size() != beta.dim()) throw std::invalid_argument("multi-index dimension mismatch");
  Mat8 m = Mat8::Identity();
  for (std::size_t l = 0; l < q.size(); ++l) {
    if (beta[l] == 0) continue;
    const Mat8 lq = left_mult_matrix(q[l]).matrix();
    for (int k = 0; k < beta[l]; ++k) m = m * lq;
  }
  return m;
}

Mat8 star_power_matrix(const SlicePoint& q, const SlicePoint& p, const MultiIndex& alpha) {
  if (q.dim() != p.dim() || q.dim() != alpha.dim()) throw std::invalid_argument("dimension mismatch");
  const auto qv = q.to_octonions();
  const auto pv = p.to_octonions();
  Mat8 sum = Mat8::Zero();
  for (const MultiIndex& beta : sub_indices(alpha)) {
    const MultiIndex rest = alpha - beta;
    const double sign = (rest.order() % 2 == 0) ? 1.0 : -1.0;
    sum += sign * binomial(alpha, beta) * operator_power(qv, beta) * operator_power(pv, rest);
  }
  return sum;
}

Octonion star_power_apply(const SlicePoint& q, const SlicePoint& p, const MultiIndex& alpha, const Octonion& a) {
  return from_vec(star_power_matrix(q, p, alpha) * to_vec(a));
}

Octonion series_eval(const StarSeries& s, const SlicePoint& q) {
  Octonion out;
  for (const auto& [alpha, a] : s.coeffs) {
    const double c = s.convention == FactorialConvention::divide ? 1.0 / alpha.factorial() : 1.0;
    out += c * star_power_apply(q, s.center, alpha, a);
  }
  return out;
}

std::vector<double> central_stencil_weights(int k, int m, double h) {
  if (k < 0 || m < 0 || k > 2 * m) throw std::invalid_argument("stencil cannot resolve this derivative order");
  // Fornberg's recursion on the nodes -m..m (unit spacing), then rescale.
  const int n = 2 * m + 1;
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) x[static_cast<std::size_t>(j)] = j - m;
  std::vector<std::vector<double>> c(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(k + 1), 0.0));
  double c1 = 1.0, c4 = x[0];
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const auto iu = static_cast<std::size_t>(i);
    const int mn = std::min(i, k);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[iu];
    for (int j = 0; j < i; ++j) {
      const auto ju = static_cast<std::size_t>(j);
      const double c3 = x[iu] - x[ju];
      c2 *= c3;
      if (j == i - 1) {
        for (int s = mn; s >= 1; --s) {
          const auto su = static_cast<std::size_t>(s);
          c[iu][su] = c1 * (s * c[iu - 1][su - 1] - c5 * c[iu - 1][su]) / c2;
        }
        c[iu][0] = -c1 * c5 * c[iu - 1][0] / c2;
      }
      for (int s = mn; s >= 1; --s) {
        const auto su = static_cast<std::size_t>(s);
        c[ju][su] = (c4 * c[ju][su] - s * c[ju][su - 1]) / c3;
      }
      c[ju][0] = c4 * c[ju][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(static_cast<std::size_t>(n));
  const double scale = std::pow(h, -k);
  for (std::size_t j = 0; j < w.size(); ++j) w[j] = c[j][static_cast<std::size_t>(k)] * scale;
  return w;
}

StarSeries taylor_coeffs(const SliceFunction& f, const SlicePoint& p, int max_degree, double h) {
  if (max_degree < 0) throw std::invalid_argument("degree must be nonnegative");
  if (!(h > 0.0)) throw DomainError("step h must be positive");
  const std::size_t n = p.dim();
  const int m = std::max(1, (max_degree + 1) / 2);
  const std::size_t width = static_cast<std::size_t>(2 * m + 1);

  std::vector<std::vector<double>> weights;
  for (int k = 0; k <= max_degree; ++k) weights.push_back(central_stencil_weights(k, m, h));

  // Grid values, flattened with variable 0 fastest.
  std::size_t total = 1;
  for (std::size_t l = 0; l < n; ++l) total *= width;
  std::vector<Octonion> values(total);
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    RealVector x = p.x();
    std::size_t rem = flat;
    for (std::size_t l = 0; l < n; ++l) {
      idx[l] = rem % width;
      rem /= width;
      x[l] += h * (static_cast<double>(idx[l]) - m);
    }
    values[flat] = f(SlicePoint(std::move(x), p.y(), p.unit()));
  }

  StarSeries s{p, {}, max_degree, FactorialConvention::divide};
  for (const MultiIndex& alpha : indices_up_to(n, max_degree)) {
    Octonion acc;
    for (std::size_t flat = 0; flat < total; ++flat) {
      double w = 1.0;
      std::size_t rem = flat;
      for (std::size_t l = 0; l < n && w != 0.0; ++l) {
        w *= weights[static_cast<std::size_t>(alpha[l])][rem % width];
        rem /= width;
      }
      if (w != 0.0) acc += w * values[flat];
    }
    s.coeffs.emplace(alpha, acc);
  }
  return s;
}

nlohmann::json to_json(const StarSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [alpha, a] : s.coeffs) coeffs.push_back({{"alpha", alpha.values()}, {"octonion", a}});
  return {{"center", to_json(s.center)},
          {"convention", s.convention == FactorialConvention::divide ? "divide" : "none"},
          {"max_degree", s.max_degree},
          {"coeffs", coeffs}};
}

StarSeries star_series_from_json(const nlohmann::json& j) {
  const auto conv = j.at("convention").get<std::string>();
  if (conv != "divide" && conv != "none") throw std::invalid_argument("unknown factorial convention: " + conv);
  StarSeries s{slice_point_from_json(j.at("center")), {}, j.at("max_degree").get<int>(),
               conv == "divide" ? FactorialConvention::divide : FactorialConvention::none};
  for (const auto& c : j.at("coeffs"))
    s.coeffs.emplace(MultiIndex(c.at("alpha").get<std::vector<int>>()), c.at("octonion").get<Octonion>());
  return s;
}

MkBound bound_check_mk(const Octonion& r, const Octonion& s, const ImaginaryUnit& I, const ImaginaryUnit& J) {
  const Octonion w = r * s.conj();
  const Octonion wim = w.im();
  const Octonion off_slice = wim - scalar_product(wim, I.value()) * I.value();
  if (off_slice.norm() > 1e-10 * w.norm()) throw DomainError("r s̄ not on slice C_I");

  const double plus = (r + I.value() * s).norm();
  const double minus = (r - I.value() * s).norm();
  MkBound b{};
  b.lower = std::min(plus, minus);
  b.upper = std::max(plus, minus);
  b.value = (r + J.value() * s).norm();
  const double tol = 1e-12 * (r.norm() + s.norm());
  b.holds = b.lower - tol <= b.value && b.value <= b.upper + tol;
  if (!r.is_zero()) {
    const Octonion js_rinv = (J.value() * s) * inv(r);
    b.t_J = js_rinv.re();
    b.rjs_residual = std::abs(b.value - (Octonion(1.0) + js_rinv).norm() * r.norm());
  }
  return b;
}

MlqBound bound_check_mlq(const SlicePoint& p, const SlicePoint& q, const MultiIndex& alpha, const Octonion& a) {
  const ImaginaryUnit& I = p.unit();
  const SlicePoint plus(q.x(), q.y(), I);
  RealVector ny = q.y();
  for (double& v : ny) v = -v;
  const SlicePoint minus(q.x(), ny, I);
  const double vp = star_power_apply(plus, p, alpha, a).norm();
  const double vm = star_power_apply(minus, p, alpha, a).norm();
  MlqBound b{};
  b.lower = std::min(vp, vm);
  b.upper = std::max(vp, vm);
  b.value = star_power_apply(q, p, alpha, a).norm();
  const double tol = 1e-12 * std::max(1.0, b.upper);
  b.holds = b.lower - tol <= b.value && b.value <= b.upper + tol;
  return b;
}

}  // namespace octslice
