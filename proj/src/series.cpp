#include "eulerref/series.hpp"

#include <cmath>
#include <string>

#include "eulerref/errors.hpp"
#include "eulerref/exact_core.hpp"

namespace eulerref {

namespace {

void require_guard(int guard) {
  if (guard < 1) throw InvalidArgument("guard must be >= 1");
}

Ratio signed_binomial(int n, int i) {
  Ratio b(binomial(n, i));
  return (i % 2 == 0) ? b : Ratio(-b);
}

// sum_{r=0}^{n-1} (j+1)^(n-1-r) j^r y^r = ((j+1)^n - (jy)^n) / (j+1-jy)
Poly geometric_quotient(int n, int j) {
  std::vector<Ratio> c(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    c[r] = Ratio(ipow(j + 1, static_cast<unsigned long>(n - 1 - r)) * ipow(j, static_cast<unsigned long>(r)));
  }
  return Poly(std::move(c));
}

double simpson_step(const std::function<double(double)>& f, double a, double fa, double b, double fb,
                    double m, double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step(f, a, fa, m, fm, lm, flm, left, tol / 2.0, depth - 1) +
         simpson_step(f, m, fm, b, fb, rm, frm, right, tol / 2.0, depth - 1);
}

}  // namespace

TriSeries::TriSeries(int x_order, int y_order, int z_order)
    : nx_(x_order), ny_(y_order), nz_(z_order) {
  if (x_order < 0 || y_order < 0 || z_order < 0) throw InvalidArgument("series orders must be >= 0");
  c_.resize(static_cast<std::size_t>(nx_) * ny_ * nz_);
}

Ratio TriSeries::coeff(int i, int j, int l) const { return inside(i, j, l) ? c_[idx(i, j, l)] : Ratio(0); }

Ratio& TriSeries::at(int i, int j, int l) {
  if (!inside(i, j, l)) throw InvalidArgument("series index outside truncation box");
  return c_[idx(i, j, l)];
}

TriSeries& TriSeries::operator+=(const TriSeries& o) {
  if (nx_ != o.nx_ || ny_ != o.ny_ || nz_ != o.nz_) throw InvalidArgument("series box mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

TriSeries& TriSeries::operator-=(const TriSeries& o) {
  if (nx_ != o.nx_ || ny_ != o.ny_ || nz_ != o.nz_) throw InvalidArgument("series box mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

TriSeries TriSeries::shifted(int a, int b, int c) const {
  TriSeries out(nx_, ny_, nz_);
  for (int i = 0; i < nx_; ++i)
    for (int j = 0; j < ny_; ++j)
      for (int l = 0; l < nz_; ++l) {
        const Ratio& v = c_[idx(i, j, l)];
        if (v == 0) continue;
        if (i + a < 0 || j + b < 0 || l + c < 0) {
          throw ConsistencyError("negative series shift drops a nonzero coefficient");
        }
        if (out.inside(i + a, j + b, l + c)) out.at(i + a, j + b, l + c) = v;
      }
  return out;
}

TriSeries TriSeries::dz() const {
  TriSeries out(nx_, ny_, nz_);
  for (int i = 0; i < nx_; ++i)
    for (int j = 0; j < ny_; ++j)
      for (int l = 1; l < nz_; ++l) out.at(i, j, l - 1) = c_[idx(i, j, l)] * l;
  return out;
}

TriSeries TriSeries::restricted(int x_order, int y_order, int z_order) const {
  TriSeries out(x_order, y_order, z_order);
  for (int i = 0; i < x_order; ++i)
    for (int j = 0; j < y_order; ++j)
      for (int l = 0; l < z_order; ++l) out.at(i, j, l) = coeff(i, j, l);
  return out;
}

Poly gf_nk(int n, int k, int guard) {
  if (n < 1 || k < 1 || k > n) throw InvalidArgument("gf_nk needs 1 <= k <= n");
  require_guard(guard);
  const int top = n - 1 + guard;
  std::vector<Ratio> s(static_cast<std::size_t>(top) + 1);
  for (int j = 0; j <= top; ++j) {
    s[j] = Ratio(ipow(j, static_cast<unsigned long>(k - 1)) * ipow(j + 1, static_cast<unsigned long>(n - k)));
  }
  const Poly product = one_minus_x_pow(n) * Poly(std::move(s));
  for (int i = n; i <= top; ++i) {
    if (product.coeff(i) != 0) {
      throw ConsistencyError("gf_nk guard coefficient x^" + std::to_string(i) + " is nonzero");
    }
  }
  return product.truncate(n);
}

Poly gf_nd(int n, int d) {
  if (n < 1) throw InvalidArgument("gf_nd needs n >= 1");
  if (d < 0 || d > n) return {};
  Poly sum;
  for (int j = 0; j <= d; ++j) sum += signed_binomial(n, d - j) * geometric_quotient(n, j);
  return sum.shift(1);
}

BiPoly gf_n(int n, int guard) {
  if (n < 1) throw InvalidArgument("gf_n needs n >= 1");
  require_guard(guard);
  const int top = n - 1 + guard;
  // inner[j] = y * ((j+1)^n - (jy)^n) / (j+1-jy)
  std::vector<Poly> inner;
  inner.reserve(static_cast<std::size_t>(top) + 1);
  for (int j = 0; j <= top; ++j) inner.push_back(geometric_quotient(n, j).shift(1));

  BiPoly out(n, n + 1);
  for (int i = 0; i <= top; ++i) {
    Poly coeff_x;  // coefficient of x^i in (1-x)^n * sum_j inner[j] x^j
    for (int a = 0; a <= std::min(i, n); ++a) coeff_x += signed_binomial(n, a) * inner[i - a];
    if (i >= n) {
      if (!coeff_x.is_zero()) {
        throw ConsistencyError("gf_n guard coefficient x^" + std::to_string(i) + " is nonzero");
      }
      continue;
    }
    for (int t = 0; t <= coeff_x.degree(); ++t) out.at(i, t) = coeff_x.coeff(t);
  }
  return out;
}

Poly a_poly(int n, int guard) {
  if (n < 1) throw InvalidArgument("a_poly needs n >= 1");
  require_guard(guard);
  const int top = n + guard;
  std::vector<Ratio> s(static_cast<std::size_t>(top) + 1);
  for (int j = 0; j <= top; ++j) s[j] = Ratio(ipow(j, static_cast<unsigned long>(n)));
  const Poly product = one_minus_x_pow(n + 1) * Poly(std::move(s));
  for (int i = n + 1; i <= top; ++i) {
    if (product.coeff(i) != 0) {
      throw ConsistencyError("a_n guard coefficient x^" + std::to_string(i) + " is nonzero");
    }
  }
  return product.truncate(n + 1);
}

TriSeries egf_A(int x_order, int z_order) {
  if (x_order < 1 || z_order < 1) throw InvalidArgument("egf_A orders must be >= 1");
  TriSeries a(x_order, 1, z_order);
  for (int n = 1; n < z_order; ++n) {
    const Count nf = factorial(n);
    for (int d = 0; d < n && d + 1 < x_order; ++d) a.at(d + 1, 0, n) = make_ratio(eulerian(n, d), nf);
  }
  return a;
}

bool pde_check(int x_order, int y_order, int z_order, const RefinedSource& source) {
  if (x_order < 1 || y_order < 1 || z_order < 1) {
    throw InvalidArgument("pde_check needs every truncation order >= 1");
  }
  const RefinedSource counts = source ? source : [](int n, int d, int k) { return refined_first(n, d, k); };

  // B needs one extra y-term (the 1/y shift) and one extra z-term (d/dz).
  const int bx = x_order, by = y_order + 1, bz = z_order + 1;
  TriSeries b(bx, by, bz);
  for (int n = 1; n < bz; ++n) {
    const Count nf = factorial(n);
    for (int d = 0; d < std::min(n, bx); ++d)
      for (int k = 1; k <= n && k < by; ++k) b.at(d, k, n) = make_ratio(counts(n, d, k), nf);
  }

  const TriSeries bdz = b.dz();
  TriSeries lhs = bdz.shifted(0, -1, 0);
  lhs -= bdz;
  lhs += b;
  lhs -= b.shifted(1, 0, 0);
  const TriSeries left = lhs.restricted(x_order, y_order, z_order);

  TriSeries right(x_order, y_order, z_order);
  right.at(0, 0, 0) += 1;
  if (y_order > 1) right.at(0, 1, 0) -= 1;
  const TriSeries a = egf_A(x_order + 1, z_order);
  for (int i = 0; i <= x_order; ++i)
    for (int l = 0; l < z_order; ++l) {
      const Ratio v = a.coeff(i, 0, l);
      if (v == 0) continue;
      if (i == 0) throw ConsistencyError("A(x,z) has a term without a factor of x");
      // A(x, z) / x
      if (i - 1 < x_order) right.at(i - 1, 0, l) += v;
      // -y A(x, yz): x^i z^l -> x^i y^(l+1) z^l
      if (i < x_order && l + 1 < y_order) right.at(i, l + 1, l) -= v;
    }
  return left == right;
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, fa, b, fb, m, fm, whole, tol, 50);
}

double gfall_numeric_check(double x, double y, double z, int n_max, double tol) {
  if (!(std::fabs(x) > 0.0 && std::fabs(x) < 1.0)) throw InvalidArgument("need 0 < |x| < 1");
  if (!(y > 0.0 && y < 1.0)) throw InvalidArgument("need 0 < y < 1");
  if (n_max < 1) throw InvalidArgument("need n_max >= 1");
  if (!(tol > 0.0)) throw InvalidArgument("need tol > 0");
  if (z == 0.0) return 0.0;

  // |x|^d |y|^k-weighted mass of S_n, times |z|^n / n!
  auto level = [&](int n, double xs, double ys) {
    auto t = refined_table(n);
    double s = 0.0;
    double xp = 1.0;
    for (int d = 0; d < n; ++d) {
      double yp = ys;
      for (int k = 1; k <= n; ++k) {
        s += t->at(d, k).get_d() * xp * yp;
        yp *= ys;
      }
      xp *= xs;
    }
    return s * std::pow(z, n) / factorial(n).get_d();
  };

  const double next = std::fabs(level(n_max + 1, std::fabs(x), y));
  if (next >= tol / 10.0) {
    throw DomainError("truncation term at n = " + std::to_string(n_max + 1) + " is " + std::to_string(next) +
                      ", not below tol/10; increase n_max or shrink |z|");
  }
  double series = 0.0;
  for (int n = 1; n <= n_max; ++n) series += level(n, x, y);

  const double alpha = (1.0 - x) / (1.0 / y - 1.0);
  const double theta = std::exp(alpha * z);
  const double lo = theta, hi = std::pow(theta, y);
  const double e = 1.0 - 1.0 / y;
  auto denom = [&](double t) { return x - std::pow(t, e); };
  // t^e is monotone, so the denominator's extreme values sit at the ends.
  const double ga = denom(lo), gb = denom(hi);
  if (ga * gb <= 0.0 || std::min(std::fabs(ga), std::fabs(gb)) < 1e-9) {
    throw DomainError("integrand x - t^(1-1/y) vanishes on the integration path");
  }
  const double integral = adaptive_simpson([&](double t) { return 1.0 / denom(t); }, lo, hi, tol / 10.0);
  return std::fabs(series - integral / theta);
}

}  // namespace eulerref
