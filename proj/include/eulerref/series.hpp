#pragma once

#include <functional>

#include "eulerref/numeric.hpp"
#include "eulerref/poly.hpp"

namespace eulerref {

inline constexpr int kDefaultGuard = 5;

/// Truncated power series in (x, y, z). An order is the number of retained
/// terms per variable: exponents 0..order-1.
class TriSeries {
 public:
  TriSeries(int x_order, int y_order, int z_order);

  int x_order() const { return nx_; }
  int y_order() const { return ny_; }
  int z_order() const { return nz_; }

  /// Coefficient of x^i y^j z^l; zero outside the retained box.
  Ratio coeff(int i, int j, int l) const;
  Ratio& at(int i, int j, int l);

  TriSeries& operator+=(const TriSeries& o);
  TriSeries& operator-=(const TriSeries& o);
  /// Multiply by x^a y^b z^c. Negative shifts require the dropped
  /// coefficients to be zero (ConsistencyError otherwise).
  TriSeries shifted(int a, int b, int c) const;
  /// d/dz; the top z-term is lost to truncation.
  TriSeries dz() const;
  /// Same coefficients in a smaller box.
  TriSeries restricted(int x_order, int y_order, int z_order) const;

  bool operator==(const TriSeries&) const = default;

 private:
  std::size_t idx(int i, int j, int l) const {
    return (static_cast<std::size_t>(i) * ny_ + j) * nz_ + l;
  }
  bool inside(int i, int j, int l) const {
    return i >= 0 && i < nx_ && j >= 0 && j < ny_ && l >= 0 && l < nz_;
  }
  int nx_, ny_, nz_;
  std::vector<Ratio> c_;
};

/// sum_d <n,d>_k x^d via (1-x)^n sum_j j^(k-1) (j+1)^(n-k) x^j, with the
/// j-sum cut at n-1+guard. Throws ConsistencyError if a guard coefficient
/// (degrees n .. n-1+guard) fails to vanish.
Poly gf_nk(int n, int k, int guard = kDefaultGuard);

/// sum_k <n,d>_k y^k from the alternating sum of geometric quotients
/// ((j+1)^n - (jy)^n) / (j+1-jy), each expanded exactly.
Poly gf_nd(int n, int d);

/// sum_{d,k} <n,d>_k x^d y^k, coefficient (d, k) at BiPoly::at(d, k).
BiPoly gf_n(int n, int guard = kDefaultGuard);

/// a_n(x) = sum_d <n,d> x^(d+1) via (1-x)^(n+1) sum_j j^n x^j with the
/// guard check.
Poly a_poly(int n, int guard = kDefaultGuard);

/// A(x, z) = sum_{n>=1} a_n(x) z^n / n! (no n = 0 term), stored in a
/// TriSeries with y_order 1.
TriSeries egf_A(int x_order, int z_order);

/// Source of <n,d>_k used to build B(x,y,z); lets tests inject corruption.
using RefinedSource = std::function<Count(int n, int d, int k)>;

/// Exact coefficientwise check of
///   (1/y - 1) dB/dz + (1 - x) B = (1 - y) + A(x,z)/x - y A(x, yz)
/// inside the (x_order, y_order, z_order) box. Throws InvalidArgument if an
/// order is < 1.
bool pde_check(int x_order, int y_order, int z_order, const RefinedSource& source = {});

/// |B_trunc(x,y,z) - (1/theta) int_theta^{theta^y} dt / (x - t^(1-1/y))|
/// with theta = exp(z (1-x) / (1/y - 1)). The integral uses adaptive
/// Simpson to tol/10.
double gfall_numeric_check(double x, double y, double z, int n_max, double tol);

/// Adaptive Simpson on [a, b] (either orientation) to absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol);

}  // namespace eulerref
