#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "eulerref/numeric.hpp"

namespace eulerref {

/// Dense univariate polynomial with exact rational coefficients. The
/// coefficient vector never carries trailing zeros, so the zero polynomial
/// is the empty vector and has degree -1.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  explicit Poly(std::vector<Ratio> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly monomial(const Ratio& c, int exponent);
  static Poly from_counts(const std::vector<Count>& coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of x^i; zero beyond the degree.
  Ratio coeff(int i) const;
  const std::vector<Ratio>& coeffs() const { return c_; }
  const Ratio& leading() const { return c_.back(); }

  Ratio eval(const Ratio& x) const;
  double eval(double x) const;
  /// Sign of p(x) in {-1, 0, 1}.
  int sign_at(const Ratio& x) const;

  Poly derivative() const;
  /// Multiply by x^k (k >= 0) or divide by x^-k when every dropped
  /// coefficient is zero (throws ConsistencyError otherwise).
  Poly shift(int k) const;
  /// Keep only exponents < order.
  Poly truncate(int order) const;
  /// Largest power of x dividing this polynomial; 0 for the zero polynomial.
  int x_adic_valuation() const;

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;

  /// Positive rational multiple with coprime integer coefficients. Signs
  /// are preserved, so Sturm sign counts are unaffected.
  Poly primitive() const;
  /// Monic version; zero stays zero.
  Poly monic() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Ratio& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Ratio& s) { return a *= s; }
  friend Poly operator*(const Ratio& s, Poly a) { return a *= s; }
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Ratio> c_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

/// (1 - x)^n expanded.
Poly one_minus_x_pow(int n);

/// Dense bivariate polynomial in (x, y) with rational coefficients.
class BiPoly {
 public:
  BiPoly(int x_terms, int y_terms);
  Ratio& at(int i, int j) { return c_[idx(i, j)]; }
  const Ratio& at(int i, int j) const { return c_[idx(i, j)]; }
  int x_terms() const { return nx_; }
  int y_terms() const { return ny_; }
  int x_degree() const;
  int y_degree() const;
  Ratio eval(const Ratio& x, const Ratio& y) const;
  bool operator==(const BiPoly& o) const = default;

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * ny_ + j; }
  int nx_, ny_;
  std::vector<Ratio> c_;
};

}  // namespace eulerref
