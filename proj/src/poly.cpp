#include "eulerref/poly.hpp"

#include <sstream>

#include "eulerref/errors.hpp"

namespace eulerref {

Poly::Poly(std::vector<Ratio> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

Poly Poly::monomial(const Ratio& c, int exponent) {
  std::vector<Ratio> v(static_cast<std::size_t>(exponent) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::from_counts(const std::vector<Count>& coeffs) {
  std::vector<Ratio> v(coeffs.begin(), coeffs.end());
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Ratio Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

Ratio Poly::eval(const Ratio& x) const {
  Ratio acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Poly::eval(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

int Poly::sign_at(const Ratio& x) const { return sgn(eval(x)); }

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Ratio> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Poly Poly::shift(int k) const {
  if (is_zero() || k == 0) return *this;
  if (k > 0) {
    std::vector<Ratio> v(static_cast<std::size_t>(k));
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
  }
  const std::size_t drop = static_cast<std::size_t>(-k);
  for (std::size_t i = 0; i < drop && i < c_.size(); ++i) {
    if (c_[i] != 0) throw ConsistencyError("negative shift would drop a nonzero coefficient");
  }
  if (drop >= c_.size()) return {};
  return Poly(std::vector<Ratio>(c_.begin() + static_cast<long>(drop), c_.end()));
}

Poly Poly::truncate(int order) const {
  if (order <= 0) return {};
  if (order >= static_cast<int>(c_.size())) return *this;
  return Poly(std::vector<Ratio>(c_.begin(), c_.begin() + order));
}

int Poly::x_adic_valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) return static_cast<int>(i);
  }
  return 0;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw InvalidArgument("polynomial division by zero");
  if (degree() < divisor.degree()) return {Poly{}, *this};
  std::vector<Ratio> rem = c_;
  std::vector<Ratio> quot(static_cast<std::size_t>(degree() - divisor.degree()) + 1);
  const int dd = divisor.degree();
  const Ratio& lead = divisor.leading();
  for (int i = degree(); i >= dd; --i) {
    if (rem[i] == 0) continue;
    Ratio f = rem[i] / lead;
    quot[i - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * divisor.c_[j];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::primitive() const {
  if (is_zero()) return {};
  // Clear denominators, then divide by the content; scaling is positive.
  Count lcm_den = 1;
  for (const auto& c : c_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Count> ints(c_.size());
  Count content = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    Ratio scaled = c_[i] * lcm_den;
    ints[i] = scaled.get_num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints[i].get_mpz_t());
  }
  std::vector<Ratio> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = Ratio(ints[i] / content);
  return Poly(std::move(out));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Poly out = *this;
  Ratio lead = leading();
  for (auto& c : out.c_) c /= lead;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Ratio& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Ratio> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(out));
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Ratio mag = abs(c_[i]);
    os << (c_[i] < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = r.primitive();
  }
  return a.monic();
}

Poly one_minus_x_pow(int n) {
  std::vector<Ratio> v(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    Ratio b(binomial(n, i));
    v[i] = (i % 2 == 0) ? b : Ratio(-b);
  }
  return Poly(std::move(v));
}

BiPoly::BiPoly(int x_terms, int y_terms)
    : nx_(x_terms), ny_(y_terms), c_(static_cast<std::size_t>(x_terms) * y_terms) {}

int BiPoly::x_degree() const {
  for (int i = nx_ - 1; i >= 0; --i)
    for (int j = 0; j < ny_; ++j)
      if (at(i, j) != 0) return i;
  return -1;
}

int BiPoly::y_degree() const {
  for (int j = ny_ - 1; j >= 0; --j)
    for (int i = 0; i < nx_; ++i)
      if (at(i, j) != 0) return j;
  return -1;
}

Ratio BiPoly::eval(const Ratio& x, const Ratio& y) const {
  Ratio acc = 0;
  Ratio xp = 1;
  for (int i = 0; i < nx_; ++i) {
    Ratio yp = 1;
    for (int j = 0; j < ny_; ++j) {
      acc += at(i, j) * xp * yp;
      yp *= y;
    }
    xp *= x;
  }
  return acc;
}

}  // namespace eulerref
