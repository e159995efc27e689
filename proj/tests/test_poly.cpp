#include <doctest.h>

#include "eulerref/errors.hpp"
#include "eulerref/poly.hpp"

using namespace eulerref;

TEST_CASE("construction trims trailing zeros") {
  CHECK(Poly{1, 2, 0, 0}.degree() == 1);
  CHECK(Poly{0, 0}.is_zero());
  CHECK(Poly().degree() == Poly::kZeroDegree);
  CHECK(Poly::monomial(Ratio(3), 2) == Poly{0, 0, 3});
}

TEST_CASE("arithmetic") {
  const Poly a{1, 1}, b{1, -1};
  CHECK(a * b == Poly{1, 0, -1});
  CHECK(a + b == Poly{2});
  CHECK(a - a == Poly());
  CHECK(a * Ratio(1, 2) == Poly(std::vector<Ratio>{Ratio(1, 2), Ratio(1, 2)}));
  CHECK(Poly{1, 4, 1}.derivative() == Poly{4, 2});
  CHECK(Poly{1, 4, 1}.eval(Ratio(1)) == 6);
  CHECK(Poly{1, 4, 1}.eval(-1.0) == doctest::Approx(-2.0));
  CHECK(Poly{1, 4, 1}.sign_at(Ratio(-1)) == -1);
}

TEST_CASE("shifts and valuation") {
  CHECK(Poly{1, 2}.shift(2) == Poly{0, 0, 1, 2});
  CHECK(Poly{0, 0, 1, 2}.shift(-2) == Poly{1, 2});
  CHECK_THROWS_AS((Poly{1, 2}.shift(-1)), ConsistencyError);
  CHECK(Poly{0, 0, 5}.x_adic_valuation() == 2);
  CHECK(Poly().x_adic_valuation() == 0);
  CHECK(Poly{1, 2, 3}.truncate(2) == Poly{1, 2});
}

TEST_CASE("division and gcd") {
  const Poly p{-1, 0, 1};  // x^2 - 1
  const auto [q, r] = p.divmod(Poly{-1, 1});
  CHECK(q == Poly{1, 1});
  CHECK(r.is_zero());
  CHECK_THROWS(p.divmod(Poly()));
  CHECK(gcd(Poly{-1, 0, 1}, Poly{1, 2, 1}) == Poly{1, 1});
  CHECK(gcd(Poly(), Poly()).is_zero());
  CHECK(gcd(Poly{2, 2}, Poly()) == Poly{1, 1});
}

TEST_CASE("primitive keeps signs and clears denominators") {
  const Poly p(std::vector<Ratio>{Ratio(-1, 2), Ratio(3, 4)});
  CHECK(p.primitive() == Poly{-2, 3});
  CHECK(Poly{0, -6, 4}.primitive() == Poly{0, -3, 2});
  CHECK(Poly{4, 8}.monic() == Poly(std::vector<Ratio>{Ratio(1, 2), Ratio(1)}));
}

TEST_CASE("helpers") {
  CHECK(one_minus_x_pow(3) == Poly{1, -3, 3, -1});
  CHECK(one_minus_x_pow(0) == Poly{1});
  CHECK(Poly{1, -2, 1}.to_string() == "1 - 2x + x^2");
  BiPoly b(2, 3);
  b.at(0, 1) = 1;
  b.at(1, 2) = 1;
  CHECK(b.x_degree() == 1);
  CHECK(b.y_degree() == 2);
  CHECK(b.eval(Ratio(1), Ratio(1)) == 2);
}
