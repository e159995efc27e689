#include <doctest.h>

#include "eulerref/errors.hpp"
#include "eulerref/exact_core.hpp"
#include "eulerref/real_roots.hpp"

using namespace eulerref;

TEST_CASE("c_poly") {
  CHECK(c_poly(0, 2) == Poly{1, 1});
  CHECK(c_poly(1, 3).eval(Ratio(1)) == 24);
  CHECK(c_poly(0, 0) == Poly{1});
  CHECK(c_poly(1, 0) == Poly{0, 1});
  for (int u = 0; u <= 6; ++u) {
    const Poly c = c_poly(u, 0);
    CHECK(c.degree() == u);
    CHECK(c.leading() == 1);
  }
  CHECK_THROWS_AS(c_poly(20, 20), ResourceLimit);
  CHECK_THROWS_AS(c_poly(-1, 2), InvalidArgument);
}

TEST_CASE("h_numerator") {
  HRep h = h_numerator(1, 3);
  CHECK(h.numerator == Poly{0, 8, 14, 2});
  CHECK(h.pole_order == 5);
  h = h_numerator(3, 3);
  CHECK(h.numerator == Poly{0, 8, 160, 384, 160, 8});
  CHECK(h.pole_order == 7);
  h = h_numerator(0, 0);
  CHECK(h.numerator == Poly{1});
  CHECK(h.pole_order == 1);
  for (int n = 1; n <= 12; ++n)
    for (int u = 0; u < n; ++u) CHECK(h_numerator(u, n - 1 - u).numerator == c_poly(u, n - 1 - u));
}

TEST_CASE("Sturm counts") {
  auto v = sturm_distinct_real_roots(Poly{1, 4, 1});
  CHECK(v.distinct_real_roots == 2);
  CHECK(v.verdict);
  v = sturm_distinct_real_roots(Poly{1, 0, 1});
  CHECK(v.distinct_real_roots == 0);
  CHECK_FALSE(v.verdict);
  v = sturm_distinct_real_roots(Poly{0, 0, 2});
  CHECK(v.distinct_real_roots == 1);
  CHECK_FALSE(v.squarefree);
  CHECK_FALSE(v.verdict);
  v = sturm_distinct_real_roots(Poly{7});
  CHECK(v.degree == 0);
  CHECK(v.verdict);
  CHECK_THROWS_AS(sturm_distinct_real_roots(Poly()), InvalidArgument);

  const Poly c = c_poly(3, 3).shift(-1);
  v = sturm_distinct_real_roots(c);
  CHECK(v.distinct_real_roots == 4);
  const auto roots = isolate_real_roots(c);
  REQUIRE(roots.size() == 4);
  for (const auto& r : roots) CHECK(r.hi <= 0);
}

TEST_CASE("root isolation and refinement") {
  const Poly p = Poly{-2, 1} * Poly{1, 1} * Poly{-1, 3};  // roots 2, -1, 1/3
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 3);
  refine_roots(p, roots, Ratio(1, 1000));
  CHECK(roots[0].lo <= -1);
  CHECK(roots[0].hi >= -1);
  CHECK(roots[1].lo <= Ratio(1, 3));
  CHECK(roots[1].hi >= Ratio(1, 3));
  CHECK(roots[2].lo <= 2);
  CHECK(roots[2].hi >= 2);
}

TEST_CASE("interlacing") {
  CHECK(interlaces_from_left(Poly{0, 1} * Poly{-2, 1}, Poly{-1, 1} * Poly{-3, 1}));
  CHECK_FALSE(interlaces_from_left(Poly{-1, 1} * Poly{-3, 1}, Poly{0, 1} * Poly{-2, 1}));
  CHECK_FALSE(interlaces_from_left(Poly{0, 1} * Poly{-1, 1}, Poly{-2, 1} * Poly{-3, 1}));
  for (int n = 1; n <= 9; ++n)
    for (int u = 0; u < n; ++u) CHECK(tower_interlaces(u, n - 1 - u));
}

TEST_CASE("reverse_descent_poly") {
  CHECK(reverse_descent_poly(Poly{0, 2}, 3) == Poly{0, 2});
  CHECK(reverse_descent_poly(Poly{1, 4, 1}, 3) == Poly{1, 4, 1});
  const Poly p{3, 0, 5, 1};
  CHECK(reverse_descent_poly(reverse_descent_poly(p, 5), 5) == p);
  CHECK_THROWS_AS(reverse_descent_poly(p, 3), InvalidArgument);
}

TEST_CASE("first-fixed verdicts") {
  auto v = check_neggers_first_fixed(5, 2);
  CHECK(v.verdict);
  CHECK(v.distinct_real_roots == 3);
  v = check_neggers_first_fixed(1, 1);
  CHECK(v.degree == 0);
  CHECK(v.verdict);
  for (int n = 1; n <= 14; ++n)
    for (int k = 1; k <= n; ++k) CHECK(check_neggers_first_fixed(n, k).verdict);
}

TEST_CASE("both-fixed polynomials and verdicts") {
  CHECK(both_fixed_descent_poly(4, 1, 3) == Poly{0, 2});
  CHECK(check_neggers_both_fixed(4, 1, 3).verdict);
  CHECK_THROWS_AS(check_neggers_both_fixed(4, 2, 2), InvalidArgument);
  for (int n = 2; n <= 10; ++n)
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l <= n; ++l) {
        if (k == l) continue;
        const auto v = check_neggers_both_fixed(n, k, l);
        CHECK(v.verdict);
        CHECK(check_neggers_both_fixed(n, n + 1 - k, n + 1 - l).verdict);
      }
  // Unreduced, the k > l polynomials pick up a factor x; when the reduced
  // polynomial is divisible by x as well the zero at 0 is repeated.
  CHECK_FALSE(sturm_distinct_real_roots(both_fixed_descent_poly(4, 3, 1)).squarefree);
}
