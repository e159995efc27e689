#include <doctest.h>

#include <set>

#include "brute.hpp"
#include "eulerref/errors.hpp"
#include "eulerref/exact_core.hpp"
#include "eulerref/oracle.hpp"

using namespace eulerref;

TEST_CASE("Perm validation") {
  CHECK_NOTHROW(Perm({2, 3, 1}));
  CHECK_THROWS_AS(Perm({1, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(Perm({0, 1}), InvalidArgument);
  CHECK_THROWS_AS(Perm(std::vector<int>{}), InvalidArgument);
  const Perm p({2, 3, 1});
  CHECK(p(1) == 2);
  CHECK(p.first() == 2);
  CHECK(p.last() == 1);
}

TEST_CASE("descent_count") {
  CHECK(descent_count(Perm::identity(5)) == 0);
  CHECK(descent_count(Perm::reversal(5)) == 4);
  CHECK(descent_count(Perm({2, 3, 1})) == 1);
}

TEST_CASE("transforms") {
  CHECK(reverse_values(Perm({1, 3, 2})) == Perm({3, 1, 2}));
  CHECK(rollback(Perm({2, 3, 1})) == Perm({1, 2, 3}));
  CHECK(reverse_positions(Perm::identity(4)) == Perm::reversal(4));
  CHECK(descent_count(reverse_positions(Perm::identity(6))) == 5);
  const Perm rho = Perm::reversal(4);
  const Perm pi({2, 4, 1, 3});
  CHECK(compose(rho, pi) == reverse_values(pi));
  CHECK(compose(pi, rho) == reverse_positions(pi));
}

TEST_CASE("transform laws hold on all of S_n") {
  for (int n = 1; n <= 7; ++n) {
    brute::each_perm(n, [&](const std::vector<int>& v) {
      const Perm p(v);
      const int des = descent_count(p);
      CHECK(descent_count(reverse_values(p)) == n - 1 - des);
      CHECK(descent_count(reverse_positions(p)) == n - 1 - des);
      const int drift = descent_count(rollback(p)) - des;
      if (n >= 2) CHECK(drift == (p.first() == 1 ? 1 : (p.last() == 1 ? -1 : 0)));
    });
  }
}

TEST_CASE("enumerate_joint") {
  const auto j3 = enumerate_joint(3);
  CHECK(j3.at(1, 2, 3) == 1);
  CHECK(j3.total() == 6);
  const auto j1 = enumerate_joint(1);
  CHECK(j1.at(0, 1, 1) == 1);
  CHECK(enumerate_joint(8).total() == 40320);
  CHECK_THROWS_AS(enumerate_joint(11), ResourceLimit);
  try {
    enumerate_joint(6, 5);
    FAIL("expected a cap error");
  } catch (const ResourceLimit& e) {
    CHECK(e.cap == "enumeration_cap");
    CHECK(e.value == 5);
  }
}

TEST_CASE("joint marginals equal the tables") {
  for (int n = 1; n <= 9; ++n) {
    const auto j = enumerate_joint(n);
    const auto t = refined_table(n);
    CHECK(j.euler_row() == euler_row(n));
    for (int d = 0; d < n; ++d)
      for (int k = 1; k <= n; ++k) {
        CHECK(j.first_marginal(d, k) == t->at(d, k));
        CHECK(j.last_marginal(d, k) == t->last(d, k));
      }
  }
}

TEST_CASE("serial and parallel enumeration agree") {
  for (int n = 1; n <= 8; ++n) CHECK(enumerate_joint(n, 10, Exec::serial) == enumerate_joint(n, 10, Exec::parallel));
}

TEST_CASE("rank insertion reproduces enumeration") {
  for (int n = 1; n <= 9; ++n) {
    const auto b = brute::first_counts(n);
    const auto r = rank_insertion_counts(n);
    for (int d = 0; d < n; ++d)
      for (int k = 1; k <= n; ++k) CHECK(r[d][k - 1] == static_cast<unsigned long>(b[d][k - 1]));
  }
}

TEST_CASE("linear extensions") {
  const auto star = linear_extensions(star_poset(3, 2), 3);
  CHECK(star == std::vector<Perm>{Perm({2, 1, 3}), Perm({2, 3, 1})});
  CHECK(linear_extensions({}, 3).size() == 6);
  CHECK(linear_extensions({{1, 2}, {2, 3}}, 3) == std::vector<Perm>{Perm::identity(3)});
  CHECK_THROWS_AS(linear_extensions({{1, 2}, {2, 1}}, 2), InvalidArgument);
  CHECK_THROWS_AS(linear_extensions({{1, 4}}, 3), InvalidArgument);
  CHECK_THROWS_AS(linear_extensions({}, 11), ResourceLimit);
}

TEST_CASE("extensions respect every relation, lexicographically") {
  const auto rel = both_ends_poset(5, 2, 4);
  const auto ext = linear_extensions(rel, 5);
  CHECK(ext.size() == 6);
  CHECK(std::is_sorted(ext.begin(), ext.end()));
  for (const auto& p : ext) {
    CHECK(p.first() == 2);
    CHECK(p.last() == 4);
  }
}

TEST_CASE("descent polynomials of sets") {
  std::vector<Perm> all;
  brute::each_perm(3, [&](const std::vector<int>& v) { all.emplace_back(v); });
  CHECK(descent_poly_of_set(all) == Poly{1, 4, 1});
  const std::vector<Perm> id{Perm::identity(4)};
  CHECK(descent_poly_of_set(id) == Poly{1});
  CHECK(descent_poly_of_set(linear_extensions(star_poset(3, 2), 3)) == Poly{0, 2});
  const std::vector<Perm> mixed{Perm::identity(2), Perm::identity(3)};
  CHECK_THROWS_AS(descent_poly_of_set(mixed), InvalidArgument);
}

TEST_CASE("star posets give the refined polynomials") {
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= n; ++k) {
      std::vector<Count> first(n), last(n);
      for (int d = 0; d < n; ++d) {
        first[d] = refined_first(n, d, k);
        last[d] = refined_last(n, d, k);
      }
      CHECK(descent_poly_of_set(linear_extensions(star_poset(n, k), n)) == Poly::from_counts(first));
      CHECK(descent_poly_of_set(linear_extensions(upside_down_star_poset(n, k), n)) == Poly::from_counts(last));
    }
}
