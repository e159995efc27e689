#include <doctest.h>

#include "eulerref/errors.hpp"
#include "eulerref/exact_core.hpp"
#include "eulerref/moments.hpp"

using namespace eulerref;

TEST_CASE("first_dist") {
  const auto f = first_dist(3, 1);
  CHECK(f.probs == std::vector<Ratio>{Ratio(1, 4), Ratio(1, 2), Ratio(1, 4)});
  CHECK(first_dist(4, 0).probs == std::vector<Ratio>{1, 0, 0, 0});
  for (int n = 1; n <= 30; ++n)
    for (int d = 0; d < n; ++d) {
      Ratio s = 0;
      for (const auto& p : first_dist(n, d).probs) s += p;
      CHECK(s == 1);
    }
  CHECK_THROWS_AS(first_dist(4, 4), UndefinedDistribution);
  CHECK_THROWS_AS(last_dist(4, -1), UndefinedDistribution);
}

TEST_CASE("rising moments") {
  CHECK(rising_moment(5, 2, 0) == 1);
  CHECK(rising_moment(3, 1, 1) == 2);
  CHECK(rising_moment(3, 1, 2) == Ratio(13, 2));
  for (int n = 1; n <= 12; ++n)
    for (int d = 0; d < n; ++d)
      for (int m = 0; m <= 4; ++m) CHECK(rising_moment(n, d, m) == rising_moment_direct(n, d, m));
  CHECK_THROWS_AS(rising_moment(3, 3, 1), UndefinedDistribution);
}

TEST_CASE("lattice path split") {
  for (int m = 0; m <= 5; ++m)
    for (int n = 1; n <= 12; ++n)
      for (int l = 0; l < n; ++l) CHECK(lattice_path_split_sum(m, n, l) == binomial(m + n, l));
}

TEST_CASE("expected first and last letter") {
  CHECK(expected_first(9, 4) == 5);
  CHECK(expected_last(9, 4) == 5);
  for (int n = 1; n <= 10; ++n) {
    CHECK(expected_first(n, 0) == 1);
    CHECK(expected_last(n, 0) == n);
    CHECK(expected_first(n, n - 1) == n);
    CHECK(expected_last(n, n - 1) == 1);
  }
  CHECK_THROWS_AS(expected_first(3, 5), UndefinedDistribution);
}

TEST_CASE("geometric comparison") {
  CHECK(tvd_geometric(2, 1) == Ratio(3, 4));
  CHECK(geometric_ratio_sup(64, 2) < geometric_ratio_sup(16, 2));
  CHECK(tvd_geometric(64, 2) < tvd_geometric(16, 2));
  CHECK(geometric_ratio_sup(4, 3) > 0);
  for (int n = 2; n <= 20; ++n)
    for (int d = 1; d < n; ++d) {
      const Ratio t = tvd_geometric(n, d);
      CHECK(t >= 0);
      CHECK(t <= 1);
    }
  CHECK_THROWS_AS(geometric_ratio_sup(5, 0), InvalidArgument);
  CHECK_THROWS_AS(tvd_geometric(5, 5), InvalidArgument);
}

TEST_CASE("unimodal classification") {
  auto v = unimodal_case(3, 1);
  CHECK(v.label == UnimodalCase::iv);
  CHECK(v.holds);
  v = unimodal_case(7, 0);
  CHECK(v.label == UnimodalCase::i);
  CHECK(v.holds);
  v = unimodal_case(6, 2);
  CHECK(v.label == UnimodalCase::iii);
  CHECK(v.holds);
  CHECK(refined_first(6, 2, 2) == refined_first(6, 2, 1));
  CHECK(unimodal_case(7, 6).label == UnimodalCase::vii);
  for (int n = 1; n <= 40; ++n)
    for (int d = 0; d < n; ++d) CHECK(unimodal_case(n, d).holds);
}

TEST_CASE("descent mean and variance") {
  const auto mv = des_mean_var(3);
  CHECK(mv.mean == 1);
  CHECK(mv.variance == Ratio(1, 3));
  const auto one = des_mean_var(1);
  CHECK(one.mean == 0);
  CHECK(one.variance == Ratio(1, 6));
  CHECK(des_mean_var_exact(1).variance == 0);
  const auto ten = des_mean_var_exact(10);
  CHECK(ten.mean == Ratio(9, 2));
  CHECK(ten.variance == Ratio(11, 12));
}
