#include "eulerref/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <string>

#include "eulerref/errors.hpp"
#include "eulerref/exact_core.hpp"
#include "eulerref/moments.hpp"
#include "eulerref/oracle.hpp"
#include "eulerref/real_roots.hpp"
#include "eulerref/series.hpp"
#include "eulerref/stein.hpp"

namespace eulerref {

namespace {

// Empty string: the identity held at this n. Otherwise the failing indices.
using Body = std::function<std::string(int n)>;

std::string at(int n, int d) { return "n=" + std::to_string(n) + " d=" + std::to_string(d); }
std::string at(int n, int d, int k) { return at(n, d) + " k=" + std::to_string(k); }

class Suite {
 public:
  explicit Suite(int nmax) : nmax_(nmax) {}

  int top(int ceiling) const { return nmax_ > 0 ? std::min(nmax_, ceiling) : ceiling; }

  // Runs body(n) for lo <= n <= top(ceiling), stopping at the first failure.
  void over_n(std::string identity, int lo, int ceiling, const Body& body) {
    const int hi = top(ceiling);
    CheckRecord r{std::move(identity), true, false, ""};
    if (hi < lo) {
      r.skipped = true;
      r.witness = "skipped: range n=" + std::to_string(lo) + ".." + std::to_string(ceiling) + " cut by nmax";
      out_.push_back(std::move(r));
      return;
    }
    for (int n = lo; n <= hi; ++n) {
      std::string w = guarded([&] { return body(n); });
      if (!w.empty()) {
        r.passed = false;
        r.witness = std::move(w);
        out_.push_back(std::move(r));
        return;
      }
    }
    r.witness = "n=" + std::to_string(lo) + ".." + std::to_string(hi);
    out_.push_back(std::move(r));
  }

  // A single check that is not indexed by n; needs nmax >= min_n to run.
  void once(std::string identity, int min_n, const std::string& scope, const std::function<std::string()>& body) {
    CheckRecord r{std::move(identity), true, false, scope};
    if (nmax_ > 0 && nmax_ < min_n) {
      r.skipped = true;
      r.witness = "skipped: needs nmax >= " + std::to_string(min_n);
    } else if (std::string w = guarded(body); !w.empty()) {
      r.passed = false;
      r.witness = std::move(w);
    }
    out_.push_back(std::move(r));
  }

  std::vector<CheckRecord> take() { return std::move(out_); }

 private:
  static std::string guarded(const std::function<std::string()>& f) {
    try {
      return f();
    } catch (const ResourceLimit&) {
      throw;
    } catch (const ConsistencyError& e) {
      return std::string("consistency error: ") + e.what();
    } catch (const DomainError& e) {
      return std::string("domain error: ") + e.what();
    } catch (const UndefinedDistribution& e) {
      return std::string("undefined distribution: ") + e.what();
    } catch (const InvalidArgument& e) {
      return std::string("invalid argument: ") + e.what();
    }
  }

  int nmax_;
  std::vector<CheckRecord> out_;
};

void core_checks(Suite& s) {
  s.over_n("four_method_agreement", 1, 20, [](int n) -> std::string {
    const auto base = refined_table(n, TableMethod::closed_form);
    for (auto m : {TableMethod::rec1, TableMethod::rec2, TableMethod::rec3}) {
      const auto t = refined_table(n, m);
      for (int d = 0; d < n; ++d)
        for (int k = 1; k <= n; ++k)
          if (t->at(d, k) != base->at(d, k)) return at(n, d, k) + " method=" + std::string(to_string(m));
    }
    return {};
  });
  s.over_n("column_sums_factorial", 1, 60, [](int n) -> std::string {
    const auto t = refined_table(n);
    for (int k = 1; k <= n; ++k)
      if (t->column_sum(k) != factorial(n - 1)) return "n=" + std::to_string(n) + " k=" + std::to_string(k);
    return {};
  });
  s.over_n("row_sums_eulerian", 1, 60, [](int n) -> std::string {
    const auto t = refined_table(n);
    for (int d = 0; d < n; ++d)
      if (t->row_sum(d) != eulerian(n, d)) return at(n, d);
    return {};
  });
  s.over_n("boundary_columns", 2, 60, [](int n) -> std::string {
    const auto t = refined_table(n);
    for (int d = 0; d < n; ++d) {
      if (t->at(d, 1) != eulerian(n - 1, d)) return at(n, d, 1);
      if (t->at(d, n) != eulerian(n - 1, d - 1)) return at(n, d, n);
    }
    return {};
  });
  s.over_n("eulerian_symmetry", 1, 60, [](int n) -> std::string {
    const auto row = euler_row(n);
    Count total = 0;
    for (int d = 0; d < n; ++d) {
      if (row[d] != row[n - 1 - d]) return at(n, d);
      total += row[d];
    }
    if (total != factorial(n)) return "n=" + std::to_string(n) + " row sum";
    return {};
  });
  s.over_n("refined_symmetry", 1, 60, [](int n) -> std::string {
    const auto t = refined_table(n);
    for (int d = 0; d < n; ++d)
      for (int k = 1; k <= n; ++k) {
        if (t->at(d, k) != t->at(n - 1 - d, n + 1 - k)) return at(n, d, k);
        if (refined_last(n, d, k) != t->at(n - 1 - d, k)) return at(n, d, k) + " (last)";
      }
    return {};
  });
  s.over_n("plateau", 2, 60, [](int n) -> std::string {
    const auto t = refined_table(n);
    for (int d = 0; d + 1 < n; ++d)
      if (t->at(d, 1) != t->at(d + 1, n)) return at(n, d);
    return {};
  });
  s.over_n("closed_form_out_of_range", 1, 12, [](int n) -> std::string {
    for (int d = n; d <= 2 * n + 2; ++d) {
      if (eulerian_sum(n, d) != 0) return at(n, d) + " (eulerian)";
      for (int k = 1; k <= n; ++k)
        if (refined_first_sum(n, d, k) != 0) return at(n, d, k);
    }
    for (int d = -3; d < 0; ++d)
      for (int k = 1; k <= n; ++k)
        if (refined_first(n, d, k) != 0) return at(n, d, k);
    return {};
  });
  s.over_n("rank_oracle_agreement", 1, 20, [](int n) -> std::string {
    const auto r = rank_insertion_counts(n);
    const auto t = refined_table(n);
    for (int d = 0; d < n; ++d)
      for (int k = 1; k <= n; ++k)
        if (r[d][k - 1] != t->at(d, k)) return at(n, d, k);
    return {};
  });
  s.over_n("enumeration_marginals", 1, 10, [](int n) -> std::string {
    const auto j = enumerate_joint(n);
    const auto t = refined_table(n);
    for (int d = 0; d < n; ++d)
      for (int k = 1; k <= n; ++k) {
        if (j.first_marginal(d, k) != t->at(d, k)) return at(n, d, k) + " (first)";
        if (j.last_marginal(d, k) != t->last(d, k)) return at(n, d, k) + " (last)";
      }
    if (j.euler_row() != euler_row(n)) return "n=" + std::to_string(n) + " eulerian row";
    return {};
  });
  s.over_n("both_ends_oracle", 2, 8, [](int n) -> std::string {
    const auto j = enumerate_joint(n);
    for (int d = 0; d < n; ++d)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          if (both_ends(n, d, k, l) != j.at(d, k, l)) return at(n, d, k) + " l=" + std::to_string(l);
    return {};
  });
  s.over_n("both_ends_partition", 2, 8, [](int n) -> std::string {
    for (int d = 0; d < n; ++d) {
      Count all = 0;
      for (int k = 1; k <= n; ++k) {
        Count row = 0;
        for (int l = 1; l <= n; ++l) row += both_ends(n, d, k, l);
        if (row != refined_first(n, d, k)) return at(n, d, k);
        all += row;
      }
      if (all != eulerian(n, d)) return at(n, d) + " (eulerian)";
    }
    return {};
  });
  auto window = [](int n, const std::function<Count(int, int)>& upper) -> std::string {
    for (int d = 0; d <= n; ++d)
      for (int k = 1; k <= n + 1; ++k) {
        Count s = 0;
        for (int i = 0; i < n; ++i) s += f_window(n, static_cast<long>(n) * d - k - i);
        if (s != upper(d, k)) return at(n + 1, d, k);
      }
    return {};
  };
  s.over_n("window_sum_tables", 1, 30, [&](int n) {
    const auto t = refined_table(n + 1);
    return window(n, [&](int d, int k) { return t->at(d, k); });
  });
  s.over_n("window_sum_oracle", 1, 12, [&](int n) {
    const auto r = rank_insertion_counts(n + 1);
    return window(n, [&](int d, int k) { return r[d][k - 1]; });
  });
  s.over_n("transform_laws", 1, 8, [](int n) -> std::string {
    std::string bad;
    for_each_permutation(n, [&](std::span<const int> v) {
      if (!bad.empty()) return;
      const Perm p(std::vector<int>(v.begin(), v.end()));
      const int des = descent_count(p);
      const Perm rv = reverse_values(p), rp = reverse_positions(p), both = reverse_positions(rv);
      const bool ok = descent_count(rv) == n - 1 - des && descent_count(rp) == n - 1 - des &&
                      descent_count(both) == des && rv.first() == n + 1 - p.first() &&
                      rv.last() == n + 1 - p.last() && rp.first() == p.last() && rp.last() == p.first() &&
                      both.first() == n + 1 - p.last() && both.last() == n + 1 - p.first();
      if (!ok) bad = "n=" + std::to_string(n) + " perm index in lexicographic order failed";
    });
    return bad;
  });
  s.over_n("rollback_drift", 2, 8, [](int n) -> std::string {
    std::string bad;
    for_each_permutation(n, [&](std::span<const int> v) {
      if (!bad.empty()) return;
      const Perm p(std::vector<int>(v.begin(), v.end()));
      const int expect = p.first() == 1 ? 1 : (p.last() == 1 ? -1 : 0);
      if (descent_count(rollback(p)) - descent_count(p) != expect) {
        bad = "n=" + std::to_string(n) + " first=" + std::to_string(p.first()) + " last=" + std::to_string(p.last());
      }
    });
    return bad;
  });
  s.over_n("star_poset_extensions", 1, 8, [](int n) -> std::string {
    for (int k = 1; k <= n; ++k) {
      std::vector<Count> first(n), last(n);
      for (int d = 0; d < n; ++d) {
        first[d] = refined_first(n, d, k);
        last[d] = refined_last(n, d, k);
      }
      const auto up = linear_extensions(star_poset(n, k), n);
      const auto down = linear_extensions(upside_down_star_poset(n, k), n);
      if (!(descent_poly_of_set(up) == Poly::from_counts(first))) return "n=" + std::to_string(n) + " k=" + std::to_string(k);
      if (!(descent_poly_of_set(down) == Poly::from_counts(last)))
        return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " (upside down)";
    }
    return {};
  });
}

void moments_checks(Suite& s) {
  s.over_n("rising_moment_formula", 1, 25, [](int n) -> std::string {
    for (int d = 0; d < n; ++d)
      for (int m = 0; m <= 4; ++m)
        if (rising_moment(n, d, m) != rising_moment_direct(n, d, m)) return at(n, d) + " m=" + std::to_string(m);
    return {};
  });
  s.over_n("lattice_path_identity", 1, 12, [](int n) -> std::string {
    for (int m = 0; m <= 5; ++m)
      for (int l = 0; l <= n - 1; ++l)
        if (lattice_path_split_sum(m, n, l) != binomial(m + n, l))
          return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " l=" + std::to_string(l);
    return {};
  });
  s.over_n("expected_first_last", 1, 60, [](int n) -> std::string {
    for (int d = 0; d < n; ++d) {
      if (expected_first(n, d) != Ratio(d + 1)) return at(n, d) + " (first)";
      if (expected_last(n, d) != Ratio(n - d)) return at(n, d) + " (last)";
    }
    return {};
  });
  s.over_n("unimodality", 1, 100, [](int n) -> std::string {
    for (int d = 0; d < n; ++d) {
      const auto v = unimodal_case(n, d);
      if (!v.holds) return at(n, d) + " case=" + std::string(to_string(v.label));
    }
    return {};
  });
  const int geo_top = s.top(64);
  s.once("geometric_convergence", 32, "d=1,2,3 at n=16,32,64 up to n=" + std::to_string(geo_top), [&]() -> std::string {
    std::vector<int> ns;
    for (int n : {16, 32, 64})
      if (n <= geo_top) ns.push_back(n);
    for (int d = 1; d <= 3; ++d)
      for (std::size_t i = 0; i + 1 < ns.size(); ++i) {
        if (!(geometric_ratio_sup(ns[i + 1], d) < geometric_ratio_sup(ns[i], d)))
          return at(ns[i + 1], d) + " (ratio sup)";
        if (!(tvd_geometric(ns[i + 1], d) < tvd_geometric(ns[i], d))) return at(ns[i + 1], d) + " (tvd)";
      }
    return {};
  });
  s.over_n("symmetry_transfer", 1, 30, [](int n) -> std::string {
    for (int d = 0; d < n; ++d) {
      const auto f = first_dist(n, d);
      const auto g = first_dist(n, n - 1 - d);
      const auto l = last_dist(n, n - 1 - d);
      for (int k = 1; k <= n; ++k) {
        if (f(k) != g(n + 1 - k)) return at(n, d, k) + " (reversal)";
        if (f(k) != l(k)) return at(n, d, k) + " (last)";
      }
    }
    return {};
  });
  s.over_n("descent_mean_variance", 2, 60, [](int n) -> std::string {
    const auto f = des_mean_var(n);
    const auto e = des_mean_var_exact(n);
    if (f.mean != e.mean || f.variance != e.variance) return "n=" + std::to_string(n);
    return {};
  });
}

void gf_checks(Suite& s) {
  s.over_n("gf_nk_tables", 1, 20, [](int n) -> std::string {
    const auto t = refined_table(n);
    for (int k = 1; k <= n; ++k) {
      const Poly p = gf_nk(n, k);
      for (int d = 0; d < n; ++d)
        if (p.coeff(d) != Ratio(t->at(d, k))) return at(n, d, k);
      if (p.degree() > n - 1) return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " degree";
    }
    return {};
  });
  s.over_n("gf_nd_tables", 1, 20, [](int n) -> std::string {
    const auto t = refined_table(n);
    for (int d = 0; d < n; ++d) {
      const Poly p = gf_nd(n, d);
      if (p.coeff(0) != 0) return at(n, d) + " k=0";
      for (int k = 1; k <= n; ++k)
        if (p.coeff(k) != Ratio(t->at(d, k))) return at(n, d, k);
    }
    return {};
  });
  s.over_n("gf_n_tables", 1, 20, [](int n) -> std::string {
    const auto t = refined_table(n);
    const BiPoly b = gf_n(n);
    for (int d = 0; d < b.x_terms(); ++d)
      for (int k = 0; k < b.y_terms(); ++k) {
        const Ratio want = (d < n && k >= 1 && k <= n) ? Ratio(t->at(d, k)) : Ratio(0);
        if (b.at(d, k) != want) return at(n, d, k);
      }
    return {};
  });
  s.over_n("a_poly_eulerian", 1, 15, [](int n) -> std::string {
    const Poly a = a_poly(n);
    if (a.coeff(0) != 0) return "n=" + std::to_string(n) + " constant term";
    for (int d = 0; d < n; ++d)
      if (a.coeff(d + 1) != Ratio(eulerian(n, d))) return at(n, d);
    return {};
  });
  s.once("pde_check", 1, "orders (8,9,8)", []() -> std::string {
    return pde_check(8, 9, 8) ? std::string{} : std::string("orders (8,9,8)");
  });
  s.once("gfall_numeric", 1, "3 probes, n_max=18, tol=1e-6", []() -> std::string {
    struct Probe {
      double x, y, z;
    };
    for (const Probe& p : {Probe{0.3, 0.5, 0.2}, Probe{-0.4, 0.3, 0.3}, Probe{0.6, 0.7, 0.15}}) {
      const double r = gfall_numeric_check(p.x, p.y, p.z, 18, 1e-6);
      if (!(r < 1e-6)) {
        return "x=" + std::to_string(p.x) + " y=" + std::to_string(p.y) + " z=" + std::to_string(p.z) +
               " residual=" + std::to_string(r);
      }
    }
    return {};
  });
}

void roots_checks(Suite& s) {
  s.once("figure2_numerators", 7, "h_{0,2} .. h_{3,3}", []() -> std::string {
    const std::array<Poly, 5> want{Poly{1, 1}, Poly{1, 4, 1}, Poly{0, 8, 14, 2}, Poly{0, 8, 60, 48, 4},
                                   Poly{0, 8, 160, 384, 160, 8}};
    const auto tower = h_tower(3, 3);
    for (std::size_t i = 0; i < want.size(); ++i) {
      const auto& h = tower[i + 2];
      if (!(h.numerator == want[i]) || h.pole_order != static_cast<int>(i) + 3)
        return "tower step " + std::to_string(i + 2) + " got " + h.numerator.to_string();
    }
    return {};
  });
  s.over_n("tower_matches_table", 1, 20, [](int n) -> std::string {
    for (int u = 0; u < n; ++u) {
      const int v = n - 1 - u;
      const HRep h = h_numerator(u, v);
      if (!(h.numerator == c_poly(u, v)) || h.pole_order != n)
        return "u=" + std::to_string(u) + " v=" + std::to_string(v);
    }
    return {};
  });
  s.over_n("c_poly_shape", 1, 20, [](int n) -> std::string {
    for (int u = 0; u < n; ++u) {
      const int v = n - 1 - u;
      const Poly c = c_poly(u, v);
      const std::string w = "u=" + std::to_string(u) + " v=" + std::to_string(v);
      if (c.degree() != (v == 0 ? u : u + v - 1)) return w + " degree";
      const int val = c.x_adic_valuation();
      if (val != (u > 0 ? 1 : 0)) return w + " x-valuation";
      if (c.eval(Ratio(1)) != Ratio(factorial(u + v))) return w + " value at 1";
    }
    return {};
  });
  s.over_n("tower_interlacing", 1, 12, [](int n) -> std::string {
    for (int u = 0; u < n; ++u)
      if (!tower_interlaces(u, n - 1 - u)) return "u=" + std::to_string(u) + " v=" + std::to_string(n - 1 - u);
    return {};
  });
  s.over_n("first_fixed_real_roots", 1, 20, [](int n) -> std::string {
    for (int k = 1; k <= n; ++k)
      if (!check_neggers_first_fixed(n, k).verdict) return "n=" + std::to_string(n) + " k=" + std::to_string(k);
    return {};
  });
  s.over_n("both_fixed_real_roots", 2, 15, [](int n) -> std::string {
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l <= n; ++l) {
        if (k == l) continue;
        const auto v = check_neggers_both_fixed(n, k, l);
        if (!v.verdict || !check_neggers_both_fixed(n, n + 1 - k, n + 1 - l).verdict)
          return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " l=" + std::to_string(l);
      }
    return {};
  });
}

void stein_checks(Suite& s) {
  s.over_n("exchangeability", 2, 8, [](int n) -> std::string {
    const auto m = exact_joint_dd(n);
    if (!m.symmetric()) return "n=" + std::to_string(n) + " asymmetric";
    if (m.total() != factorial(n) * binomial(n, 2)) return "n=" + std::to_string(n) + " mass";
    return {};
  });
  s.over_n("drift_identity", 2, 8, [](int n) -> std::string {
    for (int d = 0; d < n; ++d)
      if (exact_drift(n, d) != drift_formula(n, d)) return at(n, d);
    return {};
  });
  s.over_n("lambda_restatement", 2, 8, [](int n) -> std::string {
    return verify_lambda(n) ? std::string{} : "n=" + std::to_string(n);
  });
  s.over_n("telescoped_drift", 2, 7, [](int n) -> std::string {
    std::string bad;
    for_each_permutation(n, [&](std::span<const int> v) {
      if (!bad.empty()) return;
      const Perm p(std::vector<int>(v.begin(), v.end()));
      Ratio sum = 0;
      for (int i = 1; i < n; ++i) sum += per_position_drift(p, i);
      if (sum != telescoped_drift(p) || sum != enumerated_drift(p)) {
        bad = "n=" + std::to_string(n) + " first=" + std::to_string(p.first());
      }
    });
    return bad;
  });
  s.once("mc_soundness", 20, "n=20 d=9 samples=1e4 seeds=1..100", []() -> std::string {
    int within = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const auto r = mc_drift(20, 9, 10000, seed);
      if (std::abs(r.mean - r.exact_target.get_d()) <= 4.0 * r.std_error) ++within;
    }
    return within >= 99 ? std::string{} : "only " + std::to_string(within) + "/100 seeds within 4 SE";
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"core", "moments", "roots", "gf", "stein", "all"};
  return names;
}

std::vector<CheckRecord> run_suite(std::string_view suite, int nmax) {
  Suite s(nmax);
  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "core") core_checks(s), known = true;
  if (all || suite == "moments") moments_checks(s), known = true;
  if (all || suite == "roots") roots_checks(s), known = true;
  if (all || suite == "gf") gf_checks(s), known = true;
  if (all || suite == "stein") stein_checks(s), known = true;
  if (!known) throw InvalidArgument("unknown suite '" + std::string(suite) + "'");
  return s.take();
}

}  // namespace eulerref
