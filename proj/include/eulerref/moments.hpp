#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "eulerref/numeric.hpp"

namespace eulerref {

/// Law of pi(1) (or pi(n)) for pi uniform among permutations of n with d
/// descents. probs[k - 1] = P(value = k).
struct FirstDist {
  int n;
  int d;
  std::vector<Ratio> probs;

  const Ratio& operator()(int k) const { return probs.at(static_cast<std::size_t>(k - 1)); }
};

/// Throws UndefinedDistribution unless 0 <= d <= n - 1.
FirstDist first_dist(int n, int d);
FirstDist last_dist(int n, int d);

/// E[pi(1)^(m rising) | Des = d] through the alternating binomial formula
///   m! sum_j (-1)^(d-j) C(n, d-j) sum_{l<n} C(m+n, l) j^l,
/// divided by <n, d>.
Ratio rising_moment(int n, int d, int m);

/// The same moment summed directly over first_dist.
Ratio rising_moment_direct(int n, int d, int m);

/// sum_{r=0}^{l} C(r+m, r) C(n-1-r, l-r): paths split by their crossing
/// height of x = m + 1/2. Equals C(m+n, l).
Count lattice_path_split_sum(int m, int n, int l);

/// Both computed from the tables; the closed values d+1 and n-d are checked
/// and a ConsistencyError is thrown on mismatch.
Ratio expected_first(int n, int d);
Ratio expected_last(int n, int d);

/// max_k |P(pi(1) = k) / ((1-p) p^(k-1)) - 1| with p = d/(d+1). Needs
/// 1 <= d <= n-1.
Ratio geometric_ratio_sup(int n, int d);

/// Total variation distance from the (unbounded) geometric law; the tail
/// mass p^n beyond n counts fully.
Ratio tvd_geometric(int n, int d);

enum class UnimodalCase { i, ii, iii, iv, v, vi, vii };
std::string_view to_string(UnimodalCase c);

struct UnimodalVerdict {
  UnimodalCase label;
  bool holds;
};

/// Which of the seven shapes the row <n,d>_n, ..., <n,d>_1 should have,
/// and whether it does.
UnimodalVerdict unimodal_case(int n, int d);

struct MeanVar {
  Ratio mean;
  Ratio variance;
};

/// ((n-1)/2, (n+1)/12). For n >= 2 this is cross-checked against the
/// Eulerian row; at n = 1 the formula variance 1/6 is not the true 0.
MeanVar des_mean_var(int n);
/// Mean and variance of Des computed from the Eulerian row.
MeanVar des_mean_var_exact(int n);

}  // namespace eulerref
