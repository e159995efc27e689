#include "eulerref/moments.hpp"

#include <string>

#include "eulerref/errors.hpp"
#include "eulerref/exact_core.hpp"

namespace eulerref {

namespace {

void require_distribution(int n, int d) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  if (d < 0 || d > n - 1) {
    throw UndefinedDistribution("no permutation of " + std::to_string(n) + " has " +
                                std::to_string(d) + " descents");
  }
}

void require_geometric(int n, int d) {
  if (d < 1) throw InvalidArgument("geometric comparison needs d >= 1 (p = 0 is degenerate)");
  if (d > n - 1) throw InvalidArgument("geometric comparison needs d <= n - 1");
}

// (1 - p) p^(k-1) with p = d / (d + 1)
Ratio geometric_pmf(int d, int k) {
  return make_ratio(ipow(d, static_cast<unsigned long>(k - 1)),
                    ipow(d + 1, static_cast<unsigned long>(k)));
}

bool strictly_increasing(const std::vector<Count>& s, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i)
    if (!(s[i] < s[i + 1])) return false;
  return true;
}

bool strictly_decreasing(const std::vector<Count>& s, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i)
    if (!(s[i] > s[i + 1])) return false;
  return true;
}

}  // namespace

FirstDist first_dist(int n, int d) {
  require_distribution(n, d);
  auto t = refined_table(n);
  const Count total = t->row_sum(d);
  FirstDist out{n, d, std::vector<Ratio>(static_cast<std::size_t>(n))};
  for (int k = 1; k <= n; ++k) out.probs[k - 1] = make_ratio(t->at(d, k), total);
  return out;
}

FirstDist last_dist(int n, int d) {
  require_distribution(n, d);
  auto t = refined_table(n);
  const Count total = t->row_sum(d);
  FirstDist out{n, d, std::vector<Ratio>(static_cast<std::size_t>(n))};
  for (int k = 1; k <= n; ++k) out.probs[k - 1] = make_ratio(t->last(d, k), total);
  return out;
}

Ratio rising_moment(int n, int d, int m) {
  require_distribution(n, d);
  if (m < 0) throw InvalidArgument("moment order must be >= 0");
  // Inner sum: truncated binomial expansion of (j+1)^(m+n).
  Count outer = 0;
  for (int j = 0; j <= d; ++j) {
    Count inner = 0;
    Count jpow = 1;
    for (int l = 0; l <= n - 1; ++l) {
      inner += binomial(m + n, l) * jpow;
      jpow *= j;
    }
    Count term = binomial(n, d - j) * inner;
    if ((d - j) % 2 == 0) {
      outer += term;
    } else {
      outer -= term;
    }
  }
  return make_ratio(factorial(m) * outer, eulerian(n, d));
}

Ratio rising_moment_direct(int n, int d, int m) {
  const FirstDist dist = first_dist(n, d);
  if (m < 0) throw InvalidArgument("moment order must be >= 0");
  Ratio s = 0;
  for (int k = 1; k <= n; ++k) s += Ratio(rising_factorial(k, static_cast<unsigned long>(m))) * dist(k);
  return s;
}

Count lattice_path_split_sum(int m, int n, int l) {
  Count s = 0;
  for (int r = 0; r <= l; ++r) s += binomial(r + m, r) * binomial(n - 1 - r, l - r);
  return s;
}

Ratio expected_first(int n, int d) {
  const FirstDist dist = first_dist(n, d);
  Ratio e = 0;
  for (int k = 1; k <= n; ++k) e += k * dist(k);
  if (e != d + 1) {
    throw ConsistencyError("E[pi(1) | Des = d] = " + e.get_str() + " but expected d + 1 at n = " +
                           std::to_string(n) + ", d = " + std::to_string(d));
  }
  return e;
}

Ratio expected_last(int n, int d) {
  const FirstDist dist = last_dist(n, d);
  Ratio e = 0;
  for (int k = 1; k <= n; ++k) e += k * dist(k);
  if (e != n - d) {
    throw ConsistencyError("E[pi(n) | Des = d] = " + e.get_str() + " but expected n - d at n = " +
                           std::to_string(n) + ", d = " + std::to_string(d));
  }
  return e;
}

Ratio geometric_ratio_sup(int n, int d) {
  require_geometric(n, d);
  const FirstDist dist = first_dist(n, d);
  Ratio best = 0;
  for (int k = 1; k <= n; ++k) {
    Ratio dev = abs(dist(k) / geometric_pmf(d, k) - 1);
    if (dev > best) best = dev;
  }
  return best;
}

Ratio tvd_geometric(int n, int d) {
  require_geometric(n, d);
  const FirstDist dist = first_dist(n, d);
  Ratio l1 = 0;
  for (int k = 1; k <= n; ++k) l1 += abs(dist(k) - geometric_pmf(d, k));
  const Ratio tail = make_ratio(ipow(d, static_cast<unsigned long>(n)), ipow(d + 1, static_cast<unsigned long>(n)));
  return (l1 + tail) / 2;
}

std::string_view to_string(UnimodalCase c) {
  switch (c) {
    case UnimodalCase::i: return "i";
    case UnimodalCase::ii: return "ii";
    case UnimodalCase::iii: return "iii";
    case UnimodalCase::iv: return "iv";
    case UnimodalCase::v: return "v";
    case UnimodalCase::vi: return "vi";
    case UnimodalCase::vii: return "vii";
  }
  return "?";
}

UnimodalVerdict unimodal_case(int n, int d) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  if (d < 0 || d > n - 1) throw InvalidArgument("d must lie in [0, n-1]");

  auto t = refined_table(n);
  // s[i] = <n, d>_{n-i}: the row read from k = n down to k = 1.
  std::vector<Count> s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[i] = t->at(d, n - i);
  const std::size_t last = static_cast<std::size_t>(n - 1);

  auto all_zero = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i <= to && i < s.size(); ++i)
      if (s[i] != 0) return false;
    return true;
  };

  // d = 0 and d = n-1 take priority: at n = 2 they would also satisfy the
  // parity conditions of (iii) and (v).
  if (d == 0) {
    bool ok = s[last] == 1 && (n == 1 || all_zero(0, last - 1));
    return {UnimodalCase::i, ok};
  }
  if (d == n - 1) {
    bool ok = s[0] == 1 && all_zero(1, last);
    return {UnimodalCase::vii, ok};
  }
  if (n % 2 == 0 && 2 * d == n - 2) {
    // <n,d>_n < ... < <n,d>_2 = <n,d>_1
    return {UnimodalCase::iii, strictly_increasing(s, 0, last - 1) && s[last - 1] == s[last]};
  }
  if (n % 2 == 1 && 2 * d == n - 1) {
    // increasing up to k = (n+1)/2, then decreasing
    const std::size_t peak = static_cast<std::size_t>(n - (n + 1) / 2);
    return {UnimodalCase::iv, strictly_increasing(s, 0, peak) && strictly_decreasing(s, peak, last)};
  }
  if (n % 2 == 0 && 2 * d == n) {
    return {UnimodalCase::v, s[0] == s[1] && strictly_decreasing(s, 1, last)};
  }
  if (2 * d <= n - 3) return {UnimodalCase::ii, strictly_increasing(s, 0, last)};
  return {UnimodalCase::vi, strictly_decreasing(s, 0, last)};
}

MeanVar des_mean_var_exact(int n) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  const auto row = euler_row(n);
  const Count total = factorial(n);
  Ratio mean = 0, second = 0;
  for (int d = 0; d < n; ++d) {
    Ratio p = make_ratio(row[d], total);
    mean += d * p;
    second += Ratio(d * d) * p;
  }
  return {mean, second - mean * mean};
}

MeanVar des_mean_var(int n) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  MeanVar formula{make_ratio(n - 1, 2), make_ratio(n + 1, 12)};
  formula.mean.canonicalize();
  formula.variance.canonicalize();
  if (n >= 2) {
    const MeanVar exact = des_mean_var_exact(n);
    if (exact.mean != formula.mean || exact.variance != formula.variance) {
      throw ConsistencyError("descent mean/variance formula disagrees with the Eulerian row at n = " +
                             std::to_string(n));
    }
  }
  return formula;
}

}  // namespace eulerref
