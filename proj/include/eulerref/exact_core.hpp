#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "eulerref/numeric.hpp"
#include "eulerref/parallel.hpp"

namespace eulerref {

/// How a refined table is produced. Every method yields the same table.
enum class TableMethod { closed_form, rec1, rec2, rec3 };

std::string_view to_string(TableMethod m);
/// Throws InvalidArgument for an unknown tag.
TableMethod parse_table_method(std::string_view tag);

/// Counts of permutations of n with d descents beginning with k, for
/// d in [0, n-1] and k in [1, n]. Immutable once built.
class RefinedTable {
 public:
  RefinedTable(int n, TableMethod method, std::vector<Count> counts);

  int n() const { return n_; }
  TableMethod method() const { return method_; }

  /// Entry for descents d and first value k (1-based). Out-of-range (d, k)
  /// returns 0, so recurrences can read across the boundary.
  const Count& at(int d, int k) const;

  /// Same table read by last value: #{pi : Des = d, pi(n) = k}.
  const Count& last(int d, int k) const { return at(n_ - 1 - d, k); }

  Count row_sum(int d) const;
  Count column_sum(int k) const;
  /// Eulerian row recovered as row sums.
  std::vector<Count> euler_row() const;

  bool operator==(const RefinedTable& other) const {
    return n_ == other.n_ && counts_ == other.counts_;
  }

 private:
  int n_;
  TableMethod method_;
  std::vector<Count> counts_;  // row-major, d * n + (k - 1)
};

/// Eulerian number <n, d> from the alternating binomial sum; 0 unless
/// 0 <= d < n.
Count eulerian(int n, int d);

/// All Eulerian numbers of one n; symmetric, sums to n!.
std::vector<Count> euler_row(int n);

/// <n, d>_k: permutations of n with d descents starting with k, from the
/// closed form sum_j (-1)^(d-j) C(n, d-j) j^(k-1) (j+1)^(n-k) with 0^0 = 1.
/// Any d is accepted (0 outside [0, n-1]); k must lie in [1, n].
Count refined_first(int n, int d, int k);

/// <n, d>^k: same, but ending with k.
Count refined_last(int n, int d, int k);

/// Raw closed-form sum with no range short-circuit, for checking that the
/// formula itself vanishes outside [0, n-1]. d must be >= 0 to be nonzero.
Count refined_first_sum(int n, int d, int k);
Count eulerian_sum(int n, int d);

/// Builds a table without consulting the cache.
RefinedTable build_refined_table(int n, TableMethod method, Exec exec = Exec::parallel);

/// Memoized, shared, immutable table keyed by (n, method). Thread-safe.
std::shared_ptr<const RefinedTable> refined_table(int n, TableMethod method = TableMethod::closed_form);

/// Permutations of n with d descents, first value k and last value l.
/// k == l yields 0; n must be at least 2.
Count both_ends(int n, int d, int k, int l);

/// Piecewise-constant interpolation f_n with f_n(n d - k) = <n, d>_k; zero
/// outside the (d, k) rectangle.
Count f_window(int n, long x);

}  // namespace eulerref
