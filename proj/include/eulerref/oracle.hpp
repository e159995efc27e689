#pragma once

#include <span>
#include <utility>
#include <vector>

#include "eulerref/numeric.hpp"
#include "eulerref/parallel.hpp"
#include "eulerref/poly.hpp"

namespace eulerref {

/// A permutation in one-line notation with 1-based values.
class Perm {
 public:
  /// Throws InvalidArgument unless `image` holds each of 1..n exactly once.
  explicit Perm(std::vector<int> image);
  static Perm identity(int n);
  static Perm reversal(int n);

  int size() const { return static_cast<int>(image_.size()); }
  /// Value at 1-based position i.
  int operator()(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }
  int first() const { return image_.front(); }
  int last() const { return image_.back(); }
  std::span<const int> values() const { return image_; }

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> image_;
};

int descent_count(std::span<const int> seq);
inline int descent_count(const Perm& p) { return descent_count(p.values()); }

/// rho * pi: every value v becomes n + 1 - v.
Perm reverse_values(const Perm& p);
/// pi * rho: the sequence read backwards.
Perm reverse_positions(const Perm& p);
/// psi * pi: every value decremented, 1 wrapping to n.
Perm rollback(const Perm& p);
/// (a * b)(i) = a(b(i)).
Perm compose(const Perm& a, const Perm& b);

inline constexpr int kDefaultEnumerationCap = 10;

/// Exhaustive counts over S_n keyed by (descents, first value, last value).
class JointTable {
 public:
  explicit JointTable(int n);

  int n() const { return n_; }
  const Count& at(int d, int first, int last) const;
  Count& at(int d, int first, int last);

  Count total() const;
  /// Marginal over (first, last): the Eulerian row.
  std::vector<Count> euler_row() const;
  /// Marginal over last: <n, d>_k.
  Count first_marginal(int d, int k) const;
  /// Marginal over first: <n, d>^k.
  Count last_marginal(int d, int k) const;

  bool operator==(const JointTable&) const = default;

 private:
  std::size_t idx(int d, int f, int l) const {
    return (static_cast<std::size_t>(d) * n_ + (f - 1)) * n_ + (l - 1);
  }
  int n_;
  std::vector<Count> counts_;
};

/// Enumerates S_n. The parallel kernel partitions by first value.
/// Throws ResourceLimit when n exceeds `cap`.
JointTable enumerate_joint(int n, int cap = kDefaultEnumerationCap, Exec exec = Exec::parallel);

/// Calls f(perm_values) for every permutation of 1..n in lexicographic order.
template <typename F>
void for_each_permutation(int n, F&& f);

/// <n, d>_k for every (d, k) by building permutations right to left and
/// tracking only the relative rank of the leftmost entry. Independent of the
/// closed form and the recurrences, and polynomial in n, so it reaches past
/// the enumeration cap. Result indexed [d][k - 1].
std::vector<std::vector<Count>> rank_insertion_counts(int n);

/// Order relation a <_P b given as the pair (a, b).
using Relation = std::pair<int, int>;

/// All linear extensions in lexicographic order. Throws InvalidArgument for
/// cyclic or out-of-range relations, ResourceLimit when n exceeds `cap`.
std::vector<Perm> linear_extensions(const std::vector<Relation>& relations, int n,
                                    int cap = kDefaultEnumerationCap);

/// k below every other element.
std::vector<Relation> star_poset(int n, int k);
/// k above every other element.
std::vector<Relation> upside_down_star_poset(int n, int k);
/// k below every a, every a below l (a distinct from k, l).
std::vector<Relation> both_ends_poset(int n, int k, int l);

/// Sum of x^Des(pi) over the set. Throws InvalidArgument for mixed lengths.
Poly descent_poly_of_set(std::span<const Perm> perms);

}  // namespace eulerref

#include <algorithm>
#include <numeric>

template <typename F>
void eulerref::for_each_permutation(int n, F&& f) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    f(std::span<const int>(v));
  } while (std::next_permutation(v.begin(), v.end()));
}
