#include "eulerref/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

#include "eulerref/errors.hpp"

namespace eulerref {

namespace {

void require_cap(int n, int cap, const char* what) {
  if (n > cap) {
    throw ResourceLimit("enumeration_cap", cap,
                        std::string(what) + ": n = " + std::to_string(n) +
                            " exceeds enumeration_cap = " + std::to_string(cap));
  }
}

// Flat (d, first, last) histogram with machine counters; n <= 12 fits easily.
using Histogram = std::vector<std::uint64_t>;

std::size_t hist_idx(int n, int d, int f, int l) {
  return (static_cast<std::size_t>(d) * n + (f - 1)) * n + (l - 1);
}

// Every permutation with the given first value, remaining values in
// lexicographic order.
void enumerate_with_first(int n, int first, Histogram& h) {
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n));
  v.push_back(first);
  for (int i = 1; i <= n; ++i) {
    if (i != first) v.push_back(i);
  }
  do {
    ++h[hist_idx(n, descent_count(v), first, v.back())];
  } while (std::next_permutation(v.begin() + 1, v.end()));
}

JointTable to_table(int n, const Histogram& h) {
  JointTable t(n);
  for (int d = 0; d < n; ++d)
    for (int f = 1; f <= n; ++f)
      for (int l = 1; l <= n; ++l) {
        const auto c = h[hist_idx(n, d, f, l)];
        if (c != 0) t.at(d, f, l) = static_cast<unsigned long>(c);
      }
  return t;
}

}  // namespace

Perm::Perm(std::vector<int> image) : image_(std::move(image)) {
  const int n = static_cast<int>(image_.size());
  if (n < 1) throw InvalidArgument("permutation must have length >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : image_) {
    if (v < 1 || v > n || seen[v]) throw InvalidArgument("not a permutation of 1..n");
    seen[v] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Perm(std::move(v));
}

Perm Perm::reversal(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.rbegin(), v.rend(), 1);
  return Perm(std::move(v));
}

int descent_count(std::span<const int> seq) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) d += seq[i] > seq[i + 1];
  return d;
}

Perm reverse_values(const Perm& p) {
  const int n = p.size();
  std::vector<int> v(p.values().begin(), p.values().end());
  for (int& x : v) x = n + 1 - x;
  return Perm(std::move(v));
}

Perm reverse_positions(const Perm& p) {
  std::vector<int> v(p.values().rbegin(), p.values().rend());
  return Perm(std::move(v));
}

Perm rollback(const Perm& p) {
  const int n = p.size();
  std::vector<int> v(p.values().begin(), p.values().end());
  for (int& x : v) x = (x == 1) ? n : x - 1;
  return Perm(std::move(v));
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw InvalidArgument("compose: length mismatch");
  std::vector<int> v(static_cast<std::size_t>(b.size()));
  for (int i = 1; i <= b.size(); ++i) v[i - 1] = a(b(i));
  return Perm(std::move(v));
}

JointTable::JointTable(int n) : n_(n), counts_(static_cast<std::size_t>(n) * n * n) {
  if (n < 1) throw InvalidArgument("JointTable needs n >= 1");
}

const Count& JointTable::at(int d, int first, int last) const { return counts_.at(idx(d, first, last)); }
Count& JointTable::at(int d, int first, int last) { return counts_.at(idx(d, first, last)); }

Count JointTable::total() const {
  Count s = 0;
  for (const auto& c : counts_) s += c;
  return s;
}

std::vector<Count> JointTable::euler_row() const {
  std::vector<Count> row(n_);
  for (int d = 0; d < n_; ++d)
    for (int f = 1; f <= n_; ++f)
      for (int l = 1; l <= n_; ++l) row[d] += at(d, f, l);
  return row;
}

Count JointTable::first_marginal(int d, int k) const {
  Count s = 0;
  for (int l = 1; l <= n_; ++l) s += at(d, k, l);
  return s;
}

Count JointTable::last_marginal(int d, int k) const {
  Count s = 0;
  for (int f = 1; f <= n_; ++f) s += at(d, f, k);
  return s;
}

JointTable enumerate_joint(int n, int cap, Exec exec) {
  if (n < 1) throw InvalidArgument("enumerate_joint needs n >= 1");
  require_cap(n, cap, "enumerate_joint");
  const std::size_t cells = static_cast<std::size_t>(n) * n * n;

  if (exec == Exec::serial) {
    Histogram h(cells, 0);
    for_each_permutation(n, [&](std::span<const int> v) {
      ++h[hist_idx(n, descent_count(v), v.front(), v.back())];
    });
    return to_table(n, h);
  }

  // One private histogram per first value, merged in fixed order.
  std::vector<Histogram> parts(static_cast<std::size_t>(n), Histogram(cells, 0));
#pragma omp parallel for schedule(dynamic, 1)
  for (int first = 1; first <= n; ++first) enumerate_with_first(n, first, parts[first - 1]);

  Histogram h(cells, 0);
  for (const auto& part : parts)
    for (std::size_t i = 0; i < cells; ++i) h[i] += part[i];
  return to_table(n, h);
}

std::vector<std::vector<Count>> rank_insertion_counts(int n) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  // cur[r][d]: suffixes of length i whose leftmost entry has rank r (1-based)
  // among the i entries, with d descents.
  std::vector<std::vector<Count>> cur(2, std::vector<Count>(1, 0));
  cur[1][0] = 1;
  for (int i = 1; i < n; ++i) {
    std::vector<std::vector<Count>> next(static_cast<std::size_t>(i) + 2, std::vector<Count>(i + 1, 0));
    for (int r = 1; r <= i; ++r) {
      for (int d = 0; d < i; ++d) {
        if (cur[r][d] == 0) continue;
        // New leftmost entry of rank s among i + 1; old leftmost keeps rank r
        // when s > r, so a descent is created exactly then.
        for (int s = 1; s <= i + 1; ++s) next[s][d + (s > r ? 1 : 0)] += cur[r][d];
      }
    }
    cur = std::move(next);
  }
  std::vector<std::vector<Count>> out(static_cast<std::size_t>(n), std::vector<Count>(n, 0));
  for (int k = 1; k <= n; ++k)
    for (int d = 0; d < n; ++d) out[d][k - 1] = cur[k][d];
  return out;
}

std::vector<Perm> linear_extensions(const std::vector<Relation>& relations, int n, int cap) {
  if (n < 1) throw InvalidArgument("linear_extensions needs n >= 1");
  require_cap(n, cap, "linear_extensions");

  // below[a][b]: a <_P b after transitive closure.
  std::vector<std::vector<bool>> below(n + 1, std::vector<bool>(n + 1, false));
  for (auto [a, b] : relations) {
    if (a < 1 || a > n || b < 1 || b > n) throw InvalidArgument("relation element out of range");
    below[a][b] = true;
  }
  for (int m = 1; m <= n; ++m)
    for (int a = 1; a <= n; ++a)
      if (below[a][m])
        for (int b = 1; b <= n; ++b)
          if (below[m][b]) below[a][b] = true;
  for (int a = 1; a <= n; ++a) {
    if (below[a][a]) throw InvalidArgument("relations are cyclic");
  }

  std::vector<Perm> out;
  std::vector<int> prefix;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  // Depth-first with candidates tried in increasing order yields lex order.
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(prefix.size()) == n) {
      out.emplace_back(prefix);
      return;
    }
    for (int c = 1; c <= n; ++c) {
      if (used[c]) continue;
      bool ready = true;
      for (int a = 1; a <= n && ready; ++a) ready = !(below[a][c] && !used[a]);
      if (!ready) continue;
      used[c] = true;
      prefix.push_back(c);
      self(self);
      prefix.pop_back();
      used[c] = false;
    }
  };
  extend(extend);
  return out;
}

std::vector<Relation> star_poset(int n, int k) {
  std::vector<Relation> r;
  for (int a = 1; a <= n; ++a)
    if (a != k) r.emplace_back(k, a);
  return r;
}

std::vector<Relation> upside_down_star_poset(int n, int k) {
  std::vector<Relation> r;
  for (int a = 1; a <= n; ++a)
    if (a != k) r.emplace_back(a, k);
  return r;
}

std::vector<Relation> both_ends_poset(int n, int k, int l) {
  std::vector<Relation> r;
  r.emplace_back(k, l);
  for (int a = 1; a <= n; ++a) {
    if (a == k || a == l) continue;
    r.emplace_back(k, a);
    r.emplace_back(a, l);
  }
  return r;
}

Poly descent_poly_of_set(std::span<const Perm> perms) {
  if (perms.empty()) return {};
  const int n = perms.front().size();
  std::vector<Count> c(static_cast<std::size_t>(n));
  for (const auto& p : perms) {
    if (p.size() != n) throw InvalidArgument("descent_poly_of_set: mixed permutation lengths");
    c[descent_count(p)] += 1;
  }
  return Poly::from_counts(c);
}

}  // namespace eulerref
