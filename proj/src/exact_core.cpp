#include "eulerref/exact_core.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "eulerref/errors.hpp"

namespace eulerref {

namespace {

const Count kZero = 0;

void require_n(int n) {
  if (n < 1) throw InvalidArgument("n must be >= 1, got " + std::to_string(n));
}

void require_k(int n, int k) {
  if (k < 1 || k > n) {
    throw InvalidArgument("k must lie in [1, " + std::to_string(n) + "], got " + std::to_string(k));
  }
}

// j^e for j in [0, n], e in [0, n]; 0^0 = 1.
class PowerTable {
 public:
  explicit PowerTable(int n) : n_(n), p_(static_cast<std::size_t>(n + 1) * (n + 1)) {
    for (int j = 0; j <= n; ++j) {
      p_[idx(j, 0)] = 1;
      for (int e = 1; e <= n; ++e) p_[idx(j, e)] = p_[idx(j, e - 1)] * j;
    }
  }
  const Count& operator()(int j, int e) const { return p_[idx(j, e)]; }

 private:
  std::size_t idx(int j, int e) const { return static_cast<std::size_t>(j) * (n_ + 1) + e; }
  int n_;
  std::vector<Count> p_;
};

Count closed_form_cell(int n, int d, int k, const PowerTable& pw, const std::vector<Count>& binom_n) {
  Count sum = 0;
  for (int j = 0; j <= d; ++j) {
    Count term = binom_n[d - j] * pw(j, k - 1) * pw(j + 1, n - k);
    if ((d - j) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

std::vector<Count> closed_form_cells(int n, Exec exec) {
  PowerTable pw(n);
  std::vector<Count> binom_n(n + 1);
  for (int i = 0; i <= n; ++i) binom_n[i] = binomial(n, i);

  const long cells = static_cast<long>(n) * n;
  std::vector<Count> out(static_cast<std::size_t>(cells));
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long c = 0; c < cells; ++c) {
      const int d = static_cast<int>(c / n);
      const int k = static_cast<int>(c % n) + 1;
      out[c] = closed_form_cell(n, d, k, pw, binom_n);
    }
  } else {
    for (long c = 0; c < cells; ++c) {
      const int d = static_cast<int>(c / n);
      const int k = static_cast<int>(c % n) + 1;
      out[c] = closed_form_cell(n, d, k, pw, binom_n);
    }
  }
  return out;
}

std::size_t cell(int n, int d, int k) { return static_cast<std::size_t>(d) * n + (k - 1); }

// <n,d>_k = sum_{l=1}^{n-1} <n-1, d - [l<k]>_l
RefinedTable step_rec1(const RefinedTable& prev) {
  const int n = prev.n() + 1;
  std::vector<Count> out(static_cast<std::size_t>(n) * n);
  for (int d = 0; d < n; ++d) {
    // tail[k] = sum_{l=k}^{n-1} prev(d, l)
    std::vector<Count> tail(n + 1);
    for (int l = n - 1; l >= 1; --l) tail[l] = tail[l + 1] + prev.at(d, l);
    Count head = 0;  // sum_{l<k} prev(d-1, l)
    for (int k = 1; k <= n; ++k) {
      out[cell(n, d, k)] = head + tail[k];
      head += prev.at(d - 1, k);
    }
  }
  return RefinedTable(n, TableMethod::rec1, std::move(out));
}

// <n,d>_1 = <n-1,d>, then <n,d>_{k+1} = <n,d>_k - <n-1,d>_k + <n-1,d-1>_k.
RefinedTable step_rec2(const RefinedTable& prev) {
  const int n = prev.n() + 1;
  std::vector<Count> out(static_cast<std::size_t>(n) * n);
  for (int d = 0; d < n; ++d) {
    Count value = d < n - 1 ? prev.row_sum(d) : Count(0);
    out[cell(n, d, 1)] = value;
    for (int k = 1; k < n; ++k) {
      value += prev.at(d - 1, k) - prev.at(d, k);
      out[cell(n, d, k + 1)] = value;
    }
  }
  return RefinedTable(n, TableMethod::rec2, std::move(out));
}

// Insert n into a permutation of n-1: <n,d>_k = (n-d-1)<n-1,d-1>_k + (d+1)<n-1,d>_k
// for k < n. The k = n column is <n-1, d-1>.
RefinedTable step_rec3(const RefinedTable& prev) {
  const int n = prev.n() + 1;
  std::vector<Count> out(static_cast<std::size_t>(n) * n);
  for (int d = 0; d < n; ++d) {
    for (int k = 1; k < n; ++k) {
      out[cell(n, d, k)] = (n - d - 1) * prev.at(d - 1, k) + (d + 1) * prev.at(d, k);
    }
    out[cell(n, d, n)] = d >= 1 ? prev.row_sum(d - 1) : Count(0);
  }
  return RefinedTable(n, TableMethod::rec3, std::move(out));
}

RefinedTable base_table(TableMethod method) { return RefinedTable(1, method, {Count(1)}); }

RefinedTable step(const RefinedTable& prev, TableMethod method) {
  switch (method) {
    case TableMethod::rec1: return step_rec1(prev);
    case TableMethod::rec2: return step_rec2(prev);
    case TableMethod::rec3: return step_rec3(prev);
    case TableMethod::closed_form: break;
  }
  throw InvalidArgument("closed_form has no recurrence step");
}

}  // namespace

std::string_view to_string(TableMethod m) {
  switch (m) {
    case TableMethod::closed_form: return "closed_form";
    case TableMethod::rec1: return "rec1";
    case TableMethod::rec2: return "rec2";
    case TableMethod::rec3: return "rec3";
  }
  return "?";
}

TableMethod parse_table_method(std::string_view tag) {
  for (auto m : {TableMethod::closed_form, TableMethod::rec1, TableMethod::rec2, TableMethod::rec3}) {
    if (tag == to_string(m)) return m;
  }
  throw InvalidArgument("unknown table method '" + std::string(tag) + "'");
}

RefinedTable::RefinedTable(int n, TableMethod method, std::vector<Count> counts)
    : n_(n), method_(method), counts_(std::move(counts)) {
  require_n(n);
  if (counts_.size() != static_cast<std::size_t>(n) * n) {
    throw InvalidArgument("refined table needs n*n cells");
  }
}

const Count& RefinedTable::at(int d, int k) const {
  if (d < 0 || d >= n_ || k < 1 || k > n_) return kZero;
  return counts_[cell(n_, d, k)];
}

Count RefinedTable::row_sum(int d) const {
  Count s = 0;
  for (int k = 1; k <= n_; ++k) s += at(d, k);
  return s;
}

Count RefinedTable::column_sum(int k) const {
  Count s = 0;
  for (int d = 0; d < n_; ++d) s += at(d, k);
  return s;
}

std::vector<Count> RefinedTable::euler_row() const {
  std::vector<Count> row(n_);
  for (int d = 0; d < n_; ++d) row[d] = row_sum(d);
  return row;
}

Count eulerian_sum(int n, int d) {
  require_n(n);
  Count sum = 0;
  for (int j = 0; j <= d; ++j) {
    Count term = binomial(n + 1, d - j) * ipow(j + 1, n);
    if ((d - j) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

Count eulerian(int n, int d) {
  require_n(n);
  if (d < 0 || d >= n) return 0;
  return eulerian_sum(n, d);
}

std::vector<Count> euler_row(int n) {
  require_n(n);
  std::vector<Count> row(n);
  for (int d = 0; d < n; ++d) row[d] = eulerian_sum(n, d);
  return row;
}

Count refined_first_sum(int n, int d, int k) {
  require_n(n);
  require_k(n, k);
  Count sum = 0;
  for (int j = 0; j <= d; ++j) {
    Count term = binomial(n, d - j) * ipow(j, k - 1) * ipow(j + 1, n - k);
    if ((d - j) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

Count refined_first(int n, int d, int k) {
  require_n(n);
  require_k(n, k);
  if (d < 0 || d >= n) return 0;
  return refined_first_sum(n, d, k);
}

Count refined_last(int n, int d, int k) {
  require_n(n);
  require_k(n, k);
  if (d < 0 || d >= n) return 0;
  return refined_first_sum(n, n - 1 - d, k);
}

RefinedTable build_refined_table(int n, TableMethod method, Exec exec) {
  require_n(n);
  if (method == TableMethod::closed_form) {
    return RefinedTable(n, method, closed_form_cells(n, exec));
  }
  RefinedTable t = base_table(method);
  while (t.n() < n) t = step(t, method);
  return t;
}

std::shared_ptr<const RefinedTable> refined_table(int n, TableMethod method) {
  require_n(n);
  static std::mutex mu;
  static std::map<std::pair<int, TableMethod>, std::shared_ptr<const RefinedTable>> cache;

  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find({n, method}); it != cache.end()) return it->second;

  if (method == TableMethod::closed_form) {
    auto t = std::make_shared<const RefinedTable>(build_refined_table(n, method));
    cache.emplace(std::make_pair(n, method), t);
    return t;
  }
  // Recurrences climb from the largest cached predecessor.
  int m = n - 1;
  std::shared_ptr<const RefinedTable> prev;
  for (; m >= 1; --m) {
    if (auto it = cache.find({m, method}); it != cache.end()) {
      prev = it->second;
      break;
    }
  }
  if (!prev) {
    prev = std::make_shared<const RefinedTable>(base_table(method));
    cache.emplace(std::make_pair(1, method), prev);
  }
  while (prev->n() < n) {
    auto next = std::make_shared<const RefinedTable>(step(*prev, method));
    cache.emplace(std::make_pair(next->n(), method), next);
    prev = std::move(next);
  }
  return prev;
}

Count both_ends(int n, int d, int k, int l) {
  if (n < 2) throw InvalidArgument("both_ends needs n >= 2");
  require_k(n, k);
  require_k(n, l);
  if (k == l) return 0;
  if (l > k) return refined_last(n - 1, d, l - k);
  return refined_first(n - 1, d - 1, k - l);
}

Count f_window(int n, long x) {
  require_n(n);
  // floor division for negative x
  long q = x / n;
  if (x % n != 0 && x < 0) --q;
  const long d = q + 1;
  const long k = n * q + n - x;
  if (d < 0 || d > n - 1 || k < 1 || k > n) return 0;
  return refined_first(n, static_cast<int>(d), static_cast<int>(k));
}

}  // namespace eulerref
