#include "eulerref/stein.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>

#include "eulerref/errors.hpp"

namespace eulerref {

namespace {

constexpr std::int64_t kProbeDraws = 100000;
constexpr double kMinAcceptance = 1e-4;
constexpr std::uint64_t kProbeStream = ~std::uint64_t{0};

void shuffle_values(Rng& rng, std::vector<int>& v) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(v[i - 1], v[pick(rng)]);
  }
}

std::pair<int, int> draw_pair(Rng& rng, int n) {
  std::uniform_int_distribution<int> first(1, n);
  std::uniform_int_distribution<int> second(1, n - 1);
  const int a = first(rng);
  int b = second(rng);
  if (b >= a) ++b;
  return {std::min(a, b), std::max(a, b)};
}

// Descents after swapping the values a and b in place (restored on return).
int descents_after_swap(std::vector<int>& v, std::vector<int>& pos, int a, int b) {
  std::swap(v[pos[a]], v[pos[b]]);
  const int d = descent_count(v);
  std::swap(v[pos[a]], v[pos[b]]);
  return d;
}

using PairHistogram = std::vector<std::uint64_t>;

void accumulate_pairs(std::span<const int> perm, int n, PairHistogram& h) {
  std::vector<int> v(perm.begin(), perm.end());
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) pos[v[i]] = i;
  const int before = descent_count(v);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) ++h[static_cast<std::size_t>(before) * n + descents_after_swap(v, pos, a, b)];
}

PairMatrix to_matrix(int n, const PairHistogram& h) {
  PairMatrix m{n, std::vector<std::vector<Count>>(n, std::vector<Count>(n))};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m.counts[a][b] = static_cast<unsigned long>(h[static_cast<std::size_t>(a) * n + b]);
  return m;
}

std::shared_ptr<const PairMatrix> cached_pairs(int n, int cap) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const PairMatrix>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  auto m = std::make_shared<const PairMatrix>(exact_joint_dd(n, cap));
  cache.emplace(n, m);
  return m;
}

struct WorkerTally {
  std::int64_t count = 0;
  std::int64_t sum = 0;
  std::int64_t sum_sq = 0;
};

WorkerTally run_worker(int n, int d, std::int64_t share, Rng rng) {
  WorkerTally t;
  std::vector<int> v(static_cast<std::size_t>(n));
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  while (t.count < share) {
    std::iota(v.begin(), v.end(), 1);
    shuffle_values(rng, v);
    if (descent_count(v) != d) continue;
    for (int i = 0; i < n; ++i) pos[v[i]] = i;
    const auto [a, b] = draw_pair(rng, n);
    const std::int64_t delta = descents_after_swap(v, pos, a, b) - d;
    ++t.count;
    t.sum += delta;
    t.sum_sq += delta * delta;
  }
  return t;
}

}  // namespace

Rng worker_stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

Perm uniform_perm(Rng& rng, int n) {
  if (n < 1) throw InvalidArgument("uniform_perm needs n >= 1");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  shuffle_values(rng, v);
  return Perm(std::move(v));
}

Perm uniform_transposition(Rng& rng, int n) {
  if (n < 2) throw InvalidArgument("transpositions need n >= 2");
  const auto [a, b] = draw_pair(rng, n);
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::swap(v[a - 1], v[b - 1]);
  return Perm(std::move(v));
}

bool PairMatrix::symmetric() const {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (counts[a][b] != counts[b][a]) return false;
  return true;
}

Count PairMatrix::total() const {
  Count s = 0;
  for (const auto& row : counts)
    for (const auto& c : row) s += c;
  return s;
}

PairMatrix exact_joint_dd(int n, int cap, Exec exec) {
  if (n < 2) throw InvalidArgument("exact_joint_dd needs n >= 2");
  if (n > cap) {
    throw ResourceLimit("pair_cap", cap,
                        "exact_joint_dd: n = " + std::to_string(n) + " exceeds pair_cap = " + std::to_string(cap));
  }
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  if (exec == Exec::serial) {
    PairHistogram h(cells, 0);
    for_each_permutation(n, [&](std::span<const int> v) { accumulate_pairs(v, n, h); });
    return to_matrix(n, h);
  }

  std::vector<PairHistogram> parts(static_cast<std::size_t>(n), PairHistogram(cells, 0));
#pragma omp parallel for schedule(dynamic, 1)
  for (int first = 1; first <= n; ++first) {
    std::vector<int> v;
    v.push_back(first);
    for (int i = 1; i <= n; ++i)
      if (i != first) v.push_back(i);
    do {
      accumulate_pairs(v, n, parts[first - 1]);
    } while (std::next_permutation(v.begin() + 1, v.end()));
  }
  PairHistogram h(cells, 0);
  for (const auto& p : parts)
    for (std::size_t i = 0; i < cells; ++i) h[i] += p[i];
  return to_matrix(n, h);
}

Ratio drift_formula(int n, int d) {
  return make_ratio(2 * (n - 1) - 4 * d, n);
}

Ratio exact_drift(int n, int d) {
  const auto m = cached_pairs(n, kDefaultPairCap);
  if (d < 0 || d >= n) throw UndefinedDistribution("no permutation has " + std::to_string(d) + " descents");
  Count mass = 0, moved = 0;
  for (int b = 0; b < n; ++b) {
    mass += m->counts[d][b];
    moved += (b - d) * m->counts[d][b];
  }
  if (mass == 0) throw UndefinedDistribution("empty conditioning set");
  const Ratio drift = make_ratio(moved, mass);
  if (drift != drift_formula(n, d)) {
    throw ConsistencyError("enumerated drift " + drift.get_str() + " differs from (2(n-1)-4d)/n at n = " +
                           std::to_string(n) + ", d = " + std::to_string(d));
  }
  return drift;
}

Ratio per_position_drift(const Perm& p, int i) {
  const int n = p.size();
  if (i < 1 || i > n - 1) throw InvalidArgument("position must lie in [1, n-1]");
  const Ratio pairs(binomial(n, 2));
  const int descent = p(i) > p(i + 1) ? 1 : 0;
  return Ratio(p(i) - p(i + 1)) / pairs + make_ratio(2 * (1 - 2 * descent), n - 1);
}

Ratio telescoped_drift(const Perm& p) {
  const int n = p.size();
  if (n < 2) throw InvalidArgument("drift needs n >= 2");
  const Ratio pairs(binomial(n, 2));
  return Ratio(p.first() - p.last()) / pairs + 2 - make_ratio(4 * descent_count(p), n - 1);
}

Ratio enumerated_drift(const Perm& p) {
  const int n = p.size();
  if (n < 2) throw InvalidArgument("drift needs n >= 2");
  std::vector<int> v(p.values().begin(), p.values().end());
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) pos[v[i]] = i;
  const int before = descent_count(v);
  long total = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) total += descents_after_swap(v, pos, a, b) - before;
  return make_ratio(total, binomial(n, 2));
}

Ratio lambda_of(int n) {
  if (n < 1) throw InvalidArgument("lambda needs n >= 1");
  return make_ratio(4, n);
}

bool verify_lambda(int n, int cap) {
  if (n < 2) throw InvalidArgument("lambda verification needs n >= 2");
  if (n > cap) {
    throw ResourceLimit("pair_cap", cap, "verify_lambda: n = " + std::to_string(n) + " exceeds pair_cap");
  }
  const Ratio mu = make_ratio(n - 1, 2);
  const Ratio lambda = lambda_of(n);
  for (int d = 0; d < n; ++d) {
    // sigma cancels: E[W* - W | W] = -lambda W  <=>  drift = -lambda (d - mu)
    if (exact_drift(n, d) != -lambda * (Ratio(d) - mu)) return false;
  }
  return true;
}

DriftReport mc_drift(int n, int d, std::int64_t samples, std::uint64_t seed, int workers, Exec exec) {
  if (n < 2) throw InvalidArgument("mc_drift needs n >= 2");
  if (d < 0 || d > n - 1) throw UndefinedDistribution("d must lie in [0, n-1]");
  if (samples < 1) throw InvalidArgument("samples must be >= 1");
  if (workers < 1) throw InvalidArgument("workers must be >= 1");

  Rng probe = worker_stream(seed, kProbeStream);
  std::int64_t hits = 0;
  std::vector<int> v(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < kProbeDraws; ++i) {
    std::iota(v.begin(), v.end(), 1);
    shuffle_values(probe, v);
    hits += descent_count(v) == d;
  }
  const double rate = static_cast<double>(hits) / static_cast<double>(kProbeDraws);
  if (rate < kMinAcceptance) {
    throw DomainError("rejection acceptance rate " + std::to_string(rate) + " is below 1e-4 at n = " +
                      std::to_string(n) + ", d = " + std::to_string(d) +
                      "; use exact enumeration (exact_drift) instead");
  }

  std::vector<WorkerTally> tallies(static_cast<std::size_t>(workers));
  auto share = [&](int w) { return samples / workers + (w < samples % workers ? 1 : 0); };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static, 1)
    for (int w = 0; w < workers; ++w) tallies[w] = run_worker(n, d, share(w), worker_stream(seed, w));
  } else {
    for (int w = 0; w < workers; ++w) tallies[w] = run_worker(n, d, share(w), worker_stream(seed, w));
  }

  WorkerTally all;
  for (const auto& t : tallies) {
    all.count += t.count;
    all.sum += t.sum;
    all.sum_sq += t.sum_sq;
  }
  const long double count = static_cast<long double>(all.count);
  const long double mean = static_cast<long double>(all.sum) / count;
  long double var = 0.0L;
  if (all.count > 1) {
    var = (static_cast<long double>(all.sum_sq) - count * mean * mean) / (count - 1.0L);
    if (var < 0.0L) var = 0.0L;
  }
  DriftReport r;
  r.n = n;
  r.d = d;
  r.samples = all.count;
  r.mean = static_cast<double>(mean);
  r.std_error = static_cast<double>(std::sqrt(var / count));
  r.seed = seed;
  r.workers = workers;
  r.exact_target = drift_formula(n, d);
  r.acceptance_rate = rate;
  return r;
}

}  // namespace eulerref
