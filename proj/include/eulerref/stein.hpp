#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "eulerref/numeric.hpp"
#include "eulerref/oracle.hpp"
#include "eulerref/parallel.hpp"

namespace eulerref {

using Rng = std::mt19937_64;

inline constexpr int kDefaultPairCap = 8;

/// Fisher-Yates shuffle of 1..n.
Perm uniform_perm(Rng& rng, int n);
/// Uniform over the C(n, 2) transpositions, returned as a permutation of
/// values. Throws InvalidArgument for n < 2.
Perm uniform_transposition(Rng& rng, int n);

/// counts[a][b] = #{(pi, tau) : Des(pi) = a, Des(tau pi) = b} over all pi
/// in S_n and all transpositions tau.
struct PairMatrix {
  int n;
  std::vector<std::vector<Count>> counts;

  bool symmetric() const;
  Count total() const;
  bool operator==(const PairMatrix&) const = default;
};

/// Throws ResourceLimit above `cap`.
PairMatrix exact_joint_dd(int n, int cap = kDefaultPairCap, Exec exec = Exec::parallel);

/// (2(n-1) - 4d) / n
Ratio drift_formula(int n, int d);

/// E[D* - D | D = d] from the enumerated pair matrix; throws
/// ConsistencyError if it differs from drift_formula.
Ratio exact_drift(int n, int d);

/// (pi(i) - pi(i+1)) / C(n,2) + 2 (1 - 2 [pi(i) > pi(i+1)]) / (n - 1).
Ratio per_position_drift(const Perm& p, int i);

/// Sum of per-position drifts in telescoped form:
/// (pi(1) - pi(n)) / C(n,2) + 2 - 4 Des(pi) / (n - 1).
Ratio telescoped_drift(const Perm& p);

/// E[Des(tau pi) - Des(pi)] over all transpositions tau, for fixed pi.
Ratio enumerated_drift(const Perm& p);

/// 4 / n.
Ratio lambda_of(int n);

/// Exact check, for 2 <= n <= cap, that the standardized drift is -lambda W,
/// i.e. exact_drift(n, d) == -lambda (d - mu) for every d.
bool verify_lambda(int n, int cap = kDefaultPairCap);

struct DriftReport {
  int n;
  int d;
  std::int64_t samples;
  double mean;
  double std_error;
  std::uint64_t seed;
  int workers;
  Ratio exact_target;
  double acceptance_rate;  // from the probe run

  bool operator==(const DriftReport&) const = default;
};

/// Rejection-sampled Monte Carlo estimate of E[D* - D | D = d]. Worker w
/// draws from an independent stream seeded by (seed, w) and takes a fixed
/// share of the samples, so results are reproducible for a fixed worker
/// count. Throws DomainError when the acceptance rate of a 10^5-draw probe
/// is below 10^-4.
DriftReport mc_drift(int n, int d, std::int64_t samples, std::uint64_t seed, int workers = 1,
                     Exec exec = Exec::parallel);

/// Independent generator for worker `index` under master `seed`.
Rng worker_stream(std::uint64_t seed, std::uint64_t index);

}  // namespace eulerref
