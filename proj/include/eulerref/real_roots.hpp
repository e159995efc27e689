#pragma once

#include <vector>

#include "eulerref/numeric.hpp"
#include "eulerref/poly.hpp"

namespace eulerref {

inline constexpr int kDefaultTowerCap = 40;

/// numerator / (1 - x)^pole_order
struct HRep {
  Poly numerator;
  int pole_order;

  bool operator==(const HRep&) const = default;
};

/// (D x) h: numerator becomes (1-x)(N + x N') + m x N, pole order m + 1.
HRep apply_Dx(const HRep& h);
/// (x D) h: numerator becomes x N' (1-x) + m x N, pole order m + 1.
HRep apply_xD(const HRep& h);

/// sum_d <u+v+1, d>_{u+1} x^d, read from the refined counts. Throws
/// ResourceLimit when u + v + 1 > cap.
Poly c_poly(int u, int v, int cap = kDefaultTowerCap);

/// h_{u,v} built from 1/(1-x) by v steps of Dx then u steps of xD.
HRep h_numerator(int u, int v, int cap = kDefaultTowerCap);

/// Every intermediate h along that path: h_{0,0}, ..., h_{0,v}, h_{1,v},
/// ..., h_{u,v}.
std::vector<HRep> h_tower(int u, int v, int cap = kDefaultTowerCap);

struct RootVerdict {
  int degree = 0;
  int distinct_real_roots = 0;
  bool squarefree = true;
  bool verdict = true;

  bool operator==(const RootVerdict&) const = default;
};

/// Distinct real roots via an exact Sturm chain on the squarefree part.
/// Throws InvalidArgument for the zero polynomial.
RootVerdict sturm_distinct_real_roots(const Poly& p);

/// Sturm chain of p (assumed squarefree), each member made primitive.
std::vector<Poly> sturm_chain(const Poly& p);
/// Number of distinct real roots of squarefree p in (lo, hi]; lo and hi
/// must not be roots.
int count_roots_in(const std::vector<Poly>& chain, const Ratio& lo, const Ratio& hi);

/// Isolating intervals, sorted, one per distinct real root. The root lies
/// strictly inside (lo, hi), or equals lo when lo == hi (an exact hit during
/// refinement).
struct RootInterval {
  Ratio lo;
  Ratio hi;
};
std::vector<RootInterval> isolate_real_roots(const Poly& p);

/// Bisect each interval until its width is below `width`.
void refine_roots(const Poly& p, std::vector<RootInterval>& roots, const Ratio& width);

/// True when child roots c_1 < p_1 < c_2 < p_2 < ... < c_m < p_m strictly,
/// decided on refined isolating intervals (both inputs squarefree).
bool interlaces_from_left(const Poly& child, const Poly& parent);

/// Interlacing for every step of the tower to h_{u,v} where the Rolle
/// argument applies (Dx steps from h_{0,v} with v >= 1, and all xD steps).
bool tower_interlaces(int u, int v);

/// x^(n-1) p(1/x). Needs deg p <= n - 1.
Poly reverse_descent_poly(const Poly& p, int n);

/// Sturm verdict for the star poset with k at the bottom: c_{k-1, n-k}.
RootVerdict check_neggers_first_fixed(int n, int k, int cap = kDefaultTowerCap);

/// sum_d <n,d>_k^l x^d, counted directly through both_ends.
Poly both_fixed_descent_poly(int n, int k, int l);

/// The both-ends polynomial reduced to one end of S_(n-1): for l = k + m the
/// last-fixed polynomial sum_d <n-1,d>^m x^d, for k = l + m the first-fixed
/// c_{m-1, n-1-m}. Cross-checked against both_fixed_descent_poly.
Poly both_fixed_reduced_poly(int n, int k, int l);

/// Sturm verdict of both_fixed_reduced_poly. Throws InvalidArgument for k == l.
RootVerdict check_neggers_both_fixed(int n, int k, int l, int cap = kDefaultTowerCap);

}  // namespace eulerref
