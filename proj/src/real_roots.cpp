#include "eulerref/real_roots.hpp"

#include <string>

#include "eulerref/errors.hpp"
#include "eulerref/exact_core.hpp"

namespace eulerref {

namespace {

const Poly kOneMinusX{1, -1};
const Poly kX{0, 1};

void require_tower(int u, int v, int cap) {
  if (u < 0 || v < 0) throw InvalidArgument("tower indices must be >= 0");
  if (u + v + 1 > cap) {
    throw ResourceLimit("tower_cap", cap,
                        "u + v + 1 = " + std::to_string(u + v + 1) + " exceeds tower_cap = " + std::to_string(cap));
  }
}

int sign_variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int variations_at(const std::vector<Poly>& chain, const Ratio& x) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const auto& p : chain) s.push_back(p.sign_at(x));
  return sign_variations(s);
}

int variations_at_infinity(const std::vector<Poly>& chain, bool negative) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const auto& p : chain) {
    int sg = sgn(p.leading());
    if (negative && p.degree() % 2 == 1) sg = -sg;
    s.push_back(sg);
  }
  return sign_variations(s);
}

Poly squarefree_part(const Poly& p) {
  const Poly g = gcd(p, p.derivative());
  if (g.degree() <= 0) return p.primitive();
  return p.divmod(g).first.primitive();
}

// Cauchy bound: every root has |r| < 1 + max |a_i / a_n|.
Ratio root_bound(const Poly& p) {
  Ratio m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Ratio r = abs(p.coeff(i) / p.leading());
    if (r > m) m = r;
  }
  return m + 1;
}

void isolate(const Poly& q, const std::vector<Poly>& chain, const Ratio& lo, const Ratio& hi,
             std::vector<RootInterval>& out) {
  const int count = count_roots_in(chain, lo, hi);
  if (count == 0) return;
  if (count == 1) {
    out.push_back({lo, hi});
    return;
  }
  // Split away from roots so every endpoint stays a non-root.
  static const Ratio fractions[] = {Ratio(1, 2), Ratio(1, 3), Ratio(2, 3), Ratio(1, 4), Ratio(3, 4), Ratio(2, 5)};
  for (const auto& t : fractions) {
    Ratio mid = lo + (hi - lo) * t;
    if (q.sign_at(mid) == 0) continue;
    isolate(q, chain, lo, mid, out);
    isolate(q, chain, mid, hi, out);
    return;
  }
  throw ConsistencyError("could not find a non-root split point");
}

void bisect_once(const Poly& q, RootInterval& r) {
  if (r.lo == r.hi) return;
  Ratio mid = (r.lo + r.hi) / 2;
  const int sm = q.sign_at(mid);
  if (sm == 0) {
    r.lo = r.hi = mid;
    return;
  }
  if (sm == q.sign_at(r.lo)) {
    r.lo = mid;
  } else {
    r.hi = mid;
  }
}

// a certainly precedes b
bool before(const RootInterval& a, const RootInterval& b) {
  if (a.hi < b.lo) return true;
  return a.hi == b.lo && !(a.lo == a.hi && b.lo == b.hi);
}

}  // namespace

HRep apply_Dx(const HRep& h) {
  const Poly& n = h.numerator;
  Poly num = kOneMinusX * (n + kX * n.derivative()) + Ratio(h.pole_order) * (kX * n);
  return {std::move(num), h.pole_order + 1};
}

HRep apply_xD(const HRep& h) {
  const Poly& n = h.numerator;
  Poly num = kX * n.derivative() * kOneMinusX + Ratio(h.pole_order) * (kX * n);
  return {std::move(num), h.pole_order + 1};
}

Poly c_poly(int u, int v, int cap) {
  require_tower(u, v, cap);
  const int n = u + v + 1;
  std::vector<Count> c(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) c[d] = refined_first(n, d, u + 1);
  return Poly::from_counts(c);
}

std::vector<HRep> h_tower(int u, int v, int cap) {
  require_tower(u, v, cap);
  std::vector<HRep> out;
  out.push_back({Poly{1}, 1});
  for (int i = 0; i < v; ++i) out.push_back(apply_Dx(out.back()));
  for (int i = 0; i < u; ++i) out.push_back(apply_xD(out.back()));
  for (const auto& h : out) {
    // c_{u,v}(1) = (u+v)! != 0, so no factor (1-x) may survive.
    if (h.numerator.eval(Ratio(1)) == 0) throw ConsistencyError("tower numerator vanishes at x = 1");
  }
  return out;
}

HRep h_numerator(int u, int v, int cap) { return h_tower(u, v, cap).back(); }

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(p.primitive());
  Poly d = p.derivative().primitive();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  for (;;) {
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    Poly r = a.divmod(b).second;
    if (r.is_zero()) break;
    chain.push_back((r * Ratio(-1)).primitive());
  }
  return chain;
}

int count_roots_in(const std::vector<Poly>& chain, const Ratio& lo, const Ratio& hi) {
  return variations_at(chain, lo) - variations_at(chain, hi);
}

RootVerdict sturm_distinct_real_roots(const Poly& p) {
  if (p.is_zero()) throw InvalidArgument("zero polynomial has no finite root count");
  RootVerdict r;
  r.degree = p.degree();
  if (r.degree == 0) return r;
  const Poly g = gcd(p, p.derivative());
  r.squarefree = g.degree() == 0;
  const Poly q = r.squarefree ? p.primitive() : p.divmod(g).first.primitive();
  const auto chain = sturm_chain(q);
  r.distinct_real_roots = variations_at_infinity(chain, true) - variations_at_infinity(chain, false);
  r.verdict = r.squarefree && r.distinct_real_roots == r.degree;
  return r;
}

std::vector<RootInterval> isolate_real_roots(const Poly& p) {
  if (p.is_zero()) throw InvalidArgument("zero polynomial has no isolated roots");
  std::vector<RootInterval> out;
  if (p.degree() == 0) return out;
  const Poly q = squarefree_part(p);
  const auto chain = sturm_chain(q);
  const Ratio b = root_bound(q);
  isolate(q, chain, -b, b, out);
  return out;
}

void refine_roots(const Poly& p, std::vector<RootInterval>& roots, const Ratio& width) {
  const Poly q = squarefree_part(p);
  for (auto& r : roots) {
    while (r.hi - r.lo >= width) bisect_once(q, r);
  }
}

bool interlaces_from_left(const Poly& child, const Poly& parent) {
  if (child.is_zero() || parent.is_zero()) return false;
  if (!sturm_distinct_real_roots(child).squarefree || !sturm_distinct_real_roots(parent).squarefree) return false;
  const auto c = isolate_real_roots(child);
  const auto p = isolate_real_roots(parent);
  if (c.size() != p.size()) return false;
  const Poly qc = squarefree_part(child), qp = squarefree_part(parent);

  // Expected order c_1, p_1, c_2, p_2, ...; each entry remembers its polynomial.
  struct Entry {
    RootInterval r;
    const Poly* q;
  };
  std::vector<Entry> seq;
  for (std::size_t i = 0; i < c.size(); ++i) {
    seq.push_back({c[i], &qc});
    seq.push_back({p[i], &qp});
  }
  for (int round = 0; round < 400; ++round) {
    bool settled = true;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      auto& a = seq[i];
      auto& b = seq[i + 1];
      if (before(a.r, b.r)) continue;
      if (before(b.r, a.r)) return false;
      settled = false;
      bisect_once(*a.q, a.r);
      bisect_once(*b.q, b.r);
    }
    if (settled) return true;
  }
  return false;
}

bool tower_interlaces(int u, int v) {
  const auto tower = h_tower(u, v);
  for (std::size_t i = 1; i < tower.size(); ++i) {
    const auto& parent = tower[i - 1];
    const auto& child = tower[i];
    const bool dx_step = i <= static_cast<std::size_t>(v);
    if (dx_step) {
      // h_{0,i-1} -> h_{0,i}; Rolle's argument needs v >= 1 in the parent.
      if (i - 1 == 0) continue;
      if (!interlaces_from_left(child.numerator, kX * parent.numerator)) return false;
    } else {
      if (!interlaces_from_left(child.numerator.shift(-1), parent.numerator)) return false;
    }
  }
  return true;
}

Poly reverse_descent_poly(const Poly& p, int n) {
  if (n < 1) throw InvalidArgument("window n must be >= 1");
  if (p.degree() > n - 1) throw InvalidArgument("degree exceeds the reversal window n - 1");
  std::vector<Ratio> c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) c[i] = p.coeff(n - 1 - i);
  return Poly(std::move(c));
}

RootVerdict check_neggers_first_fixed(int n, int k, int cap) {
  if (n < 1 || k < 1 || k > n) throw InvalidArgument("need 1 <= k <= n");
  return sturm_distinct_real_roots(c_poly(k - 1, n - k, cap));
}

Poly both_fixed_descent_poly(int n, int k, int l) {
  std::vector<Count> c(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) c[d] = both_ends(n, d, k, l);
  return Poly::from_counts(c);
}

Poly both_fixed_reduced_poly(int n, int k, int l) {
  if (n < 2) throw InvalidArgument("both-fixed posets need n >= 2");
  if (k < 1 || k > n || l < 1 || l > n) throw InvalidArgument("k and l must lie in [1, n]");
  if (k == l) throw InvalidArgument("k == l: no permutation begins and ends with the same value");
  const Poly direct = both_fixed_descent_poly(n, k, l);
  if (l > k) {
    const int m = l - k;
    // last-fixed polynomial of S_{n-1}: the upside-down star with m on top
    Poly reduced = reverse_descent_poly(c_poly(m - 1, n - 1 - m), n - 1);
    if (!(reduced == direct)) throw ConsistencyError("rollback reduction disagrees (l > k)");
    return reduced;
  }
  const int m = k - l;
  Poly reduced = c_poly(m - 1, n - 1 - m);
  if (!(reduced.shift(1) == direct)) throw ConsistencyError("rollback reduction disagrees (k > l)");
  return reduced;
}

RootVerdict check_neggers_both_fixed(int n, int k, int l, int cap) {
  if (n > cap) {
    throw ResourceLimit("tower_cap", cap, "n = " + std::to_string(n) + " exceeds tower_cap = " + std::to_string(cap));
  }
  return sturm_distinct_real_roots(both_fixed_reduced_poly(n, k, l));
}

}  // namespace eulerref
