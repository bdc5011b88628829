#ifndef HOPFIND_FUSIONINDEX_HPP
#define HOPFIND_FUSIONINDEX_HPP

#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include "hopfind/indicators.hpp"
#include "hopfind/intervals.hpp"
#include "hopfind/repmod.hpp"

namespace hopfind {

/// Perron-Frobenius data of the left-multiplication matrix of a character
/// on the character ring.
struct FusionAnalysis {
  std::string chi_id;
  Matrix<Rat> matrix;                    // full k x k fusion matrix
  std::vector<long> reachable;           // closure from the trivial index
  bool indecomposable_on_reachable = false;
  std::vector<std::vector<long>> blocks; // strongly connected components
  long perron = 0;                       // = deg(chi), verified
  long index = 0;                        // index of imprimitivity
  std::optional<long> gv_order;
};

namespace detail {

// strongly connected components of the digraph with edge j -> i when
// a(i, j) > 0, restricted to the given vertex set (Kosaraju)
inline std::vector<std::vector<long>> sccs(const Matrix<Rat>& a, const std::vector<long>& verts) {
  std::map<long, long> pos;
  for (size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<long>(i);
  long n = static_cast<long>(verts.size());
  std::vector<std::vector<long>> fwd(n), bwd(n);
  for (long u = 0; u < n; ++u)
    for (long v = 0; v < n; ++v)
      if (a(verts[v], verts[u]) != 0) { // edge u -> v
        fwd[u].push_back(v);
        bwd[v].push_back(u);
      }
  std::vector<bool> seen(n, false);
  std::vector<long> order;
  std::function<void(long)> dfs1 = [&](long u) {
    seen[u] = true;
    for (long v : fwd[u])
      if (!seen[v]) dfs1(v);
    order.push_back(u);
  };
  for (long u = 0; u < n; ++u)
    if (!seen[u]) dfs1(u);
  std::vector<long> comp(n, -1);
  long nc = 0;
  std::function<void(long)> dfs2 = [&](long u) {
    comp[u] = nc;
    for (long v : bwd[u])
      if (comp[v] < 0) dfs2(v);
  };
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (comp[*it] < 0) {
      dfs2(*it);
      ++nc;
    }
  std::vector<std::vector<long>> out(nc);
  for (long u = 0; u < n; ++u) out[comp[u]].push_back(verts[u]);
  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

// gcd of directed cycle lengths through the component of v0 (the period)
inline long digraph_period(const Matrix<Rat>& a, const std::vector<long>& comp) {
  std::map<long, long> dist;
  std::vector<long> queue{comp.front()};
  dist[comp.front()] = 0;
  std::set<long> in_comp(comp.begin(), comp.end());
  for (size_t head = 0; head < queue.size(); ++head) {
    long u = queue[head];
    for (long v : comp)
      if (a(v, u) != 0 && !dist.count(v)) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  long g = 0;
  for (long u : comp)
    for (long v : comp)
      if (a(v, u) != 0) g = igcd(g, std::abs(dist[u] + 1 - dist[v]));
  return g == 0 ? 1 : g;
}

} // namespace detail

/// The full analysis: reachability, block structure, Perron verification,
/// and the graph-theoretic index of imprimitivity.
inline FusionAnalysis analyze(const CharRing& ring, const Character& chi) {
  FusionAnalysis fa;
  fa.matrix = fusion_matrix(ring, chi); // column dimension law re-checked inside
  long k = ring.size();

  // seeds: trivial character, the constituents of chi, and their duals
  AlgElem lam = ring.alg->integral();
  std::set<long> seeds{0};
  for (long i = 0; i < k; ++i) {
    CycNum mult = char_eval(char_mul(chi, char_dual(ring.irreducibles[i])), lam);
    if (!mult.is_zero()) {
      seeds.insert(i);
      for (long j = 0; j < k; ++j)
        if (ring.irreducibles[j] == char_dual(ring.irreducibles[i])) seeds.insert(j);
    }
  }
  std::vector<long> queue(seeds.begin(), seeds.end());
  std::set<long> reach(seeds.begin(), seeds.end());
  for (size_t head = 0; head < queue.size(); ++head) {
    long j = queue[head];
    for (long i = 0; i < k; ++i)
      if (fa.matrix(i, j) != 0 && !reach.count(i)) {
        reach.insert(i);
        queue.push_back(i);
      }
  }
  fa.reachable.assign(reach.begin(), reach.end());

  fa.blocks = detail::sccs(fa.matrix, fa.reachable);
  fa.indecomposable_on_reachable = fa.blocks.size() == 1;

  // block-diagonal normal form on the reachable set: both off-diagonal
  // rectangles must vanish after the component reordering
  for (size_t b1 = 0; b1 < fa.blocks.size(); ++b1)
    for (size_t b2 = 0; b2 < fa.blocks.size(); ++b2) {
      if (b1 == b2) continue;
      for (long i : fa.blocks[b1])
        for (long j : fa.blocks[b2])
          if (fa.matrix(i, j) != 0)
            throw invariant_error("analyze: reachable block form is not block diagonal");
    }

  // Perron eigenvalue = deg(chi): exact singularity of (A_reach - deg I)
  auto dchi = is_rational_integer(chi.degree);
  if (!dchi) throw invariant_error("analyze: character degree not integral");
  long deg = static_cast<long>(dchi->get_si());
  long r = static_cast<long>(fa.reachable.size());
  Matrix<Rat> shifted(r, r);
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < r; ++j) {
      shifted(i, j) = fa.matrix(fa.reachable[i], fa.reachable[j]);
      if (i == j) shifted(i, j) -= Rat(deg);
    }
  if (determinant(shifted) != 0)
    throw invariant_error("analyze: deg(chi) is not an eigenvalue of the reachable block");
  // no eigenvalue exceeds deg in modulus: conjugating by diag(n_i) yields
  // all column sums equal to deg (the dimension law restricted to the
  // reachable block), so the 1-norm bounds the spectral radius by deg
  for (long j = 0; j < r; ++j) {
    Rat acc(0);
    for (long i = 0; i < r; ++i)
      acc += Rat(ring.degrees[fa.reachable[i]]) * fa.matrix(fa.reachable[i], fa.reachable[j]);
    if (acc != Rat(deg) * Rat(ring.degrees[fa.reachable[j]]))
      throw invariant_error("analyze: reachable column sums violate the dimension law");
  }
  fa.perron = deg;

  // index of imprimitivity: cycle gcd through the component of the
  // constituents (for the indecomposable case, the whole reachable set)
  const std::vector<long>* comp = &fa.blocks.front();
  for (const auto& b : fa.blocks)
    if (std::binary_search(b.begin(), b.end(), *reach.begin())) comp = &b;
  fa.index = detail::digraph_period(fa.matrix, *comp);
  return fa;
}

/// Exact count of eigenvalues of modulus = perron for small matrices:
/// divide out the integral factors lambda^phi(t) Phi_t(x/lambda), then
/// certify by interval arithmetic that no further root lies on the circle.
inline long eigenvalue_count_oracle(const Matrix<Rat>& a_reach, long perron) {
  std::vector<Rat> cp = charpoly(a_reach);
  long count = 0;
  auto divide_exactly = [](std::vector<Rat>& p, const std::vector<Rat>& q) -> bool {
    if (p.size() < q.size()) return false;
    std::vector<Rat> quot(p.size() - q.size() + 1, Rat(0));
    std::vector<Rat> rem = p;
    for (long i = static_cast<long>(quot.size()) - 1; i >= 0; --i) {
      Rat c = rem[i + q.size() - 1] / q.back();
      quot[i] = c;
      if (c != 0)
        for (size_t j = 0; j < q.size(); ++j) rem[i + j] -= c * q[j];
    }
    for (const Rat& c : rem)
      if (c != 0) return false;
    p = std::move(quot);
    return true;
  };
  for (long t = 1; t <= 64; ++t) {
    long phi = euler_phi(t);
    if (phi > static_cast<long>(cp.size()) - 1) continue;
    const std::vector<Int>& phit = detail::cyclotomic_poly(t);
    std::vector<Rat> factor(phit.size());
    for (size_t i = 0; i < phit.size(); ++i) {
      // lambda^{phi(t)} Phi_t(x / lambda): coefficient of x^i is
      // phit[i] * lambda^{phi(t) - i}
      Rat scale(1);
      for (size_t s = i; s < phit.size() - 1; ++s) scale *= Rat(perron);
      factor[i] = Rat(phit[i]) * scale;
    }
    if (divide_exactly(cp, factor)) {
      count += phi;
      // Perron circle eigenvalues of an indecomposable matrix are simple
      std::vector<Rat> again = cp;
      if (divide_exactly(again, factor))
        throw invariant_error("eigenvalue_count_oracle: repeated eigenvalue on the circle");
    }
  }
  // remaining polynomial must avoid the circle |x| = perron entirely
  if (cp.size() > 1) {
    std::vector<Int> ip(cp.size());
    Int denom_lcm = 1;
    for (const Rat& c : cp) denom_lcm = lcm(denom_lcm, Int(c.get_den()));
    for (size_t i = 0; i < cp.size(); ++i) {
      Rat scaled = cp[i] * Rat(denom_lcm);
      ip[i] = scaled.get_num();
    }
    certify_no_roots_on_circle(ip, perron);
  }
  return count;
}

/// Central grouplikes acting on V by a scalar (the group G_V), available
/// when reachability covers every simple (the Hopf ideal shadow is zero).
inline std::optional<long> gv_group(const HopfAlg& h, const CharRing& ring, const Character& chi,
                                    const FusionAnalysis& fa, unsigned long seed = kDefaultSeed) {
  if (static_cast<long>(fa.reachable.size()) != ring.size()) return std::nullopt;
  std::vector<AlgElem> central;
  try {
    central = central_grouplikes(h, seed);
  } catch (const unsupported_error&) {
    return std::nullopt;
  }
  auto dchi = is_rational_integer(chi.degree);
  if (!dchi) throw invariant_error("gv_group: degree not integral");
  long count = 0;
  for (const AlgElem& g : central) {
    // scalar test by character proportionality: chi(h g) = xi chi(h) with
    // xi = chi(g) / deg
    CycNum xi = char_eval(chi, g) * inv(chi.degree);
    bool scalar = true;
    for (long i = 0; i < h.dim() && scalar; ++i) {
      AlgElem hg = mult(h.basis_elem(i), g);
      if (char_eval(chi, hg) != xi * chi.value(i)) scalar = false;
    }
    if (scalar) ++count;
  }
  return count;
}

struct DivisibilityReport {
  long index = 0;
  long exp_h = 0;
  long ord = 0;
  long ring_dim = 0;
  bool index_divides_exp = false;
  bool index_divides_ord = false;
  bool ord_within_ring_dim = false;
};

/// ind(A) divides exp(H) and ord(V); ord(V) <= dim Ch(H).
inline DivisibilityReport divisibility_report(const HopfAlg& h, const CharRing& ring,
                                              const Character& chi,
                                              unsigned long seed = kDefaultSeed) {
  FusionAnalysis fa = analyze(ring, chi);
  DivisibilityReport rep;
  rep.index = fa.index;
  rep.exp_h = algebra_exponent(h, 0, seed).value;
  auto [ord, mult] = order_and_multiplicity(ring, chi);
  (void)mult;
  rep.ord = ord;
  rep.ring_dim = ring.size();
  rep.index_divides_exp = rep.exp_h % fa.index == 0;
  rep.index_divides_ord = ord % fa.index == 0;
  rep.ord_within_ring_dim = ord <= ring.size();
  if (!rep.index_divides_exp || !rep.index_divides_ord || !rep.ord_within_ring_dim)
    throw invariant_error("divisibility_report: divisibility relation fails");
  return rep;
}

/// GraphViz rendering of the fusion digraph.
inline std::string fusion_digraph_dot(const CharRing& ring, const FusionAnalysis& fa) {
  std::ostringstream os;
  os << "digraph fusion {\n";
  for (long i = 0; i < ring.size(); ++i)
    os << "  n" << i << " [label=\"chi" << i << " (d=" << ring.degrees[i] << ")\"];\n";
  for (long j = 0; j < ring.size(); ++j)
    for (long i = 0; i < ring.size(); ++i)
      if (fa.matrix(i, j) != 0)
        os << "  n" << j << " -> n" << i << " [label=\"" << fa.matrix(i, j).get_str() << "\"];\n";
  os << "}\n";
  return os.str();
}

} // namespace hopfind

#endif
