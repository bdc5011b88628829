#ifndef HOPFIND_REPMOD_HPP
#define HOPFIND_REPMOD_HPP

#include <optional>

#include "hopfind/hopf.hpp"
#include "hopfind/matrix.hpp"

namespace hopfind {

inline constexpr long kCharRingDimCap = 512;
inline constexpr long kRotationGuard = 1000000; // d^m cap
inline constexpr long kDualCharpolyCap = 256;

/// Character of a module: the trace function as a sparse value vector on
/// the basis.  Characters of smash simples also carry their inducing data
/// (orbit representative and stabilizer character), which powers the
/// closed-form indicator route.
struct Character {
  const HopfAlg* alg = nullptr;
  std::map<long, CycNum> values;
  CycNum degree;

  // inducing data (present for all catalog simple characters)
  long orbit_rep = -1;
  std::vector<long> stab_embedding;  // stabilizer subgroup elements in F
  std::vector<CycNum> eta;           // stabilizer character values, same order
  CycNum eta_degree;

  CycNum value(long i) const {
    auto it = values.find(i);
    return it == values.end() ? CycNum(0) : it->second;
  }
  bool operator==(const Character& o) const { return values == o.values; }
};

inline CycNum char_eval(const Character& chi, const AlgElem& a) {
  CycNum acc;
  for (const auto& [i, c] : a.coeffs()) acc += c * chi.value(i);
  return acc;
}

/// (chi chi')(h) = chi(h_(1)) chi'(h_(2)); the delta coproduct pairs
/// supports with equal F-part.
inline Character char_mul(const Character& a, const Character& b) {
  if (a.alg != b.alg) throw domain_error("char_mul: different algebras");
  const HopfAlg* h = a.alg;
  Character out;
  out.alg = h;
  out.degree = a.degree * b.degree;
  std::map<long, CycNum>& vals = out.values;
  for (const auto& [i, ci] : a.values)
    for (const auto& [j, cj] : b.values) {
      if (h->x_part(i) != h->x_part(j)) continue;
      long target = h->index_of(h->grp_g().mul(h->g_part(i), h->g_part(j)), h->x_part(i));
      auto it = vals.find(target);
      if (it == vals.end()) vals.emplace(target, ci * cj);
      else {
        it->second += ci * cj;
        if (it->second.is_zero()) vals.erase(it);
      }
    }
  return out;
}

/// dual character: chi-bar = chi after the antipode
inline Character char_dual(const Character& a) {
  Character out;
  out.alg = a.alg;
  out.degree = a.degree;
  for (const auto& [i, c] : a.values) out.values[a.alg->antipode_basis(i)] = c;
  return out;
}

/// chi(Lambda) = dim of the invariant subspace; must be a nonnegative
/// rational integer.
inline long invariant_dim(const Character& chi) {
  CycNum v = char_eval(chi, chi.alg->integral());
  auto n = is_rational_integer(v);
  if (!n || *n < 0)
    throw invariant_error("invariant_dim: chi(Lambda) = " + to_string(v) +
                          " is not a nonnegative integer");
  return static_cast<long>(n->get_si());
}

/// Ordered list of the irreducible characters (counit first, then by
/// degree and lexicographic values), with the ring invariants verified.
struct CharRing {
  const HopfAlg* alg = nullptr;
  std::vector<Character> irreducibles;
  std::vector<long> degrees;

  long size() const { return static_cast<long>(irreducibles.size()); }
};

namespace detail {

inline bool char_lex_less(const Character& a, const Character& b, long dim) {
  for (long i = 0; i < dim; ++i) {
    int c = cyc_cmp(a.value(i), b.value(i));
    if (c != 0) return c < 0;
  }
  return false;
}

} // namespace detail

/// The complete list of irreducible characters.  Smash provenance (which
/// covers doubles, group algebras and dual group algebras through the
/// degenerate cases) induces them from stabilizer characters of orbit
/// representatives.
inline CharRing simple_characters(const HopfAlg& h, unsigned long seed = kDefaultSeed) {
  if (h.dim() > kCharRingDimCap)
    throw resource_error("simple_characters: dimension above the ring cap");
  const Group& g = h.grp_g();
  const Group& f = h.grp_f();
  const GroupAction& act = h.action();

  CharRing ring;
  ring.alg = &h;

  for (const Orbit& orbit : orbits(act)) {
    long g0 = orbit.representative;
    StabilizerData stab = stabilizer(act, g0);
    CharTable st = character_table(stab.subgroup, seed);
    for (long r = 0; r < st.num_chars(); ++r) {
      Character chi;
      chi.alg = &h;
      chi.orbit_rep = g0;
      chi.stab_embedding = stab.embedding;
      chi.eta.resize(stab.subgroup.order());
      for (long s = 0; s < stab.subgroup.order(); ++s) chi.eta[s] = st.value(r, s);
      chi.eta_degree = CycNum(st.degrees[r]);
      // chi(b_h (x) x) = (1/|F_g|) sum_{z in F, z.g = h} eta(z^{-1} x z)
      // for x in F_h, zero otherwise
      Rat w(1, stab.subgroup.order());
      w.canonicalize();
      std::map<long, long> stab_index; // F element -> subgroup index
      for (size_t s = 0; s < stab.embedding.size(); ++s)
        stab_index[stab.embedding[s]] = static_cast<long>(s);
      for (long hh : orbit.elements) {
        for (long x = 0; x < f.order(); ++x) {
          if (act.act(x, hh) != hh) continue; // x not in F_h
          CycNum acc;
          for (long z = 0; z < f.order(); ++z) {
            if (act.act(z, g0) != hh) continue;
            long w_elt = f.mul(f.mul(f.inv(z), x), z);
            auto it = stab_index.find(w_elt);
            if (it == stab_index.end())
              throw invariant_error("simple_characters: conjugate left the stabilizer");
            acc += chi.eta[it->second];
          }
          acc *= CycNum(w);
          if (!acc.is_zero()) chi.values[h.index_of(hh, x)] = acc;
        }
      }
      chi.degree = CycNum(static_cast<long>(orbit.elements.size()) * st.degrees[r]);
      ring.irreducibles.push_back(std::move(chi));
    }
  }

  // counit first, then by degree, then lexicographic values
  Character eps;
  {
    eps.alg = &h;
    for (long x = 0; x < f.order(); ++x) eps.values[h.index_of(g.id(), x)] = CycNum(1);
  }
  std::stable_sort(ring.irreducibles.begin(), ring.irreducibles.end(),
                   [&](const Character& a, const Character& b) {
                     bool ea = a.values == eps.values, eb = b.values == eps.values;
                     if (ea != eb) return ea;
                     int dc = cyc_cmp(a.degree, b.degree);
                     if (dc != 0) return dc < 0;
                     return detail::char_lex_less(a, b, h.dim());
                   });
  if (ring.irreducibles.empty() || ring.irreducibles[0].values != eps.values)
    throw invariant_error("simple_characters: counit character missing");

  ring.degrees.resize(ring.size());
  Int dim_sum = 0;
  for (long i = 0; i < ring.size(); ++i) {
    auto d = is_rational_integer(ring.irreducibles[i].degree);
    if (!d || *d <= 0) throw invariant_error("simple_characters: bad degree");
    ring.degrees[i] = static_cast<long>(d->get_si());
    dim_sum += *d * *d;
  }
  if (dim_sum != h.dim())
    throw invariant_error("simple_characters: sum of squared degrees mismatch");

  // orthogonality: (chi_i chibar_j)(Lambda) = delta_ij
  for (long i = 0; i < ring.size(); ++i)
    for (long j = 0; j < ring.size(); ++j) {
      CycNum v = char_eval(char_mul(ring.irreducibles[i], char_dual(ring.irreducibles[j])),
                           h.integral());
      if (v != CycNum(i == j ? 1 : 0))
        throw invariant_error("simple_characters: orthogonality fails");
    }
  return ring;
}

/// Character of the regular representation: the trace of left
/// multiplication, computed directly from the structure constants.
inline Character regular_character(const HopfAlg& h) {
  Character chi;
  chi.alg = &h;
  chi.degree = CycNum(h.dim());
  for (long i = 0; i < h.dim(); ++i) {
    long tr = 0;
    for (long j = 0; j < h.dim(); ++j)
      if (h.mult_basis(i, j) == j) ++tr;
    if (tr != 0) chi.values[i] = CycNum(tr);
  }
  return chi;
}

// ---- explicit modules ----

/// Left module given by explicit action matrices per basis element.
struct Module {
  const HopfAlg* alg = nullptr;
  long dim = 0;
  std::vector<Matrix<CycNum>> action;

  Character character() const {
    Character chi;
    chi.alg = alg;
    chi.degree = CycNum(dim);
    for (long i = 0; i < alg->dim(); ++i) {
      CycNum tr;
      for (long a = 0; a < dim; ++a) tr += action[i](a, a);
      if (!tr.is_zero()) chi.values[i] = tr;
    }
    return chi;
  }
};

inline void verify_module(const Module& v) {
  const HopfAlg* h = v.alg;
  // rho(1) = id
  Matrix<CycNum> unit_action(v.dim, v.dim);
  AlgElem one = h->unit();
  for (const auto& [i, c] : one.coeffs()) {
    for (long a = 0; a < v.dim; ++a)
      for (long b = 0; b < v.dim; ++b) unit_action(a, b) += c * v.action[i](a, b);
  }
  if (!unit_action.is_identity()) throw invariant_error("module: rho(1) != id");
  // rho(b_i) rho(b_j) = rho(b_i b_j)
  for (long i = 0; i < h->dim(); ++i)
    for (long j = 0; j < h->dim(); ++j) {
      Matrix<CycNum> lhs = v.action[i] * v.action[j];
      long ij = h->mult_basis(i, j);
      Matrix<CycNum> rhs = ij >= 0 ? v.action[ij] : Matrix<CycNum>(v.dim, v.dim);
      if (!(lhs == rhs)) throw invariant_error("module: action does not respect multiplication");
    }
}

inline Module explicit_module(const HopfAlg& h, std::vector<Matrix<CycNum>> action) {
  if (static_cast<long>(action.size()) != h.dim())
    throw domain_error("explicit_module: one matrix per basis element required");
  Module v;
  v.alg = &h;
  v.dim = action.empty() ? 0 : action[0].rows();
  v.action = std::move(action);
  verify_module(v);
  return v;
}

/// Module of H acting on itself by left multiplication.
inline Module regular_module(const HopfAlg& h) {
  Module v;
  v.alg = &h;
  v.dim = h.dim();
  v.action.assign(h.dim(), Matrix<CycNum>(h.dim(), h.dim()));
  for (long i = 0; i < h.dim(); ++i)
    for (long j = 0; j < h.dim(); ++j) {
      long ij = h.mult_basis(i, j);
      if (ij >= 0) v.action[i](ij, j) = CycNum(1);
    }
  // structurally correct; the pairwise verification is quadratic and is
  // exercised by the explicit-module tests instead
  return v;
}

/// Induced module of a smash product from an explicit representation of the
/// stabilizer F_g (matrices indexed by subgroup element, validated):
/// (b_h (x) x).(z_i (x) w) = delta_{h, x z_i . g} (x z_i (x) w),
/// with x z_i = z_j s and s acting through the supplied representation.
inline Module induced_module_from_rep(const HopfAlg& h, long g0,
                                      const std::vector<Matrix<CycNum>>& rho_w) {
  const Group& f = h.grp_f();
  const GroupAction& act = h.action();
  StabilizerData stab = stabilizer(act, g0);
  if (static_cast<long>(rho_w.size()) != stab.subgroup.order())
    throw domain_error("induced_module: W must be defined on the stabilizer");
  long dw = rho_w[0].rows();
  for (long a = 0; a < stab.subgroup.order(); ++a)
    for (long b = 0; b < stab.subgroup.order(); ++b)
      if (!(rho_w[a] * rho_w[b] == rho_w[stab.subgroup.mul(a, b)]))
        throw domain_error("induced_module: W matrices do not represent the stabilizer");
  if (!rho_w[stab.subgroup.id()].is_identity())
    throw domain_error("induced_module: identity of the stabilizer does not act as id");

  std::map<long, long> stab_index;
  for (size_t s = 0; s < stab.embedding.size(); ++s)
    stab_index[stab.embedding[s]] = static_cast<long>(s);
  long r = static_cast<long>(stab.coset_reps.size());
  Module v;
  v.alg = &h;
  v.dim = r * dw;
  v.action.assign(h.dim(), Matrix<CycNum>(v.dim, v.dim));
  std::vector<long> rep_index(f.order(), -1);
  for (long j = 0; j < r; ++j)
    for (long s = 0; s < stab.subgroup.order(); ++s)
      rep_index[f.mul(stab.coset_reps[j], stab.embedding[s])] = j;
  for (long hh = 0; hh < h.grp_g().order(); ++hh)
    for (long x = 0; x < f.order(); ++x) {
      Matrix<CycNum>& m = v.action[h.index_of(hh, x)];
      for (long i = 0; i < r; ++i) {
        long xz = f.mul(x, stab.coset_reps[i]);
        if (act.act(xz, g0) != hh) continue; // delta_{h, x z_i . g}
        long j = rep_index[xz];
        long s = stab_index.at(f.mul(f.inv(stab.coset_reps[j]), xz));
        for (long rr = 0; rr < dw; ++rr)
          for (long e = 0; e < dw; ++e)
            if (!rho_w[s](rr, e).is_zero()) m(j * dw + rr, i * dw + e) = rho_w[s](rr, e);
      }
    }
  verify_module(v);
  return v;
}

/// One-dimensional stabilizer module given by a multiplicative character.
inline Module induced_module(const HopfAlg& h, long g0, const std::vector<CycNum>& eta) {
  StabilizerData stab = stabilizer(h.action(), g0);
  if (static_cast<long>(eta.size()) != stab.subgroup.order())
    throw domain_error("induced_module: eta must be defined on the stabilizer");
  for (long a = 0; a < stab.subgroup.order(); ++a)
    for (long b = 0; b < stab.subgroup.order(); ++b)
      if (eta[stab.subgroup.mul(a, b)] != eta[a] * eta[b])
        throw domain_error("induced_module: eta is not multiplicative");
  std::vector<Matrix<CycNum>> rho(stab.subgroup.order(), Matrix<CycNum>(1, 1));
  for (long s = 0; s < stab.subgroup.order(); ++s) rho[s](0, 0) = eta[s];
  return induced_module_from_rep(h, g0, rho);
}

// ---- fusion matrices, order, multiplicity ----

/// a_ij = multiplicity of V_i in V (x) V_j, via ((chi chi_j) chibar_i)(Lambda).
inline Matrix<Rat> fusion_matrix(const CharRing& ring, const Character& chi) {
  if (ring.alg != chi.alg) throw domain_error("fusion_matrix: algebra mismatch");
  long k = ring.size();
  Matrix<Rat> a(k, k);
  std::vector<Character> duals;
  for (long i = 0; i < k; ++i) duals.push_back(char_dual(ring.irreducibles[i]));
  AlgElem lam = ring.alg->integral();
  for (long j = 0; j < k; ++j) {
    Character prod = char_mul(chi, ring.irreducibles[j]);
    for (long i = 0; i < k; ++i) {
      CycNum v = char_eval(char_mul(prod, duals[i]), lam);
      auto n = is_rational_integer(v);
      if (!n || *n < 0)
        throw invariant_error("fusion_matrix: coefficient not a nonnegative integer");
      a(i, j) = Rat(*n);
    }
  }
  // column dimension law: sum_i a_ij n_i = deg(chi) n_j
  auto dchi = is_rational_integer(chi.degree);
  if (!dchi) throw invariant_error("fusion_matrix: character degree not integral");
  for (long j = 0; j < k; ++j) {
    Rat acc(0);
    for (long i = 0; i < k; ++i) acc += a(i, j) * Rat(ring.degrees[i]);
    if (acc != Rat(*dchi) * Rat(ring.degrees[j]))
      throw invariant_error("fusion_matrix: column dimension law fails");
  }
  return a;
}

/// Least m with a nonzero invariant subspace in the m-th tensor power, and
/// that subspace's dimension.  Bounded by dim Ch(H).
inline std::pair<long, long> order_and_multiplicity(const CharRing& ring, const Character& chi) {
  if (chi.values.empty()) throw domain_error("order_and_multiplicity: zero character");
  Character power = chi;
  for (long m = 1; m <= ring.size(); ++m) {
    long d = invariant_dim(power);
    if (d > 0) return {m, d};
    power = char_mul(power, chi);
  }
  throw invariant_error("order_and_multiplicity: order exceeds dim Ch(H)");
}

// ---- rotation trace (first formula route) ----

/// tr(alpha^k o rho^{(x)m}(Lambda)) on V^{(x)m}, alpha the cyclic rotation
/// of tensor factors; equals chi(Lambda^{[m,k]}).
inline CycNum rotation_trace(const Module& v, long m, long k,
                             long max_terms = kMaxSweedlerTerms) {
  if (igcd(m, k) != 1) throw domain_error("rotation_trace: m, k must be coprime");
  double size = 1;
  for (long t = 0; t < m; ++t) size *= static_cast<double>(v.dim);
  if (size > kRotationGuard) throw resource_error("rotation_trace: d^m guard exceeded");
  const HopfAlg* h = v.alg;

  // column-sparse representation of each action matrix if available
  bool column_sparse = true;
  std::vector<std::vector<long>> row_of(h->dim(), std::vector<long>(v.dim, -1));
  std::vector<std::vector<CycNum>> scale_of(h->dim(), std::vector<CycNum>(v.dim));
  for (long i = 0; i < h->dim() && column_sparse; ++i)
    for (long c = 0; c < v.dim && column_sparse; ++c) {
      long nz = -1;
      for (long r = 0; r < v.dim; ++r) {
        if (v.action[i](r, c).is_zero()) continue;
        if (nz >= 0) {
          column_sparse = false;
          break;
        }
        nz = r;
      }
      if (nz >= 0) {
        row_of[i][c] = nz;
        scale_of[i][c] = v.action[i](nz, c);
      }
    }

  AlgElem lam = h->integral();
  CycNum trace;
  if (column_sparse) {
    // each term contributes along the single k-step cycle through positions
    for_iterated_coproduct(lam, m, max_terms, [&](const std::vector<long>& idx, const CycNum& c) {
      for (long start = 0; start < v.dim; ++start) {
        // constraint I_{l-k} = r_l(I_l), walked around the k-cycle of slots
        long pos = 0;
        long val = start;
        CycNum prod(1);
        bool ok = true;
        for (long step = 0; step < m; ++step) {
          long i = idx[pos];
          long nxt = row_of[i][val];
          if (nxt < 0) {
            ok = false;
            break;
          }
          prod *= scale_of[i][val];
          val = nxt;
          pos = imod(pos - k, m);
        }
        if (ok && val == start) trace += c * prod;
      }
    });
  } else {
    // dense enumeration of multi-indices
    long total = 1;
    for (long t = 0; t < m; ++t) total *= v.dim;
    for_iterated_coproduct(lam, m, max_terms, [&](const std::vector<long>& idx, const CycNum& c) {
      for (long code = 0; code < total; ++code) {
        long tmp = code;
        std::vector<long> I(m);
        for (long l = 0; l < m; ++l) {
          I[l] = tmp % v.dim;
          tmp /= v.dim;
        }
        CycNum prod(1);
        for (long l = 0; l < m && !prod.is_zero(); ++l)
          prod *= v.action[idx[l]](I[imod(l - k, m)], I[l]);
        trace += c * prod;
      }
    });
  }
  return trace;
}

// ---- canonical tensor t = sum b_i (x) b_i* ----

/// Matrix of t acting on V (x) H*: the H-tensorand acts through the module,
/// the H*-tensorand by left multiplication in H*.
inline Matrix<CycNum> canonical_tensor_matrix(const Module& v) {
  const HopfAlg* h = v.alg;
  long n = h->dim(), d = v.dim;
  Matrix<CycNum> t(d * n, d * n);
  for (long i = 0; i < n; ++i)
    for (long l = 0; l < n; ++l) {
      long c = h->dual_mult_basis(i, l);
      if (c < 0) continue;
      for (long a = 0; a < d; ++a)
        for (long b = 0; b < d; ++b) {
          const CycNum& s = v.action[i](a, b);
          if (!s.is_zero()) t(a * n + c, b * n + l) += s;
        }
    }
  return t;
}

/// nu_m via the canonical tensor: tr(t^m on V (x) H*) / dim(H).
inline CycNum canonical_tensor_indicator(const Module& v, long m) {
  Matrix<CycNum> t = canonical_tensor_matrix(v);
  Matrix<CycNum> p = Matrix<CycNum>::identity(t.rows());
  for (long i = 0; i < m; ++i) p = p * t;
  CycNum tr;
  for (long i = 0; i < p.rows(); ++i) tr += p(i, i);
  return tr * CycNum(Rat(1, v.alg->dim()));
}

/// Order of t on V (x) H* = exponent of V (module route).
inline long module_exponent_t_order(const Module& v, long cap) {
  Matrix<CycNum> t = canonical_tensor_matrix(v);
  Matrix<CycNum> p = t;
  for (long m = 1; m <= cap; ++m) {
    if (p.is_identity()) return m;
    p = p * t;
  }
  throw resource_error("module_exponent_t_order: cap exceeded");
}

// ---- characteristic polynomials (Cor 4.2) ----

/// Characteristic polynomial of left multiplication by chi on H*
/// (dimension-capped); all coefficients must be rational integers.
inline std::vector<CycNum> charpoly_left_mult_dual(const Character& chi) {
  const HopfAlg* h = chi.alg;
  long n = h->dim();
  if (n > kDualCharpolyCap) throw resource_error("charpoly_left_mult_dual: dimension cap");
  Matrix<CycNum> m(n, n);
  for (long kk = 0; kk < n; ++kk)
    h->for_comult_basis(kk, [&](long a, long b) {
      CycNum cv = chi.value(a);
      if (!cv.is_zero()) m(kk, b) += cv;
    });
  std::vector<CycNum> cp = charpoly(m);
  for (const CycNum& c : cp)
    if (!is_rational_integer(c))
      throw invariant_error("charpoly_left_mult_dual: non-integral coefficient");
  return cp;
}

/// Characteristic polynomial of the fusion matrix (the Ch(H) path);
/// integral because the matrix is.
inline std::vector<Rat> charpoly_left_mult_ring(const CharRing& ring, const Character& chi) {
  Matrix<Rat> a = fusion_matrix(ring, chi);
  std::vector<Rat> cp = charpoly(a);
  for (const Rat& c : cp)
    if (c.get_den() != 1)
      throw invariant_error("charpoly_left_mult_ring: non-integral coefficient");
  return cp;
}

// ---- Drinfel'd double modules ----

/// Induced D(K[F])-module on K^F (x) V from a K[F]-module V:
/// (b_w (x) x).(b_y (x) v) = delta_{w, x y x^{-1}} b_w (x) x.v.
/// The inducing K[F]-module is supplied by its action matrices indexed by
/// the elements of F.
inline Module induced_double_module(const HopfAlg& dbl, const std::vector<Matrix<CycNum>>& rho_f) {
  if (dbl.provenance() != Provenance::drinfeld_double)
    throw unsupported_error("induced_double_module: requires double provenance");
  const Group& f = dbl.grp_f();
  if (static_cast<long>(rho_f.size()) != f.order())
    throw domain_error("induced_double_module: one matrix per group element required");
  long dv = rho_f[0].rows();
  // rho_f must be a representation of F
  for (long a = 0; a < f.order(); ++a)
    for (long b = 0; b < f.order(); ++b)
      if (!(rho_f[a] * rho_f[b] == rho_f[f.mul(a, b)]))
        throw domain_error("induced_double_module: matrices do not represent F");
  if (!rho_f[f.id()].is_identity())
    throw domain_error("induced_double_module: identity does not act as id");

  long n = f.order();
  Module out;
  out.alg = &dbl;
  out.dim = n * dv;
  out.action.assign(dbl.dim(), Matrix<CycNum>(out.dim, out.dim));
  // basis of the carrier: (y, e) -> index y*dv + e
  for (long w = 0; w < n; ++w)
    for (long x = 0; x < n; ++x) {
      Matrix<CycNum>& m = out.action[dbl.index_of(w, x)];
      for (long y = 0; y < n; ++y) {
        if (f.mul(f.mul(x, y), f.inv(x)) != w) continue;
        for (long e = 0; e < dv; ++e)
          for (long r = 0; r < dv; ++r) {
            const CycNum& s = rho_f[x](r, e);
            if (!s.is_zero()) m(w * dv + r, y * dv + e) += s;
          }
      }
    }
  if (f.order() <= 24) verify_module(out);
  return out;
}

/// Explicit matrix models of the irreducible representations of a small
/// group, ordered like its character table: abelian groups through their
/// linear characters, S3 copies through the standard representation.
inline std::optional<std::vector<std::vector<Matrix<CycNum>>>> explicit_group_irreps(
    const Group& f, unsigned long seed = kDefaultSeed) {
  CharTable ft = character_table(f, seed);
  std::vector<std::vector<Matrix<CycNum>>> out;
  for (long r = 0; r < ft.num_chars(); ++r) {
    if (ft.degrees[r] == 1) {
      std::vector<Matrix<CycNum>> rho(f.order(), Matrix<CycNum>(1, 1));
      for (long x = 0; x < f.order(); ++x) rho[x](0, 0) = ft.value(r, x);
      out.push_back(std::move(rho));
      continue;
    }
    if (ft.degrees[r] == 2 && f.order() == 6 && !f.is_abelian()) {
      auto mat = [](long a, long b, long c, long d) {
        Matrix<CycNum> m(2, 2);
        m(0, 0) = CycNum(a);
        m(0, 1) = CycNum(b);
        m(1, 0) = CycNum(c);
        m(1, 1) = CycNum(d);
        return m;
      };
      long gen3 = -1, gen2 = -1;
      for (long e = 0; e < 6; ++e) {
        if (f.element_order(e) == 3 && gen3 < 0) gen3 = e;
        if (f.element_order(e) == 2 && gen2 < 0) gen2 = e;
      }
      std::vector<Matrix<CycNum>> rho(6, Matrix<CycNum>(2, 2));
      std::vector<bool> have(6, false);
      rho[f.id()] = Matrix<CycNum>::identity(2);
      have[f.id()] = true;
      bool progress = true;
      while (progress) {
        progress = false;
        for (long e = 0; e < 6; ++e) {
          if (!have[e]) continue;
          for (auto [g, m] :
               {std::pair{gen3, mat(0, -1, 1, -1)}, std::pair{gen2, mat(0, 1, 1, 0)}}) {
            long t = f.mul(g, e);
            if (!have[t]) {
              rho[t] = m * rho[e];
              have[t] = true;
              progress = true;
            }
          }
        }
      }
      // traces must reproduce the character-table row
      for (long x = 0; x < 6; ++x)
        if (rho[x](0, 0) + rho[x](1, 1) != ft.value(r, x))
          throw invariant_error("explicit_group_irreps: standard representation trace mismatch");
      out.push_back(std::move(rho));
      continue;
    }
    return std::nullopt; // no explicit model available for this group
  }
  return out;
}

/// Restrictions of the irreducible D(K[F])-characters to K[F], expressed in
/// the irreducible basis of Ch(K[F]); returns (rank over Q, dim Z(Ch(K[F]))).
inline std::pair<long, long> restriction_rank_check(const Group& f,
                                                    unsigned long seed = kDefaultSeed) {
  if (f.order() > 24) throw resource_error("restriction_rank_check: group too large");
  HopfAlg dbl = HopfAlg::double_of_group(f);
  CharRing ring = simple_characters(dbl, seed);
  CharTable ft = character_table(f, seed);
  long k = ft.num_chars();
  Matrix<Rat> coeffs(ring.size(), k);
  for (long r = 0; r < ring.size(); ++r) {
    // Res psi(x) = sum_g psi(b_g (x) x)
    std::vector<CycNum> res(f.order());
    for (long x = 0; x < f.order(); ++x) {
      CycNum acc;
      for (long g = 0; g < f.order(); ++g) acc += ring.irreducibles[r].value(dbl.index_of(g, x));
      res[x] = acc;
    }
    // expand in Irr(F) by orthogonality
    for (long i = 0; i < k; ++i) {
      CycNum acc;
      for (long x = 0; x < f.order(); ++x) acc += res[x] * ft.value(i, f.inv(x));
      acc *= CycNum(Rat(1, f.order()));
      auto n = is_rational_integer(acc);
      if (!n || *n < 0)
        throw invariant_error("restriction_rank_check: restriction multiplicities not integral");
      coeffs(r, i) = Rat(*n);
    }
  }
  // Ch(K[F]) is commutative, so its center has dimension k
  return {matrix_rank(coeffs), k};
}

} // namespace hopfind

#endif
