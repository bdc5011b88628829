#ifndef HOPFIND_INDICATORS_HPP
#define HOPFIND_INDICATORS_HPP

#include <optional>
#include <sstream>

#include "hopfind/repmod.hpp"

namespace hopfind {

/// Reduce a value into the power basis of Q(zeta_m) if it lies there.
inline std::optional<CycNum> reduce_to_conductor(const CycNum& a, long m) {
  long big = ilcm(a.conductor(), m);
  CycNum lifted = a.at_conductor(big);
  long phi_m = euler_phi(m), phi_big = euler_phi(big);
  Matrix<Rat> sys(phi_big, phi_m);
  for (long j = 0; j < phi_m; ++j) {
    CycNum basis_vec = CycNum::root(m, j).at_conductor(big);
    for (long i = 0; i < phi_big; ++i) sys(i, j) = basis_vec.coeffs()[i];
  }
  // solve sys * x = lifted by row reduction on the augmented system
  Matrix<Rat> aug(phi_big, phi_m + 1);
  for (long i = 0; i < phi_big; ++i) {
    for (long j = 0; j < phi_m; ++j) aug(i, j) = sys(i, j);
    aug(i, phi_m) = lifted.coeffs()[i];
  }
  row_reduce(aug);
  std::vector<Rat> x(phi_m, Rat(0));
  for (long r = 0; r < phi_big; ++r) {
    long lead = -1;
    for (long j = 0; j <= phi_m; ++j)
      if (aug(r, j) != 0) {
        lead = j;
        break;
      }
    if (lead < 0) continue;
    if (lead == phi_m) return std::nullopt; // inconsistent: not in Q_m
    x[lead] = aug(r, phi_m);
  }
  CycNum out(m, x);
  if (out.at_conductor(big) != lifted) return std::nullopt;
  return out;
}

struct IndicatorReport {
  std::string chi_id;
  long m = 0, k = 1;
  CycNum value;
  std::vector<std::string> routes_used;
  bool agreement = true;
  std::optional<Int> integrality;
};

struct ExponentReport {
  std::string target;
  long value = 0;
  std::string route;
  long bound_used = 0;
};

/// Shared per-algebra cache for the Drinfel'd-element route.
struct IndicatorContext {
  std::map<long, DoubleTensor> u_powers;
  std::map<std::string, Module> modules; // keyed by character id
};

/// Build an explicit module affording chi where the inducing data allows:
/// one-dimensional stabilizer characters always, plus the standard
/// two-dimensional representation when the stabilizer is an S3 copy.
inline std::optional<Module> try_explicit_module(const HopfAlg& h, const Character& chi) {
  if (chi.orbit_rep < 0) return std::nullopt;
  if (chi.eta_degree == CycNum(1)) return induced_module(h, chi.orbit_rep, chi.eta);
  StabilizerData stab = stabilizer(h.action(), chi.orbit_rep);
  const Group& s = stab.subgroup;
  if (chi.eta_degree == CycNum(2) && s.order() == 6 && !s.is_abelian()) {
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
      if (s.element_order(e) == 3 && gen3 < 0) gen3 = e;
      if (s.element_order(e) == 2 && gen2 < 0) gen2 = e;
    }
    std::vector<Matrix<CycNum>> rho(6, Matrix<CycNum>(2, 2));
    std::vector<bool> have(6, false);
    rho[s.id()] = Matrix<CycNum>::identity(2);
    have[s.id()] = true;
    bool progress = true;
    while (progress) {
      progress = false;
      for (long e = 0; e < 6; ++e) {
        if (!have[e]) continue;
        for (auto [g, m] : {std::pair{gen3, mat(0, -1, 1, -1)}, std::pair{gen2, mat(0, 1, 1, 0)}}) {
          long t = s.mul(g, e);
          if (!have[t]) {
            rho[t] = m * rho[e];
            have[t] = true;
            progress = true;
          }
        }
      }
    }
    Module v = induced_module_from_rep(h, chi.orbit_rep, rho);
    if (v.character() == chi) return v;
  }
  return std::nullopt;
}

/// chi(Lambda^{[m,k]}) from the inducing data (the closed-form route):
/// (1/|F_g|) sum_{y in F_g} z_{m,k}(g, y) eta(y).
inline CycNum indicator_closed_form(const Character& chi, long m, long k) {
  if (chi.orbit_rep < 0) throw unsupported_error("indicator_closed_form: no inducing data");
  const HopfAlg* h = chi.alg;
  const Group& f = h->grp_f();
  const Group& g = h->grp_g();
  const GroupAction& act = h->action();
  long l = modinv(k, m);
  std::map<long, long> stab_index;
  for (size_t s = 0; s < chi.stab_embedding.size(); ++s)
    stab_index[chi.stab_embedding[s]] = static_cast<long>(s);
  CycNum acc;
  for (long x = 0; x < f.order(); ++x) {
    long prod = g.id();
    for (long j = 0; j < m; ++j) prod = g.mul(prod, act.act(f.power(x, -imod(j * l, m)), chi.orbit_rep));
    if (prod != g.id()) continue;
    long y = f.power(x, m);
    auto it = stab_index.find(y);
    if (it == stab_index.end())
      throw invariant_error("indicator_closed_form: x^m escaped the stabilizer");
    acc += chi.eta[it->second];
  }
  long deg_eta_scale = static_cast<long>(chi.stab_embedding.size());
  return acc * CycNum(Rat(1, deg_eta_scale));
}

/// The Drinfel'd-element route for doubles: nu_m(chi) = (Lambda (x) chi)(u^m),
/// the induced character identity applied to the central element u^m.
inline CycNum indicator_double_u(const Character& chi, long m, IndicatorContext* ctx) {
  const HopfAlg* h = chi.alg;
  if (h->provenance() != Provenance::drinfeld_double)
    throw unsupported_error("indicator_double_u: requires double provenance");
  DoubleTensor um;
  auto compute = [&](long mm) {
    DoubleTensor u = drinfeld_u_tensor(*h);
    DoubleTensor p = u;
    for (long t = 1; t < mm; ++t) p = double_tensor_mult(*h, p, u);
    return p;
  };
  if (ctx) {
    auto it = ctx->u_powers.find(m);
    if (it == ctx->u_powers.end()) {
      // extend from the largest cached power
      long best = 0;
      for (const auto& [mm, val] : ctx->u_powers)
        if (mm < m && mm > best) best = mm;
      DoubleTensor p = best > 0 ? ctx->u_powers[best] : drinfeld_u_tensor(*h);
      if (best == 0) best = 1;
      DoubleTensor u = drinfeld_u_tensor(*h);
      for (long t = best; t < m; ++t) p = double_tensor_mult(*h, p, u);
      it = ctx->u_powers.emplace(m, std::move(p)).first;
    }
    um = it->second;
  } else {
    um = compute(m);
  }
  AlgElem lam = h->integral();
  CycNum acc;
  for (const auto& [key, c] : um) acc += c * lam.coeff(key.first) * chi.value(key.second);
  return acc;
}

struct NuOptions {
  long max_terms = kMaxSweedlerTerms;
  long rotation_dm_cap = 10000; // d^m cap for the cross-check route
  long tensor_dim_cap = 36;     // canonical-tensor path dimension cap
  bool cross_check = true;
  IndicatorContext* ctx = nullptr;
  const Module* module = nullptr; // explicit module affording chi, if any
};

/// nu_m(chi) for chi(Lambda^{[m,k]}): generic route plus every applicable
/// cross-check route, compared exactly.
inline IndicatorReport nu(const Character& chi, long m, long k = 1, NuOptions opt = {}) {
  if (igcd(m, k) != 1) throw domain_error("nu: m and k must be coprime");
  const HopfAlg* h = chi.alg;
  IndicatorReport rep;
  rep.m = m;
  rep.k = k;

  std::vector<std::pair<std::string, CycNum>> results;

  // definition: generic sweedler power (guard-governed)
  bool have_generic = false;
  double est = static_cast<double>(h->grp_f().order());
  for (long t = 1; t < m; ++t) est *= static_cast<double>(h->grp_g().order());
  if (est <= static_cast<double>(opt.max_terms)) {
    AlgElem p = sweedler_power_mk(h->integral(), m, k, opt.max_terms);
    results.emplace_back("definition", char_eval(chi, p));
    have_generic = true;
  }

  // closed form from the inducing data
  if (chi.orbit_rep >= 0) results.emplace_back("closed_form", indicator_closed_form(chi, m, k));
  if (results.empty())
    throw resource_error("nu: no route available under the current guards");

  if (opt.cross_check) {
    // rotation route on an explicit module
    std::optional<Module> own;
    const Module* v = opt.module;
    if (!v) {
      own = try_explicit_module(*h, chi);
      if (own) v = &*own;
    }
    if (v) {
      double dm = 1;
      for (long t = 0; t < m; ++t) dm *= static_cast<double>(v->dim);
      if (dm <= static_cast<double>(opt.rotation_dm_cap) &&
          est <= static_cast<double>(opt.max_terms))
        results.emplace_back("rotation", rotation_trace(*v, m, k, opt.max_terms));
      // canonical tensor route (k = 1 only)
      if (k == 1 && h->dim() <= opt.tensor_dim_cap)
        results.emplace_back("canonical_tensor", canonical_tensor_indicator(*v, m));
    }
    if (k == 1 && h->provenance() == Provenance::drinfeld_double)
      results.emplace_back("double_u", indicator_double_u(chi, m, opt.ctx));
  }

  rep.value = results.front().second;
  for (const auto& [name, val] : results) {
    rep.routes_used.push_back(name);
    if (val != rep.value) {
      rep.agreement = false;
      throw invariant_error("nu: route disagreement between " + results.front().first + " (" +
                            to_string(rep.value) + ") and " + name + " (" + to_string(val) + ")");
    }
  }
  (void)have_generic;
  rep.integrality = is_rational_integer(rep.value);
  return rep;
}

/// Frobenius-Schur classification from the second indicator.
inline long fs_classify(const Character& chi, NuOptions opt = {}) {
  CycNum v = nu(chi, 2, 1, opt).value;
  auto n = is_rational_integer(v);
  if (!n || (*n != 0 && *n != 1 && *n != -1))
    throw invariant_error("fs_classify: nu_2 not in {0, 1, -1}");
  bool self_dual = char_dual(chi) == chi;
  if ((*n == 0) == self_dual)
    throw invariant_error("fs_classify: nu_2 = 0 must coincide with non-self-duality");
  return static_cast<long>(n->get_si());
}

// ---- exponent machinery ----

/// Least m <= cap with nu_m(chi) = deg(chi), scanned incrementally through
/// the closed form; this is the exponent of any module affording chi.
inline long character_exponent(const Character& chi, long cap) {
  if (chi.orbit_rep < 0) throw unsupported_error("character_exponent: no inducing data");
  const HopfAlg* h = chi.alg;
  const Group& f = h->grp_f();
  const Group& g = h->grp_g();
  const GroupAction& act = h->action();
  std::map<long, long> stab_index;
  for (size_t s = 0; s < chi.stab_embedding.size(); ++s)
    stab_index[chi.stab_embedding[s]] = static_cast<long>(s);
  long nf = f.order();
  // per x: running product prod_x(m) = prod_{j<m} x^{-j}.g0 and power x^m
  std::vector<long> prod(nf, g.id()), xm(nf), xmj(nf);
  for (long x = 0; x < nf; ++x) {
    xm[x] = f.id();
    xmj[x] = g.id() == 0 && false ? 0 : chi.orbit_rep; // x^{-0}.g0 = g0
  }
  std::vector<long> xinv(nf);
  for (long x = 0; x < nf; ++x) xinv[x] = f.inv(x);
  std::vector<long> xinv_pow(nf, f.id()); // x^{-m}
  CycNum deg = chi.degree;
  for (long m = 1; m <= cap; ++m) {
    CycNum acc;
    for (long x = 0; x < nf; ++x) {
      // extend the product with the factor x^{-(m-1)}.g0
      prod[x] = g.mul(prod[x], act.act(xinv_pow[x], chi.orbit_rep));
      xinv_pow[x] = f.mul(xinv_pow[x], xinv[x]);
      xm[x] = f.mul(xm[x], x);
      if (prod[x] != g.id()) continue;
      auto it = stab_index.find(xm[x]);
      if (it == stab_index.end())
        throw invariant_error("character_exponent: x^m escaped the stabilizer");
      acc += chi.eta[it->second];
    }
    acc *= CycNum(Rat(1, static_cast<long>(chi.stab_embedding.size())));
    if (acc == deg) return m;
  }
  throw resource_error("character_exponent: cap exceeded");
}

/// Exponent of a module or of a character; module route through the order
/// of the canonical tensor when an explicit module is supplied.
inline ExponentReport exponent_of(const Character& chi, long cap = 0,
                                  const Module* module = nullptr) {
  const HopfAlg* h = chi.alg;
  if (cap <= 0) cap = h->dim() * h->dim();
  ExponentReport rep;
  rep.target = "character";
  rep.bound_used = cap;
  rep.value = character_exponent(chi, cap);
  rep.route = "nu_scan";
  if (module) {
    long t_order = module_exponent_t_order(*module, cap);
    if (t_order != rep.value)
      throw invariant_error("exponent_of: nu-scan and t-order disagree");
    rep.route = "nu_scan+t_order";
  }
  return rep;
}

/// All irreducible-character inducing data of a smash algebra without
/// materializing the full ring; used for exponent and Cauchy checks on
/// algebras above the ring cap.
inline std::vector<Character> character_family(const HopfAlg& h,
                                               unsigned long seed = kDefaultSeed) {
  std::vector<Character> out;
  std::map<std::vector<long>, CharTable> table_cache;
  for (const Orbit& orbit : orbits(h.action())) {
    long g0 = orbit.representative;
    StabilizerData stab = stabilizer(h.action(), g0);
    auto it = table_cache.find(stab.embedding);
    if (it == table_cache.end())
      it = table_cache.emplace(stab.embedding, character_table(stab.subgroup, seed)).first;
    const CharTable& st = it->second;
    for (long r = 0; r < st.num_chars(); ++r) {
      Character chi;
      chi.alg = &h;
      chi.orbit_rep = g0;
      chi.stab_embedding = stab.embedding;
      chi.eta.resize(stab.subgroup.order());
      for (long s = 0; s < stab.subgroup.order(); ++s) chi.eta[s] = st.value(r, s);
      chi.eta_degree = CycNum(st.degrees[r]);
      chi.degree = CycNum(static_cast<long>(orbit.elements.size()) * st.degrees[r]);
      // values are left empty: the closed-form scans never need them
      out.push_back(std::move(chi));
    }
  }
  return out;
}

/// exp(H) = lcm of the exponents of the irreducible characters.
inline ExponentReport algebra_exponent(const HopfAlg& h, long cap = 0,
                                       unsigned long seed = kDefaultSeed) {
  if (cap <= 0) {
    cap = h.dim() * h.dim();
    if (cap > 100000) cap = 100000; // scan window; the lcm certificate below
  }
  long e = 1;
  for (const Character& chi : character_family(h, seed))
    e = ilcm(e, character_exponent(chi, cap));
  ExponentReport rep;
  rep.target = "algebra";
  rep.value = e;
  rep.route = "nu_scan";
  rep.bound_used = cap;
  // Thm: exp(H) divides dim(H)^3
  Int bound = int_pow(Int(h.dim()), 3);
  if (bound % e != 0) throw invariant_error("algebra_exponent: exp does not divide dim^3");
  return rep;
}

/// Every prime dividing dim(H) must divide exp(H).
inline std::vector<std::pair<long, bool>> cauchy_check(const HopfAlg& h, long cap = 0,
                                                       unsigned long seed = kDefaultSeed) {
  long e = algebra_exponent(h, cap, seed).value;
  std::vector<std::pair<long, bool>> out;
  for (long p : prime_factors(h.dim())) {
    bool ok = e % p == 0;
    out.emplace_back(p, ok);
    if (!ok) throw invariant_error("cauchy_check: prime " + std::to_string(p) +
                                   " divides dim but not exp");
  }
  return out;
}

// ---- Galois action ----

/// sigma_l(chi(Lambda^{[m,k]})) = chi(Lambda^{[m,kl]}) and, when l is
/// coprime to exp(chi), sigma_l(chi(Lambda^{[m]})) = chi(Lambda^{[ml]}).
inline bool galois_check(const Character& chi, long m, long k, long l, NuOptions opt = {}) {
  if (igcd(k, m) != 1 || igcd(l, m) != 1)
    throw domain_error("galois_check: k and l must be coprime to m");
  bool ok = true;
  {
    CycNum lhs_val = nu(chi, m, k, opt).value;
    auto reduced = reduce_to_conductor(lhs_val, m);
    if (!reduced) throw invariant_error("galois_check: indicator not in Q_m");
    CycNum lhs = galois_apply(GaloisElt(m, l), *reduced);
    long kl = imod(k * l, m) == 0 ? m : imod(k * l, m);
    CycNum rhs = nu(chi, m, kl, opt).value;
    ok = ok && (lhs == rhs);
  }
  long d = character_exponent(chi, chi.alg->dim() * chi.alg->dim());
  if (igcd(l, d) == 1) {
    CycNum lhs_val = nu(chi, m, 1, opt).value;
    auto reduced = reduce_to_conductor(lhs_val, d);
    if (!reduced) throw invariant_error("galois_check: indicator not in Q_d");
    CycNum lhs = d == 1 ? *reduced : galois_apply(GaloisElt(d, imod(l, d)), *reduced);
    CycNum rhs = nu(chi, m * l, 1, opt).value;
    ok = ok && (lhs == rhs);
  }
  return ok;
}

/// Integrality of nu_m when exp(chi) is squarefree (all m <= m_max), and in
/// the large-m regime otherwise.
inline bool squarefree_integrality_check(const Character& chi, long m_max, NuOptions opt = {}) {
  long d = character_exponent(chi, chi.alg->dim() * chi.alg->dim());
  for (long m = 1; m <= m_max; ++m) {
    bool must_be_integer = is_squarefree(d) || is_large_compared_to(m, d);
    if (!must_be_integer) continue;
    IndicatorReport rep = nu(chi, m, 1, opt);
    if (!rep.integrality)
      throw invariant_error("squarefree_integrality_check: nu_" + std::to_string(m) +
                            " is not an integer");
  }
  return true;
}

} // namespace hopfind

#endif
