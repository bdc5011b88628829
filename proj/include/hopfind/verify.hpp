#ifndef HOPFIND_VERIFY_HPP
#define HOPFIND_VERIFY_HPP

#include <functional>
#include <random>
#include <sstream>

#include "hopfind/fusionindex.hpp"
#include "hopfind/indicators.hpp"

namespace hopfind {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  unsigned long seed = kDefaultSeed;
  long max_terms = kMaxSweedlerTerms;
  long exp_cap = 0; // 0: the per-algebra default
};

namespace detail {

class Checker {
public:
  explicit Checker(std::vector<CheckResult>& out) : out_(out) {}

  void run(const std::string& name, const std::function<bool()>& fn) {
    CheckResult r;
    r.name = name;
    try {
      r.pass = fn();
      if (!r.pass && r.detail.empty()) r.detail = "assertion failed";
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    out_.push_back(std::move(r));
  }

  void note(const std::string& name, const std::string& why_skipped) {
    out_.push_back({name, true, "skipped: " + why_skipped});
  }

private:
  std::vector<CheckResult>& out_;
};

inline bool ring_capable(const HopfAlg& h) { return h.dim() <= kCharRingDimCap; }

// estimated generic sweedler term count |F| * |G|^{m-1}
inline double generic_terms_estimate(const HopfAlg& h, long m) {
  double est = static_cast<double>(h.grp_f().order());
  for (long t = 1; t < m; ++t) est *= static_cast<double>(h.grp_g().order());
  return est;
}

inline AlgElem integral_power_any(const HopfAlg& h, long m, long k, long max_terms) {
  if (igcd(m, k) != 1) throw domain_error("integral power: m, k must be coprime");
  if (generic_terms_estimate(h, m) <= static_cast<double>(max_terms))
    return sweedler_power_mk(h.integral(), m, k, max_terms);
  return integral_power_closed(h, m, k);
}

} // namespace detail

// ---- suite: sweedler (the permutation calculus plus the power law) ----

inline std::vector<CheckResult> verify_sweedler(const HopfAlg& h, VerifyOptions opt = {}) {
  std::vector<CheckResult> out;
  detail::Checker ck(out);

  ck.run("perm monoid associativity and units (degree <= 4)", [&] {
    std::vector<Perm> small;
    for (long d = 1; d <= 4; ++d) {
      std::vector<long> im(d);
      std::iota(im.begin(), im.end(), 1);
      do {
        small.push_back(Perm(im));
      } while (std::next_permutation(im.begin(), im.end()));
    }
    Perm unit(1);
    for (const Perm& a : small) {
      if (perm_product(unit, a) != a || perm_product(a, unit) != a) return false;
      for (const Perm& b : small)
        for (const Perm& c : small)
          if (perm_product(perm_product(a, b), c) != perm_product(a, perm_product(b, c)))
            return false;
    }
    return true;
  });

  ck.run("sequence-to-permutation homomorphism (entries <= 6, length <= 3)", [&] {
    std::vector<IndexSeq> seqs{IndexSeq()};
    std::vector<std::vector<long>> level{{}};
    for (long l = 1; l <= 3; ++l) {
      std::vector<std::vector<long>> next;
      for (const auto& s : level)
        for (long e = 1; e <= 6; ++e) {
          auto t = s;
          t.push_back(e);
          seqs.push_back(IndexSeq(t));
          next.push_back(std::move(t));
        }
      level = std::move(next);
    }
    for (const auto& a : seqs)
      for (const auto& b : seqs)
        if (sweedler_perm(seq_product(a, b)) != perm_product(sweedler_perm(a), sweedler_perm(b)))
          return false;
    return true;
  });

  ck.run("normalization is an idempotent monoid homomorphism", [&] {
    std::mt19937 rng(opt.seed);
    for (int t = 0; t < 300; ++t) {
      auto rand_seq = [&] {
        long len = rng() % 4;
        std::vector<long> v(len);
        for (long i = 0; i < len; ++i) v[i] = 1 + rng() % 6;
        return IndexSeq(v);
      };
      IndexSeq a = rand_seq(), b = rand_seq();
      if (normalize(normalize(a)) != normalize(a)) return false;
      if (normalize(seq_product(a, b)) != normalize(seq_product(normalize(a), normalize(b))))
        return false;
    }
    return true;
  });

  ck.run("coprime sequences give shifted multiplication (m <= 12)", [&] {
    for (long m = 1; m <= 12; ++m)
      for (long k = 1; k <= m; ++k) {
        if (igcd(m, k) != 1) continue;
        Perm p = sweedler_perm(IndexSeq({m, k}));
        for (long j = 0; j < m; ++j)
          if (p(1 + j) != 1 + imod(k * j, m)) return false;
      }
    return true;
  });

  ck.run("P(5,2) = [1,3,5,2,4]", [&] {
    return sweedler_perm(IndexSeq({5, 2})) == Perm(std::vector<long>{1, 3, 5, 2, 4});
  });

  ck.run("lex rank is a strictly monotone bijection (products <= 256)", [&] {
    for (const auto& dims : std::vector<std::vector<long>>{{4, 4, 4, 4}, {2, 3, 5}, {16, 16}}) {
      long total = 1;
      for (long d : dims) total *= d;
      std::vector<long> idx(dims.size(), 1);
      long prev = 0;
      for (;;) {
        long r = lex_rank(dims, idx);
        if (r != prev + 1) return false;
        prev = r;
        long pos = static_cast<long>(dims.size()) - 1;
        while (pos >= 0 && idx[pos] == dims[pos]) idx[pos--] = 1;
        if (pos < 0) break;
        ++idx[pos];
      }
      if (prev != total) return false;
    }
    return true;
  });

  ck.run("power law on the algebra", [&] {
    std::mt19937 rng(opt.seed);
    long budget_deg = 2;
    while (detail::generic_terms_estimate(h, (budget_deg + 1) * 2) <=
               static_cast<double>(opt.max_terms) &&
           budget_deg < 3)
      ++budget_deg;
    for (int t = 0; t < 6; ++t) {
      AlgElem a(&h);
      for (int s = 0; s < 2; ++s)
        a.add_term(static_cast<long>(rng() % h.dim()), CycNum(1 + static_cast<long>(rng() % 3)));
      auto rand_perm = [&](long d) {
        std::vector<long> im(d);
        std::iota(im.begin(), im.end(), 1);
        std::shuffle(im.begin(), im.end(), rng);
        return Perm(im);
      };
      long d1 = 1 + rng() % budget_deg;
      long d2 = std::max(1L, budget_deg / d1);
      Perm sigma = rand_perm(d1), tau = rand_perm(d2);
      if (sweedler_power(sweedler_power(a, sigma, opt.max_terms), tau, opt.max_terms) !=
          sweedler_power(a, perm_product(sigma, tau), opt.max_terms))
        return false;
    }
    return true;
  });

  return out;
}

// ---- suite: integral (integral laws and integral Sweedler powers) ----

inline std::vector<CheckResult> verify_integral(const HopfAlg& h, VerifyOptions opt = {}) {
  std::vector<CheckResult> out;
  detail::Checker ck(out);
  bool smash_like =
      h.provenance() == Provenance::smash || h.provenance() == Provenance::drinfeld_double;

  ck.run("two-sided integral laws", [&] {
    AlgElem lam = h.integral();
    if (counit(lam) != CycNum(1) || antipode(lam) != lam || !is_cocommutative(lam)) return false;
    long step = std::max(1L, h.dim() / 2048);
    for (long i = 0; i < h.dim(); i += step) {
      AlgElem b = h.basis_elem(i);
      AlgElem expect = lam.scaled(CycNum(h.counit_basis(i)));
      if (mult(b, lam) != expect || mult(lam, b) != expect) return false;
    }
    return true;
  });

  ck.run("centrality of coprime integral powers", [&] {
    for (auto [m, k] : std::vector<std::pair<long, long>>{{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 3}}) {
      AlgElem p = smash_like ? integral_power_closed(h, m, k)
                             : detail::integral_power_any(h, m, k, opt.max_terms);
      if (!is_central(p)) return false;
    }
    return true;
  });

  if (detail::ring_capable(h)) {
    ck.run("coproduct symmetry of integral powers against irreducibles", [&] {
      CharRing ring = simple_characters(h, opt.seed);
      for (auto [m, k] : std::vector<std::pair<long, long>>{{2, 1}, {3, 2}, {4, 3}}) {
        AlgElem p = detail::integral_power_any(h, m, k, opt.max_terms);
        SparseTensor2 dp = coproduct(p);
        long step = std::max(1L, ring.size() / 8);
        for (long c = 0; c < ring.size(); c += step) {
          const Character& chi = ring.irreducibles[c];
          AlgElem left(&h), right(&h);
          for (const auto& [key, coeff] : dp) {
            left.add_term(key.first, coeff * chi.value(key.second));
            right.add_term(key.second, coeff * chi.value(key.first));
          }
          if (!(left == right)) return false;
        }
      }
      return true;
    });
  } else {
    ck.note("coproduct symmetry of integral powers against irreducibles",
            "character ring above the dimension cap");
  }

  if (smash_like) {
    ck.run("closed-form integral powers equal generic sweedler powers", [&] {
      AlgElem lam = h.integral();
      bool ran_any = false;
      for (auto [m, k] :
           std::vector<std::pair<long, long>>{{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 3}, {5, 2}}) {
        if (detail::generic_terms_estimate(h, m) > static_cast<double>(opt.max_terms)) continue;
        ran_any = true;
        if (!(integral_power_closed(h, m, k) == sweedler_power_mk(lam, m, k, opt.max_terms)))
          return false;
      }
      return ran_any;
    });

    ck.run("count relations for the closed-form coefficients", [&] {
      const Group& f = h.grp_f();
      const Group& g = h.grp_g();
      const GroupAction& act = h.action();
      std::mt19937 rng(opt.seed);
      // (1) and (2) for a few coprime pairs
      for (auto [m, k] : std::vector<std::pair<long, long>>{{2, 1}, {3, 2}, {4, 3}}) {
        ZCount z = z_counts(h, m, k);
        for (const auto& [key, cnt] : z.values)
          if (cnt != 0 && act.act(key.second, key.first) != key.first) return false;
        for (int t = 0; t < 40; ++t) {
          long gg = static_cast<long>(rng() % g.order());
          long x = static_cast<long>(rng() % f.order());
          long y = static_cast<long>(rng() % f.order());
          if (z.at(act.act(x, gg), y) != z.at(gg, f.mul(f.mul(f.inv(x), y), x))) return false;
        }
      }
      // (3) and (4) with k coprime to |F| (and |G| for (3))
      long k = 1;
      for (long cand = 2; cand < 30; ++cand)
        if (igcd(cand, f.order()) == 1 && igcd(cand, g.order()) == 1) {
          k = cand;
          break;
        }
      if (k == 1) return true; // no admissible k (dim has every small prime)
      long m = 3 % k == 0 ? 4 : 3, q = (m == 3) ? 2 : 3;
      while (igcd(m, q) != 1 || igcd(m * k, q) != 1) ++q;
      ZCount lhs3 = z_counts(h, m * k, q), rhs = z_counts(h, m, q);
      ZCount lhs4 = z_counts(h, m, imod(k * q, m) == 0 ? m + k * q : k * q);
      for (int t = 0; t < 200; ++t) {
        long gg = static_cast<long>(rng() % g.order());
        long y = static_cast<long>(rng() % f.order());
        if (lhs3.at(gg, f.power(y, k)) != rhs.at(gg, y)) return false;
        if (lhs4.at(gg, f.power(y, k)) != rhs.at(gg, y)) return false;
      }
      return true;
    });
  } else {
    ck.note("closed-form integral powers equal generic sweedler powers",
            "group-algebra and dual cases are the degenerate smash instances");
    ck.note("count relations for the closed-form coefficients", "not a smash product");
  }

  ck.run("power-product identities across exponent-coprime shifts", [&] {
    long e = algebra_exponent(h, opt.exp_cap, opt.seed).value;
    long l = 0;
    for (long cand = 2; cand <= 7; ++cand)
      if (igcd(cand, e) == 1) {
        l = cand;
        break;
      }
    if (l == 0) return true; // exponent divisible by all small primes
    for (long m : {2L, 3L}) {
      if (igcd(m, l) != 1) continue;
      AlgElem lhs = detail::integral_power_any(h, m, l, opt.max_terms);
      AlgElem rhs = detail::integral_power_any(h, m * l, 1, opt.max_terms);
      if (!(lhs == rhs)) return false;
    }
    return true;
  });

  if (h.provenance() == Provenance::group_algebra) {
    ck.run("trace map counts roots of unity in the group", [&] {
      const Group& g = h.grp_f();
      for (long m = 2; m <= 6; ++m) {
        long roots = 0;
        for (long x = 0; x < g.order(); ++x)
          if (g.power(x, m) == g.id()) ++roots;
        if (e_map_trace(h, m, opt.max_terms) != CycNum(roots)) return false;
      }
      return true;
    });
  }

  return out;
}

// ---- suite: indicators ----

inline std::vector<CheckResult> verify_indicators(const HopfAlg& h, VerifyOptions opt = {}) {
  std::vector<CheckResult> out;
  detail::Checker ck(out);

  if (!detail::ring_capable(h)) {
    ck.run("second indicators of the character family lie in {0,1,-1}", [&] {
      for (const Character& chi : character_family(h, opt.seed)) {
        CycNum v = indicator_closed_form(chi, 2, 1);
        auto n = is_rational_integer(v);
        if (!n || (*n != 0 && *n != 1 && *n != -1)) return false;
      }
      return true;
    });
    ck.note("indicator route agreement", "character ring above the dimension cap");
    return out;
  }

  CharRing ring = simple_characters(h, opt.seed);
  IndicatorContext ctx;
  NuOptions nopt;
  nopt.ctx = &ctx;
  nopt.max_terms = opt.max_terms;

  ck.run("route agreement across all irreducibles (m <= 6)", [&] {
    for (const Character& chi : ring.irreducibles)
      for (long m = 1; m <= 6; ++m) {
        IndicatorReport rep = nu(chi, m, 1, nopt); // throws on disagreement
        if (!rep.agreement) return false;
        if (m > 1 && igcd(m, m - 1) == 1) {
          IndicatorReport repk = nu(chi, m, m - 1, nopt);
          if (!repk.agreement) return false;
        }
      }
    return true;
  });

  ck.run("indicators are invariant under duality", [&] {
    for (const Character& chi : ring.irreducibles) {
      Character dual = char_dual(chi);
      for (long m = 2; m <= 6; ++m)
        if (nu(chi, m, 1, nopt).value != nu(dual, m, 1, nopt).value) return false;
    }
    return true;
  });

  ck.run("second indicators classify self-duality", [&] {
    for (const Character& chi : ring.irreducibles) {
      long v = fs_classify(chi, nopt);
      if (v != 0 && v != 1 && v != -1) return false;
    }
    return true;
  });

  ck.run("indicators lie in Q_m and Q_exp", [&] {
    for (const Character& chi : ring.irreducibles) {
      long d = character_exponent(chi, h.dim() * h.dim());
      for (long m = 2; m <= 6; ++m) {
        CycNum v = nu(chi, m, 1, nopt).value;
        if (!lies_in_cyclotomic(v, m) || !lies_in_cyclotomic(v, d)) return false;
      }
    }
    return true;
  });

  ck.run("regular character indicators equal the trace map", [&] {
    Character chi_r = regular_character(h);
    AlgElem lam = h.integral();
    for (long m = 2; m <= 6; ++m) {
      if (detail::generic_terms_estimate(h, m) > static_cast<double>(opt.max_terms)) break;
      CycNum lhs = char_eval(chi_r, sweedler_power_seq(lam, IndexSeq({m}), opt.max_terms));
      if (lhs != e_map_trace(h, m, opt.max_terms)) return false;
    }
    return true;
  });

  return out;
}

// ---- suite: galois ----

inline std::vector<CheckResult> verify_galois(const HopfAlg& h, VerifyOptions opt = {}) {
  std::vector<CheckResult> out;
  detail::Checker ck(out);
  if (!detail::ring_capable(h)) {
    ck.note("galois identities", "character ring above the dimension cap");
    return out;
  }
  CharRing ring = simple_characters(h, opt.seed);
  NuOptions nopt;
  nopt.max_terms = opt.max_terms;

  ck.run("galois action on indicators", [&] {
    long step = std::max(1L, ring.size() / 6);
    for (long c = 0; c < ring.size(); c += step) {
      const Character& chi = ring.irreducibles[c];
      for (auto [m, k, l] : std::vector<std::array<long, 3>>{
               {3, 1, 2}, {3, 2, 2}, {4, 1, 3}, {5, 2, 3}, {2, 1, 1}})
        if (!galois_check(chi, m, k, l, nopt)) return false;
    }
    return true;
  });

  ck.run("integrality under the squarefree and large-m criteria", [&] {
    long step = std::max(1L, ring.size() / 6);
    for (long c = 0; c < ring.size(); c += step)
      if (!squarefree_integrality_check(ring.irreducibles[c], 10, nopt)) return false;
    return true;
  });

  if (h.provenance() == Provenance::group_algebra) {
    ck.run("group-algebra indicators are rational integers", [&] {
      for (const Character& chi : ring.irreducibles)
        for (long m = 2; m <= 8; ++m)
          if (!nu(chi, m, 1, nopt).integrality) return false;
      return true;
    });
  }
  return out;
}

// ---- suite: cauchy ----

inline std::vector<CheckResult> verify_cauchy(const HopfAlg& h, VerifyOptions opt = {}) {
  std::vector<CheckResult> out;
  detail::Checker ck(out);
  ck.run("every prime dividing dim(H) divides exp(H)", [&] {
    for (auto [p, ok] : cauchy_check(h, opt.exp_cap, opt.seed))
      if (!ok) return false;
    return true;
  });
  ck.run("exp(H) divides dim(H)^3", [&] {
    long e = algebra_exponent(h, opt.exp_cap, opt.seed).value;
    return int_pow(Int(h.dim()), 3) % e == 0;
  });
  return out;
}

// ---- suite: divisibility ----

inline std::vector<CheckResult> verify_divisibility(const HopfAlg& h, VerifyOptions opt = {}) {
  std::vector<CheckResult> out;
  detail::Checker ck(out);
  if (!detail::ring_capable(h)) {
    ck.note("order/multiplicity divisibility", "character ring above the dimension cap");
    return out;
  }
  CharRing ring = simple_characters(h, opt.seed);

  ck.run("order bounds and the dim*mult divisibility", [&] {
    for (const Character& chi : ring.irreducibles) {
      auto [ord, mult] = order_and_multiplicity(ring, chi);
      if (ord > h.dim() || ord > ring.size()) return false;
      if ((Int(h.dim()) * mult) % ord != 0) return false;
    }
    return true;
  });

  ck.run("integral characteristic polynomials (character ring path)", [&] {
    for (const Character& chi : ring.irreducibles)
      charpoly_left_mult_ring(ring, chi); // throws on a non-integral coefficient
    return true;
  });

  if (h.dim() <= 64) {
    ck.run("integral characteristic polynomials (dual path)", [&] {
      for (const Character& chi : ring.irreducibles) charpoly_left_mult_dual(chi);
      return true;
    });
  } else {
    ck.note("integral characteristic polynomials (dual path)", "dimension above 64");
  }

  ck.run("self-dual simples force even dimension", [&] {
    for (long i = 1; i < ring.size(); ++i)
      if (char_dual(ring.irreducibles[i]) == ring.irreducibles[i] && h.dim() % 2 != 0)
        return false;
    return true;
  });

  ck.run("odd dimension with a 3-dimensional simple forces 3 | dim", [&] {
    if (h.dim() % 2 == 0) return true;
    for (long d : ring.degrees)
      if (d == 3 && h.dim() % 3 != 0) return false;
    return true;
  });

  return out;
}

// ---- suite: fusion ----

inline std::vector<CheckResult> verify_fusion(const HopfAlg& h, VerifyOptions opt = {}) {
  std::vector<CheckResult> out;
  detail::Checker ck(out);
  if (!detail::ring_capable(h)) {
    ck.note("fusion analyses", "character ring above the dimension cap");
    return out;
  }
  CharRing ring = simple_characters(h, opt.seed);

  ck.run("fusion analyses: block form, Perron value, index divisibilities", [&] {
    long e = algebra_exponent(h, opt.exp_cap, opt.seed).value;
    for (const Character& chi : ring.irreducibles) {
      FusionAnalysis fa = analyze(ring, chi); // Perron and block form checked inside
      auto [ord, mult] = order_and_multiplicity(ring, chi);
      (void)mult;
      if (e % fa.index != 0 || ord % fa.index != 0) return false;
    }
    return true;
  });

  ck.run("index equals the central-grouplike count wherever defined", [&] {
    for (const Character& chi : ring.irreducibles) {
      FusionAnalysis fa = analyze(ring, chi);
      auto gv = gv_group(h, ring, chi, fa, opt.seed);
      if (gv && *gv != fa.index) return false;
    }
    return true;
  });

  ck.run("eigenvalue-count oracle agreement (reachable blocks of size <= 8)", [&] {
    for (const Character& chi : ring.irreducibles) {
      FusionAnalysis fa = analyze(ring, chi);
      long r = static_cast<long>(fa.reachable.size());
      if (r > 8) continue;
      Matrix<Rat> reach(r, r);
      for (long i = 0; i < r; ++i)
        for (long j = 0; j < r; ++j) reach(i, j) = fa.matrix(fa.reachable[i], fa.reachable[j]);
      if (eigenvalue_count_oracle(reach, fa.perron) != fa.index) return false;
    }
    return true;
  });

  return out;
}

// ---- suite: double ----

inline std::vector<CheckResult> verify_double(const HopfAlg& h, VerifyOptions opt = {}) {
  std::vector<CheckResult> out;
  detail::Checker ck(out);
  if (h.provenance() != Provenance::drinfeld_double) {
    ck.note("double identities", "not a Drinfel'd double");
    return out;
  }
  const Group& f = h.grp_f();

  ck.run("drinfeld element is central with order exp(F)", [&] {
    AlgElem u = drinfeld_element(h);
    if (!is_central(u)) return false;
    long ef = f.exponent();
    AlgElem p = u;
    long order = 1;
    while (p != h.unit()) {
      p = mult(p, u);
      if (++order > ef) return false;
    }
    return order == ef;
  });

  ck.run("R-matrix intertwines the coproduct", [&] {
    long nf = f.order();
    std::map<std::pair<long, long>, CycNum> R;
    for (long x = 0; x < nf; ++x)
      for (long g = 0; g < nf; ++g) R[{h.index_of(g, x), h.index_of(x, f.id())}] = CycNum(1);
    auto tensor_mult = [&](const std::map<std::pair<long, long>, CycNum>& A,
                           const std::map<std::pair<long, long>, CycNum>& B) {
      std::map<std::pair<long, long>, CycNum> out2;
      for (const auto& [ka, ca] : A)
        for (const auto& [kb, cb] : B) {
          long p = h.mult_basis(ka.first, kb.first);
          long q = h.mult_basis(ka.second, kb.second);
          if (p < 0 || q < 0) continue;
          auto key = std::make_pair(p, q);
          auto it = out2.find(key);
          if (it == out2.end()) out2.emplace(key, ca * cb);
          else it->second += ca * cb;
        }
      for (auto it = out2.begin(); it != out2.end();)
        it = it->second.is_zero() ? out2.erase(it) : std::next(it);
      return out2;
    };
    for (long a = 0; a < h.dim(); ++a) {
      std::map<std::pair<long, long>, CycNum> delta, delta_cop;
      h.for_comult_basis(a, [&](long p, long q) {
        delta[{p, q}] += CycNum(1);
        delta_cop[{q, p}] += CycNum(1);
      });
      if (!(tensor_mult(delta_cop, R) == tensor_mult(R, delta))) return false;
    }
    return true;
  });

  ck.run("center projector fixes central elements and lands in the center", [&] {
    AlgElem u = drinfeld_element(h);
    AlgElem um = mult(u, u);
    if (!(center_projector(h, um) == um)) return false;
    std::mt19937 rng(opt.seed);
    for (int t = 0; t < 6; ++t) {
      AlgElem img = center_projector(h, h.basis_elem(static_cast<long>(rng() % h.dim())));
      if (!is_central(img)) return false;
    }
    return true;
  });

  if (f.order() <= 24) {
    ck.run("projected character identity of induced modules (basis-wise)", [&] {
      auto reps = explicit_group_irreps(f, opt.seed);
      if (!reps) return false;
      CharTable ft = character_table(f, opt.seed);
      for (size_t r = 0; r < reps->size(); ++r) {
        Module ind = induced_double_module(h, (*reps)[r]);
        Character eta = ind.character();
        for (long b = 0; b < h.dim(); ++b) {
          AlgElem pb = center_projector(h, h.basis_elem(b));
          CycNum rhs;
          for (const auto& [i, c] : pb.coeffs())
            rhs += c * CycNum(Rat(1, f.order())) * ft.value(static_cast<long>(r), h.x_part(i));
          rhs *= CycNum(f.order());
          if (eta.value(b) != rhs) return false;
        }
      }
      return true;
    });

    ck.run("restriction to the group ring is surjective onto the center", [&] {
      auto [rank, target] = restriction_rank_check(f, opt.seed);
      return rank == target;
    });
  } else {
    ck.note("projected character identity of induced modules", "group above the module cap");
    ck.note("restriction to the group ring is surjective onto the center",
            "group above the module cap");
  }

  return out;
}

inline std::vector<CheckResult> verify_suite(const std::string& suite, const HopfAlg& h,
                                             VerifyOptions opt = {}) {
  if (suite == "sweedler") return verify_sweedler(h, opt);
  if (suite == "integral") return verify_integral(h, opt);
  if (suite == "indicators") return verify_indicators(h, opt);
  if (suite == "galois") return verify_galois(h, opt);
  if (suite == "cauchy") return verify_cauchy(h, opt);
  if (suite == "divisibility") return verify_divisibility(h, opt);
  if (suite == "fusion") return verify_fusion(h, opt);
  if (suite == "double") return verify_double(h, opt);
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const char* s : {"sweedler", "integral", "indicators", "galois", "cauchy",
                          "divisibility", "fusion", "double"}) {
      auto part = verify_suite(s, h, opt);
      for (auto& r : part) r.name = std::string(s) + ": " + r.name;
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw parse_error("verify: unknown suite '" + suite + "'");
}

} // namespace hopfind

#endif
