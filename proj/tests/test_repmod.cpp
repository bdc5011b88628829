#include <catch2/catch_amalgamated.hpp>

#include "hopfind/repmod.hpp"

using namespace hopfind;

namespace {

HopfAlg make_a4_z9() {
  Group f = Group::cyclic(9);
  Group a4 = Group::alternating(4);
  GroupAction act = GroupAction::conjugation_by(f, a4, a4.index_of_cycles({{1, 2, 3}}));
  return HopfAlg::smash(a4, f, act);
}

// the standard 2-dimensional integral representation of S3, indexed by the
// elements of the supplied copy of S3
std::vector<Matrix<CycNum>> s3_standard_rep(const Group& s3) {
  auto mat = [](long a, long b, long c, long d) {
    Matrix<CycNum> m(2, 2);
    m(0, 0) = CycNum(a);
    m(0, 1) = CycNum(b);
    m(1, 0) = CycNum(c);
    m(1, 1) = CycNum(d);
    return m;
  };
  Matrix<CycNum> rot = mat(0, -1, 1, -1);  // order 3
  Matrix<CycNum> flip = mat(0, 1, 1, 0);   // order 2
  // find generators of order 3 and 2 directly
  long gen3 = -1, gen2 = -1;
  for (long e = 0; e < 6; ++e) {
    if (s3.element_order(e) == 3 && gen3 < 0) gen3 = e;
    if (s3.element_order(e) == 2 && gen2 < 0) gen2 = e;
  }
  std::vector<Matrix<CycNum>> rho(6, Matrix<CycNum>(2, 2));
  std::vector<bool> have(6, false);
  rho[s3.id()] = Matrix<CycNum>::identity(2);
  have[s3.id()] = true;
  bool progress = true;
  while (progress) {
    progress = false;
    for (long e = 0; e < 6; ++e) {
      if (!have[e]) continue;
      for (auto [g, m] : {std::pair{gen3, rot}, std::pair{gen2, flip}}) {
        long t = s3.mul(g, e);
        if (!have[t]) {
          rho[t] = m * rho[e];
          have[t] = true;
          progress = true;
        }
      }
    }
  }
  return rho;
}

// the 5-dimensional simple module of K[Z11 x| Z5] from the induced-module
// formulas: (0,1).v_n = v_{n+1}, (1,0).v_n = zeta^{a^{-n}} v_n
Module pq_module(const HopfAlg& h) {
  long p = 5, q = 11, a = 3;
  std::vector<long> apow(p);
  apow[0] = 1;
  for (long i = 1; i < p; ++i) apow[i] = apow[i - 1] * a % q;
  std::vector<Matrix<CycNum>> action(h.dim(), Matrix<CycNum>(p, p));
  for (long m = 0; m < q; ++m)
    for (long n = 0; n < p; ++n) {
      // element (m,n) has index m*p + n; (m,n).v_j = zeta^{a^{-(j+n)} m} v_{j+n}
      Matrix<CycNum>& mat = action[h.index_of(0, m * p + n)];
      for (long j = 0; j < p; ++j) {
        long target = imod(j + n, p);
        long exponent = imod(apow[imod(-target, p)] * m, q);
        mat(target, j) = CycNum::root(q, exponent);
      }
    }
  return explicit_module(h, std::move(action));
}

} // namespace

TEST_CASE("simple characters of dual group algebras", "[repmod]") {
  HopfAlg dg = HopfAlg::dual_group_algebra(Group::symmetric(3));
  CharRing ring = simple_characters(dg);
  CHECK(ring.size() == 6);
  for (long d : ring.degrees) CHECK(d == 1);
  for (long i = 0; i < ring.size(); ++i) CHECK(ring.irreducibles[i].values.size() == 1);
}

TEST_CASE("simple characters of group algebras match the character table", "[repmod]") {
  HopfAlg ks3 = HopfAlg::group_algebra(Group::symmetric(3));
  CharRing ring = simple_characters(ks3);
  REQUIRE(ring.size() == 3);
  CHECK(ring.degrees == std::vector<long>{1, 1, 2});
  for (long x = 0; x < 6; ++x) CHECK(ring.irreducibles[0].value(ks3.index_of(0, x)) == CycNum(1));
}

TEST_CASE("simple characters of the A4/Z9 smash product", "[repmod]") {
  HopfAlg h = make_a4_z9();
  CharRing ring = simple_characters(h);
  CHECK(ring.size() == 36);
  long sum = 0;
  for (long d : ring.degrees) sum += d * d;
  CHECK(sum == 108);
  const Group& a4 = h.grp_g();
  long g0 = a4.index_of_cycles({{1, 4, 3}});
  bool found = false;
  for (const Character& chi : ring.irreducibles) {
    if (chi.orbit_rep < 0 || chi.stab_embedding.size() != 3) continue;
    bool same_orbit = false;
    for (long x = 0; x < 9; ++x)
      if (h.action().act(x, chi.orbit_rep) == g0) same_orbit = true;
    if (!same_orbit) continue;
    if (chi.degree == CycNum(3) && chi.eta[1] == CycNum::root(3, 1)) found = true;
  }
  CHECK(found);
}

TEST_CASE("simple characters of D(K[S3])", "[repmod]") {
  HopfAlg d = HopfAlg::double_of_group(Group::symmetric(3));
  CharRing ring = simple_characters(d);
  CHECK(ring.size() == 8);
  long sum = 0;
  for (long dd : ring.degrees) sum += dd * dd;
  CHECK(sum == 36);
  CHECK(ring.degrees == std::vector<long>{1, 1, 2, 2, 2, 2, 3, 3});
}

TEST_CASE("character arithmetic basics", "[repmod]") {
  HopfAlg kz2 = HopfAlg::group_algebra(Group::cyclic(2));
  CharRing ring = simple_characters(kz2);
  REQUIRE(ring.size() == 2);
  const Character& eps = ring.irreducibles[0];
  const Character& sgn = ring.irreducibles[1];
  CHECK(char_mul(eps, sgn) == sgn);
  CHECK(char_mul(sgn, sgn) == eps);
  CHECK(char_dual(sgn) == sgn);
  CHECK(invariant_dim(eps) == 1);
  CHECK(invariant_dim(sgn) == 0);
}

TEST_CASE("invariants of the 3-dimensional A4/Z9 character", "[repmod]") {
  HopfAlg h = make_a4_z9();
  CharRing ring = simple_characters(h);
  const Character* chi3 = nullptr;
  for (const Character& chi : ring.irreducibles)
    if (chi.degree == CycNum(3) && !chi3) chi3 = &chi;
  REQUIRE(chi3);
  CHECK(invariant_dim(*chi3) == 0);
  CHECK(invariant_dim(char_mul(*chi3, char_dual(*chi3))) == 1);
}

TEST_CASE("fusion matrices", "[repmod]") {
  HopfAlg kz2 = HopfAlg::group_algebra(Group::cyclic(2));
  CharRing ring = simple_characters(kz2);
  Matrix<Rat> id = fusion_matrix(ring, ring.irreducibles[0]);
  CHECK(id == Matrix<Rat>::identity(2));
  Matrix<Rat> s = fusion_matrix(ring, ring.irreducibles[1]);
  CHECK(s(0, 0) == 0);
  CHECK(s(0, 1) == 1);
  CHECK(s(1, 0) == 1);
  CHECK(s(1, 1) == 0);

  HopfAlg pq = HopfAlg::group_algebra(Group::semidirect_zq_zp(11, 5, 3));
  CharRing pqring = simple_characters(pq);
  const Character* chi5 = nullptr;
  for (const Character& chi : pqring.irreducibles)
    if (chi.degree == CycNum(5) && !chi5) chi5 = &chi;
  REQUIRE(chi5);
  Matrix<Rat> a = fusion_matrix(pqring, *chi5); // column law checked internally
  CHECK(a.rows() == 7);
}

TEST_CASE("order and multiplicity", "[repmod]") {
  HopfAlg ks3 = HopfAlg::group_algebra(Group::symmetric(3));
  CharRing ring = simple_characters(ks3);
  CHECK(order_and_multiplicity(ring, ring.irreducibles[0]) == std::pair<long, long>{1, 1});
  CHECK(order_and_multiplicity(ring, ring.irreducibles[2]) == std::pair<long, long>{2, 1});

  HopfAlg pq = HopfAlg::group_algebra(Group::semidirect_zq_zp(11, 5, 3));
  CharRing pqring = simple_characters(pq);
  for (const Character& chi : pqring.irreducibles) {
    if (chi.degree != CycNum(5)) continue;
    auto [ord, mult] = order_and_multiplicity(pqring, chi);
    CHECK(ord == 3);
    CHECK(55 % ord != 0);
    CHECK((55 * mult) % ord == 0);
  }
}

TEST_CASE("pq example: invariant criterion by root-sum search", "[repmod]") {
  HopfAlg pq = HopfAlg::group_algebra(Group::semidirect_zq_zp(11, 5, 3));
  CharRing ring = simple_characters(pq);
  const Character* chi5 = nullptr;
  for (const Character& chi : ring.irreducibles)
    if (chi.degree == CycNum(5) && !chi5) chi5 = &chi;
  REQUIRE(chi5);
  long p = 5, q = 11, a = 3;
  std::vector<long> apow(p);
  apow[0] = 1;
  for (long i = 1; i < p; ++i) apow[i] = apow[i - 1] * a % q;
  Character power = *chi5;
  for (long m = 1; m <= 4; ++m) {
    bool exists = false;
    std::vector<long> idx(m, 0);
    for (;;) {
      long s = 0;
      for (long t = 0; t < m; ++t) s += apow[idx[t]];
      if (s % q == 0) exists = true;
      long pos = m - 1;
      while (pos >= 0 && idx[pos] == p - 1) idx[pos--] = 0;
      if (pos < 0) break;
      ++idx[pos];
    }
    CHECK((invariant_dim(power) > 0) == exists);
    power = char_mul(power, *chi5);
  }
}

TEST_CASE("explicit pq module matches a degree-5 character", "[repmod]") {
  HopfAlg pq = HopfAlg::group_algebra(Group::semidirect_zq_zp(11, 5, 3));
  Module v = pq_module(pq);
  CHECK(v.dim == 5);
  Character chi = v.character();
  CHECK(chi.degree == CycNum(5));
  CharRing ring = simple_characters(pq);
  bool matched = false;
  for (const Character& c : ring.irreducibles)
    if (c == chi) matched = true;
  CHECK(matched);
}

TEST_CASE("induced modules of the A4/Z9 smash product", "[repmod]") {
  HopfAlg h = make_a4_z9();
  const Group& a4 = h.grp_g();
  const Group& f = h.grp_f();
  long g0 = a4.index_of_cycles({{1, 4, 3}});
  std::vector<CycNum> eta{CycNum(1), CycNum::root(3, 1), CycNum::root(3, 2)};
  Module v = induced_module(h, g0, eta);
  CHECK(v.dim == 3);
  // 1 (x) c permutes the coset basis cyclically (no scalar twist)
  AlgElem one_c(&h);
  for (long g = 0; g < a4.order(); ++g) one_c.add_term(h.index_of(g, 1), CycNum(1));
  Matrix<CycNum> mc(3, 3);
  for (const auto& [i, c] : one_c.coeffs())
    for (long r = 0; r < 3; ++r)
      for (long s = 0; s < 3; ++s) mc(r, s) += c * v.action[i](r, s);
  long nonzero = 0;
  for (long r = 0; r < 3; ++r)
    for (long s = 0; s < 3; ++s)
      if (!mc(r, s).is_zero()) {
        ++nonzero;
        CHECK(r != s); // off-diagonal: a genuine 3-cycle on the cosets
      }
  CHECK(nonzero == 3);
  // wrapping around the cosets picks up eta(c^3) = zeta_3
  Matrix<CycNum> mc3 = mc * mc * mc;
  Matrix<CycNum> expect(3, 3);
  for (long r = 0; r < 3; ++r) expect(r, r) = CycNum::root(3, 1);
  CHECK(mc3 == expect);

  CharRing ring = simple_characters(h);
  Character chi = v.character();
  bool matched = false;
  for (const Character& c : ring.irreducibles)
    if (c == chi) matched = true;
  CHECK(matched);

  std::vector<CycNum> triv(f.order(), CycNum(1));
  Module t = induced_module(h, a4.id(), triv);
  CHECK(t.dim == 1);
  for (long i = 0; i < h.dim(); ++i) CHECK(t.action[i](0, 0) == CycNum(h.counit_basis(i)));
}

TEST_CASE("rotation trace", "[repmod]") {
  HopfAlg h = make_a4_z9();
  const Group& a4 = h.grp_g();
  long g0 = a4.index_of_cycles({{1, 4, 3}});
  std::vector<CycNum> eta{CycNum(1), CycNum::root(3, 1), CycNum::root(3, 2)};
  Module v = induced_module(h, g0, eta);
  CHECK(rotation_trace(v, 1, 1) == CycNum(0));
  CHECK(rotation_trace(v, 3, 1) == CycNum(1) + CycNum::root(3, 1));
  CHECK(rotation_trace(v, 3, 2) == CycNum(1) + CycNum::root(3, 2));

  HopfAlg ks3 = HopfAlg::group_algebra(Group::symmetric(3));
  Module reg = regular_module(ks3);
  CHECK(rotation_trace(reg, 2, 1) == CycNum(4));
  CHECK(rotation_trace(reg, 2, 1) == e_map_trace(ks3, 2));
}

TEST_CASE("rotation trace equals the generic sweedler route", "[repmod]") {
  HopfAlg d = HopfAlg::double_of_group(Group::symmetric(3));
  CharRing ring = simple_characters(d);
  for (long idx : {0L, 2L, 6L}) {
    const Character& chi = ring.irreducibles[idx];
    StabilizerData stab = stabilizer(d.action(), chi.orbit_rep);
    Module v = [&] {
      if (chi.eta_degree == CycNum(1)) {
        return induced_module(d, chi.orbit_rep, chi.eta);
      }
      return induced_module_from_rep(d, chi.orbit_rep, s3_standard_rep(stab.subgroup));
    }();
    REQUIRE(v.character() == chi);
    AlgElem lam = d.integral();
    for (long m = 1; m <= 4; ++m)
      for (long k = 1; k <= m; ++k) {
        if (igcd(m, k) != 1) continue;
        double dm = std::pow(static_cast<double>(v.dim), m);
        if (dm > 10000) continue;
        CHECK(rotation_trace(v, m, k) == char_eval(chi, sweedler_power_mk(lam, m, k)));
      }
  }
}

TEST_CASE("canonical tensor route and exponent via t-order", "[repmod]") {
  HopfAlg ks3 = HopfAlg::group_algebra(Group::symmetric(3));
  AlgElem lam = ks3.integral();
  Module reg = regular_module(ks3);
  Character chi_r = regular_character(ks3);
  for (long m = 1; m <= 6; ++m) {
    CycNum lhs = canonical_tensor_indicator(reg, m);
    CycNum rhs = char_eval(chi_r, sweedler_power_seq(lam, IndexSeq({m})));
    CHECK(lhs == rhs);
  }
  CHECK(module_exponent_t_order(reg, 100) == 6);

  HopfAlg h = make_a4_z9();
  std::vector<CycNum> triv(9, CycNum(1));
  Module t = induced_module(h, h.grp_g().id(), triv);
  CHECK(module_exponent_t_order(t, 100) == 1);
}

TEST_CASE("characteristic polynomials of left multiplication", "[repmod]") {
  HopfAlg kz2 = HopfAlg::group_algebra(Group::cyclic(2));
  CharRing ring = simple_characters(kz2);
  std::vector<Rat> cp = charpoly_left_mult_ring(ring, ring.irreducibles[0]);
  CHECK(cp == std::vector<Rat>{Rat(1), Rat(-2), Rat(1)});
  std::vector<CycNum> cpd = charpoly_left_mult_dual(ring.irreducibles[1]);
  REQUIRE(cpd.size() == 3);
  CHECK(cpd[0] == CycNum(-1));
  CHECK(cpd[1] == CycNum(0));
  CHECK(cpd[2] == CycNum(1));

  HopfAlg pq = HopfAlg::group_algebra(Group::semidirect_zq_zp(11, 5, 3));
  CharRing pqring = simple_characters(pq);
  for (const Character& chi : pqring.irreducibles) {
    if (chi.degree != CycNum(5)) continue;
    std::vector<CycNum> c = charpoly_left_mult_dual(chi);
    CHECK(c.size() == 56);
    break;
  }
}

TEST_CASE("induced double modules and the projected character identity", "[repmod]") {
  for (long n : {2L, 3L, 4L}) {
    Group f = Group::cyclic(n);
    HopfAlg dbl = HopfAlg::double_of_group(f);
    CharTable ft = character_table(f);
    for (long r = 0; r < ft.num_chars(); ++r) {
      std::vector<Matrix<CycNum>> rho(n, Matrix<CycNum>(1, 1));
      for (long x = 0; x < n; ++x) rho[x](0, 0) = ft.value(r, x);
      Module ind = induced_double_module(dbl, rho);
      CHECK(ind.dim == n);
      Character eta = ind.character();
      for (long b = 0; b < dbl.dim(); ++b) {
        AlgElem pb = center_projector(dbl, dbl.basis_elem(b));
        CycNum rhs;
        for (const auto& [i, c] : pb.coeffs())
          rhs += c * CycNum(Rat(1, n)) * ft.value(r, dbl.x_part(i));
        rhs *= CycNum(n);
        CHECK(eta.value(b) == rhs);
      }
    }
  }
  Group s3 = Group::symmetric(3);
  HopfAlg dbl = HopfAlg::double_of_group(s3);
  Module ind = induced_double_module(dbl, s3_standard_rep(s3));
  CHECK(ind.dim == 12);
  std::vector<Matrix<CycNum>> triv(6, Matrix<CycNum>::identity(1));
  CHECK(induced_double_module(dbl, triv).dim == 6);
}

TEST_CASE("restriction surjectivity rank", "[repmod]") {
  CHECK(restriction_rank_check(Group::cyclic(4)) == std::pair<long, long>{4, 4});
  CHECK(restriction_rank_check(Group::symmetric(3)) == std::pair<long, long>{3, 3});
  CHECK(restriction_rank_check(Group::cyclic(1)) == std::pair<long, long>{1, 1});
}

TEST_CASE("self-dual and odd-dimension consistency on pq", "[repmod]") {
  HopfAlg pq = HopfAlg::group_algebra(Group::semidirect_zq_zp(11, 5, 3));
  CharRing ring = simple_characters(pq);
  for (long i = 1; i < ring.size(); ++i) {
    const Character& chi = ring.irreducibles[i];
    CHECK_FALSE(char_dual(chi) == chi);
  }
  for (long d : ring.degrees) CHECK(d != 3);
}

TEST_CASE("module verification rejects bad data", "[repmod]") {
  HopfAlg kz2 = HopfAlg::group_algebra(Group::cyclic(2));
  std::vector<Matrix<CycNum>> bad(2, Matrix<CycNum>(1, 1));
  bad[0](0, 0) = CycNum(1);
  bad[1](0, 0) = CycNum(2);
  CHECK_THROWS_AS(explicit_module(kz2, bad), invariant_error);
}

TEST_CASE("induced modules reproduce their ring characters on D(K[Z3])", "[repmod]") {
  HopfAlg d = HopfAlg::double_of_group(Group::cyclic(3));
  CharRing ring = simple_characters(d);
  for (const Character& chi : ring.irreducibles) {
    Module v = induced_module(d, chi.orbit_rep, chi.eta);
    CHECK(v.character() == chi);
  }
}
