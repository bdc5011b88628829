#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hopfind/hopf.hpp"
#include "hopfind/matrix.hpp"

using namespace hopfind;

namespace {

// Test-only oracle: solve the two-sided integral system h x = eps(h) x = x h
// with eps(x) = 1 by exact linear algebra, independent of the closed form.
AlgElem integral_by_linear_solve(const HopfAlg& h) {
  long n = h.dim();
  Matrix<Rat> sys(2 * n * n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      long ij = h.mult_basis(i, j);
      long ji = h.mult_basis(j, i);
      if (ij >= 0) sys(i * n + ij, j) += Rat(1);
      if (ji >= 0) sys(n * n + i * n + ji, j) += Rat(1);
      Rat e = h.counit_basis(i);
      if (e != 0) {
        sys(i * n + j, j) -= e;
        sys(n * n + i * n + j, j) -= e;
      }
    }
  auto basis = nullspace(sys);
  REQUIRE(basis.size() == 1);
  Rat eps(0);
  for (long j = 0; j < n; ++j) eps += basis[0][j] * h.counit_basis(j);
  REQUIRE(eps != 0);
  AlgElem out(&h);
  for (long j = 0; j < n; ++j) out.add_term(j, CycNum(basis[0][j] / eps));
  return out;
}

HopfAlg make_a4_z9() {
  Group f = Group::cyclic(9);
  Group a4 = Group::alternating(4);
  GroupAction act = GroupAction::conjugation_by(f, a4, a4.index_of_cycles({{1, 2, 3}}));
  return HopfAlg::smash(a4, f, act);
}

HopfAlg make_s5_z3() {
  Group f = Group::cyclic(3);
  Group s5 = Group::symmetric(5);
  GroupAction act = GroupAction::conjugation_by(f, s5, s5.index_of_cycles({{1, 2, 3}}));
  return HopfAlg::smash(s5, f, act);
}

} // namespace

TEST_CASE("group algebra and dual group algebra basics", "[hopf]") {
  HopfAlg kz2 = HopfAlg::group_algebra(Group::cyclic(2));
  CHECK(kz2.dim() == 2);
  for (long i = 0; i < 2; ++i) CHECK(kz2.antipode_basis(i) == i);

  HopfAlg ds3 = HopfAlg::dual_group_algebra(Group::symmetric(3));
  CHECK(ds3.dim() == 6);
  // counit = evaluation at the identity
  long ones = 0;
  for (long i = 0; i < 6; ++i)
    if (ds3.counit_basis(i) == 1) ++ones;
  CHECK(ones == 1);
  CHECK(ds3.counit_basis(ds3.index_of(ds3.grp_g().id(), 0)) == 1);
}

TEST_CASE("integral closed forms match the linear-solve oracle", "[hopf]") {
  for (HopfAlg h : {HopfAlg::group_algebra(Group::symmetric(3)),
                    HopfAlg::dual_group_algebra(Group::symmetric(3)),
                    HopfAlg::double_of_group(Group::cyclic(2)),
                    HopfAlg::double_of_group(Group::symmetric(3))}) {
    CHECK(h.integral() == integral_by_linear_solve(h));
  }
  HopfAlg ks3 = HopfAlg::group_algebra(Group::symmetric(3));
  AlgElem lam = ks3.integral();
  for (long i = 0; i < 6; ++i) CHECK(lam.coeff(i) == CycNum(Rat(1, 6)));
  HopfAlg dg = HopfAlg::dual_group_algebra(Group::symmetric(3));
  AlgElem lam2 = dg.integral();
  CHECK(lam2.support_size() == 1);
  CHECK(lam2.coeff(dg.index_of(dg.grp_g().id(), 0)) == CycNum(1));
}

TEST_CASE("smash construction: dimensions and degenerate cases", "[hopf]") {
  HopfAlg h = make_a4_z9();
  CHECK(h.dim() == 108);
  CHECK(h.integral().support_size() == 9);

  // trivial G: isomorphic to K[F]
  Group triv = Group::cyclic(1);
  Group f = Group::cyclic(4);
  GroupAction act = GroupAction::from_table(f, triv, std::vector<std::int32_t>(4, 0), false);
  HopfAlg kf = HopfAlg::smash(triv, f, act);
  CHECK(kf.dim() == 4);
  HopfAlg ref = HopfAlg::group_algebra(Group::cyclic(4));
  for (long i = 0; i < 4; ++i)
    for (long j = 0; j < 4; ++j) CHECK(kf.mult_basis(i, j) == ref.mult_basis(i, j));

  // trivial F: isomorphic to K^G
  std::vector<std::int32_t> idt(4);
  for (long i = 0; i < 4; ++i) idt[i] = static_cast<std::int32_t>(i);
  HopfAlg kg = HopfAlg::smash(Group::cyclic(4), triv,
                              GroupAction::from_table(triv, Group::cyclic(4), idt, false));
  HopfAlg ref2 = HopfAlg::dual_group_algebra(Group::cyclic(4));
  for (long i = 0; i < 4; ++i)
    for (long j = 0; j < 4; ++j) CHECK(kg.mult_basis(i, j) == ref2.mult_basis(i, j));
}

TEST_CASE("doubles are constructed and verified", "[hopf]") {
  HopfAlg d2 = HopfAlg::double_of_group(Group::cyclic(2));
  CHECK(d2.dim() == 4);
  for (long i = 0; i < 4; ++i)
    for (long j = 0; j < 4; ++j) CHECK(d2.mult_basis(i, j) == d2.mult_basis(j, i));
  HopfAlg d6 = HopfAlg::double_of_group(Group::symmetric(3));
  CHECK(d6.dim() == 36);
}

TEST_CASE("R-matrix intertwines the coproduct on D(K[S3])", "[hopf]") {
  HopfAlg d = HopfAlg::double_of_group(Group::symmetric(3));
  const Group& f = d.grp_f();
  long nf = f.order();
  // R = sum_i (eps (x) x_i) (x) (b_{x_i}* (x) 1) as a sparse pair tensor
  std::map<std::pair<long, long>, CycNum> R;
  for (long x = 0; x < nf; ++x)
    for (long g = 0; g < nf; ++g)
      R[{d.index_of(g, x), d.index_of(x, f.id())}] = CycNum(1);

  auto tensor_mult = [&](const std::map<std::pair<long, long>, CycNum>& A,
                         const std::map<std::pair<long, long>, CycNum>& B) {
    std::map<std::pair<long, long>, CycNum> out;
    for (const auto& [ka, ca] : A)
      for (const auto& [kb, cb] : B) {
        long p = d.mult_basis(ka.first, kb.first);
        long q = d.mult_basis(ka.second, kb.second);
        if (p < 0 || q < 0) continue;
        auto key = std::make_pair(p, q);
        auto it = out.find(key);
        if (it == out.end()) out.emplace(key, ca * cb);
        else it->second += ca * cb;
      }
    for (auto it = out.begin(); it != out.end();)
      it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
  };

  for (long a = 0; a < d.dim(); ++a) {
    std::map<std::pair<long, long>, CycNum> delta, delta_cop;
    d.for_comult_basis(a, [&](long p, long q) {
      delta[{p, q}] += CycNum(1);
      delta_cop[{q, p}] += CycNum(1);
    });
    REQUIRE(tensor_mult(delta_cop, R) == tensor_mult(R, delta));
  }
}

TEST_CASE("sweedler powers: grouplike case and unit laws", "[hopf]") {
  HopfAlg ks3 = HopfAlg::group_algebra(Group::symmetric(3));
  const Group& s3 = ks3.grp_f();
  std::mt19937 rng(3);
  for (int t = 0; t < 10; ++t) {
    long g = static_cast<long>(rng() % 6);
    long m = 1 + rng() % 5;
    std::vector<long> im(m);
    std::iota(im.begin(), im.end(), 1);
    std::shuffle(im.begin(), im.end(), rng);
    AlgElem ge = ks3.basis_elem(ks3.index_of(0, g));
    AlgElem pw = sweedler_power(ge, Perm(im));
    CHECK(pw == ks3.basis_elem(ks3.index_of(0, s3.power(g, m))));
  }
  HopfAlg h = make_a4_z9();
  AlgElem lam = h.integral();
  CHECK(sweedler_power_seq(lam, IndexSeq({1})) == lam);
}

TEST_CASE("power law (h^sigma)^tau = h^{sigma tau}", "[hopf]") {
  std::mt19937 rng(17);
  for (HopfAlg h : {HopfAlg::group_algebra(Group::symmetric(3)),
                    HopfAlg::dual_group_algebra(Group::cyclic(4)),
                    HopfAlg::double_of_group(Group::cyclic(3))}) {
    for (int t = 0; t < 8; ++t) {
      AlgElem a(&h);
      for (int s = 0; s < 3; ++s)
        a.add_term(static_cast<long>(rng() % h.dim()), CycNum(1 + static_cast<long>(rng() % 3)));
      auto rand_perm = [&](long d) {
        std::vector<long> im(d);
        std::iota(im.begin(), im.end(), 1);
        std::shuffle(im.begin(), im.end(), rng);
        return Perm(im);
      };
      Perm sigma = rand_perm(1 + rng() % 3), tau = rand_perm(1 + rng() % 3);
      CHECK(sweedler_power(sweedler_power(a, sigma), tau) ==
            sweedler_power(a, perm_product(sigma, tau)));
    }
  }
}

TEST_CASE("z-counts on the A4/Z9 example", "[hopf]") {
  HopfAlg h = make_a4_z9();
  const Group& a4 = h.grp_g();
  long g = a4.index_of_cycles({{1, 4, 3}});
  ZCount z31 = z_counts(h, 3, 1), z32 = z_counts(h, 3, 2);
  CHECK(z31.at(g, 3) == 3); // z_{3,1}(g, c^3) = 3
  CHECK(z32.at(g, 3) == 0);
  CHECK(z31.at(g, 6) == 0);
  CHECK(z32.at(g, 6) == 3);
  CHECK(z31.at(g, 0) == 3); // z_{m,k}(g, 1) = 3
  CHECK(z32.at(g, 0) == 3);
}

TEST_CASE("z-count relations", "[hopf]") {
  HopfAlg h = make_a4_z9();
  const Group& f = h.grp_f();
  const Group& g = h.grp_g();
  const GroupAction& act = h.action();
  std::mt19937 rng(23);

  for (long m : {2L, 3L, 4L}) {
    for (long k = 1; k < m; ++k) {
      if (igcd(m, k) != 1) continue;
      ZCount z = z_counts(h, m, k);
      for (int t = 0; t < 60; ++t) {
        long gg = static_cast<long>(rng() % g.order());
        long x = static_cast<long>(rng() % f.order());
        long y = static_cast<long>(rng() % f.order());
        CHECK(z.at(act.act(x, gg), y) == z.at(gg, f.mul(f.mul(f.inv(x), y), x)));
      }
      for (const auto& [key, cnt] : z.values)
        if (cnt != 0) CHECK(act.act(key.second, key.first) == key.first);
      ZCount z1 = z_counts(h, m, 1);
      for (long gg = 0; gg < g.order(); ++gg) CHECK(z.at(gg, f.id()) == z1.at(gg, f.id()));
      for (long y = 0; y < f.order(); ++y) CHECK(z.at(g.id(), y) == z1.at(g.id(), y));
    }
  }

  {
    long m = 3, q = 2, k = 5; // gcd(5, |F|) = gcd(5, |G|) = 1
    ZCount lhs3 = z_counts(h, m * k, q), rhs3 = z_counts(h, m, q);
    ZCount lhs4 = z_counts(h, m, k * q);
    for (long gg = 0; gg < g.order(); ++gg)
      for (long y = 0; y < f.order(); ++y) {
        CHECK(lhs3.at(gg, f.power(y, k)) == rhs3.at(gg, y));
        CHECK(lhs4.at(gg, f.power(y, k)) == rhs3.at(gg, y));
      }
  }
}

TEST_CASE("closed-form integral powers equal generic sweedler powers", "[hopf]") {
  std::vector<std::pair<long, long>> mks{{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 3}, {5, 2}};
  HopfAlg a4z9 = make_a4_z9();
  HopfAlg dz3 = HopfAlg::double_of_group(Group::cyclic(3));
  HopfAlg ds3 = HopfAlg::double_of_group(Group::symmetric(3));
  for (const HopfAlg* h : {&a4z9, &dz3, &ds3}) {
    AlgElem lam = h->integral();
    for (auto [m, k] : mks) {
      AlgElem closed = integral_power_closed(*h, m, k);
      AlgElem generic = sweedler_power_mk(lam, m, k);
      CHECK(closed == generic);
      CHECK(integral_power_perm_closed(*h, sweedler_perm_mk(m, k)) == closed);
    }
  }
}

TEST_CASE("integral powers are central (coprime case)", "[hopf]") {
  HopfAlg h = make_a4_z9();
  for (auto [m, k] : std::vector<std::pair<long, long>>{{2, 1}, {3, 1}, {3, 2}, {4, 3}})
    CHECK(is_central(integral_power_closed(h, m, k)));
  HopfAlg d = HopfAlg::double_of_group(Group::symmetric(3));
  AlgElem lam = d.integral();
  for (auto [m, k] : std::vector<std::pair<long, long>>{{2, 1}, {3, 2}, {5, 3}})
    CHECK(is_central(sweedler_power_mk(lam, m, k)));
}

TEST_CASE("S5/Z3: the second integral power is not cocommutative", "[hopf]") {
  HopfAlg h = make_s5_z3();
  const Group& s5 = h.grp_g();
  AlgElem p2 = integral_power_closed(h, 2, 1);
  CHECK_FALSE(is_cocommutative(p2));
  SparseTensor2 dp = coproduct(p2);
  long g = s5.index_of_cycles({{3, 4}});
  long hh = s5.index_of_cycles({{3, 4, 5}});
  long c2 = 2; // c^2 in Z3
  auto it = dp.find({h.index_of(g, c2), h.index_of(hh, c2)});
  REQUIRE(it != dp.end());
  CHECK(it->second == CycNum(Rat(1, 3)));
  CHECK(dp.find({h.index_of(hh, c2), h.index_of(g, c2)}) == dp.end());
}

TEST_CASE("odd-dimensional identity Lambda^[6] = Lambda^[3,2]", "[hopf]") {
  HopfAlg h = HopfAlg::group_algebra(Group::semidirect_zq_zp(11, 5, 3));
  AlgElem lam = h.integral();
  CHECK(sweedler_power_seq(lam, IndexSeq({6})) == sweedler_power_seq(lam, IndexSeq({3, 2})));
}

TEST_CASE("grouplike enumeration", "[hopf]") {
  HopfAlg kg = HopfAlg::group_algebra(Group::symmetric(3));
  CHECK(enumerate_grouplikes(kg).size() == 6);
  HopfAlg dg = HopfAlg::dual_group_algebra(Group::symmetric(3));
  CHECK(enumerate_grouplikes(dg).size() == 2);
  HopfAlg h = make_a4_z9();
  auto gl = enumerate_grouplikes(h);
  CHECK(gl.size() == 27);
  for (int t : {0, 5, 13, 26}) {
    const AlgElem& e = gl[t];
    SparseTensor2 d = coproduct(e);
    SparseTensor2 outer;
    for (const auto& [i, ci] : e.coeffs())
      for (const auto& [j, cj] : e.coeffs()) outer[{i, j}] = ci * cj;
    for (auto it = outer.begin(); it != outer.end();)
      it = it->second.is_zero() ? outer.erase(it) : std::next(it);
    CHECK(d == outer);
    CHECK(counit(e) == CycNum(1));
  }
  AlgElem prod = mult(gl[1], gl[2]);
  bool found = false;
  for (const AlgElem& e : gl)
    if (e == prod) found = true;
  CHECK(found);
}

TEST_CASE("e_map_trace counts roots in group algebras", "[hopf]") {
  HopfAlg ks3 = HopfAlg::group_algebra(Group::symmetric(3));
  CHECK(e_map_trace(ks3, 2) == CycNum(4)); // 1 + three transpositions
  HopfAlg kz2 = HopfAlg::group_algebra(Group::cyclic(2));
  CHECK(e_map_trace(kz2, 2) == CycNum(2));
  HopfAlg ka4 = HopfAlg::group_algebra(Group::alternating(4));
  CHECK(e_map_trace(ka4, 3) == CycNum(9)); // 1 + eight 3-cycles
}

TEST_CASE("drinfeld element: centrality and order", "[hopf]") {
  HopfAlg d2 = HopfAlg::double_of_group(Group::cyclic(2));
  AlgElem u2 = drinfeld_element(d2);
  CHECK(is_central(u2));
  CHECK(mult(u2, u2) == d2.unit());
  CHECK(u2 != d2.unit());

  HopfAlg ds3 = HopfAlg::double_of_group(Group::symmetric(3));
  AlgElem u = drinfeld_element(ds3);
  CHECK(is_central(u));
  AlgElem p = u;
  long order = 1;
  while (p != ds3.unit()) {
    p = mult(p, u);
    ++order;
    REQUIRE(order <= 36);
  }
  CHECK(order == 6); // = exp(S3)

  AlgElem um = mult(u, u);
  CHECK(center_projector(ds3, um) == um);
  for (long i : {0L, 7L, 20L}) {
    AlgElem img = center_projector(ds3, ds3.basis_elem(i));
    CHECK(is_central(img));
  }
  CHECK_THROWS_AS(drinfeld_element(make_a4_z9()), unsupported_error);
}

TEST_CASE("sweedler term guard trips", "[hopf]") {
  HopfAlg h = make_s5_z3();
  AlgElem lam = h.integral();
  CHECK_THROWS_AS(sweedler_power_mk(lam, 5, 2, 1000), resource_error);
}
