#include <catch2/catch_amalgamated.hpp>

#include "hopfind/chartable.hpp"
#include "hopfind/groups.hpp"

using namespace hopfind;

namespace {

bool isomorphic_brute(const Group& a, const Group& b) {
  if (a.order() != b.order()) return false;
  std::vector<long> phi(a.order());
  std::iota(phi.begin(), phi.end(), 0);
  do {
    bool ok = true;
    for (long x = 0; x < a.order() && ok; ++x)
      for (long y = 0; y < a.order() && ok; ++y)
        if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(phi.begin(), phi.end()));
  return false;
}

std::vector<long> center_elements(const Group& g) {
  std::vector<long> out;
  for (long z = 0; z < g.order(); ++z) {
    bool central = true;
    for (long x = 0; x < g.order() && central; ++x)
      if (g.mul(z, x) != g.mul(x, z)) central = false;
    if (central) out.push_back(z);
  }
  return out;
}

} // namespace

TEST_CASE("constructors: cyclic, symmetric, alternating, perm generators", "[groups]") {
  CHECK(Group::cyclic(9).order() == 9);
  CHECK(Group::symmetric(3).order() == 6);
  Group a4 = Group::alternating(4);
  CHECK(a4.order() == 12);
  CHECK(a4.exponent() == 6);
  Group c8 = Group::from_perm_generators({{2, 3, 4, 5, 6, 7, 8, 1}}, 8);
  CHECK(c8.order() == 8);
  CHECK(c8.is_abelian());
  CHECK(isomorphic_brute(c8, Group::cyclic(8)));
}

TEST_CASE("group axioms on constructed tables", "[groups]") {
  for (const Group& g : {Group::cyclic(6), Group::symmetric(3), Group::semidirect_zq_zp(7, 3, 2)}) {
    for (long x = 0; x < g.order(); ++x) {
      CHECK(g.mul(g.id(), x) == x);
      CHECK(g.mul(x, g.id()) == x);
      CHECK(g.mul(x, g.inv(x)) == g.id());
    }
    for (long x = 0; x < g.order(); ++x)
      for (long y = 0; y < g.order(); ++y)
        for (long z = 0; z < g.order(); ++z)
          REQUIRE(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
  }
}

TEST_CASE("semidirect products", "[groups]") {
  Group g55 = Group::semidirect_zq_zp(11, 5, 3);
  CHECK(g55.order() == 55);
  CHECK(center_elements(g55) == std::vector<long>{g55.id()});
  CHECK(isomorphic_brute(Group::semidirect_zq_zp(3, 2, 2), Group::symmetric(3)));
  Group g21 = Group::semidirect_zq_zp(7, 3, 2);
  CHECK(g21.order() == 21);
  CHECK(conjugacy_classes(g21).size() == 5);
  CHECK(conjugacy_classes(g55).size() == 7);
  CHECK_THROWS_AS(Group::semidirect_zq_zp(11, 5, 2), domain_error);
  CHECK_THROWS_AS(Group::semidirect_zq_zp(10, 5, 3), domain_error);
}

TEST_CASE("conjugation action of Z9 on A4", "[groups]") {
  Group f = Group::cyclic(9);
  Group a4 = Group::alternating(4);
  long tau = a4.index_of_cycles({{1, 2, 3}});
  GroupAction act = GroupAction::conjugation_by(f, a4, tau);
  long g = a4.index_of_cycles({{1, 4, 3}});
  auto orbs = orbits(act);
  for (const auto& o : orbs) {
    bool has_g = std::find(o.elements.begin(), o.elements.end(), g) != o.elements.end();
    if (has_g) CHECK(o.elements.size() == 3);
  }
  StabilizerData st = stabilizer(act, g);
  CHECK(st.subgroup.order() == 3);
  // F_g = <c^3>
  CHECK(st.embedding == std::vector<long>{0, 3, 6});
  CHECK(st.coset_reps[0] == f.id());
  // orbit-stabilizer identity over all elements
  for (const auto& o : orbs) {
    StabilizerData s2 = stabilizer(act, o.representative);
    CHECK(static_cast<long>(o.elements.size()) * s2.subgroup.order() == f.order());
  }
  // identity element: full stabilizer
  CHECK(stabilizer(act, a4.id()).subgroup.order() == 9);
}

TEST_CASE("trivial and self-conjugation actions", "[groups]") {
  Group f = Group::cyclic(4);
  Group g = Group::symmetric(3);
  std::vector<std::int32_t> table(f.order() * g.order());
  for (long x = 0; x < f.order(); ++x)
    for (long h = 0; h < g.order(); ++h) table[x * g.order() + h] = static_cast<std::int32_t>(h);
  GroupAction trivial = GroupAction::from_table(f, g, table);
  for (const auto& o : orbits(trivial)) CHECK(o.elements.size() == 1);

  GroupAction dbl = GroupAction::conjugation_self(Group::symmetric(3));
  CHECK(dbl.target().order() == 6);
  // orbits of the double case are the conjugacy classes
  CHECK(orbits(dbl).size() == 3);
}

TEST_CASE("action validation reports failing pair", "[groups]") {
  Group f = Group::cyclic(2);
  Group g = Group::cyclic(3);
  // x -> x+1 is not an automorphism of Z3
  std::vector<std::int32_t> bad(f.order() * g.order());
  for (long h = 0; h < 3; ++h) {
    bad[0 * 3 + h] = static_cast<std::int32_t>(h);
    bad[1 * 3 + h] = static_cast<std::int32_t>((h + 1) % 3);
  }
  CHECK_THROWS_AS(GroupAction::from_table(f, g, bad), domain_error);
}

TEST_CASE("pq action: generic stabilizer is trivial", "[groups]") {
  // Z5 acts on Z11 by multiplication by powers of 3 = the conjugation action
  // inside the semidirect product; a^n m = m forces m = 0
  Group f = Group::cyclic(5);
  Group z11 = Group::cyclic(11);
  std::vector<std::int32_t> table(5 * 11);
  long apow = 1;
  for (long n = 0; n < 5; ++n) {
    for (long m = 0; m < 11; ++m) table[n * 11 + m] = static_cast<std::int32_t>(apow * m % 11);
    apow = apow * 3 % 11;
  }
  GroupAction act = GroupAction::from_table(f, z11, table);
  for (long m = 1; m < 11; ++m) CHECK(stabilizer(act, m).subgroup.order() == 1);
}

TEST_CASE("character table of Z3", "[groups]") {
  CharTable ct = character_table(Group::cyclic(3));
  REQUIRE(ct.num_chars() == 3);
  CycNum z = CycNum::root(3, 1), z2 = CycNum::root(3, 2);
  // expected rows as a set
  std::vector<std::vector<CycNum>> expect = {
      {CycNum(1), CycNum(1), CycNum(1)}, {CycNum(1), z, z2}, {CycNum(1), z2, z}};
  for (const auto& row : expect) {
    bool found = false;
    for (long r = 0; r < 3; ++r)
      if (ct.table[r] == row) found = true;
    CHECK(found);
  }
}

TEST_CASE("character table degrees: S3, A4, pq", "[groups]") {
  CHECK(character_table(Group::symmetric(3)).degrees == std::vector<long>{1, 1, 2});
  CHECK(character_table(Group::alternating(4)).degrees == std::vector<long>{1, 1, 1, 3});
  CharTable pq = character_table(Group::semidirect_zq_zp(11, 5, 3));
  CHECK(pq.degrees == std::vector<long>{1, 1, 1, 1, 1, 5, 5});
  for (long d : pq.degrees) CHECK(pq.group.order() % d == 0);
}

TEST_CASE("character table is deterministic and seed-stable", "[groups]") {
  CharTable a = character_table(Group::alternating(4), 1);
  CharTable b = character_table(Group::alternating(4), 99);
  REQUIRE(a.num_chars() == b.num_chars());
  for (long r = 0; r < a.num_chars(); ++r) CHECK(a.table[r] == b.table[r]);
}

TEST_CASE("exponent, element orders, linear characters", "[groups]") {
  CHECK(Group::alternating(4).exponent() == 6);
  CHECK(abelianization_linear_characters(Group::alternating(4)).size() == 3);
  Group s8 = Group::symmetric(8);
  CHECK(s8.order() == 40320);
  long c8 = s8.index_of_cycles({{1, 2, 3, 4, 5, 6, 7, 8}});
  CHECK(s8.element_order(c8) == 8);
  CHECK(commutator_subgroup(s8).size() == 20160);
  CHECK(abelianization_linear_characters(s8).size() == 2);
}

TEST_CASE("subgroup and quotient machinery", "[groups]") {
  Group s3 = Group::symmetric(3);
  std::vector<long> a3 = commutator_subgroup(s3);
  CHECK(a3.size() == 3);
  std::vector<long> embed;
  Group sub = Group::subgroup(s3, a3, &embed);
  CHECK(sub.order() == 3);
  CHECK(isomorphic_brute(sub, Group::cyclic(3)));
  QuotientGroup q = quotient_group(s3, a3);
  CHECK(q.group.order() == 2);
}

TEST_CASE("perm group caps", "[groups]") {
  CHECK_THROWS_AS(Group::symmetric(9), resource_error);
  CHECK_THROWS_AS(character_table(Group::symmetric(8)), resource_error);
}
