#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hopfind/cyclo.hpp"
#include "hopfind/intervals.hpp"

using namespace hopfind;

namespace {

CycNum random_cyc(std::mt19937& rng, long conductor) {
  long phi = euler_phi(conductor);
  std::vector<Rat> c(phi);
  for (long i = 0; i < phi; ++i) {
    long num = static_cast<long>(rng() % 7) - 3;
    long den = 1 + rng() % 3;
    c[i] = Rat(num, den);
    c[i].canonicalize();
  }
  return CycNum(conductor, std::move(c));
}

} // namespace

TEST_CASE("cyc_root basics", "[cyclo]") {
  CHECK(CycNum::root(1, 0) == CycNum(1));
  CHECK(CycNum::root(4, 2) == CycNum(-1));
  CHECK(CycNum::root(3, 1) + CycNum::root(3, 2) == CycNum(-1));
  CHECK(CycNum::root(5, 0) == CycNum(1));
  CHECK(CycNum::root(6, 7) == CycNum::root(6, 1));
}

TEST_CASE("field operations and conductor join", "[cyclo]") {
  CycNum z3 = CycNum::root(3, 1), z4 = CycNum::root(4, 1);
  CHECK(z3 * z4 == CycNum::root(12, 7));
  CHECK(inv(CycNum::root(5, 1)) == CycNum::root(5, 4));
  std::mt19937 rng(3);
  for (long N : {1L, 2L, 3L, 4L, 5L, 6L, 8L, 9L, 12L, 16L, 20L, 45L, 60L}) {
    CycNum a = random_cyc(rng, N);
    CHECK((a + (-a)).is_zero());
  }
}

TEST_CASE("field axioms on random samples", "[cyclo]") {
  std::mt19937 rng(5);
  std::vector<long> conductors{1, 2, 3, 4, 6, 8, 9, 12, 15, 60};
  for (int trial = 0; trial < 40; ++trial) {
    long N1 = conductors[rng() % conductors.size()];
    long N2 = conductors[rng() % conductors.size()];
    long N3 = conductors[rng() % conductors.size()];
    CycNum a = random_cyc(rng, N1), b = random_cyc(rng, N2), c = random_cyc(rng, N3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * inv(a) == CycNum(1));
  }
}

TEST_CASE("canonical equality via conductor join", "[cyclo]") {
  // zeta_6 = -zeta_3^2 seen at different conductors
  CycNum z6 = CycNum::root(6, 1);
  CycNum alt = -(CycNum::root(3, 2));
  CHECK(z6 == alt);
  CHECK((z6 - alt).is_zero());
  CHECK(CycNum::root(6, 2) == CycNum::root(3, 1));
}

TEST_CASE("galois action", "[cyclo]") {
  CycNum z3 = CycNum::root(3, 1);
  CHECK(galois_apply(GaloisElt(3, 2), CycNum(1) + z3) == CycNum(1) + CycNum::root(3, 2));
  CHECK(galois_apply(GaloisElt(12, 5), CycNum(Rat(7, 2))) == CycNum(Rat(7, 2)));
  std::mt19937 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    CycNum a = random_cyc(rng, 16);
    CHECK(galois_apply(GaloisElt(16, 3), galois_apply(GaloisElt(16, 5), a)) ==
          galois_apply(GaloisElt(16, 15), a));
    CycNum b = random_cyc(rng, 16);
    CHECK(galois_apply(GaloisElt(16, 7), a * b) ==
          galois_apply(GaloisElt(16, 7), a) * galois_apply(GaloisElt(16, 7), b));
    CHECK(galois_apply(GaloisElt(16, 7), a + b) ==
          galois_apply(GaloisElt(16, 7), a) + galois_apply(GaloisElt(16, 7), b));
    CHECK(galois_apply(GaloisElt(16, 1), a) == a);
  }
  CHECK_THROWS_AS(GaloisElt(6, 2), domain_error);
}

TEST_CASE("rationality predicates", "[cyclo]") {
  CycNum sum = CycNum(1) + CycNum::root(3, 1) + CycNum::root(3, 2);
  auto r = is_rational(sum);
  REQUIRE(r.has_value());
  CHECK(*r == 0);
  auto i = is_rational_integer(sum);
  REQUIRE(i.has_value());
  CHECK(*i == 0);

  CHECK_FALSE(is_rational(CycNum(1) + CycNum::root(3, 1)).has_value());

  CycNum seven_halves{Rat(7, 2)};
  REQUIRE(is_rational(seven_halves).has_value());
  CHECK(*is_rational(seven_halves) == Rat(7, 2));
  CHECK_FALSE(is_rational_integer(seven_halves).has_value());
}

TEST_CASE("cyclotomic subfield membership", "[cyclo]") {
  CHECK(lies_in_cyclotomic(CycNum::root(3, 1), 3));
  CHECK(lies_in_cyclotomic(CycNum::root(3, 1), 6));
  CHECK_FALSE(lies_in_cyclotomic(CycNum::root(3, 1), 4));
  CHECK(lies_in_cyclotomic(CycNum(Rat(5, 3)), 1));
}

TEST_CASE("complex embedding enclosures", "[cyclo]") {
  ComplexInterval i4 = complex_embed(CycNum::root(4, 1), 64);
  CHECK(i4.re.contains(Rat(0)));
  CHECK(i4.im.contains(Rat(1)));
  CHECK(i4.width() < std::ldexp(1.0, -30));

  // 1 + zeta_3 = e^{i pi/3}: real part 1/2, modulus 1
  ComplexInterval e3 = complex_embed(CycNum(1) + CycNum::root(3, 1), 128);
  CHECK(e3.re.contains(Rat(1, 2)));
  RealInterval mod2 = e3.abs_square();
  CHECK(mod2.contains(Rat(1)));

  ComplexInterval three = complex_embed(CycNum(3), 64);
  CHECK(three.re.contains(Rat(3)));
  CHECK(three.re.width() == 0.0);
  CHECK(three.im.width() == 0.0);

  // width shrinks monotonically with precision
  double w64 = complex_embed(CycNum::root(7, 3), 64).width();
  double w256 = complex_embed(CycNum::root(7, 3), 256).width();
  CHECK(w256 < w64);
}

TEST_CASE("embedding respects multiplication", "[cyclo]") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    CycNum a = random_cyc(rng, 12), b = random_cyc(rng, 9);
    ComplexInterval pa = complex_embed(a, 96), pb = complex_embed(b, 96);
    ComplexInterval prod_of_enclosures = pa * pb;
    // a tight enclosure of the exact product sits inside the coarser product
    ComplexInterval tight = complex_embed(a * b, 512);
    CHECK(prod_of_enclosures.re.contains(tight.re));
    CHECK(prod_of_enclosures.im.contains(tight.im));
  }
}

TEST_CASE("compare_moduli decides and detects ties", "[cyclo]") {
  CHECK(compare_moduli(CycNum(2), CycNum(3)) == -1);
  CHECK(compare_moduli(CycNum(-3), CycNum(2)) == 1);
  CHECK(compare_moduli(CycNum::root(5, 2), CycNum::root(7, 3)) == 0);
  CHECK(compare_moduli(CycNum(1) + CycNum::root(3, 1), CycNum(1)) == 0);
}

TEST_CASE("newton: elementary symmetric functions from power sums", "[cyclo]") {
  // multiset {1,2}
  CHECK(elementary_from_power_sums({Rat(3), Rat(5)}) == std::vector<Rat>{Rat(3), Rat(2)});
  // all-zero power sums
  CHECK(elementary_from_power_sums({Rat(0), Rat(0), Rat(0)}) ==
        std::vector<Rat>{Rat(0), Rat(0), Rat(0)});
  // s zero below m: e_m = (-1)^{m-1} s_m / m
  for (long m = 2; m <= 5; ++m) {
    std::vector<Rat> s(m, Rat(0));
    s[m - 1] = Rat(7, 3);
    auto e = elementary_from_power_sums(s);
    for (long j = 0; j + 1 < m; ++j) CHECK(e[j] == 0);
    Rat expect = Rat(7, 3) / m;
    if (m % 2 == 0) expect = -expect;
    CHECK(e[m - 1] == expect);
  }
}

TEST_CASE("newton vs brute force on random rational multisets", "[cyclo]") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    long n = 1 + rng() % 6;
    std::vector<Rat> xs(n);
    for (long i = 0; i < n; ++i) {
      xs[i] = Rat(static_cast<long>(rng() % 9) - 4, 1 + rng() % 3);
      xs[i].canonicalize();
    }
    std::vector<Rat> s(n, Rat(0));
    for (long kk = 1; kk <= n; ++kk)
      for (long i = 0; i < n; ++i) {
        Rat pw(1);
        for (long t = 0; t < kk; ++t) pw *= xs[i];
        s[kk - 1] += pw;
      }
    // brute-force elementary symmetric functions
    std::vector<Rat> e_brute(n, Rat(0));
    for (long mask = 1; mask < (1 << n); ++mask) {
      Rat prod(1);
      long bits = 0;
      for (long i = 0; i < n; ++i)
        if (mask & (1 << i)) {
          prod *= xs[i];
          ++bits;
        }
      e_brute[bits - 1] += prod;
    }
    CHECK(elementary_from_power_sums(s) == e_brute);
  }
}

TEST_CASE("rendering and parsing", "[cyclo]") {
  CycNum v = CycNum(1) + CycNum::root(3, 1);
  CHECK(to_string(v) == "1+z@3");
  CHECK(cyc_parse("1+z@3") == v);
  CHECK(to_string(CycNum(Rat(7, 2))) == "7/2");
  CHECK(cyc_parse("7/2") == CycNum(Rat(7, 2)));
  CHECK(to_string(CycNum(0)) == "0");

  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    long N = 1 + rng() % 16;
    CycNum a = random_cyc(rng, N);
    CHECK(cyc_parse(to_string(a)) == a);
  }
  CHECK_THROWS_AS(cyc_parse(""), parse_error);
  CHECK_THROWS_AS(cyc_parse("1++z@3"), parse_error);
}

TEST_CASE("division by zero and conductor cap", "[cyclo]") {
  CHECK_THROWS_AS(inv(CycNum(0)), domain_error);
  CHECK_THROWS_AS(CycNum::root(20000, 1), domain_error);
}
