#include <map>
#include <set>

#include "doctest.h"
#include "ectors/factor.hpp"

using namespace ectors;

namespace {

PolyQ P(const std::string& s) { return parse_polyq(s); }

/// Sylvester-matrix determinant by exact Gaussian elimination.
Rat sylvester_resultant(const PolyQ& f, const PolyQ& g) {
  const int m = f.degree(), n = g.degree();
  const int N = m + n;
  std::vector<std::vector<Rat>> M(N, std::vector<Rat>(N, Rat(0)));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) M[r][r + i] = f[m - i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) M[n + r][r + i] = g[n - i];
  Rat det = 1;
  for (int c = 0; c < N; ++c) {
    int piv = -1;
    for (int r = c; r < N; ++r)
      if (M[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(M[piv], M[c]);
      det = -det;
    }
    det *= M[c][c];
    for (int r = c + 1; r < N; ++r) {
      Rat k = M[r][c] / M[c][c];
      for (int j = c; j < N; ++j) M[r][j] -= k * M[c][j];
    }
  }
  return det;
}

PolyQ random_poly(Rng& rng, int deg, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  std::vector<Rat> c(static_cast<std::size_t>(deg) + 1);
  for (auto& x : c) x = d(rng);
  if (c.back() == 0) c.back() = 1;
  return PolyQ(c);
}

bool divides(const PolyQ& a, const PolyQ& b) { return (b % a).is_zero(); }

}  // namespace

TEST_CASE("gcd basics") {
  CHECK(poly_gcd(P("x^2-1"), P("x-1")) == P("x-1"));
  PolyQ f = P("3x^2+6x");
  CHECK(poly_gcd(f, PolyQ()) == f.monic());
  CHECK(poly_gcd(PolyQ(), PolyQ()).is_zero());
  // gcd(x^a - 1, x^b - 1) = x^gcd(a,b) - 1
  for (int a = 1; a <= 9; ++a)
    for (int b = 1; b <= 9; ++b) {
      PolyQ fa = PolyQ::monomial(Rat(1), a) - PolyQ::constant(Rat(1));
      PolyQ fb = PolyQ::monomial(Rat(1), b) - PolyQ::constant(Rat(1));
      int g = std::gcd(a, b);
      CHECK(poly_gcd(fa, fb) == PolyQ::monomial(Rat(1), g) - PolyQ::constant(Rat(1)));
    }
}

TEST_CASE("gcd property on planted common factors") {
  Rng rng(11);
  for (int it = 0; it < 40; ++it) {
    PolyQ c = random_poly(rng, 1 + it % 3, 5), a = random_poly(rng, 1 + it % 4, 5), b = random_poly(rng, 2, 5);
    PolyQ f = a * c, g = b * c;
    PolyQ d = poly_gcd(f, g);
    CHECK(divides(d, f));
    CHECK(divides(d, g));
    CHECK(divides(c, d));
  }
}

TEST_CASE("resultant") {
  CHECK(resultant(P("x-2"), P("x-3")) == -1);
  CHECK(resultant(P("x^2+1"), P("x")) == 1);
  CHECK(resultant(P("x^2-2"), P("x^2-2")) == 0);
  CHECK_THROWS_AS(resultant(PolyQ(), P("x")), ZeroPolynomial);
  Rng rng(5);
  for (int it = 0; it < 40; ++it) {
    PolyQ f = random_poly(rng, 1 + it % 5, 7), g = random_poly(rng, 1 + (it / 5) % 4, 7);
    CHECK(resultant(f, g) == sylvester_resultant(f, g));
  }
}

TEST_CASE("discriminant") {
  CHECK(discriminant(P("x^2+1")) == -4);
  for (int c = -5; c <= 5; ++c) CHECK(discriminant(P("x^2") + PolyQ::constant(Rat(c))) == -4 * c);
  PolyQ cubic = P("x^3-x^2+x+1");
  Rat d3 = discriminant(cubic);
  CHECK(d3 == -sylvester_resultant(cubic, cubic.derivative()));
  CHECK(d3 < 0);
  CHECK(count_real_roots(cubic) == 1);
  Rat d4 = discriminant(P("x^4-x^3-x^2+x+1"));
  REQUIRE(d4.get_den() == 1);
  CHECK(d4.get_num() % 117 == 0);
  CHECK(is_square(Int(d4.get_num() / 117)));
}

TEST_CASE("discriminant vanishes exactly on planted repeated roots") {
  Rng rng(7);
  for (int it = 0; it < 30; ++it) {
    PolyQ a = random_poly(rng, 1 + it % 3, 4), b = random_poly(rng, 1 + it % 2, 4);
    PolyQ f = (it % 2 == 0) ? a * a * b : a * b;
    bool repeated = squarefree_part(f) != f.monic();
    CHECK((discriminant(f) == 0) == repeated);
  }
}

TEST_CASE("squarefree part") {
  CHECK(squarefree_part(P("(x-1)^2(x+2)")) == P("(x-1)(x+2)"));
  CHECK(squarefree_part(P("2x^2+1")) == P("2x^2+1").monic());
  CHECK(squarefree_part(P("x^4-2x^2+1")) == P("x^2-1"));
}

TEST_CASE("factor mod p") {
  Rng rng(kDefaultSeed);
  auto f5 = factor_mod_p(PolyModP::reduce(P("x^2+1"), 5), rng);
  REQUIRE(f5.size() == 2);
  CHECK(f5[0].factor == PolyModP(5, {2, 1}));
  CHECK(f5[1].factor == PolyModP(5, {3, 1}));
  auto f3 = factor_mod_p(PolyModP::reduce(P("x^2+1"), 3), rng);
  REQUIRE(f3.size() == 1);
  CHECK(f3[0].factor.degree() == 2);
  auto fx = factor_mod_p(PolyModP::reduce(P("x"), 101), rng);
  REQUIRE(fx.size() == 1);
  CHECK(fx[0].factor == PolyModP(101, {0, 1}));

  // product reconstructs, roots agree with brute force
  Rng data(3);
  for (std::uint64_t p : {3ULL, 7ULL, 13ULL, 101ULL}) {
    for (int it = 0; it < 10; ++it) {
      PolyQ q = random_poly(data, 1 + it % 7, 9);
      PolyQ g = q * q.derivative();
      PolyModP fp = PolyModP::reduce(g, p);
      if (fp.degree() < 1) continue;
      auto facs = factor_mod_p(fp, rng);
      PolyModP prod = PolyModP::constant(p, fp.lead());
      for (const auto& fa : facs)
        for (unsigned m = 0; m < fa.multiplicity; ++m) prod = prod * fa.factor;
      CHECK(prod == fp);
      std::set<std::uint64_t> brute;
      for (std::uint64_t x = 0; x < p; ++x)
        if (fp.eval(x) == 0) brute.insert(x);
      auto roots = roots_mod_p(fp, rng);
      CHECK(std::set<std::uint64_t>(roots.begin(), roots.end()) == brute);
    }
  }
}

TEST_CASE("hensel lift") {
  auto lifted = hensel_lift(P("x^2-1"), {PolyModP(3, {2, 1}), PolyModP(3, {1, 1})}, 3, 2);
  REQUIRE(lifted.size() == 2);
  CHECK(lifted[0].symmetric() == std::vector<Int>{-1, 1});
  CHECK(lifted[1].symmetric() == std::vector<Int>{1, 1});

  // x^2+x+7 = x^2+x+1 mod 3 = (x+2)^2 is not squarefree mod 3; use the coprime case x^2+x+7 mod 5
  PolyQ f = P("x^2+x+7");
  Rng rng(1);
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    PolyModP fp = PolyModP::reduce(f, p);
    if (!is_squarefree(fp)) continue;
    auto facs = factor_mod_p(fp, rng);
    std::vector<PolyModP> fs;
    for (auto& x : facs) fs.push_back(x.factor);
    auto out = hensel_lift(f, fs, p, 4);
    Int pk = pow_int(Int(static_cast<unsigned long>(p)), 4);
    std::vector<Int> prod{1};
    for (const auto& g : out) {
      std::vector<Int> r(prod.size() + g.c.size() - 1, 0);
      for (std::size_t i = 0; i < prod.size(); ++i)
        for (std::size_t j = 0; j < g.c.size(); ++j) r[i + j] += prod[i] * g.c[j];
      prod = r;
    }
    for (std::size_t i = 0; i < prod.size(); ++i) CHECK(mod(prod[i] - f[i].get_num(), pk) == 0);
    for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i].to_modp(p) == fs[i]);
  }

  auto single = hensel_lift(P("x^3+2"), {PolyModP::reduce(P("x^3+2"), 5)}, 5, 3);
  REQUIRE(single.size() == 1);
  CHECK(single[0].symmetric() == std::vector<Int>{2, 0, 0, 1});
  CHECK_THROWS_AS(hensel_lift(P("x^2-1"), {PolyModP(3, {2, 1}), PolyModP(3, {2, 1})}, 3, 2), NotCoprime);
}

TEST_CASE("factor over Q") {
  auto fac = factor_over_q(P("x^4-1"));
  REQUIRE(fac.factors.size() == 3);
  CHECK(fac.factors[0].factor == P("x-1"));
  CHECK(fac.factors[1].factor == P("x+1"));
  CHECK(fac.factors[2].factor == P("x^2+1"));
  CHECK(is_irreducible_q(P("x^4-x^3-x^2+x+1")));
  CHECK(is_irreducible_q(P("x^6-x^3+1")));
  CHECK_FALSE(is_irreducible_q(P("x^4+4")));  // Sophie Germain
  CHECK_THROWS_AS(factor_over_q(PolyQ::monomial(Rat(1), 65) + PolyQ::constant(Rat(1))), DegreeCapExceeded);
  // x^8 + 8 style: Swinnerton-Dyer-like polynomial of degree 8 is irreducible
  CHECK(is_irreducible_q(P("x^8-40x^6+352x^4-960x^2+576")));
}

TEST_CASE("factor over Q reconstructs planted products") {
  Rng rng(99);
  for (int it = 0; it < 25; ++it) {
    std::vector<PolyQ> parts;
    PolyQ f = PolyQ::constant(Rat(1, 3));
    for (int j = 0; j < 1 + it % 4; ++j) {
      PolyQ g = random_poly(rng, 1 + (it + j) % 4, 6);
      parts.push_back(g);
      f = f * g;
      if (j == 1) f = f * g;
    }
    auto fac = factor_over_q(f);
    PolyQ prod = PolyQ::constant(fac.unit);
    for (const auto& [g, m] : fac.factors) prod = prod * pow(g, m, Rat(0));
    CHECK(prod == f);
    // each factor's degree pattern mod three primes is consistent with irreducibility:
    // some prime leaves no proper degree-sum splitting only if consistent; we check the weaker
    // statement that no factor has a rational root unless it is linear
    for (const auto& [g, m] : fac.factors) {
      if (g.degree() <= 1) continue;
      auto sub = factor_over_q(g);
      CHECK(sub.factors.size() == 1);
      CHECK(sub.factors[0].multiplicity == 1);
    }
  }
}

TEST_CASE("rational reconstruction") {
  CHECK(rational_reconstruction(Int(3336), Int(10007)) == Rat(1, 3));
  CHECK(rational_reconstruction(Int(5), Int(10007)) == Rat(5));
  // 4999 = -9/2 mod 10007, so it does reconstruct; 5039 has no representative with |n|, d <= 70
  CHECK(rational_reconstruction(Int(4999), Int(10007)) == Rat(-9, 2));
  auto has_small = [](long r) {
    for (int d = 1; d <= 70; ++d)
      for (int n = -70; n <= 70; ++n)
        if (mod(Int(n) - Int(d) * r, Int(10007)) == 0) return true;
    return false;
  };
  CHECK(has_small(4999));
  CHECK_FALSE(has_small(5039));
  CHECK_FALSE(rational_reconstruction(Int(5039), Int(10007)).has_value());

  Int M("1000000007");
  Int B = isqrt(M / 2);
  Rng rng(4);
  std::uniform_int_distribution<long> dist(-B.get_si(), B.get_si());
  for (int it = 0; it < 200; ++it) {
    long n = dist(rng), d = std::abs(dist(rng));
    if (d == 0) d = 1;
    Rat q = make_rat(Int(n), Int(d));
    Int r = mod(Int(n) * *inv_mod(Int(d), M), M);
    CHECK(rational_reconstruction(r, M) == q);
  }
}

TEST_CASE("polynomial text round trip") {
  for (const char* s : {"x^4-x^3-x^2+x+1", "x^6-x^3+1", "x", "-3", "1/2*x^2-7/3"}) {
    PolyQ f = P(s);
    CHECK(P(to_string(f)) == f);
  }
  CHECK(P("x^4-x^3-x^2+x+1") == polyq_from_ints(std::vector<long>{1, 1, -1, -1, 1}));
  CHECK(parse_polyq("1/7(4a^2+9a+2)", 'a') == polyq_from_ints(std::vector<long>{2, 9, 4}) * PolyQ::constant(Rat(1, 7)));
  CHECK_THROWS_AS(P("x^"), ParseError);
  CHECK_THROWS_AS(P("x+)"), ParseError);
}
