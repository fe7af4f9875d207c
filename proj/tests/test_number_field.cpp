#include "doctest.h"
#include "ectors/factor.hpp"
#include "ectors/roots.hpp"

using namespace ectors;

namespace {

PolyQ P(const std::string& s) { return parse_polyq(s); }

NfElem random_elem(const NumberField& K, Rng& rng, int range) {
  std::uniform_int_distribution<int> dist(-range, range);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Rat> c;
  for (int i = 0; i < K.degree(); ++i) c.push_back(make_rat(dist(rng), den(rng)));
  return K.from_coords(c);
}

/// Field discriminant of Q(sqrt(n)) by the classical rule.
Int quadratic_field_disc(Int n) {
  Int s = 1;
  for (const auto& [p, e] : factor_integer(abs(n)))
    if (e % 2 == 1) s *= p;
  if (n < 0) s = -s;
  return mod(s, Int(4)) == 1 ? s : 4 * s;
}

const std::vector<std::string> kTableFields = {
    "x^2-x-1",  "x^3-x^2+x+1", "x^4-x^3-x^2+x+1", "x^5-x^4+x^2-x+1", "x^6-x^5+2x^4-2x^3+2x^2-2x+1",
    "x^5-x^4-4x^3+3x^2+3x-1", "x^6-x^3+1", "x^4-x^3+x^2-x+1", "x^4+3x^2+1", "x^6-x^5+x^4-x^3+x^2-x+1",
};

}  // namespace

TEST_CASE("construction") {
  NumberField K(P("x^2-x-1"));
  CHECK(K.degree() == 2);
  CHECK_THROWS_AS(NumberField(P("x^2-1")), Reducible);
  CHECK_THROWS_AS(NumberField(P("2x^2-1")), NonMonic);
  CHECK_THROWS_AS(NumberField(P("x^2-1/2")), NonIntegral);
  NumberField L(P("x^6-x^5+2x^4-3x^3+2x^2-x+1"), "L_{11,6}^{(2,10)}");
  CHECK(L.degree() == 6);
  CHECK(L.label() == "L_{11,6}^{(2,10)}");
}

TEST_CASE("element arithmetic") {
  NumberField K(P("x^2-x-1"));
  NfElem a = K.gen();
  CHECK(a * a == a + K.one());
  NumberField C(P("x^3-x^2+x+1"));
  NfElem b = C.gen();
  CHECK(b.pow(4) == C.parse("-2a-1"));
  CHECK(C.parse("1/7(4a^2+9a+2)").str() == "4/7*a^2+9/7*a+2/7");
  CHECK(C.parse("4/7*a^2+9/7*a+2/7") == C.parse("1/7(4a^2+9a+2)"));
  CHECK_THROWS_AS(K.zero().inv(), DivisionByZero);
  CHECK_THROWS_AS(K.gen() + C.gen(), ParentMismatch);

  Rng rng(8);
  for (const auto& s : kTableFields) {
    NumberField F(P(s));
    for (int it = 0; it < 5; ++it) {
      NfElem x = random_elem(F, rng, 5);
      if (x.is_zero()) continue;
      CHECK(x * x.inv() == F.one());
      PolyQ m = nf_min_poly(x);
      CHECK(F.degree() % m.degree() == 0);
      CHECK(to_polyk(F, m).eval(x).is_zero());
      NfElem y = random_elem(F, rng, 5);
      CHECK(nf_norm(x * y) == nf_norm(x) * nf_norm(y));
    }
  }
}

TEST_CASE("minimal polynomial and norm examples") {
  NumberField K(P("x^3-x^2+x+1"));
  CHECK(nf_min_poly(K.from_int(5)) == P("x-5"));
  CHECK(nf_min_poly(K.gen()) == K.poly());
  NumberField S(P("x^2-2"));
  CHECK(nf_min_poly(S.gen() * S.gen()) == P("x-2"));
  NumberField Q4(P("x^4-x^3-x^2+x+1"));
  CHECK(nf_norm(Q4.from_int(7)) == 2401);
  for (const auto& s : kTableFields) {
    NumberField F(P(s));
    Rat expect = F.poly()[0];
    if (F.degree() % 2 == 1) expect = -expect;
    CHECK(nf_norm(F.gen()) == expect);
  }
  NumberField G(P("x^2-x-1"));
  CHECK(nf_norm(G.gen() - G.one()) == -1);
}

TEST_CASE("prime splitting and residue maps") {
  NumberField K(P("x^2+1"));
  auto s5 = split_prime(K, 5);
  CHECK(s5.usable);
  CHECK(s5.factors.size() == 2);
  CHECK(is_totally_split(s5, 2));
  auto s3 = split_prime(K, 3);
  CHECK(s3.usable);
  REQUIRE(s3.factors.size() == 1);
  CHECK(s3.factors[0].residue_degree == 2);

  CHECK(residue_map(K.from_int(7), s5, 0) == residue_field(s5, 0).from_int(7));
  CHECK(residue_map(K.gen(), s3, 0) == residue_field(s3, 0).gen());
  CHECK_THROWS_AS(residue_map(K.parse("1/3*a"), s3, 0), DenominatorAtP);

  NumberField Q4(P("x^4-x^3-x^2+x+1"));
  CHECK_FALSE(split_prime(Q4, 3).usable);
  CHECK_FALSE(split_prime(Q4, 13).usable);
  Rng rng(9);
  for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 17ULL, 19ULL}) {
    auto s = split_prime(Q4, p);
    REQUIRE(s.usable);
    int total = 0;
    for (const auto& fa : s.factors) total += fa.residue_degree;
    CHECK(total == 4);
    for (std::size_t i = 0; i < s.factors.size(); ++i) {
      FqField F = residue_field(s, i);
      for (int it = 0; it < 5; ++it) {
        NfElem x = random_elem(Q4, rng, 9), y = random_elem(Q4, rng, 9);
        if (x.denominator() % Int(static_cast<unsigned long>(p)) == 0) continue;
        if (y.denominator() % Int(static_cast<unsigned long>(p)) == 0) continue;
        CHECK(residue_map(x + y, F) == residue_map(x, F) + residue_map(y, F));
        CHECK(residue_map(x * y, F) == residue_map(x, F) * residue_map(y, F));
      }
    }
  }
}

TEST_CASE("Dedekind criterion and p-maximal orders") {
  CHECK_FALSE(dedekind_p_maximal(P("x^2-5"), 2));
  CHECK(dedekind_p_maximal(P("x^2-5"), 5));
  CHECK(dedekind_p_maximal(P("x^4-x^3-x^2+x+1"), 7));

  CHECK(p_maximal_order(P("x^2+1"), 3).is_identity());
  OrderBasis O = p_maximal_order(P("x^2-5"), 2);
  CHECK(O.index() == 2);
  // (1+a)/2 is in the order and has minimal polynomial t^2 - t - 1
  NumberField K(P("x^2-5"));
  NfElem w = (K.one() + K.gen()).scale(Rat(1, 2));
  CHECK(nf_min_poly(w) == P("x^2-x-1"));
  bool found = false;
  for (const auto& r : O.rows) {
    std::vector<Rat> c;
    for (const auto& x : r) c.push_back(make_rat(x, O.denominator));
    NfElem e = K.from_coords(c);
    if (e == w || e == w - K.one() || e == K.one() - w) found = true;
  }
  CHECK(found);

  OrderBasis O3 = p_maximal_order(P("x^4-x^3-x^2+x+1"), 3);
  Int disc = discriminant(P("x^4-x^3-x^2+x+1")).get_num();
  Int order_disc = disc / (O3.index() * O3.index());
  CHECK(valuation(order_disc, Int(3)) == 2);

  for (const auto& s : kTableFields) {
    PolyQ f = P(s);
    Int D = discriminant(f).get_num();
    for (const auto& [p, e] : factor_integer(abs(D))) {
      if (e < 2) continue;
      CHECK(dedekind_p_maximal(f, p.get_ui()) == p_maximal_order(f, p.get_ui()).is_identity());
    }
  }
}

TEST_CASE("field discriminants") {
  CHECK(field_discriminant(NumberField(P("x^4-x^3-x^2+x+1"))) == 117);
  CHECK(field_discriminant(NumberField(P("x^5-x^4+x^2-x+1"))) == 1649);
  CHECK(field_discriminant(NumberField(P("x^6-x^5+2x^4-2x^3+2x^2-2x+1"))) == -10051);
  // quadratic fields against the classical rule
  for (int b = -3; b <= 3; ++b)
    for (int c = -12; c <= 12; ++c) {
      PolyQ f = polyq_from_ints(std::vector<long>{c, b, 1});
      Int D = discriminant(f).get_num();
      if (is_square(D)) continue;
      CHECK(field_discriminant(NumberField(f)) == quadratic_field_disc(D));
    }
  for (const auto& s : kTableFields) {
    NumberField K(P(s));
    Int dk = field_discriminant(K);
    Int df = K.poly_discriminant();
    CHECK(df % dk == 0);
    CHECK(is_square(Int(df / dk)));
    int r2 = (K.degree() - real_embeddings(K)) / 2;
    CHECK((dk < 0) == (r2 % 2 == 1));
  }
}

TEST_CASE("roots of unity and contains_root") {
  NumberField K(P("x^2-x+1"));
  CHECK(contains_root(K, cyclotomic_poly(3)));
  NfElem z = -K.gen();
  CHECK(z * z + z + K.one() == K.zero());
  CHECK_FALSE(contains_root(NumberField(P("x^2-2")), cyclotomic_poly(4)));
  CHECK(contains_root(NumberField(P("x^4-x^3+x^2-x+1")), cyclotomic_poly(5)));
  CHECK(cyclotomic_poly(5) == P("x^4+x^3+x^2+x+1"));
  CHECK(cyclotomic_poly(12) == P("x^4-x^2+1"));
  auto z3 = root_of_unity(K, 3);
  REQUIRE(z3.has_value());
  CHECK(z3->pow(3) == K.one());
  CHECK_FALSE(*z3 == K.one());
}

TEST_CASE("roots in field") {
  NumberField K(P("x^3-x^2+x+1"));
  auto r = roots_in_field(K, P("x^2-1"));
  REQUIRE(r.size() == 2);
  CHECK(r[0] == K.from_int(-1));
  CHECK(r[1] == K.one());
  PolyK lin({-K.gen(), K.one()});
  auto r2 = roots_in_field(lin);
  REQUIRE(r2.size() == 1);
  CHECK(r2[0] == K.gen());
  CHECK(roots_in_field(NumberField::rationals(), P("x^2-2")).empty());
  auto rq = roots_in_field(NumberField::rationals(), P("6x^3-5x^2-2x+1"));  // (x-1)(2x+1)(3x-1)
  CHECK(rq.size() == 3);
}

TEST_CASE("roots in field completeness on planted roots") {
  Rng rng(21);
  for (const auto& s : {"x^2-x-1", "x^3-x^2+x+1", "x^4-x^3-x^2+x+1", "x^6-x^3+1"}) {
    NumberField K(P(s));
    for (int it = 0; it < 3; ++it) {
      const int r = 1 + it % 4;
      std::vector<NfElem> planted;
      PolyK g = PolyK::constant(K.one());
      for (int i = 0; i < r; ++i) {
        NfElem a = random_elem(K, rng, 6);
        planted.push_back(a);
        g = g * PolyK({-a, K.one()});
      }
      // x^2 - beta with N(beta) not a rational square has no root in K
      auto rational_square = [](const Rat& q) {
        return sgn(q) >= 0 && is_square(Int(q.get_num())) && is_square(Int(q.get_den()));
      };
      NfElem beta = random_elem(K, rng, 6);
      while (beta.is_zero() || rational_square(nf_norm(beta))) beta = random_elem(K, rng, 6);
      g = g * PolyK({-beta, K.zero(), K.one()});
      std::sort(planted.begin(), planted.end());
      planted.erase(std::unique(planted.begin(), planted.end()), planted.end());
      CHECK(roots_in_field(g) == planted);
    }
  }
}
