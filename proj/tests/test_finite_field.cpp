#include <set>

#include "doctest.h"
#include "ectors/finite_field.hpp"

using namespace ectors;

TEST_CASE("F_p and F_9 arithmetic") {
  FqField F9(PolyModP(3, {1, 0, 1}));  // t^2 + 1
  FqElem t = F9.gen();
  CHECK(t * t == F9.from_int(2));
  CHECK(t * t == -F9.one());
  CHECK(F9.size() == 9);

  Rng rng(1);
  for (std::uint64_t p : {5ULL, 7ULL, 101ULL}) {
    for (const auto& g : {PolyModP(p, {0, 1}), PolyModP(p, {})}) {
      if (g.is_zero()) continue;
      FqField F(g);
      std::uniform_int_distribution<std::uint64_t> dist(1, p - 1);
      for (int it = 0; it < 20; ++it) {
        FqElem x = F.from_int(static_cast<long>(dist(rng)));
        CHECK(x * x.inv() == F.one());
        CHECK(x.pow(F.size() - 1) == F.one());
      }
    }
  }
}

TEST_CASE("extension fields satisfy the field axioms") {
  // Conway polynomials for 5^3, 3^4 and 7^2
  for (const auto& g : {PolyModP(5, {3, 3, 0, 1}), PolyModP(3, {2, 0, 0, 2, 1}), PolyModP(7, {3, 6, 1})}) {
    Rng rng(2);
    REQUIRE(factor_mod_p(g, rng).size() == 1);
    FqField F(g);
    const std::uint64_t q = F.enumerable_size();
    for (std::uint64_t i = 1; i < q; i += 7) {
      FqElem x = F.element(i);
      CHECK(x.index() == i);
      CHECK(x * x.inv() == F.one());
      CHECK(x.pow(F.size() - 1) == F.one());
      FqElem y = F.element((i * 13 + 5) % q), z = F.element((i * 31 + 2) % q);
      CHECK((x + y) * z == x * z + y * z);
      CHECK((x * y) * z == x * (y * z));
    }
    CHECK_THROWS_AS(F.zero().inv(), DivisionByZero);
  }
}

TEST_CASE("square roots") {
  FqField F5 = FqField::prime(5);
  CHECK(fq_sqrt(F5.zero()) == F5.zero());
  CHECK_FALSE(fq_sqrt(F5.from_int(2)).has_value());
  auto s = fq_sqrt(F5.from_int(4));
  REQUIRE(s.has_value());
  CHECK((*s == F5.from_int(2) || *s == F5.from_int(3)));
  FqField F9(PolyModP(3, {1, 0, 1}));
  auto s9 = fq_sqrt(F9.from_int(4));
  REQUIRE(s9.has_value());
  CHECK(*s9 * *s9 == F9.from_int(4));
}

TEST_CASE("exactly (q-1)/2 nonzero squares, and sqrt(x^2)^2 = x^2") {
  std::vector<FqField> fields;
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 31ULL, 101ULL, 113ULL}) fields.push_back(FqField::prime(p));
  fields.emplace_back(PolyModP(3, {1, 0, 1}));        // 9
  fields.emplace_back(PolyModP(5, {2, 0, 1}));        // 25
  fields.emplace_back(PolyModP(3, {1, 2, 0, 1}));     // 27
  fields.emplace_back(PolyModP(7, {3, 6, 1}));        // 49
  fields.emplace_back(PolyModP(3, {2, 0, 0, 2, 1}));  // 81
  fields.emplace_back(PolyModP(11, {1, 0, 1}));       // 121
  for (const auto& F : fields) {
    Rng rng(3);
    REQUIRE(factor_mod_p(F.modulus(), rng).size() == 1);
    const std::uint64_t q = F.enumerable_size();
    std::set<std::uint64_t> squares;
    for (std::uint64_t i = 1; i < q; ++i) {
      FqElem x = F.element(i);
      FqElem sq = x * x;
      squares.insert(sq.index());
      auto r = fq_sqrt(sq);
      REQUIRE(r.has_value());
      CHECK(*r * *r == sq);
    }
    CHECK(squares.size() == (q - 1) / 2);
    std::uint64_t nonsq = 0;
    for (std::uint64_t i = 1; i < q; ++i)
      if (!fq_sqrt(F.element(i))) ++nonsq;
    CHECK(nonsq == (q - 1) / 2);
  }
}

TEST_CASE("enumeration cap") {
  FqField big(PolyModP(101, {2, 0, 0, 1}));
  CHECK_THROWS_AS(big.enumerable_size(), CapExceeded);
}
