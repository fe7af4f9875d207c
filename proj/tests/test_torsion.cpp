#include <random>

#include "doctest.h"
#include "ectors/torsion.hpp"

using namespace ectors;

namespace {

NumberField field(const std::string& f) { return NumberField(parse_polyq(f)); }

CurveK model(const NumberField& K, const std::string& a) { return parse_curve(K, a); }

/// Brute-force #E(F_q) by testing every pair.
std::uint64_t brute_count(const CurveFq& E) {
  FqField F = E.a1().field();
  const std::uint64_t q = F.enumerable_size();
  std::uint64_t n = 1;
  for (std::uint64_t i = 0; i < q; ++i)
    for (std::uint64_t j = 0; j < q; ++j)
      if (E.on_curve(PointFq::affine(F.element(i), F.element(j)))) ++n;
  return n;
}

bool divides_some_prime(const Int& n, std::uint64_t p) { return n % Int(static_cast<unsigned long>(p)) == 0; }

void check_closed(const CurveK& E, const std::vector<PointK>& G) {
  for (const auto& P : G)
    for (const auto& Q : G) CHECK(std::find(G.begin(), G.end(), E.add(P, Q)) != G.end());
}

const NumberField Q = NumberField::rationals();

}  // namespace

TEST_CASE("integralize") {
  CurveK E = model(Q, "[0,-1,-1,0,0]");
  auto M = integralize(E);
  CHECK(M.u == 1);
  CHECK(M.scaled.coeffs() == E.coeffs());

  CurveK F = model(Q, "[1/7,0,0,0,3/7]");
  auto N = integralize(F);
  CHECK(N.u == 7);
  CHECK(N.scaled.a1() == Q.from_int(1));
  CHECK(N.scaled.a6() == Q.from_rat(Rat(3) * pow_int(Int(7), 5)));

  NumberField K = field("x^2-x+4");
  CurveK T4 = model(K, "[1/64(7a+69),1/2048(79a+93),1/2048(79a+93),0,0]");
  auto S = integralize(T4);
  CHECK(S.u == 2048);
  for (const auto& c : S.scaled.coeffs()) CHECK(c.denominator() == 1);
  NfElem u12 = K.from_rat(Rat(S.u)).pow(12);
  CHECK(S.scaled.discriminant() == u12 * T4.discriminant());
}

TEST_CASE("usable primes") {
  auto ps = good_usable_primes(model(Q, "[0,0,0,0,1]"), 3);
  REQUIRE(ps.size() == 3);
  CHECK(ps[0].p == 5);
  CHECK(ps[1].p == 7);
  CHECK(ps[2].p == 11);

  auto qs = good_usable_primes(model(Q, "[0,-1,-1,0,0]"), 3);
  CHECK(qs[0].p == 3);
  CHECK(qs[1].p == 5);
  CHECK(qs[2].p == 7);

  // oracle: trial division against disc(f) and the norm of the discriminant
  NumberField K = field("x^4-x^3-x^2+x+1");
  CurveK E = model(K, "[0,-1,-1,0,0]");
  Int nd = abs(Rat(nf_norm(integralize(E).scaled.discriminant())).get_num());
  auto rs = good_usable_primes(E, 8);
  std::vector<std::uint64_t> expect;
  for (std::uint64_t p = 3; expect.size() < 8; p += 2)
    if (is_prime(Int(static_cast<unsigned long>(p))) && !divides_some_prime(Int(117), p) && !divides_some_prime(nd, p))
      expect.push_back(p);
  for (std::size_t i = 0; i < 8; ++i) CHECK(rs[i].p == expect[i]);
  for (const auto& r : rs) CHECK((r.p != 3 && r.p != 13));
}

TEST_CASE("reduce_curve") {
  CurveK X11 = model(Q, "[0,-1,-1,0,0]");
  CurveFq E3 = reduce_curve(X11, split_prime(Q, 3), 0);
  CHECK(brute_count(E3) == 5);
  CHECK(count_points(E3) == 5);
  CHECK(brute_count(reduce_curve(model(Q, "[0,0,0,0,1]"), split_prime(Q, 5), 0)) == 6);
  CHECK_THROWS_AS(reduce_curve(X11, split_prime(Q, 11), 0), BadReduction);
}

TEST_CASE("upper bound") {
  CurveK X11 = model(Q, "[0,-1,-1,0,0]");
  auto ub = torsion_upper_bound(X11, good_usable_primes(X11, 3));
  long g = 0;
  for (std::uint64_t p : {3, 5, 7}) g = std::gcd(g, static_cast<long>(brute_count(reduce_curve(X11, split_prime(Q, p), 0))));
  CHECK(ub.order_bound == g);
  CHECK(ub.order_bound % 5 == 0);
  auto adm = admissible_structures(ub);
  CHECK(std::find(adm.begin(), adm.end(), TorsionStructure{1, 5}) != adm.end());
  for (const auto& s : adm) CHECK(ub.order_bound % s.order() == 0);

  CurveK E = model(Q, "[0,0,0,0,1]");
  auto ub2 = torsion_upper_bound(E, good_usable_primes(E, 3));
  auto adm2 = admissible_structures(ub2);
  CHECK(std::find(adm2.begin(), adm2.end(), TorsionStructure{6, 6}) == adm2.end());
  for (const auto& s : adm2) CHECK(s.embeds_in(TorsionStructure{1, 6}));
}

TEST_CASE("find_torsion_points") {
  auto two = find_torsion_points(model(Q, "[0,0,0,-1,0]"), 2, 1);
  CHECK(two.size() == 4);
  CHECK(two[0].infinity);
  auto three = find_torsion_points(model(Q, "[0,0,1,0,0]"), 3, 1);
  REQUIRE(three.size() == 3);
  CHECK(three[1] == PointK::affine(Q.from_int(0), Q.from_int(-1)));
  CHECK(three[2] == PointK::affine(Q.from_int(0), Q.from_int(0)));
  CurveK X11 = model(Q, "[0,-1,-1,0,0]");
  auto five = find_torsion_points(X11, 5, 1);
  CHECK(five.size() == 5);
  for (const auto& P : five) CHECK(X11.mul(5, P).infinity);
  CHECK_THROWS(find_torsion_points(X11, 13, 1));
}

TEST_CASE("certify over Q") {
  CurveK X11 = model(Q, "[0,-1,-1,0,0]");
  PointK h = X11.point(Q.from_int(0), Q.from_int(0));
  auto c = certify_torsion(X11, {1, 5}, {h});
  CHECK(c.verdict == Verdict::Proven);
  REQUIRE(c.generators.size() == 1);
  CHECK(c.generators[0].order == 5);
  CHECK(certify_torsion(X11, {1, 7}, {h}).verdict == Verdict::Mismatch);
  CHECK(certify_torsion(X11, {1, 10}, {h}).verdict == Verdict::Mismatch);
  CHECK(certify_torsion(X11, {1, 1}).verdict == Verdict::Mismatch);
  CHECK_THROWS_AS(certify_torsion(X11, {3, 3}), RootOfUnityMissing);
}

TEST_CASE("rational torsion of the fixed models") {
  const std::vector<std::pair<std::string, TorsionStructure>> rows = {
      {"[0,-1,-1,0,0]", {1, 5}}, {"[1,0,1,-1,0]", {1, 6}}, {"[1,1,1,0,0]", {1, 4}}, {"[0,1,0,-1,0]", {1, 6}},
      {"[0,-1,0,1,0]", {1, 4}},  {"[0,0,1,0,0]", {1, 3}},  {"[0,0,0,-1,0]", {2, 2}}, {"[0,0,0,0,1]", {1, 6}}};
  for (const auto& [a, s] : rows) {
    auto [ts, cert] = torsion_structure(model(Q, a));
    CHECK_MESSAGE(ts == s, a);
    CHECK(cert.verdict == Verdict::Proven);
  }
}

TEST_CASE("table curves") {
  SUBCASE("quintic (1,11)") {
    NumberField K = field("x^5-x^4-4x^3+3x^2+3x-1");
    CurveK E = model(K,
                     "[-4a^4+11a^3-3a^2-8a+3,-155a^4+411a^3-73a^2-325a+90,-652a^4+1739a^3-321a^2-1380a+383,0,0]");
    auto c = certify_torsion(E, {1, 11}, {E.point(K.zero(), K.zero())});
    CHECK(c.verdict == Verdict::Proven);
    for (const auto& r : c.upper.reductions) CHECK(r.count % 11 == 0);
  }
  SUBCASE("sextic (2,14)") {
    NumberField K = field("x^6-x^5+x^4-x^3+x^2-x+1");
    CurveK E = model(K, "[1/7(-9a^5-2a^4-9a^3-6a+13),1/7(3a^5+a^4+3a^3+a-1),1/7(3a^5+a^4+3a^3+a-1),0,0]");
    auto c = certify_torsion(E, {2, 14}, {E.point(K.zero(), K.zero())});
    CHECK(c.verdict == Verdict::Proven);
    REQUIRE(c.generators.size() == 2);
    check_closed(E, subgroup_span(E, {c.generators[0].point, c.generators[1].point}));
  }
  SUBCASE("X1(15) over the quartic of discriminant 125") {
    NumberField K = field("x^4-x^3+x^2-x+1");
    auto [ts, cert] = torsion_structure(model(K, "[1,1,1,0,0]"));
    CHECK(ts == TorsionStructure{1, 16});
    CHECK(cert.verdict == Verdict::Proven);
  }
  SUBCASE("X1(4,8) over x^4+3x^2+1") {
    NumberField K = field("x^4+3x^2+1");
    auto [ts, cert] = torsion_structure(model(K, "[0,0,0,-1,0]"));
    CHECK(ts == TorsionStructure{2, 4});
  }
}

TEST_CASE("certificates are invariant under change of model") {
  NumberField K = field("x^2+1");
  CurveK E = model(K, "[1,5/81,5/81,0,0]");
  PointK h = E.point(K.zero(), K.zero());
  const Verdict base = certify_torsion(E, {4, 4}, {h}).verdict;
  CHECK(base == Verdict::Proven);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> d(-3, 3);
    auto el = [&] { return K.from_coords({Rat(d(rng)), Rat(d(rng))}); };
    NfElem u = el();
    while (u.is_zero()) u = el();
    NfElem r = el(), s = el(), t = el();
    CurveK E2 = E.change(u, r, s, t);
    PointK h2 = CurveK::change_point(h, u, r, s, t);
    CHECK(certify_torsion(E2, {4, 4}, {h2}).verdict == base);
  }
}

TEST_CASE("upper-bound soundness and determinism") {
  NumberField K = field("x^2-x-1");
  CurveK E = model(K, "[-10a-5,-94a-58,-94a-58,0,0]");
  auto c = certify_torsion(E, {1, 15}, {E.point(K.zero(), K.zero())});
  CHECK(c.verdict == Verdict::Proven);
  for (const auto& r : c.upper.reductions) CHECK(r.count % 15 == 0);
  check_closed(E, subgroup_span(E, {c.generators[0].point}));
  CHECK(certificate_json(c) == certificate_json(certify_torsion(E, {1, 15}, {E.point(K.zero(), K.zero())})));
}
