#include <map>
#include <set>

#include "doctest.h"
#include "ectors/curves.hpp"
#include "ectors/roots.hpp"

using namespace ectors;

namespace {

PolyQ P(const std::string& s) { return parse_polyq(s); }

CurveQ curve_q(long a1, long a2, long a3, long a4, long a6) {
  return CurveQ(Rat(a1), Rat(a2), Rat(a3), Rat(a4), Rat(a6));
}

CurveFq curve_fq(const FqField& F, const std::vector<long>& a) {
  return CurveFq(F.from_int(a[0]), F.from_int(a[1]), F.from_int(a[2]), F.from_int(a[3]), F.from_int(a[4]));
}

/// Brute-force point list: every (x, y) in F_q^2 satisfying the equation.
std::vector<PointFq> brute_points(const CurveFq& E) {
  FqField F = E.a1().field();
  const std::uint64_t q = F.enumerable_size();
  std::vector<PointFq> pts{PointFq::identity()};
  for (std::uint64_t i = 0; i < q; ++i)
    for (std::uint64_t j = 0; j < q; ++j) {
      PointFq Pt = PointFq::affine(F.element(i), F.element(j));
      if (E.on_curve(Pt)) pts.push_back(Pt);
    }
  return pts;
}

/// Structure from the orders of all points by repeated addition.
TorsionStructure brute_structure(const CurveFq& E) {
  auto pts = brute_points(E);
  long expo = 1;
  for (const auto& Pt : pts) {
    long n = 1;
    PointFq Q = Pt;
    while (!Q.infinity) {
      Q = E.add(Q, Pt);
      ++n;
    }
    expo = std::lcm(expo, n);
  }
  long N = static_cast<long>(pts.size());
  return {N / expo, expo};
}

}  // namespace

TEST_CASE("invariants") {
  CurveQ E = curve_q(0, 0, 0, 0, 1);
  CHECK(E.discriminant() == -432);
  CHECK(E.j_invariant() == 0);
  CHECK(curve_q(0, 0, 0, -1, 0).j_invariant() == 1728);
  CHECK(curve_q(0, -1, -1, 0, 0).discriminant() == -11);
  CHECK_THROWS_AS(curve_q(0, 0, 0, 0, 0).j_invariant(), JUndefined);
  CHECK(curve_q(0, 0, 0, 0, 0).is_singular());
  CHECK_THROWS_AS(curve_q(0, 0, 0, 0, 0).mul(2, PointQ::affine(Rat(0), Rat(0))), SingularCurve);
}

TEST_CASE("points and group law over Q and K") {
  CHECK(curve_q(3, -2, 5, 0, 0).on_curve(PointQ::affine(Rat(0), Rat(0))));
  CurveQ X11 = curve_q(0, -1, -1, 0, 0);
  CHECK(X11.on_curve(PointQ::affine(Rat(1), Rat(1))));
  PointQ O = PointQ::identity();
  PointQ T = X11.point(Rat(0), Rat(0));
  CHECK(X11.add(T, O) == T);
  CHECK(X11.mul(5, T).infinity);
  CHECK(X11.order_of_point(T, 20) == 5);
  CHECK(X11.order_of_point(O, 20) == 1);
  CHECK_THROWS_AS(X11.point(Rat(2), Rat(2)), NotOnCurve);

  CurveQ E = curve_q(0, 0, 0, 0, 1);
  CHECK(E.dbl(E.point(Rat(2), Rat(3))) == PointQ::affine(Rat(0), Rat(1)));
  CHECK(curve_q(0, 0, 1, 0, 0).order_of_point(PointQ::affine(Rat(0), Rat(0)), 10) == 3);

  NumberField K(P("x^3-x^2+x+1"));
  CurveK XK(K.zero(), K.from_int(-1), K.from_int(-1), K.zero(), K.zero());
  NfElem a = K.gen();
  CHECK(XK.on_curve(PointK::affine(-a, a * a - a)));

  CurveK T2(a * a, K.parse("-5a^2+a+2"), K.parse("4a^2-7a-5"), K.zero(), K.zero());
  CHECK(T2.order_of_point(PointK::affine(K.zero(), K.zero()), 40) == 11);
}

TEST_CASE("division polynomials") {
  NumberField Q = NumberField::rationals();
  CurveQ E = curve_q(0, 0, 0, 3, 5);
  CHECK(E.division_poly(2) == P("4x^3+12x+20"));
  CHECK(curve_q(0, 0, 0, 0, 1).division_poly(3) == P("3x^4+12x"));
  CHECK(E.division_poly(5).degree() == 12);
  for (int n = 1; n <= 12; n += 2) CHECK(E.division_poly(n).degree() == (n * n - 1) / 2);
  for (int n = 2; n <= 12; n += 2) CHECK(E.torsion_locus(n).degree() == (n * n - 4) / 2 + 3);

  // X_1(11): x(T) = 0 and x(2T) = 1 are roots of psi_5
  CurveQ X11 = curve_q(0, -1, -1, 0, 0);
  CHECK(X11.division_poly(5).eval(Rat(0)) == 0);
  CHECK(X11.division_poly(5).eval(Rat(1)) == 0);
  (void)Q;
}

TEST_CASE("division polynomials agree with brute force over F_p") {
  for (std::uint64_t p : {7ULL, 11ULL, 13ULL, 17ULL}) {
    FqField F = FqField::prime(p);
    std::vector<std::vector<long>> models = {{1, 2, 3, 4, 5}, {0, -1, -1, 0, 0}, {1, 0, 1, -1, 0}, {0, 0, 0, 2, 3}};
    for (const auto& a : models) {
      CurveFq E = curve_fq(F, a);
      if (E.is_singular()) continue;
      auto pts = enumerate_points(E);
      for (int n = 2; n <= 8; ++n) {
        std::set<std::uint64_t> xs;
        for (const auto& Pt : pts)
          if (!Pt.infinity && E.mul(n, Pt).infinity) xs.insert(Pt.x.index());
        auto locus = E.torsion_locus(n);
        for (std::uint64_t i = 0; i < p; ++i) {
          bool root = locus.eval(F.element(i)).is_zero();
          bool has_point = false;
          for (const auto& Pt : pts)
            if (!Pt.infinity && Pt.x.index() == i) has_point = true;
          if (has_point) CHECK(root == (xs.count(i) == 1));
        }
        auto [num, den] = E.multiplication_x_map(n);
        for (const auto& Pt : pts) {
          if (Pt.infinity) continue;
          PointFq Q = E.mul(n, Pt);
          FqElem dv = den.eval(Pt.x);
          if (Q.infinity) {
            CHECK(dv.is_zero());
          } else {
            CHECK(num.eval(Pt.x) == Q.x * dv);
          }
        }
      }
    }
  }
}

TEST_CASE("enumeration and group structure") {
  FqField F5 = FqField::prime(5), F3 = FqField::prime(3);
  CurveFq E1 = curve_fq(F5, {0, 0, 0, 0, 1});
  CHECK(enumerate_points(E1).size() == 6);
  CHECK(group_structure(E1) == TorsionStructure{1, 6});
  CurveFq E2 = curve_fq(F3, {0, 0, 0, -1, 0});
  CHECK(enumerate_points(E2).size() == 4);
  CHECK(group_structure(E2) == TorsionStructure{2, 2});
  CurveFq E3 = curve_fq(F5, {0, 0, 0, -1, 0});
  CHECK(group_structure(E3) == brute_structure(E3));

  std::vector<FqField> fields = {FqField::prime(3), FqField::prime(5), FqField::prime(7), FqField::prime(11),
                                 FqField::prime(13), FqField(PolyModP(3, {2, 2, 1})), FqField(PolyModP(5, {2, 4, 1})),
                                 FqField(PolyModP(3, {1, 2, 0, 1}))};
  Rng rng(12);
  for (const auto& F : fields) {
    std::uniform_int_distribution<long> dist(0, static_cast<long>(F.p()) - 1);
    for (int it = 0; it < 12; ++it) {
      std::vector<long> a(5);
      for (auto& x : a) x = dist(rng);
      CurveFq E = curve_fq(F, a);
      if (it % 3 == 0) E = CurveFq(F.gen(), F.from_int(a[1]), F.gen() * F.gen(), F.from_int(a[3]), F.from_int(a[4]));
      if (E.is_singular()) continue;
      auto pts = enumerate_points(E);
      auto brute = brute_points(E);
      CHECK(pts.size() == brute.size());
      CHECK(count_points(E) == pts.size());
      for (const auto& Pt : pts) CHECK(E.on_curve(Pt));
      double q = static_cast<double>(F.enumerable_size());
      CHECK(std::abs(static_cast<double>(pts.size()) - (q + 1)) <= 2 * std::sqrt(q));
      CHECK(group_structure(E) == brute_structure(E));
    }
  }
}

TEST_CASE("group law axioms on random points") {
  FqField F(PolyModP(7, {3, 6, 1}));
  CurveFq E(F.gen(), F.from_int(2), F.from_int(5), F.gen() * F.gen(), F.from_int(1));
  REQUIRE_FALSE(E.is_singular());
  auto pts = enumerate_points(E);
  Rng rng(4);
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  for (int it = 0; it < 200; ++it) {
    const auto &A = pts[pick(rng)], &B = pts[pick(rng)], &C = pts[pick(rng)];
    CHECK(E.add(A, B) == E.add(B, A));
    CHECK(E.add(E.add(A, B), C) == E.add(A, E.add(B, C)));
    CHECK(E.add(A, E.neg(A)).infinity);
    CHECK(E.on_curve(E.add(A, B)));
  }
}

TEST_CASE("changes of model and isomorphism") {
  NumberField Q = NumberField::rationals();
  CurveK E = curve_from_coeffs(Q, {0, 0, 0, 0, 1});
  CurveK E64 = curve_from_coeffs(Q, {0, 0, 0, 0, 64});
  CHECK(is_isomorphic(E, E));
  CHECK(is_isomorphic(E, E64));
  CHECK_FALSE(is_isomorphic(E, curve_from_coeffs(Q, {0, 0, 0, 0, 2})));
  // j = 1728: u^4 = 1/4 has no rational solution, u^4 = 1/16 does
  CHECK_FALSE(is_isomorphic(curve_from_coeffs(Q, {0, 0, 0, -1, 0}), curve_from_coeffs(Q, {0, 0, 0, -4, 0})));
  CHECK(is_isomorphic(curve_from_coeffs(Q, {0, 0, 0, -1, 0}), curve_from_coeffs(Q, {0, 0, 0, -16, 0})));

  Rng rng(17);
  std::uniform_int_distribution<int> dist(-4, 4);
  for (const auto& s : {"x", "x^2-x-1", "x^3-x^2+x+1"}) {
    NumberField K(P(s));
    for (int it = 0; it < 4; ++it) {
      CurveK A(K.from_int(dist(rng)), K.gen(), K.from_int(dist(rng)), K.from_int(dist(rng)), K.gen() + K.one());
      if (A.is_singular()) continue;
      NfElem u = K.gen() + K.from_int(2 + it), r = K.from_int(dist(rng)), sh = K.gen() * K.from_int(dist(rng)),
             t = K.from_rat(make_rat(dist(rng), 3));
      CurveK B = A.change(u, r, sh, t);
      CHECK(B.j_invariant() == A.j_invariant());
      CHECK(B.discriminant() * u.pow(12) == A.discriminant());
      CHECK(is_isomorphic(A, B));
      // a quadratic twist by a non-square is not isomorphic (j != 0, 1728)
      NfElem d = K.from_int(-7);
      if (!sqrt_in_field(d).empty()) continue;
      const auto& I = A.invariants();
      if (I.c4.is_zero() || I.c6.is_zero()) continue;
      CurveK tw(K.zero(), K.zero(), K.zero(), K.from_int(-27) * I.c4 * d * d, K.from_int(-54) * I.c6 * d * d * d);
      CHECK_FALSE(is_isomorphic(A, tw));
    }
  }
}

TEST_CASE("text forms") {
  NumberField K(P("x^3-x^2+x+1"));
  CurveK E = parse_curve(K, "[a^2, -5a^2+a+2, 4a^2-7a-5, 0, 0]");
  CHECK(curve_str(E) == "[a^2,-5*a^2+a+2,4*a^2-7*a-5,0,0]");
  CHECK(parse_curve(K, curve_str(E)).coeffs() == E.coeffs());
  PointK Pt = parse_point(K, "(-a, a^2-a)");
  CHECK(point_str(Pt) == "(-a,a^2-a)");
  CHECK(parse_point(K, "O").infinity);
  CHECK_THROWS_AS(parse_curve(K, "[1,2,3]"), ParseError);
}
