#include "ectors/curves.hpp"

#include <algorithm>
#include <unordered_set>

#include "ectors/roots.hpp"

namespace ectors {

namespace {

/// Square indicator table for F_q indexed by FqElem::index().
std::vector<bool> square_table(const FqField& F) {
  const std::uint64_t q = F.enumerable_size();
  std::vector<bool> sq(q, false);
  for (std::uint64_t i = 0; i < q; ++i) {
    FqElem x = F.element(i);
    sq[(x * x).index()] = true;
  }
  return sq;
}

FqElem completed_square_rhs(const CurveFq& E, const FqElem& x) {
  const auto& I = E.invariants();
  FqElem four = from_int_like(x, 4), two = from_int_like(x, 2);
  return ((four * x + I.b2) * x + two * I.b4) * x + I.b6;
}

}  // namespace

std::vector<PointFq> enumerate_points(const CurveFq& E) {
  E.require_nonsingular();
  FqField F = E.a1().field();
  const std::uint64_t q = F.enumerable_size();
  std::vector<PointFq> pts{PointFq::identity()};
  const FqElem half = F.from_int(2).inv();
  for (std::uint64_t i = 0; i < q; ++i) {
    FqElem x = F.element(i);
    FqElem w = completed_square_rhs(E, x);
    FqElem lin = E.a1() * x + E.a3();
    if (w.is_zero()) {
      pts.push_back(PointFq::affine(x, -lin * half));
      continue;
    }
    auto s = fq_sqrt(w);
    if (!s) continue;
    pts.push_back(PointFq::affine(x, (*s - lin) * half));
    pts.push_back(PointFq::affine(x, (-*s - lin) * half));
  }
  return pts;
}

std::uint64_t count_points(const CurveFq& E) {
  E.require_nonsingular();
  FqField F = E.a1().field();
  const std::uint64_t q = F.enumerable_size();
  auto sq = square_table(F);
  std::uint64_t n = 1;
  for (std::uint64_t i = 0; i < q; ++i) {
    FqElem w = completed_square_rhs(E, F.element(i));
    if (w.is_zero()) n += 1;
    else if (sq[w.index()]) n += 2;
  }
  return n;
}

TorsionStructure group_structure(const CurveFq& E) { return group_structure(E, count_points(E)); }

TorsionStructure group_structure(const CurveFq& E, std::uint64_t count) {
  FqField F = E.a1().field();
  const std::uint64_t q = F.enumerable_size();
  const FqElem half = F.from_int(2).inv();
  auto key = [q](const PointFq& P) { return P.infinity ? q * q : P.x.index() * q + P.y.index(); };
  long d1 = 1, d2 = 1;
  for (const auto& [pz, a] : factor_integer(Int(static_cast<unsigned long>(count)))) {
    const long l = pz.get_si();
    long la = 1;
    for (unsigned i = 0; i < a; ++i) la *= l;
    // the ell-part is cyclic unless ell divides q - 1 and ell^2 divides #E
    if (a == 1 || (q - 1) % static_cast<std::uint64_t>(l) != 0) {
      d2 *= la;
      continue;
    }
    // grow the subgroup spanned by ell-parts of points until it has order ell^a
    const long cof = static_cast<long>(count) / la;
    std::vector<PointFq> span{PointFq::identity()};
    std::unordered_set<std::uint64_t> keys{key(span[0])};
    long expo = 1;
    auto absorb = [&](const PointFq& P) {
      PointFq Q = E.mul(cof, P);
      if (keys.count(key(Q))) return;
      long ord = 1;
      for (PointFq R = Q; !R.infinity; R = E.mul(l, R)) ord *= l;
      expo = std::max(expo, ord);
      std::vector<PointFq> add;
      PointFq kQ = Q;
      while (!keys.count(key(kQ))) {
        for (const auto& S : span) add.push_back(E.add(S, kQ));
        kQ = E.add(kQ, Q);
      }
      for (auto& R : add)
        if (keys.insert(key(R)).second) span.push_back(std::move(R));
    };
    for (std::uint64_t i = 0; i < q && static_cast<long>(span.size()) < la; ++i) {
      FqElem x = F.element(i);
      FqElem w = completed_square_rhs(E, x);
      FqElem lin = E.a1() * x + E.a3();
      if (w.is_zero()) {
        absorb(PointFq::affine(x, -lin * half));
        continue;
      }
      auto s = fq_sqrt(w);
      if (!s) continue;
      absorb(PointFq::affine(x, (*s - lin) * half));
      absorb(PointFq::affine(x, (-*s - lin) * half));
    }
    if (static_cast<long>(span.size()) != la) throw InternalError("point count inconsistent with the points found");
    d2 *= expo;
    d1 *= la / expo;
  }
  return {d1, d2};
}

bool is_isomorphic(const CurveK& E1, const CurveK& E2) {
  if (E1.a1().field() != E2.a1().field()) throw FieldMismatch("curves over different fields");
  if (E1.is_singular() || E2.is_singular()) throw SingularCurve("isomorphism test on a singular model");
  if (E1.j_invariant() != E2.j_invariant()) return false;
  const auto &I1 = E1.invariants(), &I2 = E2.invariants();
  NumberField K = E1.a1().field();
  auto has_root = [&](int k, const NfElem& w) {
    std::vector<NfElem> c(static_cast<std::size_t>(k) + 1, K.zero());
    c[0] = -w;
    c.back() = K.one();
    return !roots_in_field(PolyK(c)).empty();
  };
  if (I1.c4.is_zero()) return has_root(6, I1.c6 / I2.c6);  // j = 0
  if (I1.c6.is_zero()) return has_root(4, I1.c4 / I2.c4);  // j = 1728
  return has_root(2, I1.c6 * I2.c4 / (I1.c4 * I2.c6));
}

CurveK curve_from_coeffs(const NumberField& K, const std::vector<Rat>& a) {
  if (a.size() != 5) throw ParseError("curve needs five coefficients");
  return CurveK(K.from_rat(a[0]), K.from_rat(a[1]), K.from_rat(a[2]), K.from_rat(a[3]), K.from_rat(a[4]));
}

namespace {

std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\n");
  std::size_t e = s.find_last_not_of(" \t\n");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

CurveK parse_curve(const NumberField& K, const std::string& text) {
  std::string t = strip(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') throw ParseError("curve must look like [a1,a2,a3,a4,a6]");
  auto parts = split_top_level(t.substr(1, t.size() - 2));
  if (parts.size() != 5) throw ParseError("curve needs five coefficients");
  std::vector<NfElem> a;
  for (const auto& p : parts) a.push_back(K.parse(p));
  return CurveK(a[0], a[1], a[2], a[3], a[4]);
}

PointK parse_point(const NumberField& K, const std::string& text) {
  std::string t = strip(text);
  if (t == "O" || t == "0" || t == "inf") return PointK::identity();
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw ParseError("point must look like (x,y)");
  auto parts = split_top_level(t.substr(1, t.size() - 2));
  if (parts.size() != 2) throw ParseError("point needs two coordinates");
  return PointK::affine(K.parse(parts[0]), K.parse(parts[1]));
}

std::string curve_str(const CurveK& E) {
  std::string s = "[";
  auto c = E.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + c[i].str();
  return s + "]";
}

std::string point_str(const PointK& P) {
  if (P.infinity) return "O";
  return "(" + P.x.str() + "," + P.y.str() + ")";
}

}  // namespace ectors
