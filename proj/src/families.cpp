#include "ectors/families.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>

#include "ectors/roots.hpp"

namespace ectors {

CurveK ModularModel::curve(const NumberField& K) const {
  return CurveK(K.from_int(coeffs[0]), K.from_int(coeffs[1]), K.from_int(coeffs[2]), K.from_int(coeffs[3]),
                K.from_int(coeffs[4]));
}

const std::vector<ModularKind>& all_modular_kinds() {
  static const std::vector<ModularKind> v = {ModularKind::X11,   ModularKind::X14,   ModularKind::X15,
                                             ModularKind::X2_10, ModularKind::X2_12, ModularKind::X3_9,
                                             ModularKind::X4_8,  ModularKind::X6_6};
  return v;
}

ModularModel modular_model(ModularKind kind) {
  switch (kind) {
    case ModularKind::X11:
      return {kind, {1, 11}, {0, -1, -1, 0, 0}, {1, 5}, 1, "y^2-y=x^3-x^2"};
    case ModularKind::X14:
      return {kind, {1, 14}, {1, 0, 1, -1, 0}, {1, 6}, 1, "y^2+xy+y=x^3-x"};
    case ModularKind::X15:
      return {kind, {1, 15}, {1, 1, 1, 0, 0}, {1, 4}, 1, "y^2+xy+y=x^3+x^2"};
    case ModularKind::X2_10:
      return {kind, {2, 10}, {0, 1, 0, -1, 0}, {1, 6}, 2, "y^2=x^3+x^2-x"};
    case ModularKind::X2_12:
      return {kind, {2, 12}, {0, -1, 0, 1, 0}, {1, 4}, 2, "y^2=x(x^2-x+1)"};
    case ModularKind::X3_9:
      return {kind, {3, 9}, {0, 0, 1, 0, 0}, {1, 3}, 3, "y^2+y=x^3"};
    case ModularKind::X4_8:
      return {kind, {4, 8}, {0, 0, 0, -1, 0}, {2, 2}, 4, "y^2=x^3-x"};
    case ModularKind::X6_6:
      // zeta_6 generates the same field as zeta_3
      return {kind, {6, 6}, {0, 0, 0, 0, 1}, {1, 6}, 3, "y^2=x^3+1"};
  }
  throw InternalError("unknown modular kind");
}

std::string kind_str(ModularKind kind) {
  const TorsionStructure s = modular_model(kind).level;
  if (s.m == 1) return "X1(" + std::to_string(s.mn) + ")";
  return "X1(" + std::to_string(s.m) + "," + std::to_string(s.mn) + ")";
}

namespace {

std::string strip_kind(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  for (const std::string pre : {"X1(", "X_1(", "("})
    if (s.rfind(pre, 0) == 0 && !s.empty() && s.back() == ')') return s.substr(pre.size(), s.size() - pre.size() - 1);
  return s;
}

}  // namespace

ModularKind parse_modular_kind(const std::string& text) {
  const std::string s = strip_kind(text);
  for (ModularKind k : all_modular_kinds()) {
    const TorsionStructure l = modular_model(k).level;
    const std::string a = std::to_string(l.mn);
    const std::string b = std::to_string(l.m) + "," + std::to_string(l.mn);
    if (s == b || (l.m == 1 && s == a)) return k;
  }
  throw ParseError("unknown modular curve '" + text + "'");
}

const std::vector<FamilyKind>& all_family_kinds() {
  static const std::vector<FamilyKind> v = {FamilyKind::F3_3, FamilyKind::F3_6, FamilyKind::F4_4, FamilyKind::F5_5};
  return v;
}

TorsionStructure family_structure(FamilyKind k) {
  switch (k) {
    case FamilyKind::F3_3:
      return {3, 3};
    case FamilyKind::F3_6:
      return {3, 6};
    case FamilyKind::F4_4:
      return {4, 4};
    case FamilyKind::F5_5:
      return {5, 5};
  }
  throw InternalError("unknown family kind");
}

int family_cyclotomic(FamilyKind k) { return static_cast<int>(family_structure(k).m); }

std::string kind_str(FamilyKind kind) {
  const TorsionStructure s = family_structure(kind);
  return "(" + std::to_string(s.m) + "," + std::to_string(s.mn) + ")";
}

FamilyKind parse_family_kind(const std::string& text) {
  const std::string s = strip_kind(text);
  for (FamilyKind k : all_family_kinds()) {
    const TorsionStructure l = family_structure(k);
    if (s == std::to_string(l.m) + "," + std::to_string(l.mn)) return k;
  }
  throw ParseError("unknown family '" + text + "'");
}

NumberField family_base_field(FamilyKind k) {
  return NumberField(cyclotomic_poly(family_cyclotomic(k)), "Q(zeta" + std::to_string(family_cyclotomic(k)) + ")");
}

namespace {

NfElem require_root(const NumberField& K, int m) {
  auto z = root_of_unity(K, m);
  if (!z) throw RootOfUnityMissing("field lacks a primitive " + std::to_string(m) + "th root of unity");
  return *z;
}

NfElem checked_div(const NfElem& a, const NfElem& b, const char* what) {
  if (b.is_zero()) throw DegenerateParameter(std::string("denominator ") + what + " vanishes");
  return a / b;
}

}  // namespace

FamilyMember family_member(FamilyKind kind, const NfElem& v) {
  const NumberField K = v.field();
  const NfElem zeta = require_root(K, family_cyclotomic(kind));
  auto c = [&](long n) { return K.from_int(n); };
  FamilyMember out{kind, v, std::nullopt, std::nullopt, std::nullopt, zeta, CurveK()};
  NfElem a1, a2, a3;
  switch (kind) {
    case FamilyKind::F3_3:
      a1 = (zeta + c(2)) * v + (c(1) - zeta);
      a2 = K.zero();
      a3 = (zeta + c(1)) * v * v - zeta * v;
      break;
    case FamilyKind::F3_6: {
      NfElem t = checked_div(c(4) * v * v + c(6) * v + c(3), v * v * v, "v^3");
      out.t = t;
      a1 = t + c(2);
      a2 = -t * (t + c(1));
      a3 = a2;
      break;
    }
    case FamilyKind::F4_4: {
      NfElem t = checked_div((c(1) - v) * (v * v - c(2) * v + c(2)), c(2) * v.pow(4), "2v^4");
      out.t = t;
      a1 = c(1);
      a2 = -t;
      a3 = -t;
      break;
    }
    case FamilyKind::F5_5: {
      // a = zeta + 1/zeta; (zeta+1)/zeta only gives (1,5) torsion
      const NfElem a = (zeta * zeta + c(1)) / zeta;
      NfElem U = checked_div((c(2) - a) * v * v + (c(2) - a) * v + a + c(3), c(5) * (v + c(1)), "5(v+1)");
      NfElem V = checked_div(-((a + c(2)) * v * v + (c(5) * a + c(9)) * v + (c(25) * a + c(41))),
                             v * v * v + (c(-3) * a - c(2)) * v * v + (c(2) * a + c(6)) * v + (c(5) * a + c(9)),
                             "of V");
      NfElem t = checked_div(U, V * (U + c(1)), "V(U+1)");
      out.U = U;
      out.V = V;
      out.t = t;
      a1 = c(1) - t;
      a2 = -t;
      a3 = -t;
      break;
    }
  }
  CurveK E(a1, a2, a3, K.zero(), K.zero());
  if (E.is_singular()) throw DegenerateParameter("discriminant vanishes at v = " + v.str());
  out.curve = E;
  return out;
}

std::vector<NfElem> listed_degenerate_values(FamilyKind kind, const NumberField& K) {
  std::vector<NfElem> out;
  auto c = [&](long n) { return K.from_int(n); };
  switch (kind) {
    case FamilyKind::F3_3: {
      // 0, 1 and the cube root of -1 that is 1 + zeta_3
      NfElem z = require_root(K, 3);
      out = {c(0), c(1), c(1) + z};
      break;
    }
    case FamilyKind::F3_6: {
      NfElem z = require_root(K, 3);
      NfElem s = c(2) * z + c(1);  // s^2 = -3
      const Rat h(1, 2), q(1, 4);
      out = {c(-1), K.from_rat(Rat(-1, 2)), s.scale(h), (-s).scale(h),
             (c(-3) + s).scale(q), (c(-3) - s).scale(q), (c(-3) + s).scale(h), (c(-3) - s).scale(h)};
      break;
    }
    case FamilyKind::F4_4: {
      NfElem i = require_root(K, 4);
      out = {c(1), c(1) - i, c(1) + i};
      break;
    }
    case FamilyKind::F5_5: {
      // gamma = -zeta_5^2, the fifth root of -1 for which the quadratic factors divide the discriminant
      NfElem z = require_root(K, 5);
      NfElem g2 = z.pow(4), g4 = g2 * g2;
      NfElem w = (g2 - c(1)) * (g2 - c(1));
      PolyK q1(std::vector<NfElem>{c(9) * g2 + c(5) * g4 + c(5), -c(3) * (c(1) + g2 + g4), g2});
      PolyK q2(std::vector<NfElem>{c(3) * g2 + g4 + c(1), -w, -w});
      out = {c(-1)};
      for (const auto* q : {&q1, &q2})
        for (auto& r : roots_in_field(*q)) out.push_back(r);
      break;
    }
  }
  return out;
}

std::vector<DegenerateSample> degenerate_locus_check(FamilyKind kind, const std::vector<NfElem>& samples) {
  std::vector<DegenerateSample> out;
  if (samples.empty()) return out;
  const std::vector<NfElem> listed = listed_degenerate_values(kind, samples[0].field());
  for (const auto& v : samples) {
    bool deg = false;
    try {
      family_member(kind, v);
    } catch (const DegenerateParameter&) {
      deg = true;
    }
    bool is_listed = std::find(listed.begin(), listed.end(), v) != listed.end();
    out.push_back({v, is_listed, deg});
  }
  return out;
}

NfElem random_nondegenerate_v(FamilyKind kind, const NumberField& K, Rng& rng, long height) {
  std::uniform_int_distribution<long> num(-height, height);
  std::uniform_int_distribution<long> den(1, 3);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Rat> c;
    for (int i = 0; i < K.degree(); ++i) c.push_back(make_rat(Int(num(rng)), Int(den(rng))));
    NfElem v = K.from_coords(std::move(c));
    try {
      family_member(kind, v);
      return v;
    } catch (const DegenerateParameter&) {
    }
  }
  throw InternalError("no nondegenerate parameter found");
}

CuspClasses cusp_classes(const ModularModel& model) {
  CuspClasses out;
  out.m = model.level.m;
  out.n = model.level.mn;
  const long n = out.n;
  out.cls.assign(static_cast<std::size_t>(n * n), -1);
  for (long a = 0; a < n; ++a)
    for (long c = 0; c < n; ++c) {
      if (std::gcd(std::gcd(a, c), n) != 1 || out.cls[a * n + c] >= 0) continue;
      std::vector<std::pair<long, long>> stack = {{a, c}};
      while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        if (out.cls[x * n + y] >= 0) continue;
        out.cls[x * n + y] = out.count;
        stack.push_back({(x + out.m * y) % n, y});
        stack.push_back({(n - x) % n, (n - y) % n});
      }
      ++out.count;
    }
  return out;
}

namespace {

std::vector<long> unit_residues(long N) {
  std::vector<long> u;
  for (long t = 1; t <= std::max(1L, N - 1); ++t)
    if (std::gcd(t, N) == 1) u.push_back(t);
  return u;
}

std::vector<long> generated_subgroup(const std::vector<long>& gens, long N) {
  std::vector<long> s = {1 % N};
  for (std::size_t i = 0; i < s.size(); ++i)
    for (long g : gens) {
      long v = s[i] * g % N;
      if (std::find(s.begin(), s.end(), v) == s.end()) s.push_back(v);
    }
  std::sort(s.begin(), s.end());
  return s;
}

/// Minimal polynomial of a primitive element of the fixed field of S in Q(zeta_N):
/// a Gaussian period when one generates, otherwise a small combination of two.
PolyQ fixed_field_poly(const std::vector<long>& S, long N, long index) {
  const NumberField Z(cyclotomic_poly(static_cast<int>(N)));
  const NfElem zeta = Z.gen();
  auto period = [&](long k) {
    NfElem theta = Z.zero();
    for (long s : S) theta += zeta.pow(s * k % N);
    return theta;
  };
  std::vector<NfElem> periods;
  for (long k = 1; k < N; ++k) periods.push_back(period(k));
  for (const auto& p : periods) {
    PolyQ g = nf_min_poly(p);
    if (g.degree() == index) return g;
  }
  for (std::size_t i = 0; i < periods.size(); ++i)
    for (std::size_t j = i + 1; j < periods.size(); ++j)
      for (long c = 1; c <= 3; ++c) {
        PolyQ g = nf_min_poly(periods[i] + Z.from_int(c) * periods[j]);
        if (g.degree() == index) return g;
      }
  throw InternalError("no primitive element for a cyclotomic subfield");
}

}  // namespace

std::vector<long> galois_image(const NumberField& K, long N) {
  const std::vector<long> units = unit_residues(N);
  if (N <= 2) return units;
  std::vector<std::vector<long>> subgroups;
  for (long g : units)
    for (long h : units) {
      auto s = generated_subgroup({g, h}, N);
      if (std::find(subgroups.begin(), subgroups.end(), s) == subgroups.end()) subgroups.push_back(s);
    }
  std::vector<long> image = units;
  for (const auto& S : subgroups) {
    const long index = static_cast<long>(units.size() / S.size());
    if (index == 1 || K.degree() % index != 0) continue;
    if (roots_in_field(K, fixed_field_poly(S, N, index)).empty()) continue;
    std::vector<long> meet;
    std::set_intersection(image.begin(), image.end(), S.begin(), S.end(), std::back_inserter(meet));
    image = meet;
  }
  return image;
}

int rational_cusp_count(const ModularModel& model, const NumberField& K) {
  const CuspClasses cc = cusp_classes(model);
  const long n = cc.n;
  const std::vector<long> H = galois_image(K, n);
  std::vector<bool> moved(static_cast<std::size_t>(cc.count), false);
  for (long a = 0; a < n; ++a)
    for (long c = 0; c < n; ++c) {
      const int k = cc.cls[a * n + c];
      if (k < 0) continue;
      for (long t : H)
        if (cc.cls[(t * a % n) * n + c] != k) moved[k] = true;
    }
  return static_cast<int>(std::count(moved.begin(), moved.end(), false));
}

GrowthReport growth_check(ModularKind kind, const NumberField& K, const CertifyOptions& opt) {
  const ModularModel M = modular_model(kind);
  auto [sq, cq] = torsion_structure(M.curve(NumberField::rationals()), opt);
  auto [sk, ck] = torsion_structure(M.curve(K), opt);
  return {sq, sk, cq, ck};
}

}  // namespace ectors
