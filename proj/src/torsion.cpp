#include "ectors/torsion.hpp"

#include <algorithm>
#include <numeric>

#include "ectors/json_io.hpp"

namespace ectors {

namespace {

bool point_less(const PointK& a, const PointK& b) {
  if (a.infinity != b.infinity) return a.infinity;
  if (a.infinity) return false;
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

void insert_unique(std::vector<PointK>& v, const PointK& P) {
  if (std::find(v.begin(), v.end(), P) == v.end()) v.push_back(P);
}

std::vector<long> prime_divisors(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

long l_part(long n, long l) {
  long r = 1;
  while (n % l == 0) {
    n /= l;
    r *= l;
  }
  return r;
}

/// Points of E(K) with the given x-coordinate.
std::vector<PointK> points_above(const CurveK& E, const NfElem& x) {
  std::vector<PointK> out;
  NfElem b = E.a1() * x + E.a3();
  NfElem rhs = ((x + E.a2()) * x + E.a4()) * x + E.a6();
  NfElem disc = b * b + x.field().from_int(4) * rhs;
  for (const auto& s : sqrt_in_field(disc)) {
    PointK P = PointK::affine(x, (s - b).scale(Rat(1, 2)));
    insert_unique(out, P);
  }
  return out;
}

std::optional<long> torsion_order(const CurveK& E, const PointK& P, long bound) {
  return E.order_of_point(P, bound);
}

long order_in_group(const CurveK& E, const PointK& P, std::size_t group_size) {
  auto o = E.order_of_point(P, static_cast<long>(group_size));
  if (!o) throw InternalError("element of a finite subgroup without finite order");
  return *o;
}

/// Full l-primary part, up to the bound (l^a, l^b), grown from seeds. Returns the
/// elements; `complete` is false when a search step could not be carried out.
std::vector<PointK> l_primary(const CurveK& E, long l, const TorsionStructure& bound, const std::vector<PointK>& seeds,
                              const KRootFinderConfig& cfg, bool& complete, std::string& note) {
  complete = true;
  const long target = bound.order();
  std::vector<PointK> gens = seeds;
  std::vector<PointK> G = subgroup_span(E, gens);
  if (static_cast<long>(G.size()) >= target) return G;

  std::vector<NfElem> xs = roots_in_field(E.torsion_locus(static_cast<int>(l)), cfg);
  for (const auto& x : xs)
    for (const auto& P : points_above(E, x)) gens.push_back(P);
  G = subgroup_span(E, gens);

  std::optional<std::pair<PolyK, PolyK>> xmap;
  while (static_cast<long>(G.size()) < target) {
    std::vector<PointK> lG;
    for (const auto& P : G) insert_unique(lG, E.mul(l, P));
    // one representative per nonzero class of G / lG whose preimages fit the bound
    std::vector<PointK> seen = lG;
    std::vector<PointK> reps;
    for (const auto& P : G) {
      if (std::find(seen.begin(), seen.end(), P) != seen.end()) continue;
      for (const auto& R : lG) insert_unique(seen, E.add(P, R));
      if (order_in_group(E, P, G.size()) * l <= bound.mn) reps.push_back(P);
    }
    if (reps.empty()) break;
    if (l > 7) {
      complete = false;
      note = "division by " + std::to_string(l) + " is beyond the search limit";
      break;
    }
    if (!xmap) xmap = E.multiplication_x_map(static_cast<int>(l));
    std::vector<PointK> found;
    for (const auto& P : reps) {
      PolyK g = xmap->first - PolyK::constant(P.x) * xmap->second;
      bool hit = false;
      for (const auto& x : roots_in_field(g, cfg)) {
        for (const auto& Q : points_above(E, x))
          if (E.mul(l, Q) == P) {
            found.push_back(Q);
            hit = true;
            break;
          }
        if (hit) break;
      }
    }
    if (found.empty()) break;
    gens.insert(gens.end(), found.begin(), found.end());
    std::vector<PointK> next = subgroup_span(E, gens);
    if (next.size() == G.size()) break;
    G = std::move(next);
  }
  return G;
}

/// Generators P (order mn) and Q (order m) with {iP + jQ} = T, checked by enumeration.
std::vector<Generator> pick_generators(const CurveK& E, const std::vector<PointK>& T, const TorsionStructure& s) {
  std::vector<Generator> out;
  if (s.order() == 1) return out;
  std::vector<PointK> sorted = T;
  std::sort(sorted.begin(), sorted.end(), point_less);
  for (const auto& P : sorted) {
    if (order_in_group(E, P, T.size()) != s.mn) continue;
    for (const auto& Q : sorted) {
      if (order_in_group(E, Q, T.size()) != s.m) continue;
      std::vector<PointK> all;
      PointK row = PointK::identity();
      bool distinct = true;
      for (long j = 0; j < s.m && distinct; ++j) {
        PointK cur = row;
        for (long i = 0; i < s.mn; ++i) {
          if (std::find(all.begin(), all.end(), cur) != all.end()) {
            distinct = false;
            break;
          }
          all.push_back(cur);
          cur = E.add(cur, P);
        }
        row = E.add(row, Q);
      }
      if (!distinct || static_cast<long>(all.size()) != s.order()) continue;
      out.push_back({P, s.mn});
      if (s.m > 1) out.push_back({Q, s.m});
      return out;
    }
  }
  throw InternalError("no generating pair for " + s.str());
}

struct PrimeCursor {
  const IntegralizedModel& model;
  std::uint64_t next = 3;
  UsablePrime advance() {
    auto v = good_usable_primes(model, 1, next);
    next = v[0].p + 1;
    return v[0];
  }
};

void add_reductions(const CurveK& E, const UsablePrime& up, UpperBound& ub) {
  for (std::size_t i = 0; i < up.splitting.factors.size(); ++i) {
    const int k = up.splitting.factors[i].residue_degree;
    Int q = pow_int(Int(static_cast<unsigned long>(up.p)), static_cast<unsigned long>(k));
    if (q > Int(static_cast<unsigned long>(kReductionFieldCap)) || k > kMaxFqDegree) continue;
    CurveFq Ep = reduce_curve(E, up.splitting, i);
    std::uint64_t n = count_points(Ep);
    ub.reductions.push_back({up.p, i, k, n, group_structure(Ep, n)});
  }
}

void refresh_bound(const NumberField& K, UpperBound& ub) {
  long d1 = 0, d2 = 0, n = 0;
  for (const auto& r : ub.reductions) {
    d1 = std::gcd(d1, r.group.m);
    d2 = std::gcd(d2, r.group.mn);
    n = std::gcd(n, static_cast<long>(r.count));
  }
  long m = 1;
  for (long c = d1; c >= 1; --c)
    if (d1 % c == 0 && (c <= 2 || root_of_unity(K, static_cast<int>(c)))) {
      m = c;
      break;
    }
  ub.order_bound = n;
  ub.bound = TorsionStructure{m, d2};
}

/// Number of usable primes that produced at least one reduction.
std::size_t primes_used(const UpperBound& ub) {
  std::vector<std::uint64_t> ps;
  for (const auto& r : ub.reductions)
    if (ps.empty() || ps.back() != r.p) ps.push_back(r.p);
  return ps.size();
}

TorsionCertificate run(const CurveK& E, const std::optional<TorsionStructure>& claimed,
                       const std::vector<PointK>& hints, const CertifyOptions& opt) {
  E.require_nonsingular();
  const NumberField K = E.a1().field();
  if (claimed && claimed->m >= 2 && !root_of_unity(K, static_cast<int>(claimed->m)))
    throw RootOfUnityMissing("field lacks a primitive " + std::to_string(claimed->m) + "th root of unity");

  TorsionCertificate cert;
  cert.curve = E;
  const IntegralizedModel M = integralize(E);
  PrimeCursor cursor{M};
  while (primes_used(cert.upper) < opt.min_primes) add_reductions(E, cursor.advance(), cert.upper);
  refresh_bound(K, cert.upper);

  std::vector<PointK> gens;
  for (const auto& h : hints) {
    if (!E.on_curve(h)) throw NotOnCurve("hint " + point_str(h) + " is not on the curve");
    if (torsion_order(E, h, cert.upper.order_bound)) {
      gens.push_back(h);
    } else {
      cert.note = "hint " + point_str(h) + " is not torsion";
    }
  }
  std::vector<PointK> H = subgroup_span(E, gens);
  TorsionStructure hs = structure_of(E, H);

  while (cert.upper.bound != hs && primes_used(cert.upper) < opt.max_primes) {
    add_reductions(E, cursor.advance(), cert.upper);
    refresh_bound(K, cert.upper);
  }

  const TorsionStructure ub = cert.upper.bound;
  if (claimed) cert.claimed = *claimed;
  if (claimed && !claimed->embeds_in(ub)) {
    cert.realized = hs;
    cert.generators = pick_generators(E, H, hs);
    cert.verdict = Verdict::Mismatch;
    if (cert.note.empty()) cert.note = "claimed structure does not embed in the reductions";
    return cert;
  }

  bool complete = true;
  std::vector<PointK> all_gens;
  for (long l : prime_divisors(ub.mn)) {
    TorsionStructure lb{l_part(ub.m, l), l_part(ub.mn, l)};
    std::vector<PointK> seeds;
    for (const auto& P : H) {
      long o = order_in_group(E, P, H.size());
      if (l_part(o, l) == o && o > 1) seeds.push_back(P);
    }
    std::vector<PointK> part = subgroup_span(E, seeds);
    if (static_cast<long>(part.size()) < lb.order()) {
      bool ok = true;
      std::string why;
      try {
        part = l_primary(E, l, lb, seeds, opt.roots, ok, why);
      } catch (const Error& e) {
        ok = false;
        why = std::string("search for ") + std::to_string(l) + "-power torsion stopped: " + e.what();
      }
      if (!ok) {
        complete = false;
        if (cert.note.empty()) cert.note = why;
      }
    }
    all_gens.insert(all_gens.end(), part.begin(), part.end());
  }
  std::vector<PointK> T = subgroup_span(E, all_gens);
  TorsionStructure ts = structure_of(E, T);
  cert.realized = ts;
  cert.generators = pick_generators(E, T, ts);

  if (!claimed) {
    cert.claimed = ts;
    cert.verdict = complete ? Verdict::Proven : Verdict::UpperBoundOnly;
  } else if (complete) {
    cert.verdict = ts == *claimed ? Verdict::Proven : Verdict::Mismatch;
  } else if (!ts.embeds_in(*claimed)) {
    cert.verdict = Verdict::Mismatch;
  } else {
    cert.verdict = ts == *claimed ? Verdict::LowerBoundOnly : Verdict::UpperBoundOnly;
  }
  return cert;
}

}  // namespace

IntegralizedModel integralize(const CurveK& E) {
  Int u = 1;
  for (const auto& a : E.coeffs()) u = lcm(u, a.denominator());
  const NfElem U = E.a1().field().from_rat(Rat(u));
  std::vector<NfElem> c;
  for (const auto& a : E.coeffs()) c.push_back(a);
  // weights 1, 2, 3, 4, 6
  const int w[5] = {1, 2, 3, 4, 6};
  for (int i = 0; i < 5; ++i) c[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] * U.pow(w[i]);
  return {E, CurveK(c[0], c[1], c[2], c[3], c[4]), u};
}

std::vector<UsablePrime> good_usable_primes(const IntegralizedModel& M, std::size_t count, std::uint64_t start) {
  std::vector<UsablePrime> out;
  if (count == 0) return out;
  const NumberField K = M.scaled.a1().field();
  const Rat nd = nf_norm(M.scaled.discriminant());
  const Int N = abs(nd.get_num());
  const Int& pd = K.poly_discriminant();
  for (std::uint64_t p = std::max<std::uint64_t>(start, 3); p <= kPrimeSearchBound; ++p) {
    if (!is_prime(Int(static_cast<unsigned long>(p)))) continue;
    const Int P(static_cast<unsigned long>(p));
    if (pd % P == 0 || N % P == 0 || M.u % P == 0) continue;
    out.push_back({p, split_prime(K, p)});
    if (out.size() == count) return out;
  }
  throw PrimesExhausted("fewer than " + std::to_string(count) + " usable primes below " +
                        std::to_string(kPrimeSearchBound));
}

std::vector<UsablePrime> good_usable_primes(const CurveK& E, std::size_t count) {
  E.require_nonsingular();
  return good_usable_primes(integralize(E), count);
}

CurveFq reduce_curve(const CurveK& E, const PrimeSplitting& s, std::size_t i) {
  FqField F = residue_field(s, i);
  std::vector<FqElem> c;
  for (const auto& a : E.coeffs()) c.push_back(residue_map(a, F));
  CurveFq Ep(c[0], c[1], c[2], c[3], c[4]);
  if (Ep.is_singular()) throw BadReduction("bad reduction at " + std::to_string(s.p));
  return Ep;
}

UpperBound torsion_upper_bound(const CurveK& E, const std::vector<UsablePrime>& primes) {
  E.require_nonsingular();
  UpperBound ub;
  for (const auto& up : primes) add_reductions(E, up, ub);
  if (ub.reductions.empty()) throw PrimesExhausted("no residue field small enough to count points");
  refresh_bound(E.a1().field(), ub);
  return ub;
}

std::vector<TorsionStructure> admissible_structures(const UpperBound& ub) {
  std::vector<TorsionStructure> out;
  for (long m = 1; m <= ub.bound.m; ++m) {
    if (ub.bound.m % m) continue;
    for (long mn = m; mn <= ub.bound.mn; mn += m)
      if (ub.bound.mn % mn == 0) out.push_back({m, mn});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PointK> find_torsion_points(const CurveK& E, long l, int k, const KRootFinderConfig& cfg) {
  if (!is_prime(Int(l)) || k < 1) throw Error("find_torsion_points: need a prime l and k >= 1");
  long lk = 1;
  for (int i = 0; i < k; ++i) lk *= l;
  if (l > 11 || lk > 64 || (k >= 2 && l > 7)) throw Error("find_torsion_points: l^k outside the search limits");
  E.require_nonsingular();
  bool complete = true;
  std::string note;
  std::vector<PointK> G = l_primary(E, l, TorsionStructure{lk, lk}, {}, cfg, complete, note);
  std::sort(G.begin(), G.end(), point_less);
  return G;
}

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Proven:
      return "Proven";
    case Verdict::UpperBoundOnly:
      return "UpperBoundOnly";
    case Verdict::LowerBoundOnly:
      return "LowerBoundOnly";
    case Verdict::Mismatch:
      return "Mismatch";
  }
  return "?";
}

TorsionCertificate certify_torsion(const CurveK& E, const TorsionStructure& claimed, const std::vector<PointK>& hints,
                                   const CertifyOptions& opt) {
  return run(E, claimed, hints, opt);
}

std::pair<TorsionStructure, TorsionCertificate> torsion_structure(const CurveK& E, const CertifyOptions& opt) {
  TorsionCertificate c = run(E, std::nullopt, {}, opt);
  return {c.realized, c};
}

std::vector<PointK> subgroup_span(const CurveK& E, const std::vector<PointK>& gens) {
  std::vector<PointK> G{PointK::identity()};
  for (const auto& g : gens) {
    if (std::find(G.begin(), G.end(), g) != G.end()) continue;
    std::vector<PointK> cyc{PointK::identity()};
    for (PointK c = g; !c.infinity; c = E.add(c, g)) {
      cyc.push_back(c);
      if (cyc.size() > 4096) throw InternalError("subgroup_span: generator of large or infinite order");
    }
    std::vector<PointK> next;
    for (const auto& h : G)
      for (const auto& c : cyc) insert_unique(next, E.add(h, c));
    G = std::move(next);
  }
  return G;
}

TorsionStructure structure_of(const CurveK& E, const std::vector<PointK>& elems) {
  long e = 1;
  for (const auto& P : elems) e = std::lcm(e, order_in_group(E, P, elems.size()));
  const long n = static_cast<long>(elems.size());
  return TorsionStructure{n / e, e};
}

std::string certificate_json(const TorsionCertificate& c) {
  Json j;
  const NfElem& any = c.curve.a1();
  j["field_poly"] = poly_json(any.field().poly());
  Json curve = Json::array();
  for (const auto& a : c.curve.coeffs()) curve.push_back(elem_json(a));
  j["curve"] = curve;
  j["claimed"] = {c.claimed.m, c.claimed.mn};
  j["realized"] = {c.realized.m, c.realized.mn};
  Json gens = Json::array();
  for (const auto& g : c.generators)
    gens.push_back({{"x", elem_json(g.point.x)}, {"y", elem_json(g.point.y)}, {"order", g.order}});
  j["generators"] = gens;
  Json reds = Json::array();
  for (const auto& r : c.upper.reductions)
    reds.push_back({{"p", r.p},
                    {"factor", r.factor_index},
                    {"residue_degree", r.residue_degree},
                    {"d1", r.group.m},
                    {"d2", r.group.mn},
                    {"count", r.count}});
  j["reductions"] = reds;
  j["bound"] = {c.upper.bound.m, c.upper.bound.mn};
  j["verdict"] = verdict_str(c.verdict);
  if (!c.note.empty()) j["note"] = c.note;
  return j.dump();
}

}  // namespace ectors
