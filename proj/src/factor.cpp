#include "ectors/factor.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace ectors {

void ZPolyMod::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

ZPolyMod ZPolyMod::from_ints(const std::vector<Int>& v, const Int& m) {
  ZPolyMod r{{}, m};
  r.c.reserve(v.size());
  for (const auto& x : v) r.c.push_back(mod(x, m));
  r.trim();
  return r;
}

ZPolyMod ZPolyMod::from_modp(const PolyModP& f, const Int& m) {
  ZPolyMod r{{}, m};
  for (auto x : f.coeffs()) r.c.emplace_back(static_cast<unsigned long>(x));
  r.trim();
  return r;
}

PolyModP ZPolyMod::to_modp(std::uint64_t p) const {
  std::vector<std::uint64_t> v;
  Int pp(static_cast<unsigned long>(p));
  for (const auto& x : c) v.push_back(to_u64(mod(x, pp)));
  return PolyModP(p, std::move(v));
}

std::vector<Int> ZPolyMod::symmetric() const {
  std::vector<Int> out;
  Int half = modulus / 2;
  for (const auto& x : c) out.push_back(x > half ? Int(x - modulus) : x);
  return out;
}

namespace {

ZPolyMod zadd(const ZPolyMod& a, const ZPolyMod& b) {
  ZPolyMod r{std::vector<Int>(std::max(a.c.size(), b.c.size()), 0), a.modulus};
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    Int s = (i < a.c.size() ? a.c[i] : Int(0)) + (i < b.c.size() ? b.c[i] : Int(0));
    r.c[i] = mod(s, a.modulus);
  }
  r.trim();
  return r;
}

ZPolyMod zsub(const ZPolyMod& a, const ZPolyMod& b) {
  ZPolyMod r{std::vector<Int>(std::max(a.c.size(), b.c.size()), 0), a.modulus};
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    Int s = (i < a.c.size() ? a.c[i] : Int(0)) - (i < b.c.size() ? b.c[i] : Int(0));
    r.c[i] = mod(s, a.modulus);
  }
  r.trim();
  return r;
}

ZPolyMod zmul(const ZPolyMod& a, const ZPolyMod& b) {
  if (a.c.empty() || b.c.empty()) return {{}, a.modulus};
  ZPolyMod r{std::vector<Int>(a.c.size() + b.c.size() - 1, 0), a.modulus};
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  for (auto& x : r.c) x = mod(x, a.modulus);
  r.trim();
  return r;
}

/// Division by a monic polynomial modulo M.
std::pair<ZPolyMod, ZPolyMod> zdivmod_monic(const ZPolyMod& a, const ZPolyMod& b) {
  const Int& m = a.modulus;
  if (a.degree() < b.degree()) return {{{}, m}, a};
  std::vector<Int> r = a.c;
  const int db = b.degree();
  std::vector<Int> q(static_cast<std::size_t>(a.degree() - db) + 1, 0);
  for (int i = a.degree(); i >= db; --i) {
    Int t = mod(r[static_cast<std::size_t>(i)], m);
    if (t == 0) continue;
    q[static_cast<std::size_t>(i - db)] = t;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(i - db + j)] -= t * b.c[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  ZPolyMod qq{std::move(q), m}, rr{std::move(r), m};
  for (auto& x : rr.c) x = mod(x, m);
  qq.trim();
  rr.trim();
  return {qq, rr};
}

ZPolyMod with_modulus(ZPolyMod a, const Int& m) {
  a.modulus = m;
  for (auto& x : a.c) x = mod(x, m);
  a.trim();
  return a;
}

/// One quadratic step: f = g h mod m with s g + t h = 1 mod m, h monic; returns values mod m^2.
void hensel_step(const ZPolyMod& f, ZPolyMod& g, ZPolyMod& h, ZPolyMod& s, ZPolyMod& t, const Int& m2) {
  ZPolyMod F = with_modulus(f, m2);
  g = with_modulus(g, m2);
  h = with_modulus(h, m2);
  s = with_modulus(s, m2);
  t = with_modulus(t, m2);
  ZPolyMod e = zsub(F, zmul(g, h));
  auto [q, r] = zdivmod_monic(zmul(s, e), h);
  ZPolyMod g2 = zadd(g, zadd(zmul(t, e), zmul(q, g)));
  ZPolyMod h2 = zadd(h, r);
  ZPolyMod one{{Int(1)}, m2};
  ZPolyMod b = zsub(zadd(zmul(s, g2), zmul(t, h2)), one);
  auto [c, d] = zdivmod_monic(zmul(s, b), h2);
  s = zsub(s, d);
  t = zsub(t, zadd(zmul(t, b), zmul(c, g2)));
  g = g2;
  h = h2;
}

void lift_tree(const ZPolyMod& f, const std::vector<PolyModP>& factors, std::size_t lo, std::size_t hi,
               std::uint64_t p, unsigned k, std::vector<ZPolyMod>& out) {
  const Int pk = pow_int(Int(static_cast<unsigned long>(p)), k);
  if (hi - lo == 1) {
    out.push_back(with_modulus(f, pk));
    return;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  PolyModP gp = PolyModP::constant(p, 1), hp = PolyModP::constant(p, 1);
  for (std::size_t i = lo; i < mid; ++i) gp = gp * factors[i];
  for (std::size_t i = mid; i < hi; ++i) hp = hp * factors[i];
  // Bezout coefficients over F_p via the extended Euclidean algorithm.
  PolyModP r0 = gp, r1 = hp;
  PolyModP s0 = PolyModP::constant(p, 1), s1(p, {});
  PolyModP t0(p, {}), t1 = PolyModP::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = r1;
    r1 = r;
    PolyModP s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    PolyModP t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0.degree() != 0) throw NotCoprime("hensel_lift: factors not coprime mod p");
  std::uint64_t inv = invmod64(r0[0], p);
  s0 = s0.scale(inv);
  t0 = t0.scale(inv);

  Int pp(static_cast<unsigned long>(p));
  ZPolyMod g = ZPolyMod::from_modp(gp, pp), h = ZPolyMod::from_modp(hp, pp);
  ZPolyMod s = ZPolyMod::from_modp(s0, pp), t = ZPolyMod::from_modp(t0, pp);
  unsigned cur = 1;
  while (cur < k) {
    unsigned next = std::min(2 * cur, k);
    Int m2 = pow_int(pp, next);
    hensel_step(f, g, h, s, t, m2);
    cur = next;
  }
  g = with_modulus(g, pk);
  h = with_modulus(h, pk);
  lift_tree(g, factors, lo, mid, p, k, out);
  lift_tree(h, factors, mid, hi, p, k, out);
}

}  // namespace

std::vector<ZPolyMod> hensel_lift(const std::vector<Int>& f, const std::vector<PolyModP>& factors,
                                  std::uint64_t p, unsigned k) {
  if (factors.empty()) throw Error("hensel_lift: no factors");
  const Int pk = pow_int(Int(static_cast<unsigned long>(p)), k);
  Int lc = f.back();
  auto inv = inv_mod(lc, pk);
  if (!inv) throw NotCoprime("hensel_lift: p divides the leading coefficient");
  std::vector<Int> fm;
  for (const auto& c : f) fm.push_back(mod(c * *inv, pk));
  ZPolyMod F = ZPolyMod::from_ints(fm, pk);
  std::vector<PolyModP> monic;
  for (const auto& g : factors) monic.push_back(g.monic());
  std::vector<ZPolyMod> out;
  lift_tree(F, monic, 0, monic.size(), p, k, out);
  return out;
}

std::vector<ZPolyMod> hensel_lift(const PolyQ& f, const std::vector<PolyModP>& factors, std::uint64_t p,
                                  unsigned k) {
  if (!is_integral(f)) throw Error("hensel_lift: polynomial must have integer coefficients");
  std::vector<Int> v;
  for (const auto& c : f.coeffs()) v.push_back(c.get_num());
  return hensel_lift(v, factors, p, k);
}

namespace {

/// Exact division test of integer polynomials; returns quotient when b | a.
std::optional<std::vector<Int>> exact_divide(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (b.size() > a.size()) return std::nullopt;
  std::vector<Int> r = a;
  std::vector<Int> q(a.size() - b.size() + 1, 0);
  const Int& lb = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::size_t i = k + b.size() - 1;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Int c = r[i] / lb;
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
  }
  for (const auto& x : r)
    if (x != 0) return std::nullopt;
  return q;
}

std::vector<Int> primitive_ints(std::vector<Int> v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g != 0)
    for (auto& x : v) x /= g;
  if (!v.empty() && v.back() < 0)
    for (auto& x : v) x = -x;
  return v;
}

/// Factor a primitive squarefree integer polynomial of degree >= 1.
std::vector<std::vector<Int>> zassenhaus(const std::vector<Int>& f, Rng& rng) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n == 1) return {f};
  const Int& lc = f.back();
  PolyQ fq = polyq_from_ints(f);
  Rat disc = discriminant(fq);

  // Pick the prime with the fewest modular factors among a handful of good primes.
  std::uint64_t best_p = 0;
  std::vector<PolyModP> best;
  int tried = 0;
  for (std::uint64_t p = 3; tried < 6; p = to_u64(next_prime(Int(static_cast<unsigned long>(p))))) {
    if (mpz_divisible_ui_p(lc.get_mpz_t(), p)) continue;
    if (mpz_divisible_ui_p(disc.get_num_mpz_t(), p)) continue;
    PolyModP fp = PolyModP::reduce(fq, p);
    auto facs = factor_mod_p(fp, rng);
    ++tried;
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best.clear();
      for (auto& fa : facs) best.push_back(fa.factor);
    }
    if (best.size() == 1) break;
  }
  if (best.size() == 1) return {f};

  // Landau-Mignotte style bound on factor coefficients (times lc).
  Int norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Int bound = (isqrt(norm2) + 1) * pow_int(Int(2), static_cast<unsigned long>(n)) * abs(lc);
  Int pp(static_cast<unsigned long>(best_p));
  unsigned k = 1;
  Int pk = pp;
  while (pk <= 2 * bound) {
    pk *= pp;
    ++k;
  }
  std::vector<ZPolyMod> lifted = hensel_lift(f, best, best_p, k);

  std::vector<std::vector<Int>> result;
  std::vector<Int> rest = f;
  std::vector<ZPolyMod> pool = lifted;
  long subsets = 0;
  std::size_t s = 1;
  while (2 * s <= pool.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      if (++subsets > kRecombinationSubsetCap) throw DegreeCapExceeded("Zassenhaus subset cap exceeded");
      ZPolyMod cand{{mod(Int(rest.back()), pk)}, pk};
      for (auto i : idx) cand = zmul(cand, pool[i]);
      std::vector<Int> g = primitive_ints(cand.symmetric());
      if (auto q = exact_divide(rest, g)) {
        result.push_back(g);
        rest = primitive_ints(*q);
        std::vector<ZPolyMod> next;
        for (std::size_t i = 0; i < pool.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) next.push_back(pool[i]);
        pool = std::move(next);
        found = true;
        break;
      }
      // next combination
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == pool.size() - s + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (rest.size() > 1) result.push_back(primitive_ints(rest));
  return result;
}

}  // namespace

FactorizationQ factor_over_q(const PolyQ& f, Rng& rng) {
  if (f.is_zero()) throw ZeroPolynomial("factor_over_q of zero");
  if (f.degree() > kFactorDegreeCap) throw DegreeCapExceeded("degree " + std::to_string(f.degree()));
  FactorizationQ out;
  out.unit = f.lead();
  if (f.degree() == 0) return out;
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (auto& g : zassenhaus(primitive_part(part), rng)) {
      PolyQ gq = polyq_from_ints(g);
      out.factors.push_back({gq, mult});
      out.unit /= pow_rat(gq.lead(), mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const FactorQ& a, const FactorQ& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    for (int i = a.factor.degree(); i >= 0; --i) {
      const Rat &x = a.factor[static_cast<std::size_t>(i)], &y = b.factor[static_cast<std::size_t>(i)];
      if (x != y) return x < y;
    }
    return false;
  });
  return out;
}

FactorizationQ factor_over_q(const PolyQ& f) {
  Rng rng(kDefaultSeed);
  return factor_over_q(f, rng);
}

bool is_irreducible_q(const PolyQ& f) {
  if (f.degree() < 1) return false;
  auto fac = factor_over_q(f);
  return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

}  // namespace ectors
