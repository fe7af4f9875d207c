#include "ectors/roots.hpp"

#include <algorithm>

namespace ectors {

PolyK to_polyk(const NumberField& K, const PolyQ& g) {
  std::vector<NfElem> c;
  for (const auto& x : g.coeffs()) c.push_back(K.from_rat(x));
  return PolyK(std::move(c));
}

namespace {

Int eval_mod(const std::vector<Int>& poly, const Int& x, const Int& M) {
  Int acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = mod(acc * x + poly[i], M);
  return acc;
}

std::vector<Int> derivative_ints(const std::vector<Int>& poly) {
  std::vector<Int> d;
  for (std::size_t i = 1; i < poly.size(); ++i) d.push_back(poly[i] * Int(static_cast<unsigned long>(i)));
  return d;
}

/// Newton lift of a simple root r mod p to a root mod p^e.
Int newton_lift(const std::vector<Int>& poly, Int r, const Int& p, unsigned e) {
  const std::vector<Int> dp = derivative_ints(poly);
  unsigned cur = 1;
  while (cur < e) {
    cur = std::min(2 * cur, e);
    Int M = pow_int(p, cur);
    auto inv = inv_mod(eval_mod(dp, r, M), M);
    if (!inv) throw InternalError("Newton lift hit a multiple root");
    r = mod(r - eval_mod(poly, r, M) * *inv, M);
  }
  return r;
}

/// Component polynomial: coefficients of h (Z[a]-coordinates) evaluated at the root rho.
std::vector<Int> component_poly(const std::vector<std::vector<Int>>& h, const Int& rho, const Int& M) {
  std::vector<Int> out;
  for (const auto& c : h) out.push_back(eval_mod(c, rho, M));
  return out;
}

/// ceil(x^(1/k)) for x >= 0
Int ceil_root(const Int& x, unsigned k) {
  Int r;
  mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
  if (pow_int(r, k) < x) r += 1;
  return r;
}

struct SplitChoice {
  std::uint64_t p = 0;
  std::vector<std::uint64_t> field_roots;            // roots of f mod p
  std::vector<std::vector<std::uint64_t>> comp_roots;  // roots of h at each component
  long double tuples = 0;
};

}  // namespace

std::vector<NfElem> roots_in_field(const PolyK& g_in, const KRootFinderConfig& cfg) {
  if (g_in.is_zero()) throw ZeroPolynomial("roots_in_field of zero");
  if (g_in.degree() > cfg.degree_cap) throw DegreeCapExceeded("roots_in_field degree " + std::to_string(g_in.degree()));
  if (g_in.degree() < 1) return {};
  const NumberField K = g_in.lead().field();
  const std::size_t d = static_cast<std::size_t>(K.degree());

  PolyK g = g_in;
  if (g.degree() > 1) g = g / gcd(g, g.derivative());
  g = g.monic();
  const int n = g.degree();
  if (n == 1) return {-g[0]};

  // x = y / D makes h(y) = D^n g(y / D) monic with coefficients in Z[a]
  Int D = 1;
  for (const auto& c : g.coeffs()) D = lcm(D, c.denominator());
  std::vector<std::vector<Int>> h(static_cast<std::size_t>(n) + 1);
  {
    Int Dpow = 1;
    for (int i = n; i >= 0; --i) {
      const NfElem& c = g[static_cast<std::size_t>(i)];
      for (std::size_t j = 0; j < d; ++j) h[static_cast<std::size_t>(i)].push_back(Rat(c.coord(static_cast<int>(j)) * Dpow).get_num());
      Dpow *= D;
    }
  }

  // height bounds
  const PolyQ& f = K.poly();
  const Int R = max_abs_coeff(f) + 1;  // every conjugate of a has |.| < R
  Int By = 0;                          // Fujiwara bound on |y| over all embeddings
  for (int i = 0; i < n; ++i) {
    Int s = 0;
    Int Rj = 1;
    for (std::size_t j = 0; j < d; ++j) {
      s += abs(h[static_cast<std::size_t>(i)][j]) * Rj;
      Rj *= R;
    }
    Int b = ceil_root(s, static_cast<unsigned>(n - i));
    if (b > By) By = b;
  }
  By = 2 * By + 1;
  const Int disc = K.poly_discriminant();
  const Int den_bound = std::max(Int(1), isqrt(abs(disc)));
  Int dd(static_cast<unsigned long>(d));
  Int coord_bound = dd * By * ceil_root(pow_int(dd, static_cast<unsigned long>(d)), 2) *
                    pow_int(R, static_cast<unsigned long>((d - 1) * (d - 1)));
  const Int num_bound = den_bound * coord_bound;
  const Int need = 2 * num_bound * den_bound;

  // split prime selection
  Rng rng(kDefaultSeed);
  SplitChoice best;
  int found = 0;
  for (std::uint64_t p = 3; p <= cfg.split_prime_search_bound && found < cfg.prime_candidates;
       p = to_u64(next_prime(Int(static_cast<unsigned long>(p))))) {
    if (mpz_divisible_ui_p(disc.get_mpz_t(), p)) continue;
    PolyModP fp = PolyModP::reduce(f, p);
    auto froots = roots_mod_p(fp, rng);
    if (froots.size() != d) continue;
    SplitChoice c;
    c.p = p;
    c.field_roots = froots;
    c.tuples = 1;
    bool ok = true, empty = false;
    Int pp(static_cast<unsigned long>(p));
    for (auto r : froots) {
      std::vector<std::uint64_t> coeffs;
      for (auto& v : component_poly(h, Int(static_cast<unsigned long>(r)), pp)) coeffs.push_back(to_u64(v));
      PolyModP hp(p, coeffs);
      if (!is_squarefree(hp)) {
        ok = false;
        break;
      }
      auto rr = roots_mod_p(hp, rng);
      if (rr.empty()) empty = true;
      c.tuples *= static_cast<long double>(rr.size());
      c.comp_roots.push_back(rr);
    }
    if (!ok) continue;
    if (empty) return {};  // some residue component has no root, so K has none
    ++found;
    if (best.p == 0 || c.tuples < best.tuples) best = c;
  }
  if (best.p == 0) throw NoSplitPrime("no usable totally split prime below " + std::to_string(cfg.split_prime_search_bound));
  if (best.tuples > static_cast<long double>(cfg.tuple_cap))
    throw TupleCapExceeded("candidate tuples exceed cap");

  const Int P(static_cast<unsigned long>(best.p));
  unsigned e = 1;
  Int M = P;
  while (M <= need) {
    M *= P;
    ++e;
  }
  if (e > (1U << cfg.precision_doubling_limit)) throw DegreeCapExceeded("p-adic precision cap exceeded");

  std::vector<Int> fints;
  for (const auto& c : f.coeffs()) fints.push_back(c.get_num());
  std::vector<Int> rho;
  for (auto r : best.field_roots) rho.push_back(newton_lift(fints, Int(static_cast<unsigned long>(r)), P, e));
  std::vector<std::vector<Int>> lifted(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Int> hi = component_poly(h, rho[i], M);
    for (auto r : best.comp_roots[i]) lifted[i].push_back(newton_lift(hi, Int(static_cast<unsigned long>(r)), P, e));
  }

  // W = V^{-1} mod M where V[i][j] = rho_i^j
  std::vector<std::vector<Int>> A(d, std::vector<Int>(2 * d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    Int x = 1;
    for (std::size_t j = 0; j < d; ++j) {
      A[i][j] = x;
      x = mod(x * rho[i], M);
    }
    A[i][d + i] = 1;
  }
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = c;
    std::optional<Int> inv;
    for (; piv < d; ++piv)
      if ((inv = inv_mod(A[piv][c], M))) break;
    if (piv == d) throw InternalError("Vandermonde matrix singular mod p");
    std::swap(A[piv], A[c]);
    for (auto& x : A[c]) x = mod(x * *inv, M);
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || A[r][c] == 0) continue;
      Int k = A[r][c];
      for (std::size_t j = 0; j < 2 * d; ++j) A[r][j] = mod(A[r][j] - k * A[c][j], M);
    }
  }
  // coordinate j of the root = sum_i W[j][i] * y_i, W = V^{-1}
  auto W = [&](std::size_t j, std::size_t i) -> const Int& { return A[j][d + i]; };

  std::vector<NfElem> roots;
  std::vector<std::vector<bool>> used(d);
  for (std::size_t i = 0; i < d; ++i) used[i].assign(lifted[i].size(), false);
  std::vector<std::size_t> idx(d, 0);
  std::uint64_t visited = 0;
  const NfElem Dinv = K.from_rat(make_rat(1, D));
  for (;;) {
    bool fresh = true;
    for (std::size_t i = 0; i < d; ++i)
      if (used[i][idx[i]]) fresh = false;
    if (fresh) {
      if (++visited > cfg.tuple_cap) throw TupleCapExceeded("candidate tuples exceed cap");
      std::vector<Rat> coords;
      bool ok = true;
      for (std::size_t j = 0; j < d && ok; ++j) {
        Int s = 0;
        for (std::size_t i = 0; i < d; ++i) s += W(j, i) * lifted[i][idx[i]];
        auto q = rational_reconstruction(mod(s, M), M, num_bound, den_bound);
        if (!q) ok = false;
        else coords.push_back(*q);
      }
      if (ok) {
        NfElem y = K.from_coords(coords);
        NfElem x = y * Dinv;
        if (g.eval(x).is_zero()) {
          roots.push_back(x);
          for (std::size_t i = 0; i < d; ++i) used[i][idx[i]] = true;
          if (static_cast<int>(roots.size()) == n) break;
        }
      }
    }
    std::size_t k = 0;
    while (k < d && ++idx[k] == lifted[k].size()) idx[k++] = 0;
    if (k == d) break;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<NfElem> roots_in_field(const NumberField& K, const PolyQ& g, const KRootFinderConfig& cfg) {
  return roots_in_field(to_polyk(K, g), cfg);
}

std::vector<NfElem> sqrt_in_field(const NfElem& x) {
  NumberField K = x.field();
  if (x.is_zero()) return {x};
  PolyK g({-x, K.zero(), K.one()});
  return roots_in_field(g);
}

bool contains_root(const NumberField& K, const PolyQ& g) {
  if (g.is_zero()) throw ZeroPolynomial("contains_root of zero");
  return !roots_in_field(K, g).empty();
}

std::optional<NfElem> root_of_unity(const NumberField& K, int m) {
  if (m <= 2) return K.from_int(m == 1 ? 1 : -1);
  auto r = roots_in_field(K, cyclotomic_poly(m));
  if (r.empty()) return std::nullopt;
  return r.front();
}

}  // namespace ectors
