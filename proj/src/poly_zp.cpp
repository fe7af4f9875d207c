#include "ectors/poly_zp.hpp"

#include <algorithm>
#include <sstream>

namespace ectors {

PolyModP::PolyModP(std::uint64_t p, std::vector<std::uint64_t> c) : p_(p), c_(std::move(c)) {
  for (auto& x : c_) x %= p_;
  trim();
}

void PolyModP::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyModP PolyModP::x_pow(std::uint64_t p, unsigned k) {
  std::vector<std::uint64_t> v(k + 1, 0);
  v[k] = 1;
  return PolyModP(p, std::move(v));
}

PolyModP PolyModP::constant(std::uint64_t p, std::uint64_t c) { return PolyModP(p, {c}); }

PolyModP PolyModP::reduce(const PolyQ& f, std::uint64_t p) {
  std::vector<std::uint64_t> v;
  v.reserve(f.size());
  for (const auto& c : f.coeffs()) v.push_back(rat_mod_p(c, p));
  return PolyModP(p, std::move(v));
}

std::uint64_t PolyModP::eval(std::uint64_t x) const {
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (mulmod64(acc, x, p_) + *it) % p_;
  return acc;
}

PolyModP PolyModP::monic() const {
  if (c_.empty() || c_.back() == 1) return *this;
  return scale(invmod64(c_.back(), p_));
}

PolyModP PolyModP::derivative() const {
  std::vector<std::uint64_t> v;
  for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(mulmod64(c_[i], i % p_, p_));
  return PolyModP(p_, std::move(v));
}

bool PolyModP::operator<(const PolyModP& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  return std::lexicographical_compare(c_.rbegin(), c_.rend(), o.c_.rbegin(), o.c_.rend());
}

PolyModP PolyModP::scale(std::uint64_t s) const {
  std::vector<std::uint64_t> v(c_);
  for (auto& x : v) x = mulmod64(x, s, p_);
  return PolyModP(p_, std::move(v));
}

PolyModP operator+(const PolyModP& a, const PolyModP& b) {
  std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (a[i] + b[i]) % a.p_;
  return PolyModP(a.p_, std::move(v));
}

PolyModP operator-(const PolyModP& a, const PolyModP& b) {
  std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (a[i] + a.p_ - b[i]) % a.p_;
  return PolyModP(a.p_, std::move(v));
}

PolyModP operator*(const PolyModP& a, const PolyModP& b) {
  if (a.is_zero() || b.is_zero()) return PolyModP(a.p_, {});
  const std::uint64_t p = a.p_;
  std::vector<unsigned __int128> acc(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      acc[i + j] += static_cast<unsigned __int128>(a.c_[i]) * b.c_[j];
      if ((j & 63U) == 63U) acc[i + j] %= p;
    }
  }
  std::vector<std::uint64_t> v(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) v[i] = static_cast<std::uint64_t>(acc[i] % p);
  return PolyModP(p, std::move(v));
}

std::string PolyModP::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << "] mod " << p_;
  return os.str();
}

std::pair<PolyModP, PolyModP> divmod(const PolyModP& a, const PolyModP& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero mod p");
  const std::uint64_t p = a.modulus();
  if (a.degree() < b.degree()) return {PolyModP(p, {}), a};
  std::vector<std::uint64_t> r = a.coeffs();
  const int db = b.degree();
  const std::uint64_t inv = invmod64(b.lead(), p);
  std::vector<std::uint64_t> q(static_cast<std::size_t>(a.degree() - db) + 1, 0);
  for (int i = a.degree(); i >= db; --i) {
    std::uint64_t t = r[static_cast<std::size_t>(i)];
    if (t == 0) continue;
    std::uint64_t c = mulmod64(t, inv, p);
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      auto& slot = r[static_cast<std::size_t>(i - db + j)];
      slot = (slot + p - mulmod64(c, b[static_cast<std::size_t>(j)], p)) % p;
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {PolyModP(p, std::move(q)), PolyModP(p, std::move(r))};
}

PolyModP operator%(const PolyModP& a, const PolyModP& b) { return divmod(a, b).second; }
PolyModP operator/(const PolyModP& a, const PolyModP& b) { return divmod(a, b).first; }

PolyModP gcd(PolyModP a, PolyModP b) {
  while (!b.is_zero()) {
    PolyModP r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolyModP powmod(PolyModP base, const Int& e, const PolyModP& m) {
  const std::uint64_t p = m.modulus();
  PolyModP r = PolyModP::constant(p, 1) % m;
  base = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = (r * r) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * base) % m;
  }
  return r;
}

bool is_squarefree(const PolyModP& f) {
  if (f.degree() <= 0) return true;
  PolyModP d = f.derivative();
  if (d.is_zero()) return false;
  return gcd(f, d).degree() == 0;
}

namespace {

/// p-th root of a polynomial whose derivative vanishes.
PolyModP pth_root(const PolyModP& f) {
  const std::uint64_t p = f.modulus();
  std::vector<std::uint64_t> v;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(f.coeffs()[i]);
  // coefficients are in F_p, where Frobenius is the identity
  return PolyModP(p, std::move(v));
}

void squarefree_split(const PolyModP& f, unsigned mult, std::vector<std::pair<PolyModP, unsigned>>& out) {
  // Musser / Yun over F_p with p-th root recursion.
  const std::uint64_t p = f.modulus();
  if (f.degree() <= 0) return;
  PolyModP d = f.derivative();
  if (d.is_zero()) {
    squarefree_split(pth_root(f), mult * static_cast<unsigned>(p), out);
    return;
  }
  PolyModP c = gcd(f, d);
  PolyModP w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    PolyModP y = gcd(w, c);
    PolyModP z = w / y;
    if (z.degree() > 0) out.emplace_back(z.monic(), i * mult);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) squarefree_split(pth_root(c), mult * static_cast<unsigned>(p), out);
}

void equal_degree_split(const PolyModP& f, int d, Rng& rng, std::vector<PolyModP>& out) {
  const std::uint64_t p = f.modulus();
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  Int q = pow_int(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(d));
  Int e = (q - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  for (;;) {
    std::vector<std::uint64_t> rc(static_cast<std::size_t>(f.degree()));
    for (auto& x : rc) x = dist(rng);
    PolyModP r(p, rc);
    if (r.degree() < 1) continue;
    PolyModP g = gcd(r, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(f / g, d, rng, out);
      return;
    }
    PolyModP h = powmod(r, e, f) - PolyModP::constant(p, 1);
    g = gcd(h, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<PolyModP, int>> distinct_degree_factor(const PolyModP& f_in) {
  const std::uint64_t p = f_in.modulus();
  std::vector<std::pair<PolyModP, int>> res;
  PolyModP f = f_in.monic();
  PolyModP x = PolyModP::x_pow(p, 1);
  PolyModP h = x;
  Int pp(static_cast<unsigned long>(p));
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(h, pp, f);
    PolyModP g = gcd(h - x, f);
    if (g.degree() > 0) {
      res.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) res.emplace_back(f, f.degree());
  return res;
}

std::vector<FactorModP> factor_mod_p(const PolyModP& f, Rng& rng) {
  if (f.is_zero()) throw ZeroPolynomial("factor_mod_p of zero");
  std::vector<std::pair<PolyModP, unsigned>> sqf;
  squarefree_split(f.monic(), 1, sqf);
  std::vector<FactorModP> out;
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : distinct_degree_factor(part)) {
      std::vector<PolyModP> pieces;
      equal_degree_split(block, d, rng, pieces);
      for (auto& piece : pieces) out.push_back({std::move(piece), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const FactorModP& a, const FactorModP& b) {
    if (a.factor != b.factor) return a.factor < b.factor;
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

std::vector<std::uint64_t> roots_mod_p(const PolyModP& f, Rng& rng) {
  const std::uint64_t p = f.modulus();
  std::vector<std::uint64_t> roots;
  if (f.degree() <= 0) return roots;
  PolyModP x = PolyModP::x_pow(p, 1);
  PolyModP lin = gcd(powmod(x, Int(static_cast<unsigned long>(p)), f.monic()) - x, f);
  if (lin.degree() <= 0) return roots;
  std::vector<PolyModP> pieces;
  equal_degree_split(lin, 1, rng, pieces);
  for (const auto& g : pieces) roots.push_back((p - g[0]) % p);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace ectors
