#include "ectors/finite_field.hpp"

#include <sstream>

namespace ectors {

namespace {

using Coeffs = std::array<std::uint64_t, kMaxFqDegree>;

Coeffs mul_coeffs(const FqField::Data& F, const Coeffs& a, const Coeffs& b) {
  const int k = F.k;
  const std::uint64_t p = F.p;
  if (k == 1) return Coeffs{mulmod64(a[0], b[0], p)};
  std::array<std::uint64_t, 2 * kMaxFqDegree - 1> prod{};
  for (int i = 0; i < k; ++i) {
    if (a[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < k; ++j) {
      auto& s = prod[static_cast<std::size_t>(i + j)];
      s = (s + mulmod64(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)], p)) % p;
    }
  }
  // reduce by the monic modulus
  const auto& g = F.modulus;
  for (int i = 2 * k - 2; i >= k; --i) {
    std::uint64_t t = prod[static_cast<std::size_t>(i)];
    if (t == 0) continue;
    prod[static_cast<std::size_t>(i)] = 0;
    for (int j = 0; j < k; ++j) {
      auto& s = prod[static_cast<std::size_t>(i - k + j)];
      s = (s + p - mulmod64(t, g[static_cast<std::size_t>(j)], p)) % p;
    }
  }
  Coeffs out{};
  for (int i = 0; i < k; ++i) out[static_cast<std::size_t>(i)] = prod[static_cast<std::size_t>(i)];
  return out;
}

}  // namespace

FqField::FqField(const PolyModP& g, std::uint64_t seed) {
  const int k = g.degree();
  if (k < 1 || k > kMaxFqDegree) throw Error("FqField: degree must be in 1..6");
  if (g.modulus() % 2 == 0) throw Error("FqField: characteristic must be odd");
  auto d = std::make_shared<Data>();
  d->p = g.modulus();
  d->k = k;
  d->modulus = g.monic();
  d->q = pow_int(Int(static_cast<unsigned long>(d->p)), static_cast<unsigned long>(k));
  d_ = d;
  // deterministic non-residue search
  Rng rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, d->p - 1);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Coeffs c{};
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = dist(rng);
    FqElem x(d_, c);
    if (x.is_zero()) continue;
    if (!fq_is_square(x)) {
      d->nonresidue = c;
      return;
    }
  }
  throw InternalError("FqField: no non-residue found");
}

FqField FqField::prime(std::uint64_t p) { return FqField(PolyModP(p, {0, 1})); }

std::uint64_t FqField::enumerable_size() const {
  if (d_->q > Int(static_cast<unsigned long>(kFqEnumerationCap)))
    throw CapExceeded("field size " + d_->q.get_str() + " exceeds enumeration cap");
  return d_->q.get_ui();
}

FqElem FqField::zero() const { return FqElem(d_, Coeffs{}); }
FqElem FqField::one() const { return FqElem(d_, Coeffs{1}); }

FqElem FqField::from_int(long v) const {
  long r = v % static_cast<long>(d_->p);
  if (r < 0) r += static_cast<long>(d_->p);
  return FqElem(d_, Coeffs{static_cast<std::uint64_t>(r)});
}

FqElem FqField::from_int(const Int& v) const {
  return FqElem(d_, Coeffs{to_u64(mod(v, Int(static_cast<unsigned long>(d_->p))))});
}

FqElem FqField::gen() const {
  if (d_->k == 1) return FqElem(d_, Coeffs{(d_->p - d_->modulus[0]) % d_->p});
  Coeffs c{};
  c[1] = 1;
  return FqElem(d_, c);
}

FqElem FqField::element(std::uint64_t i) const {
  Coeffs c{};
  for (int j = 0; j < d_->k; ++j) {
    c[static_cast<std::size_t>(j)] = i % d_->p;
    i /= d_->p;
  }
  return FqElem(d_, c);
}

FqElem FqField::from_poly(const PolyModP& f) const {
  PolyModP r = f % d_->modulus;
  Coeffs c{};
  for (int j = 0; j <= r.degree(); ++j) c[static_cast<std::size_t>(j)] = r[static_cast<std::size_t>(j)];
  return FqElem(d_, c);
}

FqElem FqField::from_coeffs(const std::array<std::uint64_t, kMaxFqDegree>& c) const {
  Coeffs r{};
  for (int j = 0; j < d_->k; ++j) r[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j)] % d_->p;
  return FqElem(d_, r);
}

bool FqField::operator==(const FqField& o) const {
  return d_ == o.d_ || (d_->p == o.d_->p && d_->modulus == o.d_->modulus);
}

bool FqElem::is_zero() const {
  for (auto x : c_)
    if (x != 0) return false;
  return true;
}

std::uint64_t FqElem::index() const {
  std::uint64_t r = 0;
  for (int j = f_->k; j-- > 0;) r = r * f_->p + c_[static_cast<std::size_t>(j)];
  return r;
}

FqElem operator+(const FqElem& a, const FqElem& b) {
  const std::uint64_t p = a.f_->p;
  Coeffs c{};
  for (int i = 0; i < a.f_->k; ++i) {
    auto s = a.c_[static_cast<std::size_t>(i)] + b.c_[static_cast<std::size_t>(i)];
    c[static_cast<std::size_t>(i)] = s >= p ? s - p : s;
  }
  return FqElem(a.f_, c);
}

FqElem operator-(const FqElem& a, const FqElem& b) {
  const std::uint64_t p = a.f_->p;
  Coeffs c{};
  for (int i = 0; i < a.f_->k; ++i) {
    auto x = a.c_[static_cast<std::size_t>(i)], y = b.c_[static_cast<std::size_t>(i)];
    c[static_cast<std::size_t>(i)] = x >= y ? x - y : x + p - y;
  }
  return FqElem(a.f_, c);
}

FqElem FqElem::operator-() const {
  Coeffs c{};
  for (int i = 0; i < f_->k; ++i) {
    auto x = c_[static_cast<std::size_t>(i)];
    c[static_cast<std::size_t>(i)] = x == 0 ? 0 : f_->p - x;
  }
  return FqElem(f_, c);
}

FqElem operator*(const FqElem& a, const FqElem& b) { return FqElem(a.f_, mul_coeffs(*a.f_, a.c_, b.c_)); }

FqElem operator/(const FqElem& a, const FqElem& b) { return a * b.inv(); }

bool FqElem::operator==(const FqElem& o) const { return c_ == o.c_; }

FqElem FqElem::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in F_q");
  const std::uint64_t p = f_->p;
  if (f_->k == 1) return FqElem(f_, Coeffs{invmod64(c_[0], p)});
  // extended Euclid against the modulus
  std::vector<std::uint64_t> v(c_.begin(), c_.begin() + f_->k);
  PolyModP r0 = f_->modulus, r1(p, v);
  PolyModP s0(p, {}), s1 = PolyModP::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = r1;
    r1 = r;
    PolyModP s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  PolyModP inv = s0.scale(invmod64(r0[0], p));
  return FqField(f_).from_poly(inv);
}

FqElem FqElem::pow(const Int& e) const {
  if (e < 0) return inv().pow(-e);
  FqElem r = FqField(f_).one();
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = r * r;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = r * *this;
  }
  return r;
}

std::string FqElem::str() const {
  if (f_->k == 1) return std::to_string(c_[0]);
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < f_->k; ++i) os << (i ? "," : "") << c_[static_cast<std::size_t>(i)];
  os << "]";
  return os.str();
}

bool fq_is_square(const FqElem& x) {
  if (x.is_zero()) return true;
  const Int& q = x.parent()->q;
  return x.pow((q - 1) / 2) == x.field().one();
}

std::optional<FqElem> fq_sqrt(const FqElem& x) {
  if (x.is_zero()) return x;
  if (!fq_is_square(x)) return std::nullopt;
  const auto& F = *x.parent();
  FqField field = x.field();
  Int t = F.q - 1;
  unsigned s = 0;
  while (mpz_even_p(t.get_mpz_t())) {
    t /= 2;
    ++s;
  }
  FqElem z = field.from_coeffs(F.nonresidue);
  FqElem c = z.pow(t);
  FqElem r = x.pow((t + 1) / 2);
  FqElem u = x.pow(t);
  unsigned m = s;
  const FqElem one = field.one();
  while (u != one) {
    unsigned i = 0;
    FqElem w = u;
    while (w != one) {
      w = w * w;
      ++i;
    }
    FqElem b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b;
    r = r * b;
    c = b * b;
    u = u * c;
    m = i;
  }
  return r;
}

FqElem from_rat_like(const FqElem& x, const Rat& v) {
  return x.field().element(rat_mod_p(v, x.parent()->p));
}

}  // namespace ectors
