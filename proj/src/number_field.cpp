#include "ectors/number_field.hpp"

#include "ectors/factor.hpp"

namespace ectors {

using RatMatrix = std::vector<std::vector<Rat>>;

NumberField::NumberField(const PolyQ& f, std::string label) {
  if (f.degree() < 1) throw Error("number field needs a polynomial of degree >= 1");
  if (f.degree() > kMaxFieldDegree) throw DegreeCapExceeded("field degree " + std::to_string(f.degree()));
  if (f.lead() != 1) throw NonMonic(to_string(f));
  if (!is_integral(f)) throw NonIntegral(to_string(f));
  if (f.degree() > 1) {
    auto fac = factor_over_q(f);
    if (fac.factors.size() != 1 || fac.factors[0].multiplicity != 1) {
      std::string parts;
      for (const auto& [g, m] : fac.factors)
        parts += (parts.empty() ? "" : " * ") + std::string("(") + to_string(g) + ")" +
                 (m > 1 ? "^" + std::to_string(m) : "");
      throw Reducible(to_string(f) + " = " + parts);
    }
  }
  auto d = std::make_shared<Data>();
  d->f = f;
  d->d = f.degree();
  d->label = std::move(label);
  d->poly_disc = discriminant(f).get_num();
  const std::size_t n = static_cast<std::size_t>(d->d);
  // a^d = -(f_0 + ... + f_{d-1} a^{d-1})
  std::vector<Rat> cur(n);
  for (std::size_t i = 0; i < n; ++i) cur[i] = -f[i];
  for (std::size_t k = 0; k + 1 < n; ++k) {
    d->high_powers.push_back(cur);
    std::vector<Rat> next(n, Rat(0));
    for (std::size_t i = 0; i + 1 < n; ++i) next[i + 1] = cur[i];
    for (std::size_t i = 0; i < n; ++i) next[i] -= cur[n - 1] * f[i];
    cur = next;
  }
  if (n == 1) d->high_powers.clear();
  d_ = d;
}

NumberField NumberField::rationals() { return NumberField(PolyQ({Rat(0), Rat(1)}), "Q"); }

NfElem NumberField::zero() const {
  return NfElem(d_, std::vector<Rat>(static_cast<std::size_t>(d_->d), Rat(0)));
}

NfElem NumberField::one() const { return from_int(1); }

NfElem NumberField::gen() const {
  if (d_->d == 1) return from_rat(-d_->f[0]);
  std::vector<Rat> c(static_cast<std::size_t>(d_->d), Rat(0));
  c[1] = 1;
  return NfElem(d_, std::move(c));
}

NfElem NumberField::from_int(long v) const { return from_rat(Rat(v)); }

NfElem NumberField::from_rat(const Rat& v) const {
  std::vector<Rat> c(static_cast<std::size_t>(d_->d), Rat(0));
  c[0] = v;
  return NfElem(d_, std::move(c));
}

NfElem NumberField::from_poly(const PolyQ& g) const {
  PolyQ r = g.degree() >= d_->d ? g % d_->f : g;
  std::vector<Rat> c(static_cast<std::size_t>(d_->d), Rat(0));
  for (int i = 0; i <= r.degree(); ++i) c[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(i)];
  return NfElem(d_, std::move(c));
}

NfElem NumberField::from_coords(std::vector<Rat> c) const {
  if (c.size() != static_cast<std::size_t>(d_->d)) throw Error("from_coords: wrong number of coordinates");
  return NfElem(d_, std::move(c));
}

NfElem NumberField::parse(const std::string& text) const { return from_poly(parse_polyq(text, 'a')); }

bool NumberField::operator==(const NumberField& o) const { return d_ == o.d_ || d_->f == o.d_->f; }

namespace {

void check_parent(const NfElem& a, const NfElem& b) {
  if (a.parent() != b.parent() && a.parent()->f != b.parent()->f)
    throw ParentMismatch("elements of different number fields");
}

}  // namespace

bool NfElem::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool NfElem::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

Int NfElem::denominator() const {
  Int d = 1;
  for (const auto& x : c_) d = lcm(d, x.get_den());
  return d;
}

NfElem operator+(const NfElem& a, const NfElem& b) {
  check_parent(a, b);
  std::vector<Rat> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
  return NfElem(a.f_, std::move(c));
}

NfElem operator-(const NfElem& a, const NfElem& b) {
  check_parent(a, b);
  std::vector<Rat> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] - b.c_[i];
  return NfElem(a.f_, std::move(c));
}

NfElem NfElem::operator-() const {
  std::vector<Rat> c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -c_[i];
  return NfElem(f_, std::move(c));
}

NfElem operator*(const NfElem& a, const NfElem& b) {
  check_parent(a, b);
  const std::size_t n = a.c_.size();
  if (n == 1) return NfElem(a.f_, {a.c_[0] * b.c_[0]});
  std::vector<Rat> prod(2 * n - 1, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(b.c_[j]) != 0) prod[i + j] += a.c_[i] * b.c_[j];
  }
  std::vector<Rat> out(prod.begin(), prod.begin() + static_cast<long>(n));
  for (std::size_t k = n; k < 2 * n - 1; ++k) {
    if (sgn(prod[k]) == 0) continue;
    const auto& hp = a.f_->high_powers[k - n];
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(hp[i]) != 0) out[i] += prod[k] * hp[i];
  }
  return NfElem(a.f_, std::move(out));
}

NfElem operator/(const NfElem& a, const NfElem& b) { return a * b.inv(); }

bool NfElem::operator==(const NfElem& o) const {
  check_parent(*this, o);
  return c_ == o.c_;
}

bool NfElem::operator<(const NfElem& o) const {
  for (std::size_t i = c_.size(); i-- > 0;)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

NfElem NfElem::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in a number field");
  if (c_.size() == 1) return NfElem(f_, {1 / c_[0]});
  auto [g, s, t] = xgcd(to_poly(), f_->f, Rat(0));
  if (g.degree() != 0) throw InternalError("non-invertible element in a field");
  return field().from_poly(s);
}

NfElem NfElem::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  NfElem r = field().one(), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

NfElem NfElem::scale(const Rat& s) const {
  std::vector<Rat> c(c_);
  for (auto& x : c) x *= s;
  return NfElem(f_, std::move(c));
}

std::string NfElem::str() const { return to_string(to_poly(), 'a'); }

NfElem nf_add(const NfElem& x, const NfElem& y) { return x + y; }
NfElem nf_mul(const NfElem& x, const NfElem& y) { return x * y; }
NfElem nf_inv(const NfElem& x) { return x.inv(); }

RatMatrix nf_mul_matrix(const NfElem& x) {
  const int d = x.field().degree();
  RatMatrix m(static_cast<std::size_t>(d), std::vector<Rat>(static_cast<std::size_t>(d)));
  NfElem col = x;
  NfElem a = x.field().gen();
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col.coord(i);
    if (j + 1 < d) col = col * a;
  }
  return m;
}

PolyQ char_poly(const RatMatrix& A) {
  // Faddeev-LeVerrier
  const std::size_t n = A.size();
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  RatMatrix M(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix AM(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (sgn(A[i][l]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) AM[i][j] += A[i][l] * M[l][j];
      }
    for (std::size_t i = 0; i < n; ++i) AM[i][i] += c[n - k + 1];
    M = AM;
    Rat tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += A[i][l] * M[l][i];
    c[n - k] = -tr / Rat(static_cast<long>(k));
  }
  return PolyQ(c);
}

PolyQ nf_char_poly(const NfElem& x) { return char_poly(nf_mul_matrix(x)); }

PolyQ nf_min_poly(const NfElem& x) {
  // the characteristic polynomial is a power of the minimal polynomial
  return squarefree_part(nf_char_poly(x));
}

Rat nf_norm(const NfElem& x) {
  if (x.is_zero()) return Rat(0);
  PolyQ rep = x.to_poly();
  if (rep.degree() == 0) return pow_rat(rep[0], static_cast<unsigned long>(x.field().degree()));
  return resultant(x.field().poly(), rep);
}

Rat nf_trace(const NfElem& x) {
  auto m = nf_mul_matrix(x);
  Rat t = 0;
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

PrimeSplitting split_prime(const NumberField& K, std::uint64_t p) {
  PrimeSplitting s;
  s.p = p;
  s.usable = (p % 2 == 1) && !mpz_divisible_ui_p(K.poly_discriminant().get_mpz_t(), p);
  Rng rng(kDefaultSeed ^ p);
  for (auto& fa : factor_mod_p(PolyModP::reduce(K.poly(), p), rng))
    s.factors.push_back({fa.factor, fa.factor.degree(), fa.multiplicity});
  return s;
}

bool is_totally_split(const PrimeSplitting& s, int d) {
  if (static_cast<int>(s.factors.size()) != d) return false;
  for (const auto& f : s.factors)
    if (f.residue_degree != 1 || f.exponent != 1) return false;
  return true;
}

FqField residue_field(const PrimeSplitting& s, std::size_t i) { return FqField(s.factors.at(i).g); }

FqElem residue_map(const NfElem& x, const FqField& F) {
  const std::uint64_t p = F.p();
  std::vector<std::uint64_t> v;
  v.reserve(x.coords().size());
  for (const auto& c : x.coords()) {
    if (mpz_divisible_ui_p(c.get_den().get_mpz_t(), p)) throw DenominatorAtP(x.str() + " at p=" + std::to_string(p));
    v.push_back(rat_mod_p(c, p));
  }
  return F.from_poly(PolyModP(p, std::move(v)));
}

FqElem residue_map(const NfElem& x, const PrimeSplitting& s, std::size_t i) {
  if (!s.usable) throw Error("residue_map at an unusable prime");
  return residue_map(x, residue_field(s, i));
}

namespace {

PolyQ lift_modp(const PolyModP& g) {
  std::vector<Rat> c;
  for (auto x : g.coeffs()) c.emplace_back(static_cast<unsigned long>(x));
  return PolyQ(c);
}

/// Row-reduced basis (mod p) of the left kernel of M (rows x cols): vectors v with v M = 0.
std::vector<std::vector<std::uint64_t>> left_kernel_mod_p(const std::vector<std::vector<std::uint64_t>>& M,
                                                          std::uint64_t p) {
  const std::size_t rows = M.size();
  const std::size_t cols = rows ? M[0].size() : 0;
  // augment [M | I] and reduce; zero rows of the left part give kernel vectors
  std::vector<std::vector<std::uint64_t>> A(rows, std::vector<std::uint64_t>(cols + rows, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) A[i][j] = M[i][j] % p;
    A[i][cols + i] = 1;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && A[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[r]);
    std::uint64_t inv = invmod64(A[r][c], p);
    for (auto& x : A[r]) x = mulmod64(x, inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      std::uint64_t k = A[i][c];
      for (std::size_t j = 0; j < cols + rows; ++j) A[i][j] = (A[i][j] + p - mulmod64(k, A[r][j], p)) % p;
    }
    ++r;
  }
  std::vector<std::vector<std::uint64_t>> ker;
  for (std::size_t i = r; i < rows; ++i) ker.emplace_back(A[i].begin() + static_cast<long>(cols), A[i].end());
  return ker;
}

/// Reduced row echelon form mod p; returns (rows, pivot columns).
std::pair<std::vector<std::vector<std::uint64_t>>, std::vector<std::size_t>> rref_mod_p(
    std::vector<std::vector<std::uint64_t>> A, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  if (A.empty()) return {A, pivots};
  const std::size_t rows = A.size(), cols = A[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && A[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[r]);
    std::uint64_t inv = invmod64(A[r][c], p);
    for (auto& x : A[r]) x = mulmod64(x, inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      std::uint64_t k = A[i][c];
      for (std::size_t j = 0; j < cols; ++j) A[i][j] = (A[i][j] + p - mulmod64(k, A[r][j], p)) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  A.resize(r);
  return {A, pivots};
}

/// Integer basis (rows) of the lattice pZ^d + lift(span of vs).
std::vector<std::vector<Int>> lattice_with_p(const std::vector<std::vector<std::uint64_t>>& vs, std::size_t d,
                                             std::uint64_t p) {
  auto [rows, pivots] = rref_mod_p(vs, p);
  std::vector<std::vector<Int>> basis;
  std::vector<bool> is_pivot(d, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (const auto& r : rows) {
    std::vector<Int> v;
    for (auto x : r) v.emplace_back(static_cast<unsigned long>(x));
    basis.push_back(v);
  }
  for (std::size_t j = 0; j < d; ++j)
    if (!is_pivot[j]) {
      std::vector<Int> v(d, 0);
      v[j] = Int(static_cast<unsigned long>(p));
      basis.push_back(v);
    }
  return basis;
}

RatMatrix mat_inverse(RatMatrix A) {
  const std::size_t n = A.size();
  RatMatrix I(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(A[piv][c]) == 0) ++piv;
    if (piv == n) throw InternalError("singular matrix");
    std::swap(A[piv], A[c]);
    std::swap(I[piv], I[c]);
    Rat inv = 1 / A[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      A[c][j] *= inv;
      I[c][j] *= inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(A[i][c]) == 0) continue;
      Rat k = A[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        A[i][j] -= k * A[c][j];
        I[i][j] -= k * I[c][j];
      }
    }
  }
  return I;
}

Rat mat_det(RatMatrix A) {
  const std::size_t n = A.size();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(A[piv][c]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(A[piv], A[c]);
      det = -det;
    }
    det *= A[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(A[i][c]) == 0) continue;
      Rat k = A[i][c] / A[c][c];
      for (std::size_t j = c; j < n; ++j) A[i][j] -= k * A[c][j];
    }
  }
  return det;
}

std::vector<Rat> vec_mat(const std::vector<Rat>& v, const RatMatrix& M) {
  std::vector<Rat> out(M[0].size(), Rat(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += v[i] * M[i][j];
  }
  return out;
}

std::uint64_t int_mod_p(const Rat& x, std::uint64_t p) {
  if (x.get_den() != 1) throw InternalError("expected an integral coordinate");
  return to_u64(mod(x.get_num(), Int(static_cast<unsigned long>(p))));
}

/// Structure constants of an order: table[i][j] = coordinates of w_i w_j in the order basis, mod p.
using Structure = std::vector<std::vector<std::vector<std::uint64_t>>>;

std::vector<std::uint64_t> struct_mul(const Structure& S, const std::vector<std::uint64_t>& x,
                                      const std::vector<std::uint64_t>& y, std::uint64_t p) {
  const std::size_t d = x.size();
  std::vector<std::uint64_t> out(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j] == 0) continue;
      std::uint64_t c = mulmod64(x[i], y[j], p);
      for (std::size_t k = 0; k < d; ++k) out[k] = (out[k] + mulmod64(c, S[i][j][k], p)) % p;
    }
  }
  return out;
}

}  // namespace

bool dedekind_p_maximal(const PolyQ& f, std::uint64_t p) {
  Int disc = discriminant(f).get_num();
  if (!mpz_divisible_ui_p(disc.get_mpz_t(), p)) return true;
  Rng rng(kDefaultSeed);
  auto facs = factor_mod_p(PolyModP::reduce(f, p), rng);
  PolyQ g = PolyQ::constant(Rat(1)), h = PolyQ::constant(Rat(1));
  PolyModP gp = PolyModP::constant(p, 1), hp = PolyModP::constant(p, 1);
  for (const auto& fa : facs) {
    PolyQ lift = lift_modp(fa.factor);
    g = g * lift;
    gp = gp * fa.factor;
    for (unsigned e = 1; e < fa.multiplicity; ++e) {
      h = h * lift;
      hp = hp * fa.factor;
    }
  }
  PolyQ F = (f - g * h) * PolyQ::constant(Rat(1, static_cast<unsigned long>(p)));
  PolyModP Fp = PolyModP::reduce(F, p);
  PolyModP common = gcd(gcd(Fp, gp), hp);
  return common.degree() <= 0;
}

Int OrderBasis::index() const {
  RatMatrix B;
  for (const auto& r : rows) {
    std::vector<Rat> v;
    for (const auto& x : r) v.push_back(make_rat(x, denominator));
    B.push_back(v);
  }
  Rat det = abs(mat_det(B));
  Rat idx = 1 / det;
  if (idx.get_den() != 1) throw InternalError("order index is not an integer");
  return idx.get_num();
}

bool OrderBasis::is_identity() const { return index() == 1; }

OrderBasis p_maximal_order(const PolyQ& f, std::uint64_t p) {
  if (p >= (1ULL << 62)) throw Error("p_maximal_order: prime too large");
  NumberField K(f);
  const std::size_t d = static_cast<std::size_t>(K.degree());
  RatMatrix B(d, std::vector<Rat>(d, Rat(0)));
  for (std::size_t i = 0; i < d; ++i) B[i][i] = 1;

  Int disc = K.poly_discriminant();
  const unsigned vdisc = static_cast<unsigned>(valuation(disc, Int(static_cast<unsigned long>(p))));
  const unsigned cap = vdisc / 2 + 1;

  for (unsigned round = 0; round <= cap; ++round) {
    if (round == cap) throw InternalError("p_maximal_order did not stabilize");
    RatMatrix Binv = mat_inverse(B);
    std::vector<NfElem> w;
    for (std::size_t i = 0; i < d; ++i) w.push_back(K.from_coords(B[i]));
    Structure S(d, std::vector<std::vector<std::uint64_t>>(d));
    std::vector<std::vector<std::vector<Rat>>> Sq(d, std::vector<std::vector<Rat>>(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        std::vector<Rat> c = vec_mat((w[i] * w[j]).coords(), Binv);
        Sq[i][j] = c;
        for (const auto& x : c) S[i][j].push_back(int_mod_p(x, p));
      }

    // p-radical: kernel of x -> x^(p^j) with p^j >= d
    std::vector<std::vector<std::uint64_t>> frob(d);
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<std::uint64_t> x(d, 0);
      x[i] = 1;
      Int q = 1;
      while (q < Int(static_cast<unsigned long>(d))) {
        // x <- x^p
        std::vector<std::uint64_t> r(d, 0), b = x;
        // the unit of the order: coordinates of 1
        std::vector<Rat> one = vec_mat(K.one().coords(), Binv);
        for (std::size_t k = 0; k < d; ++k) r[k] = int_mod_p(one[k], p);
        std::uint64_t e = p;
        while (e) {
          if (e & 1) r = struct_mul(S, r, b, p);
          e >>= 1;
          if (e) b = struct_mul(S, b, b, p);
        }
        x = r;
        q *= Int(static_cast<unsigned long>(p));
      }
      frob[i] = x;
    }
    auto rad = lattice_with_p(left_kernel_mod_p(frob, p), d, p);

    // multipliers of the radical: y with y * beta_j in p * I for all j
    RatMatrix T;
    for (const auto& r : rad) {
      std::vector<Rat> v;
      for (const auto& x : r) v.emplace_back(x);
      T.push_back(v);
    }
    RatMatrix Tinv = mat_inverse(T);
    std::vector<std::vector<std::uint64_t>> phi(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        std::vector<Rat> prod(d, Rat(0));  // w_i * beta_j in order coordinates
        for (std::size_t k = 0; k < d; ++k) {
          if (sgn(T[j][k]) == 0) continue;
          for (std::size_t l = 0; l < d; ++l) prod[l] += T[j][k] * Sq[i][k][l];
        }
        for (const auto& c : vec_mat(prod, Tinv)) phi[i].push_back(int_mod_p(c, p));
      }
    }
    auto ker = left_kernel_mod_p(phi, p);
    if (ker.empty()) break;
    auto U = lattice_with_p(ker, d, p);
    RatMatrix next(d, std::vector<Rat>(d, Rat(0)));
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<Rat> ui;
      for (const auto& x : U[i]) ui.emplace_back(x);
      next[i] = vec_mat(ui, B);
      for (auto& x : next[i]) x /= Rat(static_cast<unsigned long>(p));
    }
    B = next;
  }

  OrderBasis out;
  Int den = 1;
  for (const auto& r : B)
    for (const auto& x : r) den = lcm(den, x.get_den());
  out.denominator = den;
  for (const auto& r : B) {
    std::vector<Int> v;
    for (const auto& x : r) v.push_back(Rat(x * den).get_num());
    out.rows.push_back(v);
  }
  return out;
}

Int field_discriminant(const NumberField& K) {
  Int disc = K.poly_discriminant();
  if (K.degree() == 1) return 1;
  for (const auto& [p, e] : factor_integer(abs(disc))) {
    if (e < 2) continue;
    if (!p.fits_ulong_p()) throw Error("field_discriminant: prime factor too large");
    const std::uint64_t pp = p.get_ui();
    if (dedekind_p_maximal(K.poly(), pp)) continue;
    Int idx = p_maximal_order(K.poly(), pp).index();
    disc /= idx * idx;
  }
  return disc;
}

int real_embeddings(const NumberField& K) { return count_real_roots(K.poly()); }

PolyQ cyclotomic_poly(int m) {
  if (m < 1) throw Error("cyclotomic_poly: m must be positive");
  PolyQ r = PolyQ::monomial(Rat(1), m) - PolyQ::constant(Rat(1));
  for (int d = 1; d < m; ++d)
    if (m % d == 0) r = r / cyclotomic_poly(d);
  return r;
}

}  // namespace ectors
