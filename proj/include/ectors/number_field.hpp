#pragma once

// Number fields K = Q[a]/(f) with f monic, integral and irreducible.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ectors/finite_field.hpp"
#include "ectors/polyq.hpp"

namespace ectors {

ECTORS_DEFINE_ERROR(Reducible);
ECTORS_DEFINE_ERROR(NonMonic);
ECTORS_DEFINE_ERROR(NonIntegral);
ECTORS_DEFINE_ERROR(ParentMismatch);
ECTORS_DEFINE_ERROR(DenominatorAtP);

inline constexpr int kMaxFieldDegree = 12;

class NfElem;

class NumberField {
 public:
  struct Data {
    PolyQ f;
    int d;
    std::string label;
    Int poly_disc;
    /// a^(d+i) in power-basis coordinates, i = 0..d-2.
    std::vector<std::vector<Rat>> high_powers;
  };

  NumberField() = default;
  /// Verifies irreducibility with factor_over_q.
  explicit NumberField(const PolyQ& f, std::string label = {});
  /// Q viewed as Q[a]/(a).
  static NumberField rationals();

  int degree() const { return d_->d; }
  const PolyQ& poly() const { return d_->f; }
  const std::string& label() const { return d_->label; }
  /// Discriminant of the defining polynomial (not of the field).
  const Int& poly_discriminant() const { return d_->poly_disc; }
  const std::shared_ptr<const Data>& data() const { return d_; }

  NfElem zero() const;
  NfElem one() const;
  NfElem gen() const;
  NfElem from_int(long v) const;
  NfElem from_rat(const Rat& v) const;
  /// Reduce a polynomial in the generator modulo f.
  NfElem from_poly(const PolyQ& g) const;
  NfElem from_coords(std::vector<Rat> c) const;
  /// Element syntax: rational expression in `a`, e.g. "1/7(4a^2+9a+2)".
  NfElem parse(const std::string& text) const;

  bool operator==(const NumberField& o) const;
  bool operator!=(const NumberField& o) const { return !(*this == o); }

 private:
  explicit NumberField(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
  friend class NfElem;
};

class NfElem {
 public:
  NfElem() = default;

  NumberField field() const { return NumberField(f_); }
  const std::shared_ptr<const NumberField::Data>& parent() const { return f_; }
  const std::vector<Rat>& coords() const { return c_; }
  const Rat& coord(int i) const { return c_[static_cast<std::size_t>(i)]; }
  bool is_zero() const;
  bool is_rational() const;
  PolyQ to_poly() const { return PolyQ(c_); }
  /// Least common denominator of the coordinates.
  Int denominator() const;

  friend NfElem operator+(const NfElem& a, const NfElem& b);
  friend NfElem operator-(const NfElem& a, const NfElem& b);
  friend NfElem operator*(const NfElem& a, const NfElem& b);
  friend NfElem operator/(const NfElem& a, const NfElem& b);
  NfElem operator-() const;
  NfElem& operator+=(const NfElem& b) { return *this = *this + b; }
  NfElem& operator-=(const NfElem& b) { return *this = *this - b; }
  NfElem& operator*=(const NfElem& b) { return *this = *this * b; }
  bool operator==(const NfElem& o) const;
  bool operator!=(const NfElem& o) const { return !(*this == o); }
  /// Lexicographic on coordinates from the top; used only for canonical ordering.
  bool operator<(const NfElem& o) const;

  NfElem inv() const;
  NfElem pow(long e) const;
  NfElem scale(const Rat& s) const;
  std::string str() const;

 private:
  NfElem(std::shared_ptr<const NumberField::Data> f, std::vector<Rat> c) : f_(std::move(f)), c_(std::move(c)) {}
  std::shared_ptr<const NumberField::Data> f_;
  std::vector<Rat> c_;
  friend class NumberField;
};

inline bool is_zero(const NfElem& x) { return x.is_zero(); }
inline NfElem zero_like(const NfElem& x) { return x.field().zero(); }
inline NfElem one_like(const NfElem& x) { return x.field().one(); }
inline NfElem from_int_like(const NfElem& x, long v) { return x.field().from_int(v); }
inline NfElem from_rat_like(const NfElem& x, const Rat& v) { return x.field().from_rat(v); }

using PolyK = Poly<NfElem>;

NfElem nf_add(const NfElem& x, const NfElem& y);
NfElem nf_mul(const NfElem& x, const NfElem& y);
NfElem nf_inv(const NfElem& x);

/// Matrix of multiplication by x on the power basis (column j = x * a^j).
std::vector<std::vector<Rat>> nf_mul_matrix(const NfElem& x);
/// Characteristic polynomial of a square rational matrix (monic).
PolyQ char_poly(const std::vector<std::vector<Rat>>& m);
PolyQ nf_char_poly(const NfElem& x);
/// Monic minimal polynomial over Q.
PolyQ nf_min_poly(const NfElem& x);
Rat nf_norm(const NfElem& x);
Rat nf_trace(const NfElem& x);

struct PrimeIdealFactor {
  PolyModP g;        // monic irreducible factor of f mod p
  int residue_degree;
  unsigned exponent;  // multiplicity in f mod p
};

struct PrimeSplitting {
  std::uint64_t p = 0;
  std::vector<PrimeIdealFactor> factors;
  bool usable = false;  // p odd and p does not divide disc(f)
};

PrimeSplitting split_prime(const NumberField& K, std::uint64_t p);
/// True iff f splits into d distinct linear factors mod p.
bool is_totally_split(const PrimeSplitting& s, int d);

FqField residue_field(const PrimeSplitting& s, std::size_t i);
/// Image in F_p[t]/(g_i); throws DenominatorAtP when p divides a coordinate denominator.
FqElem residue_map(const NfElem& x, const FqField& F);
FqElem residue_map(const NfElem& x, const PrimeSplitting& s, std::size_t i);

/// Dedekind criterion: Z[a] is p-maximal.
bool dedekind_p_maximal(const PolyQ& f, std::uint64_t p);

/// Order given by basis rows (power-basis coordinates) rows[i] / denominator.
struct OrderBasis {
  std::vector<std::vector<Int>> rows;
  Int denominator = 1;
  /// [O : Z[a]]
  Int index() const;
  bool is_identity() const;
};

/// Pohst-Zassenhaus round-two iteration at p.
OrderBasis p_maximal_order(const PolyQ& f, std::uint64_t p);
Int field_discriminant(const NumberField& K);
/// Number of real embeddings (Sturm); complex pairs are (d - r1) / 2.
int real_embeddings(const NumberField& K);

/// True iff g has a root in K.
bool contains_root(const NumberField& K, const PolyQ& g);
/// Least root of the m-th cyclotomic polynomial in K in the canonical order, if any.
std::optional<NfElem> root_of_unity(const NumberField& K, int m);
PolyQ cyclotomic_poly(int m);

}  // namespace ectors
