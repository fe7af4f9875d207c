#pragma once

// Exact integer / rational scalars and small number-theoretic helpers.

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ectors {

using Int = mpz_class;
using Rat = mpq_class;

/// Base class of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ECTORS_DEFINE_ERROR(Name)                 \
  class Name : public Error {                     \
   public:                                        \
    explicit Name(const std::string& what)        \
        : Error(std::string(#Name ": ") + what) {} \
  }

ECTORS_DEFINE_ERROR(ZeroPolynomial);
ECTORS_DEFINE_ERROR(DegreeCapExceeded);
ECTORS_DEFINE_ERROR(NotCoprime);
ECTORS_DEFINE_ERROR(ParseError);
ECTORS_DEFINE_ERROR(DivisionByZero);
ECTORS_DEFINE_ERROR(InternalError);

/// Deterministic generator passed explicitly wherever randomness is needed.
using Rng = std::mt19937_64;
inline constexpr std::uint64_t kDefaultSeed = 0x5eed2024ULL;

inline Rat make_rat(const Int& n, const Int& d = 1) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

inline Int rat_num(const Rat& r) { return r.get_num(); }
inline Int rat_den(const Rat& r) { return r.get_den(); }

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// Least non-negative residue.
inline Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline std::optional<Int> inv_mod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) return std::nullopt;
  return r;
}

inline Int pow_int(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline Rat pow_rat(const Rat& b, unsigned long e) {
  Rat r(1);
  Rat x = b;
  while (e) {
    if (e & 1U) r *= x;
    x *= x;
    e >>= 1U;
  }
  return r;
}

inline Int isqrt(const Int& a) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline bool is_square(const Int& a) { return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0; }

inline bool is_prime(const Int& n) { return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

inline Int next_prime(const Int& n) {
  Int r;
  mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

/// Multiplicity of prime p in nonzero n.
inline unsigned valuation(Int n, const Int& p) {
  if (n == 0) throw Error("valuation of zero");
  unsigned v = 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++v;
  }
  return v;
}

/// Prime factorization by trial division followed by Pollard rho; fine for the
/// discriminant-sized integers this library meets.
std::vector<std::pair<Int, unsigned>> factor_integer(Int n);

/// Unique n/d with |n|, d <= floor(sqrt(M/2)), d*r = n (mod M), gcd(d, M) = 1.
std::optional<Rat> rational_reconstruction(const Int& r, const Int& M);

/// Same, with explicit numerator / denominator bounds (requires 2*N*D < M).
std::optional<Rat> rational_reconstruction(const Int& r, const Int& M, const Int& num_bound,
                                           const Int& den_bound);

inline std::uint64_t to_u64(const Int& a) { return mpz_get_ui(a.get_mpz_t()); }

inline std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod64(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1U) r = mulmod64(r, b, p);
    b = mulmod64(b, b, p);
    e >>= 1U;
  }
  return r;
}

inline std::uint64_t invmod64(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  if (nr == 0) throw DivisionByZero("inverse of 0 mod p");
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw DivisionByZero("non-invertible residue");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

/// Reduce a rational modulo p; throws DivisionByZero if p divides the denominator.
inline std::uint64_t rat_mod_p(const Rat& r, std::uint64_t p) {
  Int pp(static_cast<unsigned long>(p));
  auto inv = inv_mod(r.get_den(), pp);
  if (!inv) throw DivisionByZero("denominator divisible by p");
  return to_u64(mod(r.get_num() * *inv, pp));
}

std::string to_string(const Int& a);
std::string to_string(const Rat& a);
Rat parse_rat(const std::string& s);

}  // namespace ectors
