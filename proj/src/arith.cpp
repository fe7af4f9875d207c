#include "ectors/arith.hpp"

#include <algorithm>
#include <cctype>

namespace ectors {

namespace {

Int pollard_rho(const Int& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    auto step = [&](const Int& v) { return mod(v * v + c, n); };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      Int diff = x - y;
      d = gcd(abs(diff), n);
    }
    if (d != n) return d;
  }
}

void factor_into(Int n, std::vector<Int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<Int, unsigned>> factor_integer(Int n) {
  if (n == 0) throw Error("factor_integer: zero");
  n = abs(n);
  std::vector<Int> primes;
  for (unsigned long p = 2; p < 1000 && n > 1; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      primes.emplace_back(p);
      n /= p;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Int, unsigned>> res;
  for (const auto& p : primes) {
    if (!res.empty() && res.back().first == p)
      ++res.back().second;
    else
      res.emplace_back(p, 1);
  }
  return res;
}

std::optional<Rat> rational_reconstruction(const Int& r, const Int& M, const Int& num_bound,
                                           const Int& den_bound) {
  // Half-extended Euclid on (M, r) stopping once the remainder drops to the numerator bound.
  Int r0 = M, r1 = mod(r, M);
  Int t0 = 0, t1 = 1;
  while (r1 > num_bound) {
    Int q = r0 / r1;
    Int tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0) return std::nullopt;
  Int n = r1, d = t1;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (d > den_bound || gcd(d, M) != 1) return std::nullopt;
  if (mod(d * r - n, M) != 0) return std::nullopt;
  return make_rat(n, d);
}

std::optional<Rat> rational_reconstruction(const Int& r, const Int& M) {
  if (M <= 1) throw Error("rational_reconstruction: modulus must exceed 1");
  Int bound = isqrt(Int(M / 2));
  return rational_reconstruction(r, M, bound, bound);
}

std::string to_string(const Int& a) { return a.get_str(); }

std::string to_string(const Rat& a) {
  Rat c = a;
  c.canonicalize();
  return c.get_str();
}

Rat parse_rat(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) throw ParseError("empty rational");
  std::size_t slash = t.find('/');
  auto parse_int = [](const std::string& x) {
    if (x.empty()) throw ParseError("bad integer");
    std::size_t start = (x[0] == '-' || x[0] == '+') ? 1 : 0;
    if (start == x.size()) throw ParseError("bad integer '" + x + "'");
    for (std::size_t i = start; i < x.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(x[i]))) throw ParseError("bad integer '" + x + "'");
    return Int(x[0] == '+' ? x.substr(1) : x);
  };
  if (slash == std::string::npos) return Rat(parse_int(t));
  Int n = parse_int(t.substr(0, slash));
  Int d = parse_int(t.substr(slash + 1));
  if (d == 0) throw ParseError("zero denominator");
  return make_rat(n, d);
}

}  // namespace ectors
