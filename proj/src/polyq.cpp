#include "ectors/polyq.hpp"

#include <cctype>

namespace ectors {

PolyQ polyq_from_ints(const std::vector<long>& c) {
  std::vector<Rat> v;
  v.reserve(c.size());
  for (long x : c) v.emplace_back(x);
  return PolyQ(std::move(v));
}

PolyQ polyq_from_ints(const std::vector<Int>& c) {
  std::vector<Rat> v;
  v.reserve(c.size());
  for (const auto& x : c) v.emplace_back(x);
  return PolyQ(std::move(v));
}

PolyQ poly_gcd(const PolyQ& f, const PolyQ& g) { return gcd(f, g); }

Rat discriminant(const PolyQ& f) {
  const int d = f.degree();
  if (d < 1) throw Error("discriminant: degree must be at least 1");
  if (d == 1) return Rat(1);
  Rat r = resultant(f, f.derivative());
  if ((d * (d - 1) / 2) % 2 == 1) r = -r;
  return Rat(r / f.lead());
}

PolyQ squarefree_part(const PolyQ& f) {
  if (f.is_zero()) throw ZeroPolynomial("squarefree_part of zero");
  PolyQ g = gcd(f, f.derivative());
  return (f / g).monic();
}

std::vector<std::pair<PolyQ, unsigned>> squarefree_decomposition(const PolyQ& f) {
  // Yun's algorithm (characteristic zero).
  std::vector<std::pair<PolyQ, unsigned>> out;
  if (f.degree() < 1) return out;
  PolyQ a = f.monic();
  PolyQ b = a.derivative();
  PolyQ c = gcd(a, b);
  PolyQ w = a / c;
  PolyQ y = b / c;
  PolyQ z = y - w.derivative();
  unsigned i = 1;
  while (w.degree() > 0) {
    PolyQ g = gcd(w, z);
    if (g.degree() > 0) out.emplace_back(g, i);
    w = w / g;
    y = z / g;
    z = y - w.derivative();
    ++i;
  }
  return out;
}

Rat content(const PolyQ& f) {
  if (f.is_zero()) return Rat(0);
  Int num = 0, den = 1;
  for (const auto& c : f.coeffs()) {
    num = gcd(num, c.get_num());
    den = lcm(den, c.get_den());
  }
  Rat r = make_rat(num, den);
  if (sgn(f.lead()) < 0) r = -r;
  return r;
}

std::vector<Int> primitive_part(const PolyQ& f) {
  Rat c = content(f);
  std::vector<Int> out;
  for (const auto& x : f.coeffs()) {
    Rat q = x / c;
    out.push_back(q.get_num());
  }
  return out;
}

bool is_integral(const PolyQ& f) {
  for (const auto& c : f.coeffs())
    if (c.get_den() != 1) return false;
  return true;
}

bool is_monic(const PolyQ& f) { return !f.is_zero() && f.lead() == 1; }

Int max_abs_coeff(const PolyQ& f) {
  Int m = 0;
  for (const auto& c : f.coeffs()) {
    Int a = abs(c.get_num());
    if (a > m) m = a;
  }
  return m;
}

int count_real_roots(const PolyQ& f) {
  if (f.degree() < 1) return 0;
  PolyQ s = squarefree_part(f);
  std::vector<PolyQ> seq{s, s.derivative()};
  while (!seq.back().is_zero()) {
    PolyQ r = -(seq[seq.size() - 2] % seq.back());
    if (r.is_zero()) break;
    seq.push_back(r);
  }
  auto changes = [&](bool at_plus) {
    int count = 0, prev = 0;
    for (const auto& p : seq) {
      int sg = sgn(p.lead());
      if (!at_plus && p.degree() % 2 == 1) sg = -sg;
      if (sg == 0) continue;
      if (prev != 0 && sg != prev) ++count;
      prev = sg;
    }
    return count;
  };
  return changes(false) - changes(true);
}

namespace {

class ExprParser {
 public:
  ExprParser(const std::string& s, char var) : var_(var) {
    for (char ch : s)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
  }

  PolyQ parse() {
    if (s_.empty()) throw ParseError("empty expression");
    PolyQ r = expr();
    if (pos_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "' in '" + s_ + "'");
    return r;
  }

 private:
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  bool starts_factor() const {
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == var_ || c == '(';
  }

  PolyQ expr() {
    PolyQ acc;
    bool first = true;
    for (;;) {
      int sign = 1;
      if (peek('+')) {
        ++pos_;
      } else if (peek('-')) {
        sign = -1;
        ++pos_;
      } else if (!first) {
        break;
      }
      PolyQ t = term();
      acc = sign > 0 ? acc + t : acc - t;
      first = false;
      if (!peek('+') && !peek('-')) break;
    }
    return acc;
  }

  PolyQ term() {
    PolyQ acc = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (peek('/')) {
        ++pos_;
        Int d = integer();
        if (d == 0) throw ParseError("division by zero");
        acc = Rat(1, 1) / Rat(d) * acc;
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  PolyQ factor() {
    PolyQ base = primary();
    if (peek('^')) {
      ++pos_;
      Int e = integer();
      if (e < 0 || e > 4096) throw ParseError("bad exponent");
      base = pow(base, static_cast<unsigned>(e.get_ui()), Rat(0));
    }
    return base;
  }

  PolyQ primary() {
    if (peek('(')) {
      ++pos_;
      PolyQ r = expr();
      if (!peek(')')) throw ParseError("missing ')' in '" + s_ + "'");
      ++pos_;
      return r;
    }
    if (peek(var_)) {
      ++pos_;
      return PolyQ::monomial(Rat(1), 1);
    }
    if (peek('-')) {  // signed primary after '*' or '^'
      ++pos_;
      return -primary();
    }
    Int n = integer();
    return PolyQ::constant(Rat(n));
  }

  Int integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected number at position " + std::to_string(start) + " in '" + s_ + "'");
    return Int(s_.substr(start, pos_ - start));
  }

  std::string s_;
  std::size_t pos_ = 0;
  char var_;
};

}  // namespace

PolyQ parse_polyq(const std::string& text, char var) { return ExprParser(text, var).parse(); }

std::string to_string(const PolyQ& f, char var) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const Rat& c = f[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Rat a = abs(c);
    if (sgn(c) < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    bool unit = (a == 1);
    if (i == 0) {
      out += to_string(a);
      continue;
    }
    if (!unit) out += to_string(a) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace ectors
