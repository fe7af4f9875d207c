// Exhaustive Hunter search for monic integral polynomials of degree n whose roots
// satisfy T2 <= s1^2/n + gamma_{n-1} (D/n)^(1/(n-1)), with 0 <= s1 <= n/2.
// Every primitive degree-n field with |disc| <= D has a defining polynomial in the
// output. Prints ascending coefficient lists, one per line.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <vector>

namespace {

using cd = std::complex<double>;

// Hermite constants gamma_k^k for k = 1..7
const double kHermitePow[] = {0, 1, 4.0 / 3, 2, 4, 8, 64.0 / 3, 64};

double hermite(int k) { return std::pow(kHermitePow[k], 1.0 / k); }

// Roots by Aberth iteration; c ascending, monic.
bool roots(const std::vector<long>& c, std::vector<cd>& z) {
  const int n = static_cast<int>(c.size()) - 1;
  double r = 1;
  for (int i = 0; i < n; ++i) r = std::max(r, 1 + std::abs(static_cast<double>(c[static_cast<std::size_t>(i)])));
  z.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = std::polar(0.7 * r, 2 * M_PI * i / n + 0.4);
  for (int it = 0; it < 500; ++it) {
    double move = 0;
    for (int i = 0; i < n; ++i) {
      cd x = z[static_cast<std::size_t>(i)];
      cd p = 1, dp = 0;
      for (int k = n - 1; k >= 0; --k) {
        dp = dp * x + p;
        p = p * x + static_cast<double>(c[static_cast<std::size_t>(k)]);
      }
      cd ratio = p / dp;
      cd s = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) s += 1.0 / (x - z[static_cast<std::size_t>(j)]);
      cd w = ratio / (1.0 - ratio * s);
      z[static_cast<std::size_t>(i)] = x - w;
      move = std::max(move, std::abs(w));
    }
    if (move < 1e-12) return true;
  }
  return false;
}

// Discriminant of a monic integral polynomial via the Sylvester determinant (Bareiss).
mpz_class discriminant(const std::vector<long>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<long> d(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) d[static_cast<std::size_t>(i - 1)] = i * c[static_cast<std::size_t>(i)];
  const int N = 2 * n - 1;
  std::vector<std::vector<mpz_class>> m(static_cast<std::size_t>(N), std::vector<mpz_class>(static_cast<std::size_t>(N), 0));
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j <= n; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = c[static_cast<std::size_t>(n - j)];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(n - 1 + i)][static_cast<std::size_t>(i + j)] = d[static_cast<std::size_t>(n - 1 - j)];
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < N - 1; ++k) {
    if (m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
      int r = k + 1;
      while (r < N && m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] == 0) ++r;
      if (r == N) return 0;
      std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(r)]);
      sign = -sign;
    }
    for (int i = k + 1; i < N; ++i)
      for (int j = k + 1; j < N; ++j) {
        auto& a = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        a = (a * m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
             m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) /
            prev;
      }
    prev = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
  }
  mpz_class res = sign * m[static_cast<std::size_t>(N - 1)][static_cast<std::size_t>(N - 1)];
  // disc = (-1)^(n(n-1)/2) res(f, f')
  if ((n * (n - 1) / 2) % 2) res = -res;
  return res;
}

// Lower bound for |d_K| when d_K * index^2 = disc: the part of disc with odd exponents.
bool field_disc_may_be_below(mpz_class m, const mpz_class& bound) {
  m = abs(m);
  mpz_class lb = 1;
  for (unsigned long p = 2; p < 100000 && m > 1; ++p) {
    if (p * p > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) continue;
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      ++e;
    }
    if (e % 2) lb *= p;
    if (lb > bound) return false;
  }
  if (m > 1 && mpz_perfect_square_p(m.get_mpz_t()) == 0) lb *= m;
  return lb <= bound;
}

struct Search {
  int n;
  double dbound;
  mpz_class disc_bound;
  std::vector<long> a;   // a[k] coefficient of x^(n-k), a[0] = 1
  std::vector<long> s;   // power sums
  double t2 = 0;
  long printed = 0, checked = 0;

  void emit() {
    std::vector<long> c(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(n - k)] = a[static_cast<std::size_t>(k)];
    ++checked;
    std::vector<cd> z;
    if (!roots(c, z)) return;
    double t = 0;
    for (const auto& x : z) t += std::norm(x);
    if (t > t2 + 1e-9) return;
    mpz_class d = discriminant(c);
    if (d == 0 || !field_disc_may_be_below(d, disc_bound)) return;
    for (int k = 0; k <= n; ++k) std::printf(k ? ",%ld" : "%ld", c[static_cast<std::size_t>(k)]);
    std::printf("\n");
    ++printed;
  }

  // choose s_k (k >= 2) so that a_k from Newton's identity is integral
  void rec(int k) {
    if (k == n) {
      const long amax = static_cast<long>(std::floor(std::pow(t2 / n, n / 2.0) + 1e-9));
      for (long an = -amax; an <= amax; ++an) {
        if (an == 0) continue;
        a[static_cast<std::size_t>(n)] = an;
        emit();
      }
      return;
    }
    // k * a_k = -(s_k + a_1 s_{k-1} + ... + a_{k-1} s_1)
    long rest = 0;
    for (int i = 1; i < k; ++i) rest += a[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(k - i)];
    const long smax = static_cast<long>(std::floor(std::pow(t2, k / 2.0) + 1e-9));
    long start = -smax;
    long r = ((-(start + rest)) % k + k) % k;
    start += r;  // now start + rest = 0 mod k
    for (long sk = start; sk <= smax; sk += k) {
      s[static_cast<std::size_t>(k)] = sk;
      a[static_cast<std::size_t>(k)] = -(sk + rest) / k;
      rec(k + 1);
    }
  }

  void run() {
    a.assign(static_cast<std::size_t>(n + 1), 0);
    s.assign(static_cast<std::size_t>(n + 1), 0);
    a[0] = 1;
    for (int s1 = 0; 2 * s1 <= n; ++s1) {
      t2 = static_cast<double>(s1 * s1) / n + hermite(n - 1) * std::pow(dbound / n, 1.0 / (n - 1));
      s[1] = s1;
      a[1] = -s1;
      rec(2);
    }
  }
};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::fprintf(stderr, "usage: hunter_search DEGREE MAX_ABS_DISC\n");
    return 2;
  }
  Search S;
  S.n = std::atoi(argv[1]);
  S.dbound = std::atof(argv[2]);
  S.disc_bound = mpz_class(argv[2]);
  if (S.n < 2 || S.n > 7) {
    std::fprintf(stderr, "degree must be in 2..7\n");
    return 2;
  }
  S.run();
  std::fprintf(stderr, "checked %ld printed %ld\n", S.checked, S.printed);
  return 0;
}
