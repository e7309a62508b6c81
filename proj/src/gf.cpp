#include "planeforge/gf.hpp"

#include <algorithm>
#include <string>

namespace planeforge::gf {

namespace {

// Polynomials over GF(p) as coefficient vectors, constant term first,
// trailing zeros trimmed.
using Poly = std::vector<int>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly poly_mul(const Poly& f, const Poly& g, int p) {
  if (f.empty() || g.empty()) return {};
  Poly out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      out[i + j] = (out[i + j] + f[i] * g[j]) % p;
  trim(out);
  return out;
}

// f mod g, g monic.
Poly poly_mod(Poly f, const Poly& g, int p) {
  trim(f);
  const int dg = degree(g);
  while (degree(f) >= dg) {
    const int shift = degree(f) - dg;
    const int lead = f.back();
    for (int i = 0; i <= dg; ++i) {
      int& c = f[i + shift];
      c = ((c - lead * g[i]) % p + p) % p;
    }
    trim(f);
  }
  return f;
}

int mod_inverse(int a, int p) {
  // p is small and prime; Fermat by repeated multiplication is fine.
  a = ((a % p) + p) % p;
  int r = 1;
  for (int e = 0; e < p - 2; ++e) r = r * a % p;
  return r;
}

Poly poly_scale(Poly f, int c, int p) {
  for (int& x : f) x = x * c % p;
  trim(f);
  return f;
}

Poly poly_sub(Poly f, const Poly& g, int p) {
  if (f.size() < g.size()) f.resize(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) f[i] = ((f[i] - g[i]) % p + p) % p;
  trim(f);
  return f;
}

// Quotient of f by g (g nonzero), remainder discarded.
Poly poly_div(Poly f, const Poly& g, int p) {
  trim(f);
  const int dg = degree(g);
  const int lead_inv = mod_inverse(g.back(), p);
  Poly quot(std::max<int>(degree(f) - dg + 1, 0), 0);
  while (degree(f) >= dg) {
    const int shift = degree(f) - dg;
    const int c = f.back() * lead_inv % p;
    quot[shift] = c;
    for (int i = 0; i <= dg; ++i) {
      int& x = f[i + shift];
      x = ((x - c * g[i]) % p + p) % p;
    }
    trim(f);
  }
  return quot;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(const std::vector<int>& poly, int p) {
  Poly f = poly;
  trim(f);
  const int k = degree(f);
  if (k <= 0) return false;
  if (k == 1) return true;
  if (f[0] == 0) return false;  // divisible by x
  // Trial division by every monic polynomial of degree 1..k/2.
  for (int d = 1; 2 * d <= k; ++d) {
    Poly g(d + 1, 0);
    g[d] = 1;
    // Odometer over the d lower coefficients.
    std::vector<int> digits(d, 0);
    while (true) {
      for (int i = 0; i < d; ++i) g[i] = digits[i];
      if (poly_mod(f, g, p).empty()) return false;
      int i = d - 1;
      while (i >= 0 && digits[i] == p - 1) digits[i--] = 0;
      if (i < 0) break;
      ++digits[i];
    }
  }
  return true;
}

Field Field::make(int p, int k) {
  if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
  if (k < 1) throw TooLarge("extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > (1LL << 16)) throw TooLarge("p^k exceeds 2^16");
  }
  // Lexicographically smallest monic irreducible, coefficients compared
  // from the constant term up. For k = 1 this yields x.
  FieldSpec spec;
  spec.p = p;
  spec.k = k;
  std::vector<int> low(k, 0);
  while (true) {
    std::vector<int> cand(low);
    cand.push_back(1);
    if (is_irreducible(cand, p)) {
      spec.irreducible = cand;
      break;
    }
    int i = k - 1;
    while (i >= 0 && low[i] == p - 1) low[i--] = 0;
    if (i < 0) throw std::logic_error("no monic irreducible found");
    ++low[i];
  }
  return Field(std::move(spec), static_cast<int>(q));
}

Field::Field(FieldSpec spec, int q) : spec_(std::move(spec)), q_(q) {
  if (q_ <= 256) {
    mul_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
    for (int a = 0; a < q_; ++a)
      for (int b = 0; b < q_; ++b)
        mul_table_[static_cast<std::size_t>(a) * q_ + b] = mul_slow(a, b);
  }
}

std::vector<int> Field::coeffs(int a) const {
  std::vector<int> c(spec_.k);
  for (int i = 0; i < spec_.k; ++i) {
    c[i] = a % spec_.p;
    a /= spec_.p;
  }
  return c;
}

int Field::encode(const std::vector<int>& coeffs) const {
  int code = 0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    code = code * spec_.p + coeffs[i];
  return code;
}

int Field::add(int a, int b) const {
  int out = 0, pw = 1;
  for (int i = 0; i < spec_.k; ++i) {
    out += (a % spec_.p + b % spec_.p) % spec_.p * pw;
    a /= spec_.p;
    b /= spec_.p;
    pw *= spec_.p;
  }
  return out;
}

int Field::neg(int a) const {
  int out = 0, pw = 1;
  for (int i = 0; i < spec_.k; ++i) {
    out += (spec_.p - a % spec_.p) % spec_.p * pw;
    a /= spec_.p;
    pw *= spec_.p;
  }
  return out;
}

int Field::sub(int a, int b) const { return add(a, neg(b)); }

int Field::mul_slow(int a, int b) const {
  Poly fa = coeffs(a), fb = coeffs(b);
  trim(fa);
  trim(fb);
  Poly prod = poly_mod(poly_mul(fa, fb, spec_.p), spec_.irreducible, spec_.p);
  prod.resize(spec_.k, 0);
  return encode(prod);
}

int Field::mul(int a, int b) const {
  if (!mul_table_.empty())
    return mul_table_[static_cast<std::size_t>(a) * q_ + b];
  return mul_slow(a, b);
}

int Field::inv(int a) const {
  if (a == 0) throw DivisionByZero("inv(0) in GF(" + std::to_string(q_) + ")");
  // Extended Euclid in GF(p)[x]: r0 = irreducible, r1 = a.
  const int p = spec_.p;
  Poly r0 = spec_.irreducible, r1 = coeffs(a);
  trim(r1);
  Poly t0 = {}, t1 = {1};
  while (!r1.empty()) {
    Poly quot = poly_div(r0, r1, p);
    Poly r2 = poly_sub(r0, poly_mul(quot, r1, p), p);
    Poly t2 = poly_sub(t0, poly_mul(quot, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 is a nonzero constant gcd; scale t0 by its inverse.
  t0 = poly_scale(std::move(t0), mod_inverse(r0[0], p), p);
  t0.resize(spec_.k, 0);
  return encode(t0);
}

}  // namespace planeforge::gf
