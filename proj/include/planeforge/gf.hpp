#pragma once

#include <stdexcept>
#include <vector>

namespace planeforge::gf {

struct NotPrime : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct TooLarge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

/// Coefficient vectors are stored constant term first throughout this module.
struct FieldSpec {
  int p = 0;                       // prime characteristic
  int k = 0;                       // extension degree
  std::vector<int> irreducible;    // monic, length k+1
};

bool is_prime(int n);

/// Irreducibility over GF(p) by trial division against every monic divisor
/// of degree 1..k/2. Adequate for the p^k <= 2^16 cap.
bool is_irreducible(const std::vector<int>& poly, int p);

/// GF(p^k) arithmetic. Elements are codes in [0, q): the base-p encoding of
/// the coefficient vector, constant term in the least significant digit.
/// Code 0 is the additive and code 1 the multiplicative identity.
class Field {
 public:
  static Field make(int p, int k);

  int p() const { return spec_.p; }
  int k() const { return spec_.k; }
  int q() const { return q_; }
  const FieldSpec& spec() const { return spec_; }

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  int inv(int a) const;

  std::vector<int> coeffs(int a) const;
  int encode(const std::vector<int>& coeffs) const;

 private:
  Field(FieldSpec spec, int q);

  int mul_slow(int a, int b) const;

  FieldSpec spec_;
  int q_;
  std::vector<int> mul_table_;  // q*q entries when q <= 256, else empty
};

}  // namespace planeforge::gf
