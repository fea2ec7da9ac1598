#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ado {

using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

int euler_phi(int n);

// Coefficients of the n-th cyclotomic polynomial, monic, index = power.
std::vector<long> cyclotomic_polynomial(int n);

// Shared constants for the field Q(xi) at level N, where xi = exp(i*pi/N)
// is the primitive 2N-th root of unity. Residues are taken modulo Phi_{2N},
// so elements are vectors of length phi(2N).
struct LevelData {
  int N = 0;
  int degree = 0;                         // phi(2N)
  std::vector<long> modulus;              // Phi_{2N}, size degree+1
  std::vector<std::vector<Rat>> xiPower;  // xi^k reduced, k = 0..2N-1
  std::complex<double> root;              // numeric xi
};

const LevelData& level_data(int N);

// Element of the cyclotomic field Q(xi_{2N}) in the power basis
// 1, xi, ..., xi^{phi(2N)-1}. The representation is canonical: equal values
// have equal coefficient vectors.
class CycScalar {
 public:
  CycScalar() = default;  // level-0 placeholder, unusable in arithmetic

  static CycScalar zero(int N);
  static CycScalar one(int N);
  static CycScalar integer(int N, long v);
  static CycScalar rational(int N, Rat v);
  static CycScalar xi_power(int N, long k);

  int level() const { return level_; }
  bool is_zero() const;
  // True when the value lies in Q (all higher basis coefficients vanish).
  bool is_rational() const;
  Rat rational_part() const { return coeff(0); }
  // True when every basis coefficient is a rational integer, i.e. the value
  // lies in Z[xi].
  bool has_integer_coeffs() const;
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int k) const;

  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o);
  CycScalar operator+(const CycScalar& o) const;
  CycScalar operator-(const CycScalar& o) const;
  CycScalar operator-() const;
  CycScalar operator*(const CycScalar& o) const;
  CycScalar inverse() const;  // throws std::domain_error on zero

  // Galois conjugation xi -> xi^{-1} (complex conjugation).
  CycScalar conj() const;

  bool operator==(const CycScalar& o) const;
  bool operator!=(const CycScalar& o) const { return !(*this == o); }

  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  CycScalar(int N, std::vector<Rat> c) : level_(N), c_(std::move(c)) {}
  void check_level(const CycScalar& o) const;

  int level_ = 0;
  std::vector<Rat> c_;
};

CycScalar cyc_mul(const CycScalar& a, const CycScalar& b);

}  // namespace ado
