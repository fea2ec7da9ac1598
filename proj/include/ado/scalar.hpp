#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "ado/cyclotomic.hpp"

namespace ado {

// Laurent polynomial in the formal variable s over CycScalar, stored densely
// from the lowest exponent. s stands for q^lambda; it is transcendental over
// the cyclotomic field, which is exactly the "generic lambda" regime.
class SPoly {
 public:
  SPoly() = default;

  static SPoly zero(int N);
  static SPoly constant(const CycScalar& c);
  static SPoly monomial(const CycScalar& c, long exp);

  int level() const { return level_; }
  bool is_zero() const { return c_.empty(); }
  long low() const { return low_; }
  long high() const { return low_ + static_cast<long>(c_.size()) - 1; }
  int term_count() const;
  const CycScalar& leading() const { return c_.back(); }
  CycScalar coeff(long exp) const;

  bool is_constant() const;

  SPoly operator+(const SPoly& o) const;
  SPoly operator-(const SPoly& o) const;
  SPoly operator-() const;
  SPoly operator*(const SPoly& o) const;
  SPoly scaled(const CycScalar& c) const;
  SPoly shifted(long k) const;

  bool operator==(const SPoly& o) const;
  bool operator!=(const SPoly& o) const { return !(*this == o); }

  // bar involution: xi -> xi^{-1} on coefficients and s -> s^{-1}.
  SPoly conj() const;

  // Exact division; throws std::logic_error when the remainder is nonzero.
  SPoly divide_exact(const SPoly& d) const;
  static SPoly gcd(const SPoly& a, const SPoly& b);

  std::complex<double> eval(const std::complex<double>& sval) const;
  std::string to_string() const;

  bool has_integer_coeffs() const;

 private:
  SPoly(int N, long low, std::vector<CycScalar> c)
      : level_(N), low_(low), c_(std::move(c)) {
    normalize();
  }
  void normalize();  // trim zero ends; canonical zero
  void check_level(const SPoly& o) const;

  int level_ = 0;
  long low_ = 0;
  std::vector<CycScalar> c_;
};

struct DegenerateSpecialization : std::runtime_error {
  explicit DegenerateSpecialization(const std::string& what)
      : std::runtime_error(what) {}
};

// Element of Frac((Q[q]/Phi_2N)[s]) x t^Z: a reduced fraction num/den of
// s-Laurent polynomials together with an integer exponent of the central
// unit t = q^{lambda^2/2}. t never mixes with num/den; multiplication adds
// the exponents. Fractions are reduced by monomial content and a monic
// denominator; the full polynomial gcd runs lazily past a size threshold.
class ScalarExt {
 public:
  ScalarExt() = default;

  static ScalarExt zero(int N);
  static ScalarExt one(int N);
  static ScalarExt from_cyc(const CycScalar& c);
  static ScalarExt from_rational(int N, const Rat& r);
  static ScalarExt from_poly(SPoly p);
  static ScalarExt s_power(int N, long k);
  static ScalarExt q_power(int N, long k);
  static ScalarExt t_power(int N, long k);
  static ScalarExt fraction(SPoly num, SPoly den, long tExp);

  int level() const { return level_; }
  bool is_zero() const { return num_.is_zero(); }
  long t_exp() const { return tExp_; }
  const SPoly& num() const { return num_; }
  const SPoly& den() const { return den_; }

  bool is_laurent() const { return den_.is_constant(); }
  bool has_integer_coeffs() const;

  ScalarExt operator+(const ScalarExt& o) const;
  ScalarExt operator-(const ScalarExt& o) const;
  ScalarExt operator-() const;
  ScalarExt operator*(const ScalarExt& o) const;
  ScalarExt operator/(const ScalarExt& o) const;
  ScalarExt& operator+=(const ScalarExt& o) { return *this = *this + o; }
  ScalarExt& operator*=(const ScalarExt& o) { return *this = *this * o; }
  ScalarExt inverse() const;

  // Equality is cross-multiplication equality with matching t-exponent
  // (zero compares equal to zero whatever the stored exponents).
  bool operator==(const ScalarExt& o) const;
  bool operator!=(const ScalarExt& o) const { return !(*this == o); }

  ScalarExt bar() const;
  ScalarExt with_t_shift(long dt) const;
  // Full gcd reduction regardless of the lazy threshold.
  ScalarExt reduced() const;

  int term_count() const { return num_.term_count() + den_.term_count(); }
  std::string to_string() const;

  // Numeric value with q -> xi already baked in, s -> xi^lambda and
  // t -> exp(i*pi*lambda^2 / (2N)); throws DegenerateSpecialization when the
  // denominator vanishes at this lambda.
  std::complex<double> eval(const std::complex<double>& lambda) const;

 private:
  void canonicalize();

  int level_ = 0;
  SPoly num_, den_;
  long tExp_ = 0;
};

// [k]_q as a ScalarExt (constant in s, t-free).
ScalarExt quantum_integer(int N, long k);
// [lambda + offset]_q = (s q^offset - s^{-1} q^{-offset}) / (q - q^{-1}).
ScalarExt quantum_integer_lambda(int N, long offset);

// Specialisations of the deck variables (x, d): psi and gamma record the two
// conventions in use; etaNumeric carries a concrete lambda and drives
// specialize().
struct SpecializationMap {
  enum class Kind { Psi, Gamma, EtaNumeric };
  Kind kind;
  std::optional<std::complex<double>> lambda;

  static SpecializationMap psi() { return {Kind::Psi, std::nullopt}; }
  static SpecializationMap gamma() { return {Kind::Gamma, std::nullopt}; }
  static SpecializationMap eta(std::complex<double> lam) {
    return {Kind::EtaNumeric, lam};
  }

  ScalarExt map_x(int N) const;
  ScalarExt map_d(int N) const;
};

std::complex<double> specialize(const ScalarExt& x, const SpecializationMap& map);

}  // namespace ado
