#pragma once

#include <complex>

#include "ado/tensor.hpp"

namespace ado {

// Integer Laurent polynomial in one variable t, stored densely from the
// lowest exponent, with no zero ends.
class IntLaurent {
 public:
  IntLaurent() = default;
  IntLaurent(long low, std::vector<long long> coeffs);

  static IntLaurent zero() { return IntLaurent(); }
  static IntLaurent constant(long long v);
  static IntLaurent monomial(long long c, long exp);

  bool is_zero() const { return c_.empty(); }
  long low() const { return low_; }
  long high() const { return low_ + static_cast<long>(c_.size()) - 1; }
  long long coeff(long exp) const;

  IntLaurent operator+(const IntLaurent& o) const;
  IntLaurent operator-(const IntLaurent& o) const;
  IntLaurent operator-() const;
  IntLaurent operator*(const IntLaurent& o) const;
  bool operator==(const IntLaurent& o) const;

  // Exact division; throws std::logic_error when not divisible.
  IntLaurent divide_exact(const IntLaurent& d) const;

  IntLaurent reversed() const;  // t -> 1/t
  long long value_at_one() const;
  std::complex<double> eval(const std::complex<double>& t) const;
  std::string to_string() const;

  // Substitute t -> s^{-2}, producing a ScalarExt at the given level.
  ScalarExt to_scalar(int N) const;

 private:
  void normalize();
  long low_ = 0;
  std::vector<long long> c_;
};

// Alexander polynomial of the knot presented by the braid closure, computed
// from the reduced Burau representation:
//   Delta(t) = det(I - Burau(word)) / (1 + t + ... + t^{n-1}),
// normalised to the symmetric representative with Delta(1) = +1.
// Throws std::invalid_argument if the closure has more than one component.
IntLaurent alexander_burau(const BraidWord& word);

// Reduced Burau matrix of the word, for the representation property tests.
std::vector<std::vector<IntLaurent>> burau_reduced(const BraidWord& word);

// Kashaev invariant of the figure-eight knot via Habiro's sum
//   sum_{k=0}^{N-1} |(omega)_k|^2,  (omega)_k = prod_{j<=k} (1 - omega^j),
// with omega the given root of unity (e^{2 pi i / N} by default).
double kashaev_figure_eight(int N);
double kashaev_figure_eight(int N, std::complex<double> omega);

}  // namespace ado
