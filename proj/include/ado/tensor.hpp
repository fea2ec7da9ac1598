#pragma once

#include <map>
#include <string>
#include <vector>

#include "ado/partitions.hpp"
#include "ado/scalar.hpp"

namespace ado {

// Word in the braid group B_n: letters are signed generator indices,
// +i / -i meaning sigma_i^{+1} / sigma_i^{-1}, 1 <= i <= n-1.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  void validate() const;
  BraidWord mirrored() const;
  // Permutation of strand endpoints induced by the closure (0-based).
  std::vector<int> permutation() const;
  std::string to_string() const;
};

int writhe(const BraidWord& word);

using MultiIndex = std::vector<int>;

// Sparse vector in (U_N^lambda)^{otimes k}: multi-indices (i_1,...,i_k) with
// 0 <= i_j <= N-1 mapping to ScalarExt coefficients. Zero coefficients are
// never stored.
class TensorState {
 public:
  TensorState() = default;
  TensorState(int N, int factors) : level_(N), factors_(factors) {}

  static TensorState basis_vector(int N, const MultiIndex& idx);

  int level() const { return level_; }
  int factors() const { return factors_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<MultiIndex, ScalarExt>& terms() const { return terms_; }

  void add_term(const MultiIndex& idx, const ScalarExt& c);
  ScalarExt coeff(const MultiIndex& idx) const;

  TensorState operator+(const TensorState& o) const;
  TensorState operator-(const TensorState& o) const;
  TensorState scaled(const ScalarExt& c) const;

  bool operator==(const TensorState& o) const;

  // Total index sum shared by every stored term; throws when the state is
  // not weight-homogeneous.
  int homogeneous_weight() const;

 private:
  int level_ = 0;
  int factors_ = 0;
  std::map<MultiIndex, ScalarExt> terms_;
};

// Quantum group actions on tensor factors (positions are 1-based).
TensorState act_K(const TensorState& state, int position);
TensorState act_E(const TensorState& state, int position);
TensorState act_F(const TensorState& state, int position);
// K applied to every factor; states of uniform weight are eigenvectors.
TensorState act_K_total(const TensorState& state);
// E via the iterated comultiplication Delta(E) = E (x) K + 1 (x) E:
// sum over j of Id^(j-1) (x) E (x) K^(k-j).
TensorState act_E_coproduct(const TensorState& state);

// Braiding of adjacent factors (position, position+1): the R-matrix of the
// truncated Verma module composed with the flip, or its exact inverse.
// Every application shifts the t-exponent by +1 (-1 for the inverse).
TensorState r_matrix_apply(const TensorState& state, int position,
                           bool inverse = false);

struct Matrix {
  size_t rows = 0, cols = 0;
  std::vector<std::vector<ScalarExt>> a;

  Matrix() = default;
  Matrix(size_t r, size_t c, const ScalarExt& fill)
      : rows(r), cols(c), a(r, std::vector<ScalarExt>(c, fill)) {}
  static Matrix identity(int N, size_t n);
  Matrix operator*(const Matrix& o) const;
  std::vector<ScalarExt> apply(const std::vector<ScalarExt>& v) const;
  bool operator==(const Matrix& o) const;
};

// Matrix of the braid word on the weight-m block of (U_N^lambda)^{otimes
// totalFactors}; rows and columns follow the canonical partition order of
// enumerate(totalFactors+1, m, N).
Matrix braid_matrix(const BraidWord& word, int totalFactors, int weight, int N);

// The block basis itself (length-totalFactors multi-indices, entries <= N-1,
// summing to weight, canonical order).
std::vector<MultiIndex> weight_basis(int n, int m, int N);

}  // namespace ado
