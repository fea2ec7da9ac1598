#pragma once

#include "ado/tensor.hpp"

namespace ado {

struct NotInHighestWeightSpace : std::runtime_error {
  explicit NotInHighestWeightSpace(const std::string& what)
      : std::runtime_error(what) {}
};

// The two supported conventions for the s-exponent of the generators fed into
// phi: SectionThree uses s^{sum i*e_i}, SectionTen uses s^{sum (i+1)*e_i}.
// They differ by the global unit s^m per column.
enum class PhiExponent { SectionThree, SectionTen };

// Highest-weight vector of weight m in (U_N^lambda)^{otimes n} attached to
// the partition e in E^N_{n,m}: the sum over k of
//   (-1)^k s^{-k(n-1)} q^{2mk - k(k+1)} / ([lambda][lambda-1]...[lambda-k+1])
//   v_k (x) E^k( s^{exp(e)} v_{e_1} (x) ... (x) v_{e_{n-1}} ).
// The k-th coefficient carries the inverse of the falling quantum factorial,
// which transports the hat-basis construction to the v-basis actions;
// the output is annihilated by act_E_coproduct exactly.
TensorState phi_vector(const Partition& e, int n, int m, int N,
                       PhiExponent convention = PhiExponent::SectionThree);

// Columns of the identification Theta^{N,n} for the parameters
// (2n-1, (n-1)(N-1), N), expressed in the weight-space multi-index basis.
// A prepared exact elimination is stored so that solves are cheap to repeat.
class ThetaMatrix {
 public:
  ThetaMatrix(int n, int N, PhiExponent convention = PhiExponent::SectionThree);

  int braid_strands() const { return n_; }      // tensor factors 2n-1
  int weight() const { return m_; }
  int level() const { return N_; }
  size_t columns() const { return colBasis_.size(); }
  const std::vector<MultiIndex>& row_basis() const { return rowBasis_; }
  const std::vector<Partition>& column_basis() const { return colBasis_; }
  const std::vector<TensorState>& column_states() const { return colStates_; }
  const Matrix& matrix() const { return mat_; }

  // Unique coordinates c with Theta * c = target, by the prepared exact
  // elimination; throws NotInHighestWeightSpace when the system is
  // inconsistent (the target is outside the span).
  std::vector<ScalarExt> solve(const TensorState& target) const;
  std::vector<ScalarExt> solve(std::vector<ScalarExt> rowCoords) const;

  TensorState combine(const std::vector<ScalarExt>& coords) const;
  std::vector<ScalarExt> to_row_coords(const TensorState& state) const;

 private:
  struct RowOp {
    enum class Kind { Scale, AddMul };
    Kind kind;
    size_t dst, src;
    ScalarExt factor;
  };
  void prepare();

  int n_, m_, N_;
  std::vector<MultiIndex> rowBasis_;
  std::map<MultiIndex, size_t> rowLookup_;
  std::vector<Partition> colBasis_;
  std::vector<TensorState> colStates_;
  Matrix mat_;
  std::vector<RowOp> ops_;
  std::vector<size_t> pivotRow_;  // per column
  std::vector<bool> isPivotRow_;
};

ThetaMatrix theta_matrix(int n, int N,
                         PhiExponent convention = PhiExponent::SectionThree);

inline std::vector<ScalarExt> theta_solve(const TensorState& target,
                                          const ThetaMatrix& theta) {
  return theta.solve(target);
}

}  // namespace ado
