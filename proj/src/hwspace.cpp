#include "ado/hwspace.hpp"

namespace ado {

TensorState phi_vector(const Partition& e, int n, int m, int N,
                       PhiExponent convention) {
  if (static_cast<int>(e.parts.size()) != n - 1)
    throw std::invalid_argument("phi_vector: partition length must be n-1");
  for (int p : e.parts)
    if (p < 0 || p > N - 1)
      throw std::invalid_argument("phi_vector: partition not in E^N");

  long sexp = 0;
  for (size_t i = 0; i < e.parts.size(); ++i) {
    const long pos = static_cast<long>(i) + 1;
    sexp += (convention == PhiExponent::SectionThree ? pos : pos + 1) *
            e.parts[i];
  }

  TensorState gen(N, n - 1);
  gen.add_term(e.parts, ScalarExt::s_power(N, sexp));

  TensorState out(N, n);
  ScalarExt unitDivisor = ScalarExt::one(N);  // [lambda][lambda-1]...[lambda-k+1]
  TensorState acc = gen;                      // E^k of the generator
  for (int k = 0; k <= N - 1; ++k) {
    if (k > 0) {
      acc = act_E_coproduct(acc);
      unitDivisor *= quantum_integer_lambda(N, -(k - 1));
    }
    if (acc.is_zero()) break;
    ScalarExt coeff = ScalarExt::s_power(N, -static_cast<long>(k) * (n - 1)) *
                      ScalarExt::q_power(N, 2L * m * k - static_cast<long>(k) * (k + 1)) /
                      unitDivisor;
    if (k % 2 == 1) coeff = -coeff;
    for (const auto& [idx, c] : acc.terms()) {
      MultiIndex full;
      full.reserve(static_cast<size_t>(n));
      full.push_back(k);
      full.insert(full.end(), idx.begin(), idx.end());
      out.add_term(full, c * coeff);
    }
  }
  return out;
}

ThetaMatrix::ThetaMatrix(int n, int N, PhiExponent convention)
    : n_(n), m_((n - 1) * (N - 1)), N_(N) {
  const int factors = 2 * n - 1;
  rowBasis_ = weight_basis(factors, m_, N);
  for (size_t r = 0; r < rowBasis_.size(); ++r) rowLookup_.emplace(rowBasis_[r], r);
  colBasis_ = enumerate(factors, m_, N);

  mat_ = Matrix(rowBasis_.size(), colBasis_.size(), ScalarExt::zero(N));
  colStates_.reserve(colBasis_.size());
  for (size_t c = 0; c < colBasis_.size(); ++c) {
    TensorState col = phi_vector(colBasis_[c], factors, m_, N, convention);
    for (const auto& [idx, coeff] : col.terms()) {
      auto it = rowLookup_.find(idx);
      if (it == rowLookup_.end())
        throw std::logic_error("theta column leaves the weight space");
      mat_.a[it->second][c] = coeff;
    }
    colStates_.push_back(std::move(col));
  }
  prepare();
}

// Gauss-Jordan elimination recorded as replayable row operations. Pivots are
// chosen by smallest stored term count to limit expression swell; after all
// columns are processed the non-pivot rows of E*Theta are zero, which is what
// the consistency check replays against targets.
void ThetaMatrix::prepare() {
  const size_t rows = mat_.rows, cols = mat_.cols;
  Matrix w = mat_;
  pivotRow_.assign(cols, 0);
  isPivotRow_.assign(rows, false);

  for (size_t c = 0; c < cols; ++c) {
    size_t best = rows;
    int bestCount = 0;
    for (size_t r = 0; r < rows; ++r) {
      if (isPivotRow_[r] || w.a[r][c].is_zero()) continue;
      int count = w.a[r][c].term_count();
      if (best == rows || count < bestCount) {
        best = r;
        bestCount = count;
      }
    }
    if (best == rows)
      throw std::logic_error("theta matrix does not have full column rank");
    pivotRow_[c] = best;
    isPivotRow_[best] = true;

    ScalarExt inv = w.a[best][c].inverse();
    ops_.push_back({RowOp::Kind::Scale, best, best, inv});
    for (size_t j = 0; j < cols; ++j) w.a[best][j] = w.a[best][j] * inv;

    for (size_t r = 0; r < rows; ++r) {
      if (r == best || w.a[r][c].is_zero()) continue;
      ScalarExt f = -w.a[r][c];
      ops_.push_back({RowOp::Kind::AddMul, r, best, f});
      for (size_t j = 0; j < cols; ++j)
        w.a[r][j] = w.a[r][j] + f * w.a[best][j];
    }
  }
}

std::vector<ScalarExt> ThetaMatrix::to_row_coords(const TensorState& state) const {
  std::vector<ScalarExt> v(rowBasis_.size(), ScalarExt::zero(N_));
  for (const auto& [idx, c] : state.terms()) {
    auto it = rowLookup_.find(idx);
    if (it == rowLookup_.end())
      throw NotInHighestWeightSpace("target outside the weight block");
    v[it->second] = c;
  }
  return v;
}

std::vector<ScalarExt> ThetaMatrix::solve(const TensorState& target) const {
  return solve(to_row_coords(target));
}

std::vector<ScalarExt> ThetaMatrix::solve(std::vector<ScalarExt> t) const {
  if (t.size() != rowBasis_.size())
    throw std::invalid_argument("theta_solve: wrong coordinate length");
  for (const RowOp& op : ops_) {
    switch (op.kind) {
      case RowOp::Kind::Scale:
        t[op.dst] = t[op.dst] * op.factor;
        break;
      case RowOp::Kind::AddMul:
        t[op.dst] = t[op.dst] + op.factor * t[op.src];
        break;
    }
  }
  for (size_t r = 0; r < t.size(); ++r) {
    if (!isPivotRow_[r] && !t[r].is_zero())
      throw NotInHighestWeightSpace("inconsistent system: nonzero residual");
  }
  std::vector<ScalarExt> x;
  x.reserve(pivotRow_.size());
  for (size_t c = 0; c < pivotRow_.size(); ++c) x.push_back(t[pivotRow_[c]]);
  return x;
}

TensorState ThetaMatrix::combine(const std::vector<ScalarExt>& coords) const {
  if (coords.size() != colStates_.size())
    throw std::invalid_argument("combine: wrong coordinate length");
  TensorState out(N_, 2 * n_ - 1);
  for (size_t c = 0; c < coords.size(); ++c) {
    if (coords[c].is_zero()) continue;
    for (const auto& [idx, v] : colStates_[c].terms())
      out.add_term(idx, v * coords[c]);
  }
  return out;
}

ThetaMatrix theta_matrix(int n, int N, PhiExponent convention) {
  return ThetaMatrix(n, N, convention);
}

}  // namespace ado
