#include "ado/tensor.hpp"

#include <mutex>
#include <numeric>
#include <sstream>

namespace ado {

void BraidWord::validate() const {
  if (strands < 1) throw std::invalid_argument("braid word: strands >= 1");
  for (int l : letters) {
    if (l == 0 || std::abs(l) >= strands)
      throw std::invalid_argument("braid word: generator index out of range");
  }
}

BraidWord BraidWord::mirrored() const {
  BraidWord w = *this;
  for (int& l : w.letters) l = -l;
  return w;
}

std::vector<int> BraidWord::permutation() const {
  std::vector<int> p(static_cast<size_t>(strands));
  std::iota(p.begin(), p.end(), 0);
  for (int l : letters) {
    int i = std::abs(l) - 1;
    std::swap(p[static_cast<size_t>(i)], p[static_cast<size_t>(i) + 1]);
  }
  return p;
}

std::string BraidWord::to_string() const {
  std::ostringstream os;
  os << "B" << strands << ":";
  for (int l : letters) os << " " << l;
  return os.str();
}

int writhe(const BraidWord& word) {
  int w = 0;
  for (int l : word.letters) w += (l > 0) ? 1 : -1;
  return w;
}

TensorState TensorState::basis_vector(int N, const MultiIndex& idx) {
  for (int v : idx)
    if (v < 0 || v > N - 1)
      throw std::invalid_argument("TensorState: index outside 0..N-1");
  TensorState st(N, static_cast<int>(idx.size()));
  st.add_term(idx, ScalarExt::one(N));
  return st;
}

void TensorState::add_term(const MultiIndex& idx, const ScalarExt& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(idx.size()) != factors_)
    throw std::invalid_argument("TensorState: wrong multi-index length");
  auto it = terms_.find(idx);
  if (it == terms_.end()) {
    terms_.emplace(idx, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ScalarExt TensorState::coeff(const MultiIndex& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? ScalarExt::zero(level_) : it->second;
}

TensorState TensorState::operator+(const TensorState& o) const {
  TensorState r = *this;
  for (const auto& [idx, c] : o.terms_) r.add_term(idx, c);
  return r;
}

TensorState TensorState::operator-(const TensorState& o) const {
  TensorState r = *this;
  for (const auto& [idx, c] : o.terms_) r.add_term(idx, -c);
  return r;
}

TensorState TensorState::scaled(const ScalarExt& c) const {
  TensorState r(level_, factors_);
  if (c.is_zero()) return r;
  for (const auto& [idx, x] : terms_) r.add_term(idx, x * c);
  return r;
}

bool TensorState::operator==(const TensorState& o) const {
  if (factors_ != o.factors_) return false;
  return (*this - o).is_zero();
}

int TensorState::homogeneous_weight() const {
  if (terms_.empty()) throw std::logic_error("weight of the zero state");
  int w = -1;
  for (const auto& [idx, c] : terms_) {
    int s = std::accumulate(idx.begin(), idx.end(), 0);
    if (w < 0) w = s;
    if (s != w) throw std::logic_error("state is not weight-homogeneous");
  }
  return w;
}

namespace {

void check_position(const TensorState& st, int position, int span) {
  if (position < 1 || position + span - 1 > st.factors())
    throw std::invalid_argument("tensor position out of range");
}

}  // namespace

TensorState act_K(const TensorState& state, int position) {
  check_position(state, position, 1);
  const int N = state.level();
  TensorState out(N, state.factors());
  for (const auto& [idx, c] : state.terms()) {
    // K v_i = q^{lambda - 2i} v_i = s q^{-2i} v_i
    ScalarExt f = ScalarExt::s_power(N, 1) *
                  ScalarExt::q_power(N, -2L * idx[static_cast<size_t>(position - 1)]);
    out.add_term(idx, c * f);
  }
  return out;
}

TensorState act_K_total(const TensorState& state) {
  TensorState out = state;
  for (int p = 1; p <= state.factors(); ++p) out = act_K(out, p);
  return out;
}

TensorState act_E(const TensorState& state, int position) {
  check_position(state, position, 1);
  const int N = state.level();
  TensorState out(N, state.factors());
  for (const auto& [idx, c] : state.terms()) {
    const int i = idx[static_cast<size_t>(position - 1)];
    if (i == 0) continue;  // E v_0 = 0
    MultiIndex jdx = idx;
    jdx[static_cast<size_t>(position - 1)] = i - 1;
    out.add_term(jdx, c * quantum_integer_lambda(N, 1 - i));
  }
  return out;
}

TensorState act_F(const TensorState& state, int position) {
  check_position(state, position, 1);
  const int N = state.level();
  TensorState out(N, state.factors());
  for (const auto& [idx, c] : state.terms()) {
    const int i = idx[static_cast<size_t>(position - 1)];
    if (i + 1 > N - 1) continue;  // [N]_xi = 0 truncation
    MultiIndex jdx = idx;
    jdx[static_cast<size_t>(position - 1)] = i + 1;
    out.add_term(jdx, c * quantum_integer(N, i + 1));
  }
  return out;
}

TensorState act_E_coproduct(const TensorState& state) {
  const int N = state.level();
  const int k = state.factors();
  TensorState out(N, k);
  for (const auto& [idx, c] : state.terms()) {
    // walk j from the right so the K-eigenvalue product accumulates cheaply
    ScalarExt kfac = ScalarExt::one(N);
    for (int j = k; j >= 1; --j) {
      const int i = idx[static_cast<size_t>(j - 1)];
      if (i > 0) {
        MultiIndex jdx = idx;
        jdx[static_cast<size_t>(j - 1)] = i - 1;
        out.add_term(jdx, c * quantum_integer_lambda(N, 1 - i) * kfac);
      }
      kfac *= ScalarExt::s_power(N, 1) * ScalarExt::q_power(N, -2L * i);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// R-matrix tables

namespace {

struct RTable {
  // entries[i][j] -> list of (a, b, coeff) with R^{+-1}(v_i (x) v_j) =
  // sum coeff * v_a (x) v_b
  std::vector<std::vector<std::vector<std::tuple<int, int, ScalarExt>>>> fwd,
      inv;
};

// Gauss-Jordan inverse over the exact field; used for the tiny weight blocks
// of the two-factor braiding.
Matrix invert_matrix(const Matrix& m, int N) {
  const size_t n = m.rows;
  Matrix w = m;
  Matrix r = Matrix::identity(N, n);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && w.a[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::logic_error("invert_matrix: singular block");
    std::swap(w.a[piv], w.a[col]);
    std::swap(r.a[piv], r.a[col]);
    ScalarExt d = w.a[col][col].inverse();
    for (size_t j = 0; j < n; ++j) {
      w.a[col][j] = w.a[col][j] * d;
      r.a[col][j] = r.a[col][j] * d;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col || w.a[i][col].is_zero()) continue;
      ScalarExt f = w.a[i][col];
      for (size_t j = 0; j < n; ++j) {
        w.a[i][j] = w.a[i][j] - f * w.a[col][j];
        r.a[i][j] = r.a[i][j] - f * r.a[col][j];
      }
    }
  }
  return r;
}

const RTable& r_table(int N) {
  static std::map<int, RTable> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;

  RTable t;
  t.fwd.assign(static_cast<size_t>(N),
               std::vector<std::vector<std::tuple<int, int, ScalarExt>>>(
                   static_cast<size_t>(N)));
  t.inv = t.fwd;

  const ScalarExt braces1 =
      ScalarExt::from_cyc(CycScalar::xi_power(N, 1) - CycScalar::xi_power(N, -1));

  // Braiding R o tau with the diagonal q^{H (x) H / 2} applied after the
  // E^n (x) F^n part:
  //   R(v_i (x) v_j) = sum_n  q^{n(n-1)/2} {1}^n / [n]!
  //                    * prod_{l=1..n} [lambda+l-i] * prod_{l=1..n} [j+l]
  //                    * q^{(lambda-2(i-n))(lambda-2(j+n))/2}
  //                    * v_{j+n} (x) v_{i-n}
  // with the diagonal factored as t * s^{-(i+j)} * q^{2(i-n)(j+n)}.
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      ScalarExt series = ScalarExt::one(N);   // {1}^n / [n]! * products
      for (int n = 0; n <= i && j + n <= N - 1; ++n) {
        if (n > 0) {
          series *= braces1 * quantum_integer_lambda(N, n - i) *
                    quantum_integer(N, j + n) /
                    quantum_integer(N, n);
        }
        const int a = j + n, b = i - n;
        ScalarExt coeff = series * ScalarExt::q_power(N, n * (n - 1) / 2) *
                          ScalarExt::t_power(N, 1) *
                          ScalarExt::s_power(N, -(i + j)) *
                          ScalarExt::q_power(N, 2L * b * a);
        if (!coeff.is_zero())
          t.fwd[static_cast<size_t>(i)][static_cast<size_t>(j)].emplace_back(
              a, b, coeff);
      }
    }
  }

  // exact inverse, one weight block at a time
  for (int w = 0; w <= 2 * (N - 1); ++w) {
    std::vector<std::pair<int, int>> basis;
    for (int i = std::max(0, w - (N - 1)); i <= std::min(N - 1, w); ++i)
      basis.emplace_back(i, w - i);
    const size_t dim = basis.size();
    Matrix block(dim, dim, ScalarExt::zero(N));
    for (size_t c = 0; c < dim; ++c) {
      auto [i, j] = basis[c];
      for (const auto& [a, b, coeff] :
           t.fwd[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
        size_t r = 0;
        while (r < dim && basis[r] != std::make_pair(a, b)) ++r;
        if (r == dim)
          throw std::logic_error("r_table: braiding left its weight block");
        block.a[r][c] = coeff;
      }
    }
    Matrix ib = invert_matrix(block, N);
    for (size_t c = 0; c < dim; ++c) {
      auto [i, j] = basis[c];
      for (size_t r = 0; r < dim; ++r) {
        if (ib.a[r][c].is_zero()) continue;
        auto [a, b] = basis[r];
        t.inv[static_cast<size_t>(i)][static_cast<size_t>(j)].emplace_back(
            a, b, ib.a[r][c]);
      }
    }
  }

  auto [pos, inserted] = cache.emplace(N, std::move(t));
  return pos->second;
}

}  // namespace

TensorState r_matrix_apply(const TensorState& state, int position,
                           bool inverse) {
  check_position(state, position, 2);
  const int N = state.level();
  const RTable& table = r_table(N);
  const auto& entries = inverse ? table.inv : table.fwd;
  TensorState out(N, state.factors());
  for (const auto& [idx, c] : state.terms()) {
    const int i = idx[static_cast<size_t>(position - 1)];
    const int j = idx[static_cast<size_t>(position)];
    for (const auto& [a, b, coeff] :
         entries[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
      MultiIndex jdx = idx;
      jdx[static_cast<size_t>(position - 1)] = a;
      jdx[static_cast<size_t>(position)] = b;
      out.add_term(jdx, c * coeff);
    }
  }
  return out;
}

Matrix Matrix::identity(int N, size_t n) {
  Matrix m(n, n, ScalarExt::zero(N));
  for (size_t i = 0; i < n; ++i) m.a[i][i] = ScalarExt::one(N);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("matrix shape mismatch");
  Matrix r(rows, o.cols, ScalarExt());
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < o.cols; ++j) {
      ScalarExt acc;
      bool seeded = false;
      for (size_t k = 0; k < cols; ++k) {
        if (a[i][k].is_zero() || o.a[k][j].is_zero()) continue;
        ScalarExt p = a[i][k] * o.a[k][j];
        acc = seeded ? acc + p : p;
        seeded = true;
      }
      r.a[i][j] = seeded ? acc : ScalarExt::zero(a[i][0].level());
    }
  }
  return r;
}

std::vector<ScalarExt> Matrix::apply(const std::vector<ScalarExt>& v) const {
  if (v.size() != cols) throw std::invalid_argument("matrix shape mismatch");
  std::vector<ScalarExt> out;
  out.reserve(rows);
  for (size_t i = 0; i < rows; ++i) {
    ScalarExt acc = ScalarExt::zero(a[i][0].level());
    for (size_t k = 0; k < cols; ++k) {
      if (a[i][k].is_zero() || v[k].is_zero()) continue;
      acc += a[i][k] * v[k];
    }
    out.push_back(acc);
  }
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows != o.rows || cols != o.cols) return false;
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j)
      if (!(a[i][j] == o.a[i][j])) return false;
  return true;
}

std::vector<MultiIndex> weight_basis(int n, int m, int N) {
  std::vector<MultiIndex> out;
  for (const Partition& p : enumerate(n + 1, m, N)) out.push_back(p.parts);
  return out;
}

Matrix braid_matrix(const BraidWord& word, int totalFactors, int weight, int N) {
  for (int l : word.letters) {
    if (l == 0 || std::abs(l) >= totalFactors)
      throw std::invalid_argument("braid_matrix: letter index out of range");
  }
  std::vector<MultiIndex> basis = weight_basis(totalFactors, weight, N);
  std::map<MultiIndex, size_t> lookup;
  for (size_t r = 0; r < basis.size(); ++r) lookup.emplace(basis[r], r);

  Matrix m(basis.size(), basis.size(), ScalarExt::zero(N));
  for (size_t c = 0; c < basis.size(); ++c) {
    TensorState st = TensorState::basis_vector(N, basis[c]);
    for (int l : word.letters) st = r_matrix_apply(st, std::abs(l), l < 0);
    for (const auto& [idx, coeff] : st.terms()) {
      auto it = lookup.find(idx);
      if (it == lookup.end())
        throw std::logic_error("braid_matrix: weight block not preserved");
      m.a[it->second][c] = coeff;
    }
  }
  return m;
}

}  // namespace ado
