#include <doctest.h>

#include <random>

#include "ado/tensor.hpp"

using namespace ado;

namespace {

TensorState random_state(std::mt19937& rng, int N, int factors, int terms) {
  TensorState st(N, factors);
  std::uniform_int_distribution<int> idx(0, N - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int t = 0; t < terms; ++t) {
    MultiIndex m(static_cast<size_t>(factors));
    for (int& v : m) v = idx(rng);
    st.add_term(m, ScalarExt::from_rational(N, make_rat(coeff(rng))) +
                       ScalarExt::q_power(N, 1) *
                           ScalarExt::from_rational(N, make_rat(coeff(rng))));
  }
  return st;
}

BraidWord random_word(std::mt19937& rng, int strands, int length) {
  BraidWord w{strands, {}};
  std::uniform_int_distribution<int> gen(1, strands - 1);
  for (int k = 0; k < length; ++k)
    w.letters.push_back(gen(rng) * (rng() % 2 == 0 ? 1 : -1));
  return w;
}

}  // namespace

TEST_CASE("writhe") {
  CHECK(writhe(BraidWord{2, {1, 1, 1}}) == 3);
  CHECK(writhe(BraidWord{3, {1, -2, 1, -2}}) == 0);
  CHECK(writhe(BraidWord{4, {}}) == 0);
}

TEST_CASE("braid word validation") {
  CHECK_THROWS_AS((BraidWord{2, {3}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((BraidWord{2, {0}}.validate()), std::invalid_argument);
  CHECK_NOTHROW((BraidWord{3, {1, -2}}.validate()));
}

TEST_CASE("K action") {
  const int N = 2;
  TensorState v0 = TensorState::basis_vector(N, {0});
  CHECK(act_K(v0, 1) == v0.scaled(ScalarExt::s_power(N, 1)));
  TensorState v1 = TensorState::basis_vector(N, {1});
  CHECK(act_K(v1, 1) ==
        v1.scaled(ScalarExt::s_power(N, 1) * ScalarExt::q_power(N, -2)));
  TensorState zero(N, 1);
  CHECK(act_K(zero, 1).is_zero());
  CHECK_THROWS_AS(act_K(v0, 2), std::invalid_argument);
}

TEST_CASE("E action") {
  const int N = 3;
  CHECK(act_E(TensorState::basis_vector(N, {0}), 1).is_zero());
  TensorState v0 = TensorState::basis_vector(N, {0});
  CHECK(act_E(TensorState::basis_vector(N, {1}), 1) ==
        v0.scaled(quantum_integer_lambda(N, 0)));
  CHECK(act_E(TensorState::basis_vector(N, {2}), 1) ==
        TensorState::basis_vector(N, {1}).scaled(quantum_integer_lambda(N, -1)));
}

TEST_CASE("F action and truncation") {
  const int N = 3;
  CHECK(act_F(TensorState::basis_vector(N, {0}), 1) ==
        TensorState::basis_vector(N, {1}));
  CHECK(act_F(TensorState::basis_vector(N, {N - 1}), 1).is_zero());
  CHECK(act_F(TensorState(N, 1), 1).is_zero());
}

TEST_CASE("quantum sl2 relations on the truncated module") {
  for (int N = 2; N <= 5; ++N) {
    for (int i = 0; i < N; ++i) {
      TensorState v = TensorState::basis_vector(N, {i});
      // K E = q^2 E K
      CHECK(act_K(act_E(v, 1), 1) ==
            act_E(act_K(v, 1), 1).scaled(ScalarExt::q_power(N, 2)));
      // K F = q^-2 F K
      CHECK(act_K(act_F(v, 1), 1) ==
            act_F(act_K(v, 1), 1).scaled(ScalarExt::q_power(N, -2)));
      // [E,F] = (K - K^-1)/(q - q^-1)
      TensorState lhs = act_E(act_F(v, 1), 1) - act_F(act_E(v, 1), 1);
      ScalarExt qden = ScalarExt::q_power(N, 1) - ScalarExt::q_power(N, -1);
      ScalarExt kval = ScalarExt::s_power(N, 1) * ScalarExt::q_power(N, -2L * i);
      TensorState rhs = v.scaled((kval - kval.inverse()) / qden);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("E coproduct") {
  const int N = 2;
  TensorState v00 = TensorState::basis_vector(N, {0, 0});
  CHECK(act_E_coproduct(v00).is_zero());
  // v1 (x) v0 -> [lambda] s (v0 (x) v0): E at slot 1 sees K on slot 2
  TensorState v10 = TensorState::basis_vector(N, {1, 0});
  CHECK(act_E_coproduct(v10) ==
        v00.scaled(quantum_integer_lambda(N, 0) * ScalarExt::s_power(N, 1)));
  // total index zero dies
  TensorState big = TensorState::basis_vector(3, {0, 0, 0});
  CHECK(act_E_coproduct(big).is_zero());
}

TEST_CASE("R-matrix basics") {
  for (int N = 2; N <= 4; ++N) {
    TensorState v00 = TensorState::basis_vector(N, {0, 0});
    CHECK(r_matrix_apply(v00, 1) == v00.scaled(ScalarExt::t_power(N, 1)));
  }
}

TEST_CASE("R then R inverse is the identity") {
  std::mt19937 rng(71);
  for (int N = 2; N <= 4; ++N) {
    for (int trial = 0; trial < 5; ++trial) {
      TensorState st = random_state(rng, N, 3, 4);
      CHECK(r_matrix_apply(r_matrix_apply(st, 1), 1, true) == st);
      CHECK(r_matrix_apply(r_matrix_apply(st, 2, true), 2) == st);
    }
  }
}

TEST_CASE("R preserves the total weight") {
  std::mt19937 rng(73);
  for (int N : {2, 3}) {
    for (int trial = 0; trial < 6; ++trial) {
      MultiIndex m = {static_cast<int>(rng() % N), static_cast<int>(rng() % N)};
      TensorState st = TensorState::basis_vector(N, m);
      TensorState out = r_matrix_apply(st, 1);
      CHECK(out.homogeneous_weight() == m[0] + m[1]);
    }
  }
}

TEST_CASE("braid matrix contracts") {
  const int N = 2;
  // empty word gives the identity
  Matrix id = braid_matrix(BraidWord{3, {}}, 3, 1, N);
  CHECK(id == Matrix::identity(N, id.rows));

  // sigma sigma^-1 = identity
  Matrix both = braid_matrix(BraidWord{3, {1, -1}}, 3, 1, N);
  CHECK(both == Matrix::identity(N, both.rows));

  // Yang-Baxter on every weight block
  for (int m = 0; m <= 3 * (N - 1); ++m) {
    Matrix lhs = braid_matrix(BraidWord{3, {1, 2, 1}}, 3, m, N);
    Matrix rhs = braid_matrix(BraidWord{3, {2, 1, 2}}, 3, m, N);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("Yang-Baxter and far commutation, exact") {
  for (int N = 2; N <= 4; ++N) {
    for (int m = 0; m <= 2; ++m) {
      CHECK(braid_matrix(BraidWord{3, {1, 2, 1}}, 3, m, N) ==
            braid_matrix(BraidWord{3, {2, 1, 2}}, 3, m, N));
    }
    CHECK(braid_matrix(BraidWord{4, {1, 3}}, 4, 2, N) ==
          braid_matrix(BraidWord{4, {3, 1}}, 4, 2, N));
  }
}

TEST_CASE("weight blocks are preserved for random words") {
  std::mt19937 rng(79);
  for (int N = 2; N <= 4; ++N) {
    for (int n = 2; n <= 4; ++n) {
      for (int trial = 0; trial < 3; ++trial) {
        BraidWord w = random_word(rng, n, 4);
        // braid_matrix throws if a word ever leaves the block
        CHECK_NOTHROW(braid_matrix(w, n, std::min(2, n * (N - 1)), N));
      }
    }
  }
}

TEST_CASE("t-exponent of braid matrices is the writhe") {
  std::mt19937 rng(83);
  for (int trial = 0; trial < 6; ++trial) {
    BraidWord w = random_word(rng, 3, 3);
    Matrix m = braid_matrix(w, 3, 2, 2);
    for (const auto& row : m.a)
      for (const ScalarExt& x : row)
        if (!x.is_zero()) CHECK(x.t_exp() == writhe(w));
  }
}

TEST_CASE("representation property: words multiply") {
  const int N = 2;
  BraidWord w1{3, {1, -2}};
  BraidWord w2{3, {2, 2, 1}};
  BraidWord cat{3, {1, -2, 2, 2, 1}};
  Matrix m1 = braid_matrix(w1, 3, 1, N);
  Matrix m2 = braid_matrix(w2, 3, 1, N);
  // letters act left-to-right, so the concatenation is m2 * m1
  CHECK(braid_matrix(cat, 3, 1, N) == m2 * m1);
}
