#include "ado/lawrence.hpp"

#include <mutex>

namespace ado {

CoevCoefficients coev_coefficients(int n, int N) {
  if (n < 2) throw std::invalid_argument("coev_coefficients: n >= 2");
  CoevCoefficients table;
  table.n = n;
  table.N = N;
  table.c.resize(static_cast<size_t>(n - 1));
  for (int k = 1; k <= n - 1; ++k) {
    auto& row = table.c[static_cast<size_t>(k - 1)];
    row.reserve(static_cast<size_t>(N));
    row.push_back(ScalarExt::one(N));
    for (int i = 0; i + 1 <= N - 1; ++i) {
      ScalarExt ratio = -(quantum_integer_lambda(N, 2 - N + i) /
                          quantum_integer_lambda(N, -i)) *
                        ScalarExt::s_power(N, -(2L * k - 1)) *
                        ScalarExt::q_power(N, 2L * k * (N - 1) - 2L * (i + 1));
      row.push_back((row.back() * ratio).reduced());
    }
  }
  return table;
}

TensorState w_coev(int n, int N, CoevOrdering ordering) {
  const CoevCoefficients table = coev_coefficients(n, N);
  const int pairs = n - 1;
  TensorState out(N, 2 * pairs);
  std::vector<int> tuple(static_cast<size_t>(pairs), 0);
  for (;;) {
    ScalarExt coeff = ScalarExt::one(N);
    for (int k = 1; k <= pairs; ++k)
      coeff *= table.at(k, tuple[static_cast<size_t>(k - 1)]);
    MultiIndex idx(static_cast<size_t>(2 * pairs), 0);
    for (int p = 1; p <= pairs; ++p) {
      const int strandRow = (ordering == CoevOrdering::RowOutermost)
                                ? n - p       // slot p carries i_{n-p}
                                : p;          // flipped variant
      const int dualRow = (ordering == CoevOrdering::RowOutermost)
                              ? p             // slot pairs+p carries N-1-i_p
                              : n - p;
      idx[static_cast<size_t>(p - 1)] = tuple[static_cast<size_t>(strandRow - 1)];
      idx[static_cast<size_t>(pairs + p - 1)] =
          N - 1 - tuple[static_cast<size_t>(dualRow - 1)];
    }
    out.add_term(idx, coeff);
    int pos = 0;
    while (pos < pairs && tuple[static_cast<size_t>(pos)] == N - 1) {
      tuple[static_cast<size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == pairs) break;
    ++tuple[static_cast<size_t>(pos)];
  }
  return out;
}

namespace {

// ev->(v (x) f) = f(K^{1-N} v): the twist picked up by the matched index a.
ScalarExt ev_twist(int N, int a) {
  return ScalarExt::s_power(N, 1 - N) *
         ScalarExt::q_power(N, 2L * a * (N - 1));
}

}  // namespace

LawrenceContext::LawrenceContext(int n, int N, PhiExponent phi,
                                 CoevOrdering ordering,
                                 PairingInvolution involution)
    : n_(n), N_(N), involution_(involution), theta_(n, N, phi),
      coev_(n >= 2 ? coev_coefficients(n, N) : CoevCoefficients{n, N, {}}) {
  // F: coordinates of v_0 (x) w_coev through Theta.
  TensorState target(N, 2 * n - 1);
  if (n == 1) {
    target.add_term({0}, ScalarExt::one(N));
  } else {
    const TensorState coevState = w_coev(n, N, ordering);
    for (const auto& [idx, c] : coevState.terms()) {
      MultiIndex full;
      full.reserve(static_cast<size_t>(2 * n - 1));
      full.push_back(0);
      full.insert(full.end(), idx.begin(), idx.end());
      target.add_term(full, c);
    }
  }
  std::vector<ScalarExt> fcoords = theta_.solve(target);
  for (ScalarExt& c : fcoords) c = c.reduced();
  f_ = HomologyClass{HomologyClass::Side::Multifork, n, N, std::move(fcoords)};

  // G: the evaluation functional on each Theta column, transported to scan
  // coordinates by the identity pairing matrix.
  evRow_.reserve(theta_.columns());
  for (const TensorState& col : theta_.column_states())
    evRow_.push_back(evaluate(col).reduced());
  std::vector<ScalarExt> gcoords = evRow_;
  if (involution_ == PairingInvolution::Bar)
    for (ScalarExt& c : gcoords) c = c.bar();
  g_ = HomologyClass{HomologyClass::Side::Scan, n, N, std::move(gcoords)};
}

ScalarExt LawrenceContext::evaluate(const TensorState& state) const {
  if (state.factors() != 2 * n_ - 1)
    throw std::invalid_argument("evaluate: wrong tensor length");
  ScalarExt acc = ScalarExt::zero(N_);
  for (const auto& [idx, c] : state.terms()) {
    if (idx[0] != 0) continue;  // pi_{v_0}
    ScalarExt f = c;
    bool alive = true;
    for (int r = 1; r <= n_ - 1 && alive; ++r) {
      const int a = idx[static_cast<size_t>(n_ - r)];          // strand n+1-r
      const int b = idx[static_cast<size_t>(n_ + r - 1)];      // dual slot n+r
      if (a != N_ - 1 - b) {
        alive = false;
        break;
      }
      // invert f_r (anti-diagonal with coefficient c[r][N-1-b]), then ev->
      f = f * ev_twist(N_, a) / coev_.at(r, N_ - 1 - b);
    }
    if (alive) acc += f;
  }
  return acc;
}

HomologyClass LawrenceContext::action(const BraidWord& word,
                                      const HomologyClass& cls) const {
  if (cls.side != HomologyClass::Side::Multifork)
    throw std::invalid_argument("lawrence_action acts on multifork classes");
  if (cls.n != n_ || cls.N != N_)
    throw std::invalid_argument("lawrence_action: parameter mismatch");
  if (word.strands != 2 * n_ - 1)
    throw std::invalid_argument("lawrence_action: word must live in B_{2n-1}");
  word.validate();
  TensorState state = theta_.combine(cls.coords);
  for (int l : word.letters) state = r_matrix_apply(state, std::abs(l), l < 0);
  return HomologyClass{HomologyClass::Side::Multifork, n_, N_,
                       theta_.solve(state)};
}

const LawrenceContext& lawrence_context(int n, int N) {
  static std::map<std::pair<int, int>, std::unique_ptr<LawrenceContext>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(n, N);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<LawrenceContext>(n, N)).first;
  return *it->second;
}

HomologyClass f_class(int n, int N) { return lawrence_context(n, N).f(); }

std::vector<ScalarExt> ev_functional(int n, int N) {
  return lawrence_context(n, N).ev_row();
}

HomologyClass g_class(int n, int N) { return lawrence_context(n, N).g(); }

ScalarExt pairing(const HomologyClass& a, const HomologyClass& b,
                  PairingInvolution involution) {
  if (a.n != b.n || a.N != b.N)
    throw std::invalid_argument("pairing: parameter mismatch");
  if (a.side != HomologyClass::Side::Multifork ||
      b.side != HomologyClass::Side::Scan)
    throw std::invalid_argument("pairing takes (multifork, scan)");
  if (a.coords.size() != b.coords.size())
    throw std::invalid_argument("pairing: coordinate length mismatch");
  ScalarExt acc = ScalarExt::zero(a.N);
  for (size_t e = 0; e < a.coords.size(); ++e) {
    const ScalarExt rhs = (involution == PairingInvolution::Bar)
                              ? b.coords[e].bar()
                              : b.coords[e];
    acc += a.coords[e] * rhs;
  }
  return acc;
}

HomologyClass lawrence_action(const BraidWord& word, const HomologyClass& cls) {
  return lawrence_context(cls.n, cls.N).action(word, cls);
}

}  // namespace ado
