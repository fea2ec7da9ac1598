#include "ado/ado.hpp"

#include <random>
#include <sstream>

namespace ado {

namespace {

// ev->(v (x) f) = f(K^{1-N} v) picked up on the matched index a; shared with
// the Lawrence evaluation so both pipelines use one pivot convention.
ScalarExt ev_twist(int N, int a) {
  return ScalarExt::s_power(N, 1 - N) * ScalarExt::q_power(N, 2L * a * (N - 1));
}

ScalarExt normalized_value(ScalarExt raw, int N, int w) {
  if (raw.is_zero()) return raw;
  if (raw.t_exp() != w)
    throw std::logic_error("raw invariant does not carry t^writhe");
  return (raw * ScalarExt::s_power(N, static_cast<long>(N - 1) * w))
      .with_t_shift(-w)
      .reduced();
}

}  // namespace

AdoResult ado_direct(const BraidWord& word, int N) {
  word.validate();
  if (N < 1) throw std::invalid_argument("colour N must be >= 1");
  const int n = word.strands;
  const int factors = 2 * n - 1;

  // Cut strand at slot 1 carrying v_0; coev^{j} creates the pair
  // (strand j+1, dual slot 2n-j), nesting the caps around the right side.
  TensorState state(N, factors);
  {
    std::vector<int> tuple(static_cast<size_t>(n - 1), 0);
    for (;;) {
      MultiIndex idx(static_cast<size_t>(factors), 0);
      for (int j = 2; j <= n; ++j) {
        const int v = tuple[static_cast<size_t>(j - 2)];
        idx[static_cast<size_t>(j - 1)] = v;
        idx[static_cast<size_t>(2 * n - j)] = v;
      }
      state.add_term(idx, ScalarExt::one(N));
      size_t pos = 0;
      while (pos < tuple.size() && tuple[pos] == N - 1) tuple[pos++] = 0;
      if (pos == tuple.size()) break;
      ++tuple[pos];
    }
  }

  for (int l : word.letters) state = r_matrix_apply(state, std::abs(l), l < 0);

  ScalarExt raw = ScalarExt::zero(N);
  for (const auto& [idx, c] : state.terms()) {
    if (idx[0] != 0) continue;  // pi_{v_0}
    ScalarExt f = c;
    bool alive = true;
    for (int j = 2; j <= n && alive; ++j) {
      const int a = idx[static_cast<size_t>(j - 1)];
      if (a != idx[static_cast<size_t>(2 * n - j)]) {
        alive = false;
        break;
      }
      f = f * ev_twist(N, a);
    }
    if (alive) raw += f;
  }

  const int w = writhe(word);
  return AdoResult{normalized_value(raw, N, w), n, N, word,
                   AdoResult::Method::Direct, w};
}

AdoResult ado_topological(const BraidWord& word, int N) {
  word.validate();
  if (N < 1) throw std::invalid_argument("colour N must be >= 1");
  const int n = word.strands;
  const LawrenceContext& ctx = lawrence_context(n, N);

  BraidWord extended{2 * n - 1, word.letters};
  HomologyClass moved = ctx.action(extended, ctx.f());
  ScalarExt raw = pairing(moved, ctx.g(), ctx.involution());

  const int w = writhe(word);
  return AdoResult{normalized_value(raw, N, w), n, N, word,
                   AdoResult::Method::Topological, w};
}

MarkovReport markov_check(const BraidWord& word, int N, int samples,
                          unsigned seed) {
  word.validate();
  MarkovReport report;
  const ScalarExt base = ado_direct(word, N).value;

  auto check = [&](const BraidWord& moved, const std::string& what) {
    ++report.checks;
    if (!(ado_direct(moved, N).value == base)) {
      ++report.failures;
      report.failed.push_back(what + " on " + word.to_string());
    }
  };

  // both stabilisations
  for (int sign : {+1, -1}) {
    BraidWord stab{word.strands + 1, word.letters};
    stab.letters.push_back(sign * word.strands);
    std::ostringstream what;
    what << "stabilisation " << (sign > 0 ? "+" : "-");
    check(stab, what.str());
  }
  // conjugation by every generator, then random conjugators up to `samples`
  std::mt19937 rng(seed);
  auto conjugate = [&](int g) {
    BraidWord conj = word;
    conj.letters.insert(conj.letters.begin(), g);
    conj.letters.push_back(-g);
    std::ostringstream what;
    what << "conjugation by " << g;
    check(conj, what.str());
  };
  for (int g = 1; g < word.strands; ++g) {
    conjugate(g);
    conjugate(-g);
  }
  while (report.checks < samples && word.strands > 1) {
    std::uniform_int_distribution<int> pick(1, word.strands - 1);
    int g = pick(rng) * (rng() % 2 == 0 ? 1 : -1);
    conjugate(g);
  }
  return report;
}

std::complex<double> specialize_invariant(const AdoResult& r,
                                          std::complex<double> lambda) {
  return r.value.eval(lambda);
}

const std::vector<std::pair<std::string, BraidWord>>& knot_table() {
  static const std::vector<std::pair<std::string, BraidWord>> table = {
      {"unknot", BraidWord{1, {}}},
      {"trefoil", BraidWord{2, {1, 1, 1}}},
      {"figure-eight", BraidWord{3, {1, -2, 1, -2}}},
      {"hopf", BraidWord{2, {1, 1}}},
      {"cinquefoil", BraidWord{2, {1, 1, 1, 1, 1}}},
  };
  return table;
}

BraidWord knot_by_name(const std::string& name) {
  for (const auto& [key, word] : knot_table())
    if (key == name) return word;
  throw std::invalid_argument("unknown knot name: " + name);
}

}  // namespace ado
