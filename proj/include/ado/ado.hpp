#pragma once

#include "ado/lawrence.hpp"

namespace ado {

// Outcome of one invariant computation. The stored value is the invariant
// itself: the raw Reshetikhin-Turaev scalar times s^{(N-1)w} t^{-w}, so its
// t-exponent is zero; rawTExp records the t-power the raw scalar carried
// (the writhe).
struct AdoResult {
  enum class Method { Direct, Topological };
  ScalarExt value;
  int n = 0;
  int N = 0;
  BraidWord braid;
  Method method = Method::Direct;
  long rawTExp = 0;
};

// Reshetikhin-Turaev evaluation of the (1,1)-tangle obtained from the braid
// closure by cutting the first strand: nested coevaluations below, the braid
// on the first n factors, nested evaluations above, projection to v_0.
AdoResult ado_direct(const BraidWord& word, int N);

// The intersection-pairing model: extend the braid by the identity on n-1
// strands, act on the multifork class F in the Lawrence coordinates, pair
// with the scan class G.
AdoResult ado_topological(const BraidWord& word, int N);

// Markov-move verification: conjugation by every generator and both
// stabilisations, plus extra random conjugations up to the requested sample
// count. All comparisons are exact.
struct MarkovReport {
  int checks = 0;
  int failures = 0;
  std::vector<std::string> failed;  // offending moves

  bool ok() const { return failures == 0; }
};

MarkovReport markov_check(const BraidWord& word, int N, int samples,
                          unsigned seed = 7);

std::complex<double> specialize_invariant(const AdoResult& r,
                                          std::complex<double> lambda);

// Built-in braid presentations: unknot, trefoil, figure-eight, hopf,
// cinquefoil.
const std::vector<std::pair<std::string, BraidWord>>& knot_table();
BraidWord knot_by_name(const std::string& name);

}  // namespace ado
