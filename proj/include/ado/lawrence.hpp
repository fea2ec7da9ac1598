#pragma once

#include <memory>

#include "ado/hwspace.hpp"

namespace ado {

// Tensor-factor layout of the normalised coevaluation vector. RowOutermost is
// the ordering the inductive construction produces (coefficient row k sits on
// the k-th innermost strand/dual pair); the flipped variant is exposed for the
// pinning test and fails E-annihilation from n = 3 on.
enum class CoevOrdering { RowOutermost, RowInnermost };

// Involution applied to the second slot of the intersection pairing.
enum class PairingInvolution { Plain, Bar };

// The table c[k][i] (1 <= k <= n-1, 0 <= i <= N-1) normalising the k-th
// coevaluation pair, built from the ratio recursion
//   c[k][i+1]/c[k][i] = -([lambda+2-N+i]/[lambda-i])
//                        * s^{-(2k-1)} q^{2k(N-1)-2(i+1)},  c[k][0] = 1.
struct CoevCoefficients {
  int n = 0, N = 0;
  std::vector<std::vector<ScalarExt>> c;  // c[k-1][i]

  const ScalarExt& at(int k, int i) const { return c.at(k - 1).at(i); }
};

CoevCoefficients coev_coefficients(int n, int N);

// The vector w_coev in (U_N^lambda)^{otimes 2(n-1)}: the image of the nested
// coevaluations normalised into the highest weight space.
TensorState w_coev(int n, int N,
                   CoevOrdering ordering = CoevOrdering::RowOutermost);

// Coordinate vector over the canonical partition basis of
// E^N_{2n-1,(n-1)(N-1)}, tagged by which side of the pairing it lives on.
struct HomologyClass {
  enum class Side { Multifork, Scan };
  Side side = Side::Multifork;
  int n = 0, N = 0;
  std::vector<ScalarExt> coords;
};

// Cached per-(n, N) machinery: Theta, the coevaluation table, and the two
// intrinsic classes. Immutable after construction and safe to share.
class LawrenceContext {
 public:
  LawrenceContext(int n, int N,
                  PhiExponent phi = PhiExponent::SectionThree,
                  CoevOrdering ordering = CoevOrdering::RowOutermost,
                  PairingInvolution involution = PairingInvolution::Plain);

  int n() const { return n_; }
  int level() const { return N_; }
  const ThetaMatrix& theta() const { return theta_; }
  const CoevCoefficients& coev() const { return coev_; }
  const HomologyClass& f() const { return f_; }
  const std::vector<ScalarExt>& ev_row() const { return evRow_; }
  const HomologyClass& g() const { return g_; }
  PairingInvolution involution() const { return involution_; }

  // Evaluation functional applied to an arbitrary state in the block:
  // pi_{v0} after the nested evaluations and psi^{-1} on the dual slots.
  ScalarExt evaluate(const TensorState& state) const;

  HomologyClass action(const BraidWord& word, const HomologyClass& cls) const;

 private:
  int n_, N_;
  PairingInvolution involution_;
  ThetaMatrix theta_;
  CoevCoefficients coev_;
  HomologyClass f_;
  std::vector<ScalarExt> evRow_;
  HomologyClass g_;
};

const LawrenceContext& lawrence_context(int n, int N);

HomologyClass f_class(int n, int N);
std::vector<ScalarExt> ev_functional(int n, int N);
HomologyClass g_class(int n, int N);

// Intersection pairing in the multifork/scan bases; the basis matrix is the
// identity, so this is the coordinate dot product, with the bar involution
// applied to the scan side when requested.
ScalarExt pairing(const HomologyClass& a, const HomologyClass& b,
                  PairingInvolution involution = PairingInvolution::Plain);

// Braid action transported through Theta: coords -> solve(word * (Theta*coords)).
HomologyClass lawrence_action(const BraidWord& word, const HomologyClass& cls);

}  // namespace ado
