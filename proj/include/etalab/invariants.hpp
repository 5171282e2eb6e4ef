#pragma once

// Invariants read off a Tor table: the even and odd length polynomials,
// eta_c and theta, the generating functions G_F and b_F, eta_{c,E}(t), the
// Koszul residual and the Hilbert series identity H_M H_N / H_R = sum (-1)^j H_j.

#include <optional>
#include <vector>

#include "etalab/errors.hpp"
#include "etalab/module.hpp"
#include "etalab/series.hpp"
#include "etalab/tor.hpp"

namespace etalab {

/// H_T(t) of a presented module with its rational form; margin is the width
/// of the trailing window that must vanish after clearing the pole.
template <class F>
HilbertSeries hilbert_series(const GradedPresentation& p, const std::shared_ptr<const QuotientRing<F>>& ring, int D,
                             int margin) {
  PresentedModule<F> m(ring, presentation_map(p, *ring));
  std::vector<Integer> coeffs;
  for (int d = 0; d <= D; ++d) coeffs.push_back(m.dim(d));
  return rational_form(std::move(coeffs), ring->nvars(), margin);
}

IntPoly multiplicity_polynomial(const RingDescriptor& ring);

struct FittedPolynomialPair {
  RatPoly even;  // length Tor_{2j} = even(j)
  RatPoly odd;   // length Tor_{2j+1} = odd(j)
  int j_lo = 0, j_hi = 0;  // homological indices used
  int verified_points = 0;
};

/// Fits P_ev, P_odd of degree <= c-1 on the stable tail. The Koszul residual
/// must vanish on at least c+1 trailing indices from its onset j0; the window
/// starts at the later of j0 - 2c and the finite-length onset. c points per
/// parity interpolate and the rest verify.
FittedPolynomialPair fit_even_odd(const TorTable& t, int c);

struct LimitEstimate {
  int n = 0;
  Rational value;
};

struct EtaReport {
  int c = 0;
  Rational eta;
  std::optional<Rational> theta;
  std::vector<LimitEstimate> limit_estimates;
  FittedPolynomialPair fit;
};

EtaReport eta(const TorTable& t, int c);

struct KoszulReport {
  std::vector<std::vector<Integer>> residuals;  // per j, coefficients through i_max
  std::optional<int> onset;
};

KoszulReport koszul_residual(const TorTable& t);

struct GenFunReport {
  int E = 0;
  std::vector<IntPoly> b_even;  // b_{k,E}(t), k = 0..c-1
  std::vector<IntPoly> b_odd;   // b_{k,E+1}(t)
  IntPoly eta_poly;             // eta_{c,E}(t) = b_E(1,t) - b_{E+1}(1,t)
  Integer value_at_one;
  std::optional<int> vanishing_order;  // nullopt when eta_poly is zero
  std::vector<IntPoly> symmetric;      // s_0..s_c
};

/// x-coefficients b_{k,F}(t), k = 0..c-1, of prod_l (1 - t^{d_l} x) G_F(x,t).
/// Throws XDegreeDefect if a coefficient with k >= c is nonzero in the table,
/// and InsufficientWindow if no such coefficient can be checked.
std::vector<IntPoly> b_coefficients(const TorTable& t, int F, int c);

/// Generating-function pass for an even start E.
GenFunReport gen_fun(const TorTable& t, int E, int c);

/// Smallest even E at or past the fit window start.
int default_E(const TorTable& t, int c);

struct ABReport {
  Integer max_deviation = 0;
  int at_degree = -1;
  int checked_through = -1;
  std::vector<Integer> lhs, rhs;
};

ABReport ab_identity_check(const HilbertSeries& hm, const HilbertSeries& hn, const HilbertSeries& hr,
                           const TorTable& t);

/// 2^c * c!
Integer eta_scale(int c);

}  // namespace etalab
