#include "etalab/invariants.hpp"

#include <algorithm>

namespace etalab {

IntPoly multiplicity_polynomial(const RingDescriptor& ring) { return multiplicity_polynomial(ring.relation_degrees); }

Integer eta_scale(int c) {
  Integer s = 1;
  for (int k = 1; k <= c; ++k) s *= 2 * k;
  return s;
}

namespace {

int fit_start(const TorTable& t, int c) {
  if (!t.finite_length_from)
    throw HypothesisViolation("Tor_" + std::to_string(t.j_max) + "(" + t.M + "," + t.N +
                              ") is not of finite length within the frontier; the tail never zeroes out");
  if (!t.stabilization)
    throw NotStabilized("Koszul residual is nonzero at j = " + std::to_string(t.j_max) +
                        "; raise D or check the hypotheses");
  const int run = t.j_max - *t.stabilization + 1;
  if (run < c + 1)
    throw InsufficientWindow(t.J + (c + 1 - run),
                             "Koszul residual vanishes only on the last " + std::to_string(run) +
                                 " indices; need " + std::to_string(c + 1) + ", try J = " +
                                 std::to_string(t.J + (c + 1 - run)));
  // vanishing residuals from j0 on make beta_j polynomial per parity from j0 - 2c
  return std::max({*t.stabilization - 2 * c, *t.finite_length_from, 0});
}

}  // namespace

FittedPolynomialPair fit_even_odd(const TorTable& t, int c) {
  if (c < 1) throw std::invalid_argument("codimension must be positive");
  const int start = fit_start(t, c);
  const int first_even = start % 2 ? start + 1 : start;
  const int first_odd = start % 2 ? start : start + 1;
  const int need = std::max(first_even, first_odd) + 2 * (2 * c - 1);
  if (need > t.j_max)
    throw InsufficientWindow(need + 1, "fit window from j = " + std::to_string(start) + " holds fewer than " +
                                           std::to_string(2 * c) + " points per parity; try J = " +
                                           std::to_string(need + 1));
  FittedPolynomialPair fit;
  fit.j_lo = start;
  fit.j_hi = t.j_max;
  auto fit_parity = [&](int first, int parity) {
    std::vector<Rational> xs, ys;
    for (int j = first; xs.size() < static_cast<std::size_t>(c); j += 2) {
      xs.push_back(Rational((j - parity) / 2));
      ys.push_back(Rational(*t.length(j)));
    }
    RatPoly p = RatPoly::interpolate(xs, ys);
    for (int j = first + 2 * c; j <= t.j_max; j += 2) {
      const Rational expected = p(Rational((j - parity) / 2));
      if (expected != Rational(*t.length(j)))
        throw NotStabilized("length of Tor_" + std::to_string(j) + " is " + std::to_string(*t.length(j)) +
                            " but the fitted polynomial predicts " + rational_string(expected) +
                            "; raise J and D");
      ++fit.verified_points;
    }
    return p;
  };
  fit.even = fit_parity(first_even, 0);
  fit.odd = fit_parity(first_odd, 1);
  return fit;
}

EtaReport eta(const TorTable& t, int c) {
  EtaReport r;
  r.c = c;
  r.fit = fit_even_odd(t, c);
  RatPoly diff = finite_difference(r.fit.even - r.fit.odd, c - 1);
  if (diff.degree() > 0) throw std::logic_error("difference of fitted polynomials is not constant");
  r.eta = diff(Rational(0)) / Rational(eta_scale(c));
  r.eta.canonicalize();
  if (c == 1) r.theta = Rational(2) * r.eta;
  // sum_{j=start}^n (-1)^j beta_j / n^c at the last few n
  const int start = *t.finite_length_from;
  Integer running = 0;
  for (int n = start; n <= t.j_max; ++n) {
    running += (n % 2 ? -1 : 1) * Integer(*t.length(n));
    if (n + 3 <= t.j_max || n == 0) continue;
    Integer denom = 1;
    for (int k = 0; k < c; ++k) denom *= n;
    Rational v(running, denom);
    v.canonicalize();
    r.limit_estimates.push_back({n, v});
  }
  return r;
}

KoszulReport koszul_residual(const TorTable& t) {
  KoszulReport r;
  for (int j = 0; j <= t.j_max; ++j) r.residuals.push_back(koszul_residual_at(t, j));
  r.onset = koszul_onset(t);
  return r;
}

std::vector<IntPoly> b_coefficients(const TorTable& t, int F, int c) {
  if (F + 2 * c > t.j_max)
    throw InsufficientWindow(F + 2 * c + 1, "b_F for F = " + std::to_string(F) + " needs Tor through j = " +
                                                std::to_string(F + 2 * c) + "; try J = " +
                                                std::to_string(F + 2 * c + 1));
  for (int j = F; j <= t.j_max; ++j)
    if (!t.finite[j])
      throw HypothesisViolation("Tor_" + std::to_string(j) + " is not of finite length within the frontier");
  const auto s = symmetric_functions(t.relation_degrees);
  auto coefficient = [&](int k) {
    std::vector<Integer> acc(t.i_max + 1, 0);
    for (int m = 0; m <= std::min(k, c); ++m) {
      auto prod = series_mul(s[m].coeffs(), t.hilbert(F + 2 * (k - m)), t.i_max);
      for (int i = 0; i <= t.i_max; ++i) acc[i] += m % 2 ? -prod[i] : prod[i];
    }
    return IntPoly(std::move(acc));
  };
  std::vector<IntPoly> b;
  for (int k = 0; k < c; ++k) b.push_back(coefficient(k));
  for (int k = c; F + 2 * k <= t.j_max; ++k)
    if (!coefficient(k).is_zero())
      throw XDegreeDefect("b_F for F = " + std::to_string(F) + " has a nonzero x^" + std::to_string(k) +
                          " coefficient; F is not past stabilization or D is too small");
  return b;
}

GenFunReport gen_fun(const TorTable& t, int E, int c) {
  if (E % 2) throw std::invalid_argument("E must be even");
  GenFunReport r;
  r.E = E;
  r.symmetric = symmetric_functions(t.relation_degrees);
  r.b_even = b_coefficients(t, E, c);
  r.b_odd = b_coefficients(t, E + 1, c);
  IntPoly sum;
  for (int k = 0; k < c; ++k) sum = sum + r.b_even[k] - r.b_odd[k];
  r.eta_poly = sum;
  r.value_at_one = sum.at_one();
  r.vanishing_order = sum.vanishing_order_at_one();
  return r;
}

int default_E(const TorTable& t, int c) {
  const int start = fit_start(t, c);
  return start % 2 ? start + 1 : start;
}

ABReport ab_identity_check(const HilbertSeries& hm, const HilbertSeries& hn, const HilbertSeries& hr,
                           const TorTable& t) {
  ABReport r;
  const int n = std::min(t.i_max, t.complete_below - 1);
  r.checked_through = n;
  if (n < 0) return r;
  // e_M e_N (1-t)^{p_R - p_M - p_N} / e_R
  std::vector<Integer> lhs = series_mul((hm.numerator * hn.numerator).coeffs(), series_inverse(hr.numerator, n), n);
  const int shift = hr.pole_order - hm.pole_order - hn.pole_order;
  if (shift >= 0) {
    lhs = series_mul(lhs, one_minus_t_pow(shift).coeffs(), n);
  } else {
    for (int p = 0; p < -shift; ++p)
      for (int k = 1; k <= n; ++k) lhs[k] += lhs[k - 1];
  }
  std::vector<Integer> rhs(n + 1, 0);
  for (int j = 0; j <= t.j_max; ++j)
    for (int i = 0; i <= n; ++i) rhs[i] += (j % 2 ? -1 : 1) * Integer(t.dim(j, i));
  for (int i = 0; i <= n; ++i) {
    Integer dev = abs(lhs[i] - rhs[i]);
    if (dev > r.max_deviation) {
      r.max_deviation = dev;
      r.at_degree = i;
    }
  }
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

}  // namespace etalab
