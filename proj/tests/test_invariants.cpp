#include "doctest.h"

#include "etalab/invariants.hpp"
#include "helpers.hpp"

using namespace etalab;
using namespace etalab::testing;

namespace {

using Q = RationalField;

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZU{"x", "y", "z", "u"};
const std::vector<std::string> kXYUV{"x", "y", "u", "v"};

IntPoly ip(std::vector<long> c) {
  std::vector<Integer> v(c.begin(), c.end());
  return IntPoly(v);
}

RatPoly rp(std::vector<long> c) {
  std::vector<Rational> v;
  for (long a : c) v.push_back(Rational(a));
  return RatPoly(v);
}

Rational half(long num) { return Rational(num, 2); }

}  // namespace

TEST_CASE("hilbert_series examples") {
  auto hyp = qring(kXYUV, {"x*u + y*v"});
  auto hr = hilbert_series(GradedPresentation::free("R", {0}), hyp, 16, 4);
  CHECK(hr.numerator == ip({1, 1}));
  CHECK(hr.pole_order == 3);
  CHECK(hr.expand(16) == hr.coeffs);

  auto hk = hilbert_series(GradedPresentation::residue_field(4), hyp, 16, 4);
  CHECK(hk.numerator == ip({1}));
  CHECK(hk.pole_order == 0);

  auto jc = qring(kXYZU, {"x*y", "z*u"});
  auto hm = hilbert_series(cyclic("M", kXYZU, {"y", "u"}), jc, 16, 4);
  CHECK(hm.numerator == ip({1}));
  CHECK(hm.pole_order == 2);

  CHECK_THROWS_AS(hilbert_series(GradedPresentation::free("R", {0}), hyp, 3, 4), NotPolynomialWithinBound);
}

TEST_CASE("multiplicity_polynomial examples") {
  CHECK(multiplicity_polynomial(std::vector<int>{2}) == ip({1, 1}));
  CHECK(multiplicity_polynomial(std::vector<int>{2}).at_one() == 2);
  CHECK(multiplicity_polynomial(std::vector<int>{2, 2}) == ip({1, 2, 1}));
  CHECK(multiplicity_polynomial(std::vector<int>{2, 3}) == ip({1, 2, 2, 1}));
  CHECK(multiplicity_polynomial(std::vector<int>{2, 3}).at_one() == 6);
}

TEST_CASE("finite_difference examples") {
  CHECK(finite_difference(rp({0, 0, 1}), 1) == rp({-1, 2}));
  CHECK(finite_difference(rp({5}), 1).is_zero());
  CHECK(finite_difference(rp({0, 0, 0, 1}), 3) == rp({6}));
  CHECK(finite_difference(rp({3, 1}), 0) == rp({3, 1}));
}

TEST_CASE("interpolation is exact") {
  auto p = RatPoly::interpolate({Rational(0), Rational(1), Rational(3)}, {Rational(1), Rational(3), Rational(19)});
  CHECK(p == rp({1, 0, 2}));
  CHECK(p.to_string() == "1 + 2*j^2");
}

TEST_CASE("fit and eta for k over Q[x]/(x^2)") {
  TorEngine<Q> eng(descriptor({"x"}, {"x^2"}), Q{});
  auto k = GradedPresentation::residue_field(1);
  auto t = eng.tor_table(k, k, 12, 16);
  auto r = eta(t, 1);
  CHECK(r.fit.even == rp({1}));
  CHECK(r.fit.odd == rp({1}));
  CHECK(r.eta == 0);
  REQUIRE(r.theta.has_value());
  CHECK(*r.theta == 0);
}

TEST_CASE("fit and eta for k over Q[x,y]/(x^2,y^2)") {
  TorEngine<Q> eng(descriptor(kXY, {"x^2", "y^2"}), Q{});
  auto k = GradedPresentation::residue_field(2);
  auto t = eng.tor_table(k, k, 14, 18);
  for (int j = 0; j <= t.j_max; ++j) CHECK(*t.length(j) == j + 1);
  auto r = eta(t, 2);
  CHECK(r.fit.even == rp({1, 2}));
  CHECK(r.fit.odd == rp({2, 2}));
  CHECK(r.eta == 0);
  CHECK(!r.theta.has_value());
}

TEST_CASE("fit rejects short or unstable windows") {
  TorEngine<Q> eng(descriptor(kXY, {"x^2", "y^2"}), Q{});
  auto k = GradedPresentation::residue_field(2);
  CHECK_THROWS_AS(eta(eng.tor_table(k, k, 5, 9), 2), InsufficientWindow);
  auto t = eng.tor_table(k, k, 14, 18);
  t.dims[t.j_max][t.j_max] += 1;  // corrupt the last length
  finish_table(t);
  CHECK_THROWS_AS(eta(t, 2), Error);
}

TEST_CASE("hypersurface eta values") {
  TorEngine<Q> eng(descriptor(kXYUV, {"x*u + y*v"}), Q{});
  auto M = cyclic("M", kXYUV, {"x", "y"});
  auto N = cyclic("N", kXYUV, {"u", "v"});
  auto L = cyclic("L", kXYUV, {"x", "v"});
  CHECK(eta(eng.tor_table(M, M, 12, 16), 1).eta == half(1));
  CHECK(eta(eng.tor_table(M, N, 12, 16), 1).eta == half(1));
  auto ml = eta(eng.tor_table(M, L, 12, 16), 1);
  CHECK(ml.eta == half(-1));
  CHECK(*ml.theta == -1);
  CHECK(!ml.limit_estimates.empty());
  for (const auto& e : ml.limit_estimates) CHECK(e.value < 0);
}

TEST_CASE("koszul_residual examples") {
  TorEngine<Q> eng(descriptor({"x"}, {"x^2"}), Q{});
  auto k = GradedPresentation::residue_field(1);
  auto r = koszul_residual(eng.tor_table(k, k, 8, 12));
  for (int j = 2; j < static_cast<int>(r.residuals.size()); ++j)
    for (const auto& a : r.residuals[j]) CHECK(a == 0);
  REQUIRE(r.onset.has_value());
  CHECK(*r.onset <= 2);

  TorEngine<Q> hyp(descriptor(kXYUV, {"x*u + y*v"}), Q{});
  auto rr = koszul_residual(hyp.tor_table(cyclic("M", kXYUV, {"x"}), GradedPresentation::free("R", {0}), 6, 10));
  // H_0 = H_M survives in the s_1 H_{j-2} term at j = 2
  for (int j = 1; j < static_cast<int>(rr.residuals.size()); ++j)
    for (const auto& a : rr.residuals[j])
      if (j != 2) CHECK(a == 0);
  CHECK(rr.onset == 3);
}

TEST_CASE("gen_fun for k over Q[x]/(x^2)") {
  TorEngine<Q> eng(descriptor({"x"}, {"x^2"}), Q{});
  auto k = GradedPresentation::residue_field(1);
  auto t = eng.tor_table(k, k, 12, 16);
  for (int E : {2, 4}) {
    auto g = gen_fun(t, E, 1);
    CHECK(g.b_even[0] == IntPoly::monomial(1, E));
    CHECK(g.b_odd[0] == IntPoly::monomial(1, E + 1));
    CHECK(g.eta_poly == IntPoly::monomial(1, E) - IntPoly::monomial(1, E + 1));
    CHECK(g.value_at_one == 0);
    CHECK(g.vanishing_order == 1);
  }
}

TEST_CASE("gen_fun with N = R is zero") {
  TorEngine<Q> hyp(descriptor(kXYUV, {"x*u + y*v"}), Q{});
  auto t = hyp.tor_table(cyclic("M", kXYUV, {"x"}), GradedPresentation::free("R", {0}), 8, 12);
  auto g = gen_fun(t, 2, 1);
  CHECK(g.b_even[0].is_zero());
  CHECK(g.eta_poly.is_zero());
  CHECK(!g.vanishing_order.has_value());
}

TEST_CASE("eta_{c,E}(1) = 2^c c! eta on the hypersurface pairs") {
  TorEngine<Q> eng(descriptor(kXYUV, {"x*u + y*v"}), Q{});
  auto M = cyclic("M", kXYUV, {"x", "y"});
  for (const auto& N : {M, cyclic("N", kXYUV, {"u", "v"}), cyclic("L", kXYUV, {"x", "v"})}) {
    auto t = eng.tor_table(M, N, 12, 16);
    auto e = eta(t, 1);
    const int E = default_E(t, 1);
    auto a = gen_fun(t, E, 1), b = gen_fun(t, E + 2, 1);
    CHECK(Rational(a.value_at_one) == Rational(eta_scale(1)) * e.eta);
    CHECK(a.value_at_one == b.value_at_one);
  }
}

TEST_CASE("ab_identity_check examples") {
  auto r1 = qring({"x"}, {"x^2"});
  TorEngine<Q> eng(descriptor({"x"}, {"x^2"}), Q{});
  auto k = GradedPresentation::residue_field(1);
  auto R = GradedPresentation::free("R", {0});
  auto hk = hilbert_series(k, r1, 12, 4), hr = hilbert_series(R, r1, 12, 4);
  auto ab = ab_identity_check(hk, hk, hr, eng.tor_table(k, k, 12, 12));
  CHECK(ab.max_deviation == 0);
  CHECK(ab.checked_through == 11);

  auto hyp = qring(kXYUV, {"x*u + y*v"});
  TorEngine<Q> he(descriptor(kXYUV, {"x*u + y*v"}), Q{});
  auto M = cyclic("M", kXYUV, {"x", "y"});
  auto hm = hilbert_series(M, hyp, 16, 4), hR = hilbert_series(R, hyp, 16, 4);
  auto ab2 = ab_identity_check(hm, hR, hR, he.tor_table(M, R, 8, 16));
  CHECK(ab2.max_deviation == 0);
  auto N = cyclic("N", kXYUV, {"u", "v"});
  auto hn = hilbert_series(N, hyp, 16, 4);
  auto ab3 = ab_identity_check(hm, hn, hR, he.tor_table(M, N, 12, 16));
  CHECK(ab3.max_deviation == 0);
  CHECK(ab3.checked_through >= 11);
}
