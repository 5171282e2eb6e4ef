#include "doctest.h"

#include "etalab/checks.hpp"
#include "helpers.hpp"

using namespace etalab;
using namespace etalab::testing;

namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZU{"x", "y", "z", "u"};
const std::vector<std::string> kXYUV{"x", "y", "u", "v"};

}  // namespace

TEST_CASE("regular_sequence_check examples") {
  auto a = regular_sequence_check(descriptor(kXYZU, {"x*y", "z*u"}), 10);
  CHECK(a.verified);
  CHECK(a.checked_to == 10);

  auto b = regular_sequence_check(descriptor(kXY, {"x", "x*y"}), 10);
  CHECK(!b.verified);
  CHECK(b.failed_at == 2);
  CHECK(b.expected == 0);
  CHECK(b.actual == 1);

  CHECK(regular_sequence_check(descriptor(kXYUV, {"x*u + y*v"}), 10).verified);
  CHECK(!regular_sequence_check(descriptor(kXY, {"x^2", "x*y"}), 10).verified);
}

TEST_CASE("jacobian minors") {
  auto m = jacobian_minors(descriptor(kXYZU, {"x*y", "z*u"}));
  std::vector<std::string> got;
  for (const auto& p : m) got.push_back(p.to_string(kXYZU));
  CHECK(got == std::vector<std::string>{"y*u", "y*z", "x*u", "x*z"});
  auto h = jacobian_minors(descriptor(kXYUV, {"x*u + y*v"}));
  CHECK(h.size() == 4);
}

TEST_CASE("isolated_singularity_check examples") {
  auto hyp = isolated_singularity_check(descriptor(kXYUV, {"x*u + y*v"}), 10);
  CHECK(hyp.verdict == SingularityVerdict::Yes);
  CHECK(hyp.vanishes_from == 1);

  auto jc = isolated_singularity_check(descriptor(kXYZU, {"x*y", "z*u"}), 10);
  CHECK(jc.verdict == SingularityVerdict::NoWithinBound);
  for (int e = 1; e <= 10; ++e) CHECK(jc.dims[e] == 4);

  auto conic = isolated_singularity_check(descriptor(kXY, {"x^2 + y^2"}), 10);
  CHECK(conic.verdict == SingularityVerdict::Yes);

  auto cusp = isolated_singularity_check(descriptor({"x", "y", "z"}, {"y^2*z - x^3"}), 12);
  CHECK(cusp.verdict == SingularityVerdict::NoWithinBound);

  auto pencil = isolated_singularity_check(
      descriptor(kXYUV, {"x^2 + y^2 + u^2 + v^2", "x^2 + 2*y^2 + 3*u^2 + 4*v^2"}), 12);
  CHECK(pencil.verdict == SingularityVerdict::Yes);

  auto small = isolated_singularity_check(descriptor(kXY, {"x^2 + y^2"}, FieldSpec::prime_field(2 + 1)), 6);
  CHECK(small.warnings.empty());
  auto tiny = isolated_singularity_check(descriptor({"x", "y", "z"}, {"x^3 + y^3 + z^3"}, FieldSpec::prime_field(3)), 6);
  CHECK(!tiny.warnings.empty());
}

TEST_CASE("certify skips the singularity check after a failed sequence") {
  auto cert = certify(descriptor(kXY, {"x", "x*y"}), 6);
  CHECK(!cert.regular.verified);
  CHECK(cert.isolated.verdict == SingularityVerdict::Skipped);
  auto ok = certify(descriptor(kXYZU, {"x*y", "z*u"}), 6);
  CHECK(ok.degree == 4);
  CHECK(ok.n == 2);
}
