#include "doctest.h"

#include "etalab/errors.hpp"
#include "etalab/job.hpp"
#include "etalab/report.hpp"
#include "helpers.hpp"

using namespace etalab;
using namespace etalab::testing;

namespace {

const char* kHochster = R"(# xu + yv
[ring]
field = Q
vars = x, y, u, v
relations = x*u + y*v

[module M]
ideal = x, y

[job]
task = eta
pair = M, M
)";

const char* kNonRigid = R"([ring]
vars = x, y, z, u
relations = x*y, z*u

[module M]
gens = 0
rels = y, u

[module N]
gens = 0, 0, 0
rels =
  0,  u
  -z, x
  y,  0
)";

}  // namespace

TEST_CASE("minimal job over Q[x]/(x^2) with M = N = k") {
  auto job = parse_job("[ring]\nvars = x\nrelations = x^2\n[job]\npair = k, k\n");
  CHECK(job.ring.v() == 1);
  CHECK(job.ring.relation_degrees == std::vector<int>{2});
  REQUIRE(job.pair);
  CHECK(job.pair->first == "k");
  const auto& k = job.module("k");
  CHECK(k.generators.twists == std::vector<int>{0});
  CHECK(k.relation_count() == 1);
  CHECK(!job.task);
}

TEST_CASE("presentation matrix is read as displayed: one row per generator") {
  auto job = parse_job(kNonRigid);
  const auto& N = job.module("N");
  CHECK(N.generators.twists == std::vector<int>{0, 0, 0});
  REQUIRE(N.relation_count() == 2);
  const auto& vars = job.ring.variables;
  auto column = [&](int s) {
    std::vector<std::string> out;
    for (const auto& e : N.relation_columns[s]) out.push_back(e.is_zero() ? "0" : e.to_string(vars));
    return out;
  };
  CHECK(column(0) == std::vector<std::string>{"0", "-z", "y"});
  CHECK(column(1) == std::vector<std::string>{"u", "x", "0"});
  CHECK(N.relation_twists == std::vector<int>{1, 1});
  const auto& M = job.module("M");
  CHECK(M.relation_count() == 2);
  CHECK(M.generators.twists == std::vector<int>{0});
}

TEST_CASE("rows may also be separated by semicolons") {
  auto a = parse_job(kNonRigid);
  auto b = parse_job("[ring]\nvars = x, y, z, u\nrelations = x*y, z*u\n[module N]\ngens = 0, 0, 0\n"
                     "rels = 0, u; -z, x; y, 0\n");
  CHECK(a.module("N").fingerprint() == b.module("N").fingerprint());
}

TEST_CASE("entry of the wrong degree names the cell") {
  const char* text = "[ring]\nvars = x, y\nrelations = x^2\n[module N]\ngens = 0, 0\nrels =\n  x, y\n  1, x\n";
  try {
    parse_job(text);
    FAIL("expected HomogeneityError");
  } catch (const HomogeneityError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("line 8, column 3") != std::string::npos);
    CHECK(msg.find("relation 1, row 2") != std::string::npos);
    CHECK(msg.find("expected degree 1") != std::string::npos);
    CHECK(e.relation() == 0);
    CHECK(e.row() == 1);
  }
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_job("[ring]\nvars = x, y\nrelations = x^2 + w*y\n");
    FAIL("expected UnknownVariable");
  } catch (const UnknownVariable& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 19);
    CHECK(e.name() == "w");
  }
  try {
    parse_job("[ring]\nvars = x\n[bogus]\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_job("vars = x\n"), ParseError);
  CHECK_THROWS_AS(parse_job("[job]\ntask = eta\n"), ParseError);
  CHECK_THROWS_AS(parse_job("[ring]\nvars = x, x\n"), ParseError);
  CHECK_THROWS_AS(parse_job("[ring]\nvars = x\nrelations = x^2 + x\n"), HomogeneityError);
  CHECK_THROWS_AS(parse_job("[ring]\nvars = x\n[module k]\nideal = x\n"), ParseError);
  CHECK_THROWS_AS(parse_job("[ring]\nvars = x\n[job]\npair = M, k\n"), ParseError);
  CHECK_THROWS_AS(parse_job("[ring]\nvars = x\n[job]\nJ = zero\n"), ParseError);
  CHECK_THROWS_AS(parse_job("[ring]\nvars = x\n[job]\ntask = solve\n"), ParseError);
  CHECK_THROWS_AS(parse_job("[ring]\nvars = x, y\n[module N]\ngens = 0, 0\nrels = x, y\n"), ParseError);
}

TEST_CASE("sum builds a direct sum of declared modules") {
  auto job = parse_job("[ring]\nvars = x, y\nrelations = x*y\n[module A]\nideal = x\n[module S]\nsum = A, k\n");
  const auto& S = job.module("S");
  CHECK(S.generators.twists == std::vector<int>{0, 0});
  CHECK(S.relation_count() == 3);
}

TEST_CASE("field override revalidates relations") {
  auto job = parse_job("[ring]\nvars = x, y\nrelations = x^2 + 3*y^2\n");
  CHECK(job.with_field(FieldSpec::prime_field(5)).ring.field.prime == 5);
  CHECK_THROWS(parse_job("[ring]\nvars = x\nrelations = 3*x^2\n").with_field(FieldSpec::prime_field(3)));
}

TEST_CASE("run: eta on the Hochster pair (M, M)") {
  auto job = parse_job(kHochster);
  auto r = run(job, *job.task);
  CHECK(r.exit_code == kExitOk);
  CHECK(r.report["eta"]["eta"] == "1/2");
  CHECK(r.report["eta"]["theta"] == "1");
  CHECK(r.report["status"]["error"].is_null());
  CHECK(r.report["bounds"]["J"] == 12);
  CHECK(r.report["bounds"]["D"] == 16);
}

TEST_CASE("run: check on (x, xy) fails with the failure degree") {
  auto job = parse_job("[ring]\nvars = x, y\nrelations = x, x*y\n");
  auto r = run(job, Task::Check);
  CHECK(r.exit_code == kExitHypothesis);
  CHECK(r.report["certificate"]["regular_sequence"]["failed_at"] == 2);
  CHECK(r.report["status"]["error"]["kind"] == "HypothesisViolation");
}

TEST_CASE("run: tor with J too small names a sufficient J") {
  auto job = parse_job(kHochster);
  job.J = 5;
  auto r = run(job, Task::Tor);
  CHECK(r.exit_code == kExitBound);
  const auto& err = r.report["status"]["error"];
  CHECK(err["kind"] == "InsufficientWindow");
  const int suggested = err["suggested_J"];
  CHECK(err["message"].get<std::string>().find("J = " + std::to_string(suggested)) != std::string::npos);
  CHECK(r.report.contains("tor"));
  job.J = suggested;
  CHECK(run(job, Task::Tor).exit_code == kExitOk);
}

TEST_CASE("run: D below a generator is bound exhaustion") {
  auto job = parse_job(kHochster);
  job.J = 6;
  job.D = 3;
  auto r = run(job, Task::Tor);
  CHECK(r.exit_code == kExitBound);
  CHECK(r.report["status"]["error"]["kind"] == "DegreeBoundExceeded");
}

TEST_CASE("run: missing pair is a usage error") {
  auto job = parse_job("[ring]\nvars = x\nrelations = x^2\n");
  CHECK(run(job, Task::Eta).exit_code == kExitUsage);
  CHECK(run(job, Task::Hilbert).exit_code == kExitOk);
}

TEST_CASE("reports are byte-identical across runs") {
  auto job = parse_job(kHochster);
  const auto a = render(run(job, Task::Report).report, Format::Json);
  const auto b = render(run(job, Task::Report).report, Format::Json);
  CHECK(a == b);
  CHECK(render(run(job, Task::Tor).report, Format::Csv).rfind("j\\i,0,1,", 0) == 0);
}

TEST_CASE("exit codes by error kind") {
  CHECK(exit_code_for("ParseError") == 1);
  CHECK(exit_code_for("HomogeneityError") == 1);
  CHECK(exit_code_for("HypothesisViolation") == 2);
  CHECK(exit_code_for("InsufficientWindow") == 3);
  CHECK(exit_code_for("NotStabilized") == 3);
  CHECK(exit_code_for("DegreeBoundExceeded") == 3);
}
