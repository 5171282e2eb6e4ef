#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "etalab/errors.hpp"
#include "etalab/job.hpp"
#include "etalab/report.hpp"

using namespace etalab;

namespace {

int fail(const std::string& kind, const std::string& message) {
  std::cerr << "etalab: " << kind << ": " << message << "\n";
  return exit_code_for(kind);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded Tor, length polynomials and eta invariants over complete intersections"};
  std::string task_name, job_path, field, out, format;
  std::optional<int> J, D;
  app.add_option("task", task_name, "check | hilbert | tor | eta | genfun | rigidity | report")->required();
  app.add_option("--job", job_path, "job file")->required();
  app.add_option("--J", J, "homological bound (Tor_j for j < J)")->check(CLI::PositiveNumber);
  app.add_option("--D", D, "internal degree bound")->check(CLI::NonNegativeNumber);
  app.add_option("--field", field, "Q or Fp:<p>");
  app.add_option("--out", out, "output path (default stdout)");
  app.add_option("--format", format, "json | csv | text");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  Task task;
  try {
    task = parse_task(task_name);
  } catch (const std::invalid_argument& e) {
    return fail("UsageError", e.what());
  }

  std::ifstream in(job_path, std::ios::binary);
  if (!in) return fail("UsageError", "cannot read job file " + job_path);
  std::stringstream buffer;
  buffer << in.rdbuf();

  JobSpec job;
  Format fmt = Format::Json;
  try {
    job = parse_job(buffer.str());
    if (!field.empty()) job = job.with_field(FieldSpec::parse(field));
    if (J) job.J = *J;
    if (D) job.D = *D;
    if (!out.empty()) job.out = out;
    if (job.format) fmt = *job.format;
    if (!format.empty()) fmt = parse_format(format);
  } catch (const Error& e) {
    return fail(e.kind(), job_path + ": " + e.what());
  } catch (const std::exception& e) {
    return fail("UsageError", e.what());
  }

  const RunResult result = run(job, task);
  const std::string text = render(result.report, fmt);
  if (job.out) {
    std::ofstream o(*job.out, std::ios::binary);
    if (!o) return fail("UsageError", "cannot write " + *job.out);
    o << text;
  } else {
    std::cout << text;
  }
  if (result.exit_code != kExitOk) {
    const auto& err = result.report["status"]["error"];
    std::cerr << "etalab: " << err["kind"].get<std::string>() << ": " << err["message"].get<std::string>() << "\n";
  }
  return result.exit_code;
}
