#include "etalab/report.hpp"

#include <sstream>

#include "etalab/checks.hpp"
#include "etalab/errors.hpp"
#include "etalab/invariants.hpp"
#include "etalab/tor.hpp"

namespace etalab {

namespace {

Json integers(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

Json poly_json(const IntPoly& p) { return integers(p.coeffs()); }

Json poly_json(const RatPoly& p) {
  Json a = Json::array();
  for (const auto& x : p.coeffs()) a.push_back(rational_string(x));
  return a;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json ring_json(const RingDescriptor& r) {
  Json j;
  j["presentation"] = r.to_string();
  j["field"] = r.field.name();
  j["variables"] = r.variables;
  Json rels = Json::array();
  for (const auto& f : r.relations) rels.push_back(f.to_string(r.variables));
  j["relations"] = rels;
  j["relation_degrees"] = r.relation_degrees;
  j["v"] = r.v();
  j["c"] = r.c();
  j["n"] = r.n();
  return j;
}

Json module_json(const GradedPresentation& p, const RingDescriptor& r) {
  Json j;
  j["generators"] = p.generators.twists;
  Json cols = Json::array();
  for (const auto& col : p.relation_columns) {
    Json c = Json::array();
    for (const auto& e : col) c.push_back(e.to_string(r.variables));
    cols.push_back(c);
  }
  j["relation_columns"] = cols;
  j["relation_degrees"] = p.relation_twists;
  return j;
}

Json certificate_json(const RingCertificate& c) {
  Json j;
  j["regular_sequence"] = {{"verified", c.regular.verified},
                           {"checked_to", c.regular.checked_to},
                           {"failed_at", optional_json(c.regular.failed_at)},
                           {"expected", c.regular.expected},
                           {"actual", c.regular.actual}};
  j["isolated_singularity"] = {{"verdict", to_string(c.isolated.verdict)},
                               {"vanishes_from", optional_json(c.isolated.vanishes_from)},
                               {"checked_to", c.isolated.checked_to},
                               {"jacobian_quotient_dims", c.isolated.dims},
                               {"nonzero_minors", c.isolated.minors},
                               {"warnings", c.isolated.warnings}};
  j["degree"] = c.degree;
  j["dimension"] = c.n;
  j["codimension"] = c.c;
  return j;
}

Json hilbert_json(const HilbertSeries& h) {
  return {{"coefficients", integers(h.coeffs)},
          {"numerator", poly_json(h.numerator)},
          {"pole_order", h.pole_order},
          {"multiplicity", h.numerator.at_one().get_str()}};
}

Json frontier_json(const TorTable& t) {
  return {{"j_max", t.j_max},
          {"i_max", t.i_max},
          {"complete_below", t.complete_below},
          {"window", t.window},
          {"finite_length", t.finite},
          {"finite_length_from", optional_json(t.finite_length_from)},
          {"koszul_onset", optional_json(t.stabilization)}};
}

Json tor_json(const TorTable& t) {
  Json lengths = Json::array();
  Json totals = Json::array();
  for (int j = 0; j <= t.j_max; ++j) {
    totals.push_back(t.total(j));
    lengths.push_back(optional_json(t.length(j)));
  }
  return {{"M", t.M},           {"N", t.N},         {"J", t.J},
          {"D", t.D},           {"short_circuit", t.short_circuit},
          {"dims", t.dims},     {"totals", totals}, {"lengths", lengths}};
}

Json koszul_json(const TorTable& t) {
  const auto k = koszul_residual(t);
  Json residuals = Json::array();
  Json nonzero = Json::array();
  for (int j = 0; j <= t.j_max; ++j) {
    residuals.push_back(integers(k.residuals[j]));
    if (std::any_of(k.residuals[j].begin(), k.residuals[j].end(), [](const Integer& x) { return x != 0; }))
      nonzero.push_back(j);
  }
  return {{"onset", optional_json(k.onset)}, {"nonzero_at", nonzero}, {"residuals", residuals}};
}

Json fit_json(const FittedPolynomialPair& f) {
  return {{"P_even", poly_json(f.even)},
          {"P_odd", poly_json(f.odd)},
          {"P_even_text", f.even.to_string()},
          {"P_odd_text", f.odd.to_string()},
          {"window", {f.j_lo, f.j_hi}},
          {"verified_points", f.verified_points}};
}

Json eta_json(const EtaReport& r) {
  Json est = Json::array();
  for (const auto& e : r.limit_estimates) est.push_back({{"n", e.n}, {"value", rational_string(e.value)}});
  return {{"c", r.c},
          {"eta", rational_string(r.eta)},
          {"theta", r.theta ? Json(rational_string(*r.theta)) : Json(nullptr)},
          {"scaled", rational_string(r.eta * Rational(eta_scale(r.c)))},
          {"fit", fit_json(r.fit)},
          {"limit_estimates", est}};
}

Json genfun_json(const GenFunReport& g) {
  Json be = Json::array(), bo = Json::array(), s = Json::array();
  for (const auto& p : g.b_even) be.push_back(poly_json(p));
  for (const auto& p : g.b_odd) bo.push_back(poly_json(p));
  for (const auto& p : g.symmetric) s.push_back(poly_json(p));
  return {{"E", g.E},
          {"eta_poly", poly_json(g.eta_poly)},
          {"eta_poly_text", g.eta_poly.to_string()},
          {"value_at_one", g.value_at_one.get_str()},
          {"vanishing_order", optional_json(g.vanishing_order)},
          {"b_even", be},
          {"b_odd", bo},
          {"symmetric", s}};
}

Json ab_json(const ABReport& r) {
  return {{"checked_through", r.checked_through},
          {"max_deviation", r.max_deviation.get_str()},
          {"at_degree", r.at_degree},
          {"lhs", integers(r.lhs)},
          {"rhs", integers(r.rhs)}};
}

Json rigidity_json(const std::vector<RigidityFinding>& fs, int c) {
  Json runs = Json::array();
  std::optional<int> violation;
  for (const auto& f : fs) {
    runs.push_back({{"start", f.start}, {"violation", optional_json(f.violation)}});
    if (f.violation && !violation) violation = f.start;
  }
  return {{"c", c},
          {"zero_runs", runs},
          {"rigid_within_table", !violation.has_value()},
          {"first_violating_run", optional_json(violation)}};
}

Json ambient_json(const AmbientTorCertificate& a) {
  return {{"nvars", a.nvars}, {"D", a.D}, {"totals", a.totals}, {"largest_nonzero", a.largest_nonzero}};
}

bool needs_pair(Task t) { return t != Task::Check && t != Task::Hilbert; }

template <class F>
class Pipeline {
 public:
  Pipeline(const JobSpec& job, Task task, F field, Json& doc)
      : job_(job), task_(task), engine_(job.ring, field), field_(field), doc_(doc) {}

  void run() {
    const auto& ring = job_.ring;
    const int c = ring.c();
    if (needs_pair(task_) && !job_.pair)
      throw std::invalid_argument("task " + to_string(task_) + " needs 'pair = M, N' in [job]");
    std::vector<const GradedPresentation*> mods;
    if (job_.pair) {
      mods.push_back(&job_.module(job_.pair->first));
      if (job_.pair->second != job_.pair->first) mods.push_back(&job_.module(job_.pair->second));
    } else if (task_ == Task::Hilbert) {
      for (const auto& m : job_.modules) mods.push_back(&m);
    }
    Json mj = Json::object();
    int max_twist = 0;
    for (const auto* m : mods) {
      mj[m->label] = module_json(*m, ring);
      if (!m->generators.empty()) max_twist = std::max(max_twist, m->generators.max_twist());
    }
    doc_["modules"] = mj;
    if (job_.pair) doc_["pair"] = {job_.pair->first, job_.pair->second};

    const int J = job_.J.value_or(default_J(ring));
    const GradedPresentation* M = job_.pair ? &job_.module(job_.pair->first) : nullptr;
    const int D = job_.D.value_or(M ? default_D(ring, J, *M) : J + 2 * ring.max_relation_degree() + max_twist);
    doc_["bounds"] = {{"J", J}, {"D", D}, {"window", engine_.window()}};

    if (task_ == Task::Check) return check(D);
    if (task_ == Task::Hilbert) return hilbert(mods, D);

    const auto& N = job_.module(job_.pair->second);
    if (task_ != Task::Tor) {
      const auto cert = certify(ring, D);
      doc_["certificate"] = certificate_json(cert);
      if (!cert.regular.verified) throw not_regular(cert);
      if (c < 1) throw HypothesisViolation("the ring has no relations; invariants need codimension >= 1");
    }
    HilbertSeries hr, hm, hn;
    if (task_ == Task::Report) {
      hr = series(GradedPresentation::free("R", {0}), D);
      hm = series(*M, D);
      hn = series(N, D);
      doc_["hilbert"] = {{"R", hilbert_json(hr)}, {"M", hilbert_json(hm)}, {"N", hilbert_json(hn)}};
      doc_["e_R"] = poly_json(multiplicity_polynomial(ring));
    }
    const TorTable t = engine_.tor_table(*M, N, J, D);
    doc_["frontier"] = frontier_json(t);
    doc_["tor"] = tor_json(t);
    if (task_ != Task::Rigidity) doc_["koszul"] = koszul_json(t);
    if (task_ == Task::Rigidity || task_ == Task::Report) doc_["rigidity"] = rigidity_json(rigidity_scan(t, c), c);
    if (task_ == Task::Rigidity) return;
    if (task_ == Task::Tor) {
      if (c >= 1) doc_["fit"] = fit_json(fit_even_odd(t, c));
      return;
    }
    const EtaReport e = eta(t, c);
    doc_["eta"] = eta_json(e);
    if (task_ == Task::Eta) return;

    const int E = default_E(t, c);
    const GenFunReport g0 = gen_fun(t, E, c);
    const GenFunReport g2 = gen_fun(t, E + 2, c);
    const Rational scaled = e.eta * Rational(eta_scale(c));
    doc_["genfun"] = {{"passes", {genfun_json(g0), genfun_json(g2)}},
                      {"values_agree", g0.value_at_one == g2.value_at_one},
                      {"value_matches_eta", Rational(g0.value_at_one) == scaled &&
                                                Rational(g2.value_at_one) == scaled}};
    if (task_ == Task::GenFun) return;

    doc_["ab_identity"] = ab_json(ab_identity_check(hm, hn, hr, t));
    doc_["ambient_tor"] = ambient_json(ambient_tor_vanishing(ring, field_, *M, N, D));
  }

 private:
  HilbertSeries series(const GradedPresentation& p, int D) {
    return hilbert_series(p, engine_.ring_ptr(), D, engine_.window());
  }

  static HypothesisViolation not_regular(const RingCertificate& cert) {
    return HypothesisViolation("the relations are not a regular sequence: dim R_" +
                               std::to_string(*cert.regular.failed_at) + " = " +
                               std::to_string(cert.regular.actual) + " but the product formula gives " +
                               std::to_string(cert.regular.expected));
  }

  void check(int D) {
    const auto& ring = job_.ring;
    const auto cert = certify(ring, D);
    doc_["certificate"] = certificate_json(cert);
    doc_["product_formula"] = product_formula(ring.v(), ring.relation_degrees, D);
    if (job_.pair) {
      doc_["ambient_tor"] = ambient_json(ambient_tor_vanishing(
          ring, field_, job_.module(job_.pair->first), job_.module(job_.pair->second), D));
    }
    if (!cert.regular.verified) throw not_regular(cert);
    if (cert.isolated.verdict != SingularityVerdict::Yes)
      throw HypothesisViolation("isolated singularity not certified: the Jacobian quotient is nonzero through degree " +
                                std::to_string(cert.isolated.checked_to));
  }

  void hilbert(const std::vector<const GradedPresentation*>& mods, int D) {
    Json h;
    const auto hr = series(GradedPresentation::free("R", {0}), D);
    h["R"] = hilbert_json(hr);
    for (const auto* m : mods) h[m->label] = hilbert_json(series(*m, D));
    doc_["hilbert"] = h;
    doc_["e_R"] = poly_json(multiplicity_polynomial(job_.ring));
  }

  const JobSpec& job_;
  Task task_;
  TorEngine<F> engine_;
  F field_;
  Json& doc_;
};

Json error_json(const std::string& kind, const std::string& message) {
  return {{"kind", kind}, {"message", message}};
}

}  // namespace

int exit_code_for(const std::string& kind) {
  if (kind == "ParseError" || kind == "UnknownVariable" || kind == "HomogeneityError" || kind == "UsageError")
    return kExitUsage;
  if (kind == "HypothesisViolation") return kExitHypothesis;
  if (kind == "DegreeBoundExceeded" || kind == "InsufficientWindow" || kind == "NotStabilized" ||
      kind == "NotPolynomialWithinBound" || kind == "XDegreeDefect")
    return kExitBound;
  return kExitInternal;
}

RunResult run(const JobSpec& job, Task task) {
  RunResult r;
  Json& doc = r.report;
  doc["task"] = to_string(task);
  doc["status"] = nullptr;
  doc["ring"] = ring_json(job.ring);
  Json error;
  try {
    if (job.ring.field.is_rational()) {
      Pipeline<RationalField>(job, task, RationalField{}, doc).run();
    } else {
      Pipeline<PrimeField>(job, task, PrimeField(job.ring.field.prime), doc).run();
    }
  } catch (const InsufficientWindow& e) {
    error = error_json(e.kind(), e.what());
    error["suggested_J"] = e.suggested_j();
  } catch (const DegreeBoundExceeded& e) {
    error = error_json(e.kind(), e.what());
    error["step"] = e.step();
  } catch (const Error& e) {
    error = error_json(e.kind(), e.what());
  } catch (const std::invalid_argument& e) {
    error = error_json("UsageError", e.what());
  } catch (const std::exception& e) {
    error = error_json("InternalError", e.what());
  }
  r.exit_code = error.is_null() ? kExitOk : exit_code_for(error["kind"]);
  doc["status"] = {{"exit_code", r.exit_code}, {"error", error}};
  return r;
}

namespace {

std::string csv(const Json& doc) {
  std::ostringstream out;
  if (doc.contains("tor")) {
    const auto& dims = doc["tor"]["dims"];
    const int width = dims.empty() ? 0 : static_cast<int>(dims[0].size());
    out << "j\\i";
    for (int i = 0; i < width; ++i) out << "," << i;
    out << "\n";
    for (std::size_t j = 0; j < dims.size(); ++j) {
      out << j;
      for (const auto& d : dims[j]) out << "," << d.get<long>();
      out << "\n";
    }
  } else if (doc.contains("hilbert")) {
    const auto& h = doc["hilbert"];
    out << "degree";
    for (const auto& [name, _] : h.items()) out << "," << name;
    out << "\n";
    const std::size_t n = h.begin()->at("coefficients").size();
    for (std::size_t d = 0; d < n; ++d) {
      out << d;
      for (const auto& [_, s] : h.items()) out << "," << s["coefficients"][d].get<std::string>();
      out << "\n";
    }
  } else if (doc.contains("certificate")) {
    const auto& pf = doc["product_formula"];
    const auto& jq = doc["certificate"]["isolated_singularity"]["jacobian_quotient_dims"];
    out << "degree,product_formula,jacobian_quotient\n";
    for (std::size_t d = 0; d < pf.size(); ++d) {
      out << d << "," << pf[d].get<long>() << ",";
      if (d < jq.size()) out << jq[d].get<long>();
      out << "\n";
    }
  }
  return out.str();
}

std::string scalar(const Json& v) {
  if (v.is_null()) return "none";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string text(const Json& doc) {
  std::ostringstream out;
  const auto& st = doc["status"];
  out << "task: " << doc["task"].get<std::string>() << "\n";
  out << "ring: " << doc["ring"]["presentation"].get<std::string>() << "  (v = " << doc["ring"]["v"]
      << ", c = " << doc["ring"]["c"] << ", dim = " << doc["ring"]["n"] << ")\n";
  if (doc.contains("pair")) out << "pair: " << doc["pair"][0].get<std::string>() << ", " << doc["pair"][1].get<std::string>() << "\n";
  if (doc.contains("bounds"))
    out << "bounds: J = " << doc["bounds"]["J"] << ", D = " << doc["bounds"]["D"] << ", window = "
        << doc["bounds"]["window"] << "\n";
  if (doc.contains("certificate")) {
    const auto& c = doc["certificate"];
    const auto& rs = c["regular_sequence"];
    out << "regular sequence: "
        << (rs["verified"].get<bool>() ? "verified through degree " + scalar(rs["checked_to"])
                                       : "fails at degree " + scalar(rs["failed_at"]) + " (expected " +
                                             scalar(rs["expected"]) + ", found " + scalar(rs["actual"]) + ")")
        << "\n";
    out << "isolated singularity: " << scalar(c["isolated_singularity"]["verdict"]) << "\n";
    for (const auto& w : c["isolated_singularity"]["warnings"]) out << "  warning: " << w.get<std::string>() << "\n";
  }
  if (doc.contains("hilbert")) {
    for (const auto& [name, h] : doc["hilbert"].items()) {
      out << "H_" << name << ": numerator";
      for (const auto& a : h["numerator"]) out << " " << a.get<std::string>();
      out << ", pole order " << h["pole_order"] << "\n";
    }
  }
  if (doc.contains("tor")) {
    const auto& t = doc["tor"];
    out << "Tor lengths (j = 0..):";
    for (const auto& l : t["lengths"]) out << " " << (l.is_null() ? std::string("*") : l.dump());
    out << "\n";
    const auto& f = doc["frontier"];
    out << "finite length from j = " << scalar(f["finite_length_from"]) << ", Koszul onset "
        << scalar(f["koszul_onset"]) << ", complete below degree " << f["complete_below"] << "\n";
  }
  if (doc.contains("fit")) {
    out << "P_even(j) = " << doc["fit"]["P_even_text"].get<std::string>()
        << ", P_odd(j) = " << doc["fit"]["P_odd_text"].get<std::string>() << "\n";
  }
  if (doc.contains("eta")) {
    const auto& e = doc["eta"];
    out << "P_even(j) = " << e["fit"]["P_even_text"].get<std::string>()
        << ", P_odd(j) = " << e["fit"]["P_odd_text"].get<std::string>() << "\n";
    out << "eta_" << e["c"] << " = " << e["eta"].get<std::string>();
    if (!e["theta"].is_null()) out << ", theta = " << e["theta"].get<std::string>();
    out << "\n";
  }
  if (doc.contains("genfun")) {
    for (const auto& p : doc["genfun"]["passes"])
      out << "eta_{c," << p["E"] << "}(t) = " << p["eta_poly_text"].get<std::string>() << ", value at 1 = "
          << p["value_at_one"].get<std::string>() << ", vanishing order " << scalar(p["vanishing_order"]) << "\n";
    out << "values at 1 agree: " << (doc["genfun"]["values_agree"].get<bool>() ? "yes" : "no")
        << ", equal 2^c c! eta: " << (doc["genfun"]["value_matches_eta"].get<bool>() ? "yes" : "no") << "\n";
  }
  if (doc.contains("ab_identity"))
    out << "AB identity: max deviation " << doc["ab_identity"]["max_deviation"].get<std::string>()
        << " through degree " << doc["ab_identity"]["checked_through"] << "\n";
  if (doc.contains("rigidity")) {
    const auto& r = doc["rigidity"];
    out << "rigidity: " << (r["rigid_within_table"].get<bool>() ? "no violation within the table"
                                                                 : "zero run at j = " + scalar(r["first_violating_run"]) +
                                                                       " followed by a nonzero Tor")
        << "\n";
  }
  if (doc.contains("ambient_tor"))
    out << "ambient Tor: largest nonzero index " << doc["ambient_tor"]["largest_nonzero"] << "\n";
  out << "status: ";
  if (st["error"].is_null())
    out << "ok\n";
  else
    out << st["error"]["kind"].get<std::string>() << ": " << st["error"]["message"].get<std::string>() << "\n";
  return out.str();
}

}  // namespace

std::string render(const Json& report, Format format) {
  switch (format) {
    case Format::Json: return report.dump(2) + "\n";
    case Format::Csv: return csv(report);
    case Format::Text: return text(report);
  }
  return {};
}

}  // namespace etalab
