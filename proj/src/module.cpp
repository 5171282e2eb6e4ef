#include "etalab/module.hpp"

namespace etalab {

GradedPresentation GradedPresentation::make(std::string label, std::vector<int> twists,
                                            std::vector<std::vector<RationalPolynomial>> columns) {
  GradedPresentation p;
  p.label = std::move(label);
  p.generators.twists = std::move(twists);
  const int rank = p.generators.rank();
  for (std::size_t s = 0; s < columns.size(); ++s) {
    auto& col = columns[s];
    auto cell = [&](int r) {
      return "module " + p.label + ", relation " + std::to_string(s + 1) + ", row " + std::to_string(r + 1);
    };
    if (static_cast<int>(col.size()) != rank)
      throw HomogeneityError("module " + p.label + ", relation " + std::to_string(s + 1) + " has " +
                             std::to_string(col.size()) + " entries but there are " +
                             std::to_string(rank) + " generators");
    int twist = 0;
    bool seen = false;
    for (int r = 0; r < rank; ++r) {
      const auto& e = col[r];
      if (e.is_zero()) continue;
      if (!e.is_homogeneous()) throw HomogeneityError(cell(r) + ": entry is not homogeneous", s, r);
      const int expected_twist = e.degree() + p.generators.twists[r];
      if (!seen) {
        twist = expected_twist;
        seen = true;
        continue;
      }
      if (expected_twist != twist) {
        const int expected = twist - p.generators.twists[r];
        throw HomogeneityError(cell(r) + ": expected degree " + std::to_string(expected) +
                                   ", found degree " + std::to_string(e.degree()),
                               static_cast<int>(s), r);
      }
    }
    if (!seen) continue;
    p.relation_twists.push_back(twist);
    p.relation_columns.push_back(std::move(col));
  }
  return p;
}

GradedPresentation GradedPresentation::cyclic(std::string label, int nvars,
                                              std::vector<RationalPolynomial> ideal) {
  (void)nvars;
  std::vector<std::vector<RationalPolynomial>> cols;
  for (auto& g : ideal) cols.push_back({std::move(g)});
  return make(std::move(label), {0}, std::move(cols));
}

GradedPresentation GradedPresentation::free(std::string label, std::vector<int> twists) {
  return make(std::move(label), std::move(twists), {});
}

GradedPresentation GradedPresentation::residue_field(int nvars, std::string label) {
  std::vector<RationalPolynomial> vars;
  for (int i = 0; i < nvars; ++i) vars.push_back(RationalPolynomial::variable(RationalField{}, i));
  return cyclic(std::move(label), nvars, std::move(vars));
}

GradedPresentation direct_sum(const GradedPresentation& a, const GradedPresentation& b, std::string label) {
  GradedPresentation p;
  p.label = label.empty() ? a.label + "+" + b.label : std::move(label);
  p.generators.twists = a.generators.twists;
  p.generators.twists.insert(p.generators.twists.end(), b.generators.twists.begin(), b.generators.twists.end());
  const RationalPolynomial zero;
  for (int s = 0; s < a.relation_count(); ++s) {
    auto col = a.relation_columns[s];
    col.resize(p.generators.rank(), zero);
    p.relation_columns.push_back(std::move(col));
    p.relation_twists.push_back(a.relation_twists[s]);
  }
  for (int s = 0; s < b.relation_count(); ++s) {
    std::vector<RationalPolynomial> col(a.generators.rank(), zero);
    col.insert(col.end(), b.relation_columns[s].begin(), b.relation_columns[s].end());
    p.relation_columns.push_back(std::move(col));
    p.relation_twists.push_back(b.relation_twists[s]);
  }
  return p;
}

GradedPresentation over_ambient(const GradedPresentation& p, const RingDescriptor& ring) {
  GradedPresentation q = p;
  const RationalPolynomial zero;
  for (int r = 0; r < p.generators.rank(); ++r)
    for (int l = 0; l < ring.c(); ++l) {
      std::vector<RationalPolynomial> col(p.generators.rank(), zero);
      col[r] = ring.relations[l];
      q.relation_columns.push_back(std::move(col));
      q.relation_twists.push_back(p.generators.twists[r] + ring.relation_degrees[l]);
    }
  return q;
}

std::string GradedPresentation::fingerprint() const {
  std::vector<std::string> names;
  for (int i = 0; i < kMaxVariables; ++i) names.push_back("x" + std::to_string(i));
  std::string out = label + "|";
  for (int a : generators.twists) out += std::to_string(a) + ",";
  for (const auto& col : relation_columns) {
    out += "|";
    for (const auto& e : col) out += e.to_string(names) + ";";
  }
  return out;
}

GradedPresentation tensor_product(const GradedPresentation& a, const GradedPresentation& b,
                                  std::string label) {
  const int ra = a.generators.rank(), rb = b.generators.rank();
  GradedPresentation p;
  p.label = label.empty() ? a.label + "*" + b.label : std::move(label);
  for (int r = 0; r < ra; ++r)
    for (int t = 0; t < rb; ++t) p.generators.twists.push_back(a.generators.twists[r] + b.generators.twists[t]);
  const RationalPolynomial zero;
  for (int s = 0; s < a.relation_count(); ++s)
    for (int t = 0; t < rb; ++t) {
      std::vector<RationalPolynomial> col(ra * rb, zero);
      for (int r = 0; r < ra; ++r) col[r * rb + t] = a.relation_columns[s][r];
      p.relation_columns.push_back(std::move(col));
      p.relation_twists.push_back(a.relation_twists[s] + b.generators.twists[t]);
    }
  for (int r = 0; r < ra; ++r)
    for (int s = 0; s < b.relation_count(); ++s) {
      std::vector<RationalPolynomial> col(ra * rb, zero);
      for (int t = 0; t < rb; ++t) col[r * rb + t] = b.relation_columns[s][t];
      p.relation_columns.push_back(std::move(col));
      p.relation_twists.push_back(a.generators.twists[r] + b.relation_twists[s]);
    }
  return p;
}

}  // namespace etalab
