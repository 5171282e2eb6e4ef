#include "etalab/ring.hpp"

#include <set>

#include "etalab/errors.hpp"

namespace etalab {

RingDescriptor RingDescriptor::make(FieldSpec field, std::vector<std::string> variables,
                                    std::vector<RationalPolynomial> relations) {
  if (variables.empty()) throw std::invalid_argument("ring needs at least one variable");
  if (variables.size() > static_cast<std::size_t>(kMaxVariables))
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " variables supported");
  std::set<std::string> seen;
  for (const auto& v : variables)
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name '" + v + "'");

  RingDescriptor r;
  r.field = field;
  r.variables = std::move(variables);
  for (std::size_t l = 0; l < relations.size(); ++l) {
    const auto& f = relations[l];
    const std::string name = "relation " + std::to_string(l + 1);
    if (f.is_zero()) throw HomogeneityError(name + " is zero");
    if (!f.is_homogeneous()) throw HomogeneityError(name + " is not homogeneous");
    if (f.degree() < 1) throw HomogeneityError(name + " is a nonzero constant (must lie in the maximal ideal)");
    if (!field.is_rational()) {
      // the relation must survive reduction mod p with the same degree
      auto reduced = to_field(f, PrimeField(field.prime));
      if (reduced.is_zero()) throw HomogeneityError(name + " vanishes modulo " + std::to_string(field.prime));
    }
    r.relation_degrees.push_back(f.degree());
  }
  r.relations = std::move(relations);
  return r;
}

int RingDescriptor::max_relation_degree() const {
  int m = 0;
  for (int d : relation_degrees) m = std::max(m, d);
  return m;
}

long RingDescriptor::degree_product() const {
  long p = 1;
  for (int d : relation_degrees) p *= d;
  return p;
}

RingDescriptor RingDescriptor::ambient() const {
  RingDescriptor q = *this;
  q.relations.clear();
  q.relation_degrees.clear();
  return q;
}

RingDescriptor RingDescriptor::with_field(FieldSpec f) const {
  return make(f, variables, relations);
}

std::string RingDescriptor::to_string() const {
  std::string out = field.name() + "[";
  for (std::size_t i = 0; i < variables.size(); ++i) out += (i ? "," : "") + variables[i];
  out += "]";
  if (!relations.empty()) {
    out += "/(";
    for (std::size_t l = 0; l < relations.size(); ++l)
      out += (l ? ", " : "") + relations[l].to_string(variables);
    out += ")";
  }
  return out;
}

}  // namespace etalab
