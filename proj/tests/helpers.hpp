#pragma once

#include <memory>
#include <string>
#include <vector>

#include "etalab/module.hpp"
#include "etalab/parse.hpp"
#include "etalab/ring.hpp"

namespace etalab::testing {

inline RingDescriptor descriptor(const std::vector<std::string>& vars, const std::vector<std::string>& rels,
                                 FieldSpec field = FieldSpec::rationals()) {
  std::vector<RationalPolynomial> polys;
  for (const auto& r : rels) polys.push_back(parse_polynomial(r, vars));
  return RingDescriptor::make(field, vars, polys);
}

inline std::shared_ptr<const QuotientRing<RationalField>> qring(const std::vector<std::string>& vars,
                                                                const std::vector<std::string>& rels) {
  return make_ring(descriptor(vars, rels), RationalField{});
}

inline GradedPresentation cyclic(const std::string& label, const std::vector<std::string>& vars,
                                 const std::vector<std::string>& ideal) {
  std::vector<RationalPolynomial> gens;
  for (const auto& g : ideal) gens.push_back(parse_polynomial(g, vars));
  return GradedPresentation::cyclic(label, static_cast<int>(vars.size()), gens);
}

/// Map between free modules over F from string entries, rows of the target.
template <class F>
ModuleMap<F> module_map(const QuotientRing<F>& ring, const std::vector<std::string>& vars,
                        std::vector<int> source, std::vector<int> target,
                        const std::vector<std::vector<std::string>>& rows) {
  ModuleMap<F> m;
  m.source.twists = std::move(source);
  m.target.twists = std::move(target);
  for (const auto& row : rows) {
    std::vector<Polynomial<F>> r;
    for (const auto& e : row) r.push_back(ring.reduce(to_field(parse_polynomial(e, vars), ring.field())));
    m.entries.push_back(std::move(r));
  }
  return m;
}

}  // namespace etalab::testing
