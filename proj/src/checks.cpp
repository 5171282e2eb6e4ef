#include "etalab/checks.hpp"

#include <functional>

namespace etalab {

std::vector<long> product_formula(int v, const std::vector<int>& degrees, int D) {
  std::vector<long> s(D + 1, 0);
  s[0] = 1;
  for (int k = 0; k < v; ++k)
    for (int i = 1; i <= D; ++i) s[i] += s[i - 1];
  for (int d : degrees)
    for (int i = D; i >= d; --i) s[i] -= s[i - d];
  return s;
}

RegularSequenceVerdict regular_sequence_check(const RingDescriptor& ring, int D) {
  RegularSequenceVerdict r;
  r.checked_to = D;
  const auto expected = product_formula(ring.v(), ring.relation_degrees, D);
  with_field(ring.field, [&](const auto& field) {
    auto q = make_ring(ring, field);
    for (int e = 0; e <= D; ++e) {
      const long actual = q->dim(e);
      if (actual != expected[e]) {
        r.failed_at = e;
        r.expected = expected[e];
        r.actual = actual;
        return;
      }
    }
  });
  r.verified = !r.failed_at.has_value();
  return r;
}

namespace {

RationalPolynomial determinant(const std::vector<std::vector<RationalPolynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  RationalPolynomial det;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<RationalPolynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<RationalPolynomial> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    RationalPolynomial term = m[0][col] * determinant(minor);
    det = col % 2 ? det - term : det + term;
  }
  return det;
}

}  // namespace

std::vector<RationalPolynomial> jacobian_minors(const RingDescriptor& ring) {
  const int c = ring.c(), v = ring.v();
  std::vector<RationalPolynomial> out;
  if (c == 0) return out;
  std::vector<int> cols;
  std::function<void(int)> choose = [&](int from) {
    if (static_cast<int>(cols.size()) == c) {
      std::vector<std::vector<RationalPolynomial>> m;
      for (int l = 0; l < c; ++l) {
        std::vector<RationalPolynomial> row;
        for (int i : cols) row.push_back(ring.relations[l].derivative(i));
        m.push_back(std::move(row));
      }
      auto d = determinant(m);
      if (!d.is_zero()) out.push_back(std::move(d));
      return;
    }
    for (int i = from; i < v; ++i) {
      cols.push_back(i);
      choose(i + 1);
      cols.pop_back();
    }
  };
  choose(0);
  return out;
}

IsolatedSingularityVerdict isolated_singularity_check(const RingDescriptor& ring, int D) {
  IsolatedSingularityVerdict r;
  auto minors = jacobian_minors(ring);
  r.minors = static_cast<int>(minors.size());
  if (!ring.field.is_rational())
    for (int d : ring.relation_degrees)
      if (static_cast<long>(ring.field.prime) <= d) {
        r.warnings.push_back("characteristic " + std::to_string(ring.field.prime) +
                             " does not exceed a relation degree; the Jacobian criterion may misreport");
        break;
      }
  std::vector<RationalPolynomial> gens = ring.relations;
  gens.insert(gens.end(), minors.begin(), minors.end());
  with_field(ring.field, [&](const auto& field) {
    using F = std::decay_t<decltype(field)>;
    std::vector<Polynomial<F>> g;
    for (const auto& p : gens) g.push_back(to_field(p, field));
    QuotientRing<F> qj(field, ring.v(), std::move(g));
    for (int e = 0; e <= D; ++e) {
      r.dims.push_back(qj.dim(e));
      r.checked_to = e;
      if (r.dims.back() == 0) {
        r.vanishes_from = e;
        // (Q/J)_{e+1} = Q_1 (Q/J)_e; confirm rather than assume
        if (qj.dim(e + 1) != 0) throw std::logic_error("Jacobian quotient revived after vanishing");
        break;
      }
    }
  });
  r.verdict = r.vanishes_from ? SingularityVerdict::Yes : SingularityVerdict::NoWithinBound;
  return r;
}

RingCertificate certify(const RingDescriptor& ring, int D) {
  RingCertificate cert;
  cert.regular = regular_sequence_check(ring, D);
  if (cert.regular.verified) cert.isolated = isolated_singularity_check(ring, D);
  cert.degree = ring.degree_product();
  cert.n = ring.n();
  cert.c = ring.c();
  cert.v = ring.v();
  return cert;
}

std::string to_string(SingularityVerdict v) {
  switch (v) {
    case SingularityVerdict::Yes: return "yes";
    case SingularityVerdict::NoWithinBound: return "no-within-bound";
    case SingularityVerdict::Skipped: return "skipped";
  }
  return "skipped";
}

}  // namespace etalab
