#pragma once

// Standard-graded quotient rings Q/I realized degree by degree.
//
// For each degree d the ideal piece I_d is spanned by the products m*g of
// generators g with monomials m of complementary degree. Its reduced row
// echelon form, with columns ordered from the largest monomial down, splits
// the monomials of degree d into pivots (leading monomials of I_d) and
// standard monomials; the standard monomials are the basis of (Q/I)_d and the
// reduced rows give the normal form of every pivot monomial.

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "etalab/field.hpp"
#include "etalab/linalg.hpp"
#include "etalab/monomial.hpp"
#include "etalab/polynomial.hpp"

namespace etalab {

/// R = Q/(f_1,...,f_c) with Q = k[x_0..x_{v-1}] standard graded. Field-agnostic
/// input data: relations are stored with rational coefficients.
struct RingDescriptor {
  FieldSpec field;
  std::vector<std::string> variables;
  std::vector<RationalPolynomial> relations;
  std::vector<int> relation_degrees;

  /// Validates homogeneity, positive relation degrees and distinct names.
  static RingDescriptor make(FieldSpec field, std::vector<std::string> variables,
                             std::vector<RationalPolynomial> relations);

  int v() const { return static_cast<int>(variables.size()); }
  int c() const { return static_cast<int>(relations.size()); }
  int n() const { return v() - c(); }
  int max_relation_degree() const;
  /// d_1 * ... * d_c
  long degree_product() const;

  /// The same presentation with no relations (the ambient ring Q).
  RingDescriptor ambient() const;
  RingDescriptor with_field(FieldSpec f) const;

  std::string to_string() const;
};

template <class F>
struct QuotientPiece {
  using Element = typename F::Element;

  int degree = 0;
  std::vector<Monomial> monomials;  // all monomials of this degree, grlex descending
  MonomialIndex index;
  std::vector<Monomial> basis;      // standard monomials, in the same order
  std::vector<int> basis_pos;       // monomial position -> basis coordinate, or -1
  std::vector<SparseVec<Element>> normal_form;  // per monomial position

  int dim() const { return static_cast<int>(basis.size()); }
};

/// Q/I for a homogeneous ideal I over the field F. Pieces are memoized and the
/// memo is safe for concurrent readers.
template <class F>
class QuotientRing {
 public:
  using Element = typename F::Element;
  using Poly = Polynomial<F>;
  using Piece = QuotientPiece<F>;
  using Vec = SparseVec<Element>;

  QuotientRing(F field, int nvars, std::vector<Poly> generators)
      : field_(std::move(field)), nvars_(nvars) {
    if (nvars < 1 || nvars > kMaxVariables) throw std::invalid_argument("variable count out of range");
    for (auto& g : generators) {
      if (g.is_zero()) continue;
      if (!g.is_homogeneous()) throw std::invalid_argument("ideal generator is not homogeneous");
      generators_.push_back(std::move(g));
    }
  }

  const F& field() const { return field_; }
  int nvars() const { return nvars_; }
  const std::vector<Poly>& generators() const { return generators_; }

  /// Degree-d piece; negative degrees give an empty piece.
  const Piece& piece(int d) const {
    if (d < 0) return empty_;
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = memo_.find(d);
      if (it != memo_.end()) return *it->second;
    }
    // R_d = Q_1 R_{d-1}, so a vanishing piece vanishes in all higher degrees
    bool vanishes = d > 0 && piece(d - 1).dim() == 0;
    auto built = std::make_shared<const Piece>(build(d, vanishes));
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, fresh] = memo_.try_emplace(d, std::move(built));
    return *it->second;
  }

  int dim(int d) const { return piece(d).dim(); }

  /// Coordinates of the class of m in the basis of its degree piece.
  const Vec& normal_form(const Monomial& m) const {
    const Piece& p = piece(m.degree());
    int pos = p.index.find(m);
    if (pos < 0) throw std::logic_error("monomial outside its degree piece");
    return p.normal_form[pos];
  }

  /// Coordinates of the class of a homogeneous polynomial of degree d.
  Vec normal_form(const Poly& g) const {
    if (g.is_zero()) return {};
    return combine(g, Monomial(), g.degree());
  }

  /// Canonical representative: a combination of standard monomials.
  Poly reduce(const Poly& g) const {
    if (g.is_zero()) return g;
    if (!g.is_homogeneous()) throw std::invalid_argument("reduce: polynomial is not homogeneous");
    return to_polynomial(normal_form(g), g.degree());
  }

  Poly to_polynomial(const Vec& coords, int d) const {
    const Piece& p = piece(d);
    std::vector<typename Poly::Term> terms;
    terms.reserve(coords.size());
    for (const auto& e : coords) terms.push_back({p.basis[e.col], e.value});
    return Poly::from_terms(field_, std::move(terms));
  }

  /// Image of basis element k of R_d under multiplication by homogeneous g.
  Vec multiply_basis(const Poly& g, int d, int k) const {
    if (g.is_zero()) return {};
    return combine(g, piece(d).basis[k], g.degree() + d);
  }

  /// Image of an element of R_d (given in coordinates) under multiplication by g.
  Vec multiply(const Poly& g, int d, const Vec& element) const {
    if (g.is_zero() || element.empty()) return {};
    const int target = d + g.degree();
    std::vector<Element> acc(dim(target), field_.zero());
    const Piece& src = piece(d);
    for (const auto& e : element)
      for (const auto& t : g.terms())
        for (const auto& nf : normal_form(t.mono * src.basis[e.col]))
          acc[nf.col] = field_.add(acc[nf.col], field_.mul(field_.mul(t.coeff, e.value), nf.value));
    return densify(acc);
  }

  /// Matrix of multiplication by g from R_d to R_{d+deg g}.
  DenseMatrix<F> mult_map(const Poly& g, int d) const {
    return mult_map(g, d, g.is_zero() ? 0 : g.degree());
  }

  /// Same, with the degree e of g given explicitly (needed when g is zero).
  DenseMatrix<F> mult_map(const Poly& g, int d, int e) const {
    if (!g.is_zero() && (!g.is_homogeneous() || g.degree() != e))
      throw std::invalid_argument("mult_map: g is not homogeneous of the stated degree");
    const int src = dim(d);
    std::vector<Vec> cols;
    cols.reserve(src);
    for (int k = 0; k < src; ++k) cols.push_back(multiply_basis(g, d, k));
    return DenseMatrix<F>::from_columns(field_, dim(d + e), cols);
  }

 private:
  Vec combine(const Poly& g, const Monomial& shift, int target) const {
    std::vector<Element> acc(dim(target), field_.zero());
    for (const auto& t : g.terms())
      for (const auto& nf : normal_form(t.mono * shift))
        acc[nf.col] = field_.add(acc[nf.col], field_.mul(t.coeff, nf.value));
    return densify(acc);
  }

  Vec densify(std::vector<Element>& acc) const {
    Vec out;
    for (std::size_t i = 0; i < acc.size(); ++i)
      if (!field_.is_zero(acc[i])) out.push_back({static_cast<std::uint32_t>(i), std::move(acc[i])});
    return out;
  }

  Piece build(int d, bool vanishes) const {
    Piece p;
    p.degree = d;
    p.monomials = monomial_basis(nvars_, d);
    p.index = MonomialIndex(p.monomials);
    const std::size_t ncols = p.monomials.size();
    p.basis_pos.assign(ncols, -1);
    p.normal_form.assign(ncols, {});
    if (vanishes) return p;

    Echelon<F> ech(field_, ncols);
    for (const auto& g : generators_) {
      if (ech.rank() == ncols) break;
      const int e = g.degree();
      if (e > d) continue;
      for (const auto& m : monomial_basis(nvars_, d - e)) {
        Vec row;
        row.reserve(g.size());
        for (const auto& t : g.terms())
          row.push_back({static_cast<std::uint32_t>(p.index.find(t.mono * m)), t.coeff});
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
        ech.insert(row);
        if (ech.rank() == ncols) break;
      }
    }
    ech.make_reduced();
    for (std::size_t c = 0; c < ncols; ++c) {
      if (ech.is_pivot(c)) continue;
      p.basis_pos[c] = static_cast<int>(p.basis.size());
      p.basis.push_back(p.monomials[c]);
    }
    for (std::size_t c = 0; c < ncols; ++c) {
      if (p.basis_pos[c] >= 0) {
        p.normal_form[c] = {{static_cast<std::uint32_t>(p.basis_pos[c]), field_.one()}};
        continue;
      }
      const Vec& row = *ech.row_for_pivot(c);
      Vec nf;
      nf.reserve(row.size() - 1);
      for (std::size_t k = 1; k < row.size(); ++k)
        nf.push_back({static_cast<std::uint32_t>(p.basis_pos[row[k].col]), field_.neg(row[k].value)});
      p.normal_form[c] = std::move(nf);
    }
    return p;
  }

  F field_;
  int nvars_;
  std::vector<Poly> generators_;
  Piece empty_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::shared_ptr<const Piece>> memo_;
};

/// Builds the quotient ring of a descriptor over a concrete field.
template <class F>
std::shared_ptr<const QuotientRing<F>> make_ring(const RingDescriptor& desc, const F& field) {
  std::vector<Polynomial<F>> gens;
  for (const auto& f : desc.relations) gens.push_back(to_field(f, field));
  return std::make_shared<const QuotientRing<F>>(field, desc.v(), std::move(gens));
}

}  // namespace etalab
