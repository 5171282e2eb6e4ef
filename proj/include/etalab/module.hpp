#pragma once

// Finitely generated graded modules over a quotient ring R, realized degree by
// degree. A free module sum_i R(-a_i) has degree-d piece sum_i R_{d-a_i}; its
// coordinates are the concatenated standard-monomial coordinates of the
// blocks, in generator order.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "etalab/errors.hpp"
#include "etalab/linalg.hpp"
#include "etalab/ring.hpp"

namespace etalab {

/// Prime used for rank certificates over the rationals.
inline constexpr std::uint32_t kModularPrime = 2147483629u;

/// sum_i R(-a_i): generator i sits in degree twists[i].
struct FreeModule {
  std::vector<int> twists;

  int rank() const { return static_cast<int>(twists.size()); }
  bool empty() const { return twists.empty(); }
  int min_twist() const { return twists.empty() ? 0 : *std::min_element(twists.begin(), twists.end()); }
  int max_twist() const { return twists.empty() ? 0 : *std::max_element(twists.begin(), twists.end()); }

  /// Block offsets of the degree-d piece; offsets.back() is its dimension.
  template <class F>
  std::vector<int> offsets(const QuotientRing<F>& ring, int d) const {
    std::vector<int> off(twists.size() + 1, 0);
    for (std::size_t i = 0; i < twists.size(); ++i) off[i + 1] = off[i] + ring.dim(d - twists[i]);
    return off;
  }

  template <class F>
  int dim(const QuotientRing<F>& ring, int d) const {
    int total = 0;
    for (int a : twists) total += ring.dim(d - a);
    return total;
  }

  friend bool operator==(const FreeModule&, const FreeModule&) = default;
};

/// Homogeneous map source -> target; entries[i][j] has degree
/// source.twists[j] - target.twists[i] (or is zero).
template <class F>
struct ModuleMap {
  FreeModule source;
  FreeModule target;
  std::vector<std::vector<Polynomial<F>>> entries;  // [target row][source column]

  const Polynomial<F>& at(int i, int j) const { return entries[i][j]; }
};

/// A graded module coker(relations: sum R(-b_s) -> sum R(-a_r)) given by
/// field-agnostic data. Relations are stored column by column.
struct GradedPresentation {
  std::string label;
  FreeModule generators;
  std::vector<int> relation_twists;
  std::vector<std::vector<RationalPolynomial>> relation_columns;  // [relation][generator]

  /// Validates the homogeneity of every entry, inferring each relation's
  /// degree from its first nonzero entry. Zero relations are dropped.
  static GradedPresentation make(std::string label, std::vector<int> twists,
                                 std::vector<std::vector<RationalPolynomial>> columns);
  /// R/(g_1,...,g_m) on one generator of degree 0.
  static GradedPresentation cyclic(std::string label, int nvars, std::vector<RationalPolynomial> ideal);
  static GradedPresentation free(std::string label, std::vector<int> twists);
  static GradedPresentation residue_field(int nvars, std::string label = "k");

  int relation_count() const { return static_cast<int>(relation_columns.size()); }
  /// Label, twists and relation entries as one string; equal data gives equal keys.
  std::string fingerprint() const;
};

/// Presentation of M (x) N: generators e_r (x) e'_t, relations from both factors.
GradedPresentation tensor_product(const GradedPresentation& a, const GradedPresentation& b,
                                  std::string label = {});

GradedPresentation direct_sum(const GradedPresentation& a, const GradedPresentation& b,
                              std::string label = {});

/// Q-module structure of an R-module: adds f_l * e_r for every generator e_r.
GradedPresentation over_ambient(const GradedPresentation& p, const RingDescriptor& ring);

// ---------------------------------------------------------------------------
// degreewise helpers

/// Splits a vector of the degree-d piece of a free module into its blocks.
template <class E>
std::vector<SparseVec<E>> split_blocks(const SparseVec<E>& v, const std::vector<int>& offsets) {
  std::vector<SparseVec<E>> blocks(offsets.size() - 1);
  std::size_t b = 0;
  for (const auto& e : v) {
    while (static_cast<int>(e.col) >= offsets[b + 1]) ++b;
    blocks[b].push_back({static_cast<std::uint32_t>(e.col - offsets[b]), e.value});
  }
  return blocks;
}

template <class E>
void append_shifted(SparseVec<E>& out, const SparseVec<E>& block, int offset) {
  for (const auto& e : block) out.push_back({static_cast<std::uint32_t>(e.col + offset), e.value});
}

/// Multiplies an element of (free)_d by the homogeneous polynomial g.
template <class F>
SparseVec<typename F::Element> free_multiply(const QuotientRing<F>& ring, const FreeModule& free,
                                             int d, const SparseVec<typename F::Element>& v,
                                             const Polynomial<F>& g) {
  auto src_off = free.offsets(ring, d);
  auto dst_off = free.offsets(ring, d + g.degree());
  auto blocks = split_blocks(v, src_off);
  SparseVec<typename F::Element> out;
  for (std::size_t s = 0; s < blocks.size(); ++s) {
    if (blocks[s].empty()) continue;
    append_shifted(out, ring.multiply(g, d - free.twists[s], blocks[s]), dst_off[s]);
  }
  return out;
}

/// Element of (free)_d as a column of polynomials (normal forms).
template <class F>
std::vector<Polynomial<F>> to_column(const QuotientRing<F>& ring, const FreeModule& free, int d,
                                     const SparseVec<typename F::Element>& v) {
  auto blocks = split_blocks(v, free.offsets(ring, d));
  std::vector<Polynomial<F>> col;
  col.reserve(blocks.size());
  for (std::size_t s = 0; s < blocks.size(); ++s)
    col.push_back(ring.to_polynomial(blocks[s], d - free.twists[s]));
  return col;
}

/// Columns of the k-linear map (source)_d -> (target)_d induced by map.
template <class F>
std::vector<SparseVec<typename F::Element>> piece_columns(const ModuleMap<F>& map,
                                                          const QuotientRing<F>& ring, int d) {
  using Vec = SparseVec<typename F::Element>;
  const auto& field = ring.field();
  auto tgt_off = map.target.offsets(ring, d);
  std::vector<Vec> cols;
  for (int s = 0; s < map.source.rank(); ++s) {
    const int src_deg = d - map.source.twists[s];
    const int n = ring.dim(src_deg);
    for (int k = 0; k < n; ++k) {
      // accumulate block by block; blocks are disjoint so concatenation stays sorted
      Vec col;
      for (int r = 0; r < map.target.rank(); ++r) {
        const auto& p = map.entries[r][s];
        if (p.is_zero()) continue;
        append_shifted(col, ring.multiply_basis(p, src_deg, k), tgt_off[r]);
      }
      cols.push_back(std::move(col));
    }
  }
  (void)field;
  return cols;
}

template <class F>
DenseMatrix<F> piece_matrix(const ModuleMap<F>& map, const QuotientRing<F>& ring, int d) {
  return DenseMatrix<F>::from_columns(ring.field(), map.target.dim(ring, d), piece_columns(map, ring, d));
}

/// Reads a presentation into ModuleMap form over F, entries reduced to normal form.
template <class F>
ModuleMap<F> presentation_map(const GradedPresentation& p, const QuotientRing<F>& ring) {
  ModuleMap<F> m;
  m.target = p.generators;
  m.source.twists = p.relation_twists;
  m.entries.assign(p.generators.rank(), std::vector<Polynomial<F>>(p.relation_count(), Polynomial<F>(ring.field())));
  for (int s = 0; s < p.relation_count(); ++s)
    for (int r = 0; r < p.generators.rank(); ++r)
      m.entries[r][s] = ring.reduce(to_field(p.relation_columns[s][r], ring.field()));
  return m;
}

/// Strips unit entries (nonzero constants) by row and column operations and
/// drops zero relations; the cokernel is unchanged and the generators become
/// minimal.
template <class F>
ModuleMap<F> minimize_presentation(ModuleMap<F> m, const QuotientRing<F>& ring) {
  const auto& field = ring.field();
  for (;;) {
    int ur = -1, us = -1;
    for (int r = 0; r < m.target.rank() && ur < 0; ++r)
      for (int s = 0; s < m.source.rank(); ++s) {
        const auto& e = m.entries[r][s];
        if (!e.is_zero() && e.degree() == 0) {
          ur = r;
          us = s;
          break;
        }
      }
    if (ur < 0) break;
    auto unit_inv = field.inv(m.entries[ur][us].constant_term());
    for (int s = 0; s < m.source.rank(); ++s) {
      if (s == us || m.entries[ur][s].is_zero()) continue;
      auto factor = m.entries[ur][s].scaled(unit_inv);
      for (int r = 0; r < m.target.rank(); ++r) {
        if (m.entries[r][us].is_zero()) continue;
        m.entries[r][s] = ring.reduce(m.entries[r][s] - factor * m.entries[r][us]);
      }
    }
    m.entries.erase(m.entries.begin() + ur);
    m.target.twists.erase(m.target.twists.begin() + ur);
    for (auto& row : m.entries) row.erase(row.begin() + us);
    m.source.twists.erase(m.source.twists.begin() + us);
  }
  for (int s = m.source.rank() - 1; s >= 0; --s) {
    bool zero = true;
    for (int r = 0; r < m.target.rank(); ++r) zero = zero && m.entries[r][s].is_zero();
    if (!zero) continue;
    for (auto& row : m.entries) row.erase(row.begin() + s);
    m.source.twists.erase(m.source.twists.begin() + s);
  }
  return m;
}

/// Scales a rational vector to coprime integers; other fields are left alone.
template <class F>
void make_primitive(const F& field, SparseVec<typename F::Element>& v) {
  if constexpr (std::is_same_v<F, RationalField>) {
    if (v.empty()) return;
    Integer den = 1, num = 0;
    for (const auto& e : v) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.value.get_den_mpz_t());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), e.value.get_num_mpz_t());
    }
    Rational scale(den, num);
    scale.canonicalize();
    for (auto& e : v) e.value *= scale;
  } else {
    (void)field;
  }
}

/// Minimal homogeneous generators of a graded submodule U of a free module,
/// given through a spanning set of U_d for every degree d. At each degree the
/// new generators are chosen greedily, in the order the spanning vectors are
/// supplied, against the span of R_1 * U_{d-1}.
template <class F>
ModuleMap<F> minimal_generators(
    const FreeModule& ambient, const QuotientRing<F>& ring, int lo, int hi,
    const std::function<std::vector<SparseVec<typename F::Element>>(int)>& subspace,
    std::vector<long>* dims = nullptr) {
  using Vec = SparseVec<typename F::Element>;
  ModuleMap<F> g;
  g.target = ambient;
  g.entries.assign(ambient.rank(), {});
  if (dims) dims->assign(std::max(hi + 1, 0), 0);
  std::vector<Vec> previous;
  std::vector<Polynomial<F>> vars;
  for (int i = 0; i < ring.nvars(); ++i) vars.push_back(Polynomial<F>::variable(ring.field(), i));
  for (int d = std::max(lo, 0); d <= hi; ++d) {
    const int dim = ambient.dim(ring, d);
    if (dim == 0) {
      previous.clear();
      continue;
    }
    Echelon<F> ech(ring.field(), dim);
    for (const auto& w : previous) {
      if (ech.rank() == static_cast<std::size_t>(dim)) break;
      for (const auto& x : vars) ech.insert(free_multiply(ring, ambient, d - 1, w, x));
    }
    for (auto& w : subspace(d)) {
      make_primitive(ring.field(), w);
      if (!ech.insert(w)) continue;
      g.source.twists.push_back(d);
      auto col = to_column(ring, ambient, d, w);
      for (int r = 0; r < ambient.rank(); ++r) g.entries[r].push_back(std::move(col[r]));
    }
    if (dims) (*dims)[d] = static_cast<long>(ech.rank());
    previous.clear();
    for (std::size_t k = 0; k < ech.rank(); ++k) previous.push_back(ech.row(k));
  }
  return g;
}

/// Rank over F, computed modulo a large prime when F is the rationals. The
/// result never exceeds the true rank; nullopt when a denominator vanishes.
template <class F>
std::optional<std::size_t> modular_rank(const F& field, std::size_t dim,
                                        const std::vector<SparseVec<typename F::Element>>& cols) {
  if constexpr (std::is_same_v<F, RationalField>) {
    const PrimeField fp(kModularPrime);
    std::vector<SparseVec<std::uint32_t>> reduced;
    reduced.reserve(cols.size());
    try {
      for (const auto& c : cols) {
        SparseVec<std::uint32_t> v;
        for (const auto& e : c) {
          auto x = fp.from_rational(e.value);
          if (x != 0) v.push_back({e.col, x});
        }
        reduced.push_back(std::move(v));
      }
    } catch (const std::domain_error&) {
      return std::nullopt;
    }
    (void)field;
    return rank_of(fp, dim, reduced);
  } else {
    return rank_of(field, dim, cols);
  }
}

/// Leading position of a kernel element: a block and a monomial of that block.
struct LeadTerm {
  int block = 0;
  Monomial mono;
  int degree = 0;
};

/// Marks the positions m * lead that are standard in degree d; each marked
/// position leads some element of the submodule, so the count bounds its rank
/// from below.
template <class F>
std::size_t count_leading_positions(const std::vector<LeadTerm>& leads, const FreeModule& free,
                                    const QuotientRing<F>& ring, int d, std::vector<char>& covered) {
  const auto off = free.offsets(ring, d);
  covered.assign(off.back(), 0);
  std::size_t count = 0;
  for (const auto& lead : leads) {
    if (lead.degree > d) continue;
    const auto& target = ring.piece(d - free.twists[lead.block]);
    for (const auto& m : ring.piece(d - lead.degree).monomials) {
      const int pos = target.index.find(m * lead.mono);
      const int b = pos < 0 ? -1 : target.basis_pos[pos];
      if (b < 0) continue;
      char& c = covered[off[lead.block] + b];
      if (!c) {
        c = 1;
        ++count;
      }
    }
  }
  return count;
}

/// Minimal generators of ker(map) in degrees <= D, as a map G -> map.source.
///
/// With image_dims (the exact rank of map in each degree 0..D) the kernel
/// dimension is known, and a degree is settled once the leading positions of
/// known kernel elements times monomials fill it. Otherwise the span S_d of R
/// times the generators found so far is compared with dim source_d - rank map_d,
/// both modulo a prime (which bounds the true values from the correct sides).
/// Unsettled degrees compute the kernel exactly and complete it greedily.
/// kernel_dims receives dim ker_d for d = 0..D.
template <class F>
ModuleMap<F> kernel_step(const ModuleMap<F>& map, const QuotientRing<F>& ring, int D,
                         const std::vector<long>* image_dims = nullptr, std::vector<long>* kernel_dims = nullptr) {
  if (!map.source.empty() && D < map.source.max_twist())
    throw DegreeBoundExceeded(-1, "degree bound " + std::to_string(D) +
                                      " is below a source generator in degree " +
                                      std::to_string(map.source.max_twist()));
  if (image_dims && static_cast<int>(image_dims->size()) <= D)
    throw std::invalid_argument("kernel_step: image dimensions must cover degrees 0..D");
  const auto& field = ring.field();
  ModuleMap<F> g;
  g.target = map.source;
  g.entries.assign(map.source.rank(), {});
  if (kernel_dims) kernel_dims->assign(std::max(D + 1, 0), 0);
  std::vector<LeadTerm> leads;
  std::vector<char> covered;
  const int lo = map.source.empty() ? 0 : std::max(map.source.min_twist(), 0);
  for (int d = lo; d <= D; ++d) {
    const auto n = static_cast<std::size_t>(map.source.dim(ring, d));
    if (n == 0) continue;
    const auto tdim = static_cast<std::size_t>(map.target.dim(ring, d));
    std::vector<SparseVec<typename F::Element>> mcols;
    if (image_dims) {
      const auto kdim = n - static_cast<std::size_t>((*image_dims)[d]);
      if (kernel_dims) (*kernel_dims)[d] = static_cast<long>(kdim);
      if (kdim == 0) continue;
      if (count_leading_positions(leads, map.source, ring, d, covered) == kdim) continue;
    } else {
      mcols = piece_columns(map, ring, d);
      const auto rm = modular_rank(field, tdim, mcols);
      const auto rs = modular_rank(field, n, piece_columns(g, ring, d));
      if (rm && rs && *rs == n - *rm) {
        if (kernel_dims) (*kernel_dims)[d] = static_cast<long>(*rs);
        continue;
      }
    }
    if (mcols.empty()) mcols = piece_columns(map, ring, d);
    Echelon<F> ech(field, n);
    for (const auto& c : piece_columns(g, ring, d)) ech.insert(c);
    for (auto& w : kernel_of(field, tdim, mcols)) {
      make_primitive(field, w);
      if (!ech.insert(w)) continue;
      g.source.twists.push_back(d);
      auto col = to_column(ring, map.source, d, w);
      for (int r = 0; r < map.source.rank(); ++r) g.entries[r].push_back(std::move(col[r]));
    }
    if (kernel_dims) (*kernel_dims)[d] = static_cast<long>(ech.rank());
    if (image_dims) {
      if (ech.rank() + static_cast<std::size_t>((*image_dims)[d]) != n)
        throw std::logic_error("kernel dimension disagrees with the image dimensions in degree " +
                               std::to_string(d));
      const auto off = map.source.offsets(ring, d);
      for (std::size_t i = 0; i < ech.rank(); ++i) {
        const std::uint32_t p = ech.pivot_of(i);
        if (covered[p]) continue;
        int r = 0;
        while (off[r + 1] <= static_cast<int>(p)) ++r;
        const auto& piece = ring.piece(d - map.source.twists[r]);
        leads.push_back({r, piece.basis[p - off[r]], d});
      }
    }
  }
  return g;
}

/// Minimal generators of image(map) in degrees <= D, as a map G -> map.target.
/// dims receives dim image_d for d = 0..D.
template <class F>
ModuleMap<F> image_generators(const ModuleMap<F>& map, const QuotientRing<F>& ring, int D,
                              std::vector<long>* dims = nullptr) {
  const int lo = map.source.empty() ? 0 : map.source.min_twist();
  // image_d = R_1 image_{d-1} + images of the source generators of degree d
  return minimal_generators<F>(
      map.target, ring, lo, D,
      [&](int d) {
        const auto off = map.target.offsets(ring, d);
        std::vector<SparseVec<typename F::Element>> cols;
        for (int s = 0; s < map.source.rank(); ++s) {
          if (map.source.twists[s] != d) continue;
          SparseVec<typename F::Element> col;
          for (int r = 0; r < map.target.rank(); ++r)
            append_shifted(col, ring.normal_form(map.entries[r][s]), off[r]);
          cols.push_back(std::move(col));
        }
        return cols;
      },
      dims);
}

/// Degree pieces of a presented module coker(relations), with the quotient
/// realized by a complement of the relation image.
template <class F>
class PresentedModule {
 public:
  using Element = typename F::Element;
  using Vec = SparseVec<Element>;

  struct Piece {
    int degree = 0;
    std::vector<int> offsets;        // blocks of the generator module
    std::shared_ptr<Echelon<F>> image;  // reduced echelon form of the relation image
    std::vector<int> quotient_pos;   // ambient coordinate -> quotient coordinate or -1
    std::vector<int> ambient_of;     // quotient coordinate -> ambient coordinate
    int dim() const { return static_cast<int>(ambient_of.size()); }
  };

  PresentedModule(std::shared_ptr<const QuotientRing<F>> ring, ModuleMap<F> relations)
      : ring_(std::move(ring)), rel_(std::move(relations)) {}

  const QuotientRing<F>& ring() const { return *ring_; }
  const ModuleMap<F>& relations() const { return rel_; }
  const FreeModule& generators() const { return rel_.target; }

  const Piece& piece(int d) const {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = memo_.find(d);
      if (it != memo_.end()) return *it->second;
    }
    auto built = std::make_shared<const Piece>(build(d));
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, fresh] = memo_.try_emplace(d, std::move(built));
    return *it->second;
  }

  int dim(int d) const { return piece(d).dim(); }

  /// Class of an ambient vector of degree d in quotient coordinates.
  Vec to_quotient(int d, const Vec& ambient) const {
    const Piece& p = piece(d);
    Vec red = p.image->reduce(ambient);
    Vec out;
    out.reserve(red.size());
    for (const auto& e : red) out.push_back({static_cast<std::uint32_t>(p.quotient_pos[e.col]), e.value});
    return out;
  }

  /// Image of quotient basis element k of degree d under multiplication by g.
  Vec multiply_basis(const Polynomial<F>& g, int d, int k) const {
    if (g.is_zero()) return {};
    const Piece& p = piece(d);
    const int col = p.ambient_of[k];
    int block = 0;
    while (col >= p.offsets[block + 1]) ++block;
    const int ring_deg = d - rel_.target.twists[block];
    Vec prod = ring_->multiply_basis(g, ring_deg, col - p.offsets[block]);
    const int td = d + g.degree();
    Vec ambient;
    append_shifted(ambient, prod, rel_.target.offsets(*ring_, td)[block]);
    return to_quotient(td, ambient);
  }

 private:
  Piece build(int d) const {
    Piece p;
    p.degree = d;
    p.offsets = rel_.target.offsets(*ring_, d);
    const int dim = p.offsets.back();
    p.image = std::make_shared<Echelon<F>>(ring_->field(), dim);
    for (const auto& col : piece_columns(rel_, *ring_, d)) {
      if (p.image->rank() == static_cast<std::size_t>(dim)) break;
      p.image->insert(col);
    }
    p.image->make_reduced();
    p.quotient_pos.assign(dim, -1);
    for (int c = 0; c < dim; ++c) {
      if (p.image->is_pivot(c)) continue;
      p.quotient_pos[c] = static_cast<int>(p.ambient_of.size());
      p.ambient_of.push_back(c);
    }
    return p;
  }

  std::shared_ptr<const QuotientRing<F>> ring_;
  ModuleMap<F> rel_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::shared_ptr<const Piece>> memo_;
};

/// dim_k of the degree-d piece of coker(p.relations).
template <class F>
int module_piece_dim(const GradedPresentation& p, const std::shared_ptr<const QuotientRing<F>>& ring, int d) {
  PresentedModule<F> m(ring, presentation_map(p, *ring));
  return m.dim(d);
}

}  // namespace etalab
