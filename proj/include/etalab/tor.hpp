#pragma once

// Graded Tor_j^R(M,N)_i from a minimal resolution of M tensored with N,
// by degreewise ranks: dim = dim (F_j (x) N)_i - rank (d_j)_i - rank (d_{j+1})_i.

#include <atomic>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "etalab/resolution.hpp"
#include "etalab/series.hpp"

namespace etalab {

/// Field-independent Tor dimensions over the valid region j <= j_max, 0 <= i <= i_max.
struct TorTable {
  std::string ring;
  std::string field;
  std::string M, N;
  std::vector<int> relation_degrees;
  int J = 0, D = 0;
  int j_max = -1;
  int i_max = -1;
  int window = 0;
  /// sum_j (-1)^j H_j is complete in internal degrees below this.
  int complete_below = 0;
  bool short_circuit = false;
  std::vector<std::vector<long>> dims;  // [j][i]
  std::vector<bool> finite;
  std::optional<int> finite_length_from;
  std::optional<int> stabilization;

  long dim(int j, int i) const {
    if (j < 0 || j > j_max || i < 0 || i > i_max) return 0;
    return dims[j][i];
  }
  long total(int j) const {
    long s = 0;
    for (long d : dims.at(j)) s += d;
    return s;
  }
  /// beta_j when Tor_j is flagged finite-length.
  std::optional<long> length(int j) const {
    if (j < 0 || j > j_max || !finite[j]) return std::nullopt;
    return total(j);
  }
  bool vanishes(int j) const { return total(j) == 0; }
  /// H_j(t) through degree i_max.
  std::vector<Integer> hilbert(int j) const {
    std::vector<Integer> h(i_max + 1, 0);
    if (j < 0 || j > j_max) return h;
    for (int i = 0; i <= i_max; ++i) h[i] = dims[j][i];
    return h;
  }
};

/// Default bounds: J = 2c + 10, D = J + 2 max d_l + max generator degree.
inline int default_J(const RingDescriptor& ring) { return 2 * ring.c() + 10; }
inline int default_D(const RingDescriptor& ring, int J, const GradedPresentation& M) {
  return J + 2 * ring.max_relation_degree() + M.generators.max_twist();
}

/// Koszul residual s_0 H_j - s_1 H_{j-2} + ... + (-1)^c s_c H_{j-2c} through degree i_max.
std::vector<Integer> koszul_residual_at(const TorTable& t, int j);
/// First j after which every residual vanishes within the table.
std::optional<int> koszul_onset(const TorTable& t);

/// Fills finite-length flags and the stabilization onset.
void finish_table(TorTable& t);

namespace detail {

template <class Fn>
void parallel_for(int n, Fn&& fn) {
  const int workers = std::max(1, std::min<int>(n, static_cast<int>(std::thread::hardware_concurrency())));
  if (workers <= 1) {
    for (int k = 0; k < n; ++k) fn(k);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int k = next++; k < n; k = next++) {
        try {
          fn(k);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

/// Columns of (d (x) N)_i in quotient coordinates of N.
template <class F>
std::vector<SparseVec<typename F::Element>> tensor_columns(const ModuleMap<F>& d, const PresentedModule<F>& N,
                                                           int i) {
  std::vector<int> tgt_off(d.target.rank() + 1, 0);
  for (int r = 0; r < d.target.rank(); ++r) tgt_off[r + 1] = tgt_off[r] + N.dim(i - d.target.twists[r]);
  std::vector<SparseVec<typename F::Element>> cols;
  for (int s = 0; s < d.source.rank(); ++s) {
    const int deg = i - d.source.twists[s];
    const int n = N.dim(deg);
    for (int k = 0; k < n; ++k) {
      SparseVec<typename F::Element> col;
      for (int r = 0; r < d.target.rank(); ++r) {
        const auto& e = d.at(r, s);
        if (e.is_zero()) continue;
        append_shifted(col, N.multiply_basis(e, deg, k), tgt_off[r]);
      }
      cols.push_back(std::move(col));
    }
  }
  return cols;
}

template <class F>
int tensor_dim(const FreeModule& free, const PresentedModule<F>& N, int i) {
  int total = 0;
  for (int a : free.twists) total += N.dim(i - a);
  return total;
}

}  // namespace detail

/// Tor table from a resolution of M (through F_J, exact to D) and a presented N.
template <class F>
TorTable tor_from_resolution(const Resolution<F>& res, const PresentedModule<F>& N, int i_max) {
  TorTable t;
  t.J = res.J;
  t.D = res.D;
  t.j_max = res.J - 1;
  t.i_max = i_max;
  const int J = res.J;
  const int cells = J * (i_max + 1);
  // ranks[j][i] = rank of (d_j (x) N)_i for 1 <= j <= J
  std::vector<std::vector<long>> ranks(J + 1, std::vector<long>(i_max + 1, 0));
  detail::parallel_for(cells, [&](int cell) {
    const int j = 1 + cell / (i_max + 1), i = cell % (i_max + 1);
    const auto& d = res.differential(j);
    if (d.source.empty() || d.target.empty()) return;
    auto cols = detail::tensor_columns(d, N, i);
    ranks[j][i] = static_cast<long>(
        rank_of(N.ring().field(), static_cast<std::size_t>(detail::tensor_dim(d.target, N, i)), cols));
  });
  t.dims.assign(J, std::vector<long>(i_max + 1, 0));
  for (int j = 0; j < J; ++j)
    for (int i = 0; i <= i_max; ++i)
      t.dims[j][i] = detail::tensor_dim(res.modules[j], N, i) - ranks[j][i] - ranks[j + 1][i];
  const int nmin = N.generators().empty() ? 0 : N.generators().min_twist();
  t.complete_below = res.modules[J].empty() ? i_max + 1 : res.modules[J].min_twist() + nmin;
  return t;
}

/// Context shared by Tor computations over one ring: the ring over F, its
/// descriptor and a resolution cache.
template <class F>
class TorEngine {
 public:
  TorEngine(RingDescriptor desc, F field)
      : desc_(std::move(desc)), field_(std::move(field)), ring_(make_ring(desc_, field_)) {}

  const RingDescriptor& descriptor() const { return desc_; }
  const QuotientRing<F>& ring() const { return *ring_; }
  std::shared_ptr<const QuotientRing<F>> ring_ptr() const { return ring_; }
  ResolutionCache<F>& cache() { return cache_; }

  /// Trailing-zero window used for finite-length flags.
  int window() const { return desc_.max_relation_degree() + 2; }

  std::shared_ptr<const Resolution<F>> resolution(const GradedPresentation& M, int J, int D) {
    return cache_.get(M, *ring_, J, D);
  }

  PresentedModule<F> presented(const GradedPresentation& N) const {
    return PresentedModule<F>(ring_, presentation_map(N, *ring_));
  }

  /// Tor_j(M,N)_i for j < J, i <= D. When M is the residue field the table is
  /// read off the Betti numbers of N unless general is set.
  TorTable tor_table(const GradedPresentation& M, const GradedPresentation& N, int J, int D,
                     bool general = false) {
    validate(M);
    validate(N);
    TorTable t;
    if (!general && is_residue_field(M)) {
      auto res = resolution(N, J, D);
      t.J = J;
      t.D = D;
      t.j_max = J - 1;
      t.i_max = D;
      t.short_circuit = true;
      t.dims.assign(J, std::vector<long>(D + 1, 0));
      for (int j = 0; j < J; ++j)
        for (int a : res->modules[j].twists)
          if (a <= D) ++t.dims[j][a];
      t.complete_below = res->modules[J].empty() ? D + 1 : res->modules[J].min_twist();
    } else {
      auto res = resolution(M, J, D);
      auto pn = presented(N);
      t = tor_from_resolution(*res, pn, D);
    }
    t.ring = desc_.to_string();
    t.field = field_.spec().name();
    t.M = M.label;
    t.N = N.label;
    t.relation_degrees = desc_.relation_degrees;
    t.window = window();
    finish_table(t);
    return t;
  }

 private:
  /// True when M = R/(x_0, ..., x_{v-1}) on one generator of degree 0.
  bool is_residue_field(const GradedPresentation& M) const {
    if (M.generators.twists != std::vector<int>{0}) return false;
    std::vector<bool> seen(desc_.v(), false);
    for (const auto& col : M.relation_columns) {
      const auto& e = col[0];
      if (e.size() != 1 || e.degree() != 1) continue;
      for (int v = 0; v < desc_.v(); ++v)
        if (e.terms().front().mono[v] == 1) seen[v] = true;
    }
    return std::find(seen.begin(), seen.end(), false) == seen.end();
  }

  void validate(const GradedPresentation& M) const {
    for (int a : M.generators.twists)
      if (a < 0) throw std::invalid_argument("module " + M.label + " has a negative generator twist");
  }

  RingDescriptor desc_;
  F field_;
  std::shared_ptr<const QuotientRing<F>> ring_;
  ResolutionCache<F> cache_;
};

/// Location of the largest disagreement between Tor(M,N) and Tor(N,M).
struct SymmetryReport {
  bool agree = true;
  long max_deviation = 0;
  int j = -1, i = -1;
  int j_max = -1, i_max = -1;  // compared region
};

SymmetryReport compare_tables(const TorTable& a, const TorTable& b);

/// Balance of Tor: resolves M and N separately and compares on the common region.
template <class F>
SymmetryReport tor_symmetric_check(TorEngine<F>& engine, const GradedPresentation& M, const GradedPresentation& N,
                                   int J, int D) {
  return compare_tables(engine.tor_table(M, N, J, D, true), engine.tor_table(N, M, J, D, true));
}

/// Tor^Q_j(M,N) over the ambient polynomial ring, from the finite Q-resolution of M.
struct AmbientTorCertificate {
  int nvars = 0;
  int D = 0;
  int largest_nonzero = -1;     // -1 when every Tor^Q_j vanishes through D
  std::vector<long> totals;     // dim Tor^Q_j through degree D, j = 0..nvars
};

template <class F>
AmbientTorCertificate ambient_tor_vanishing(const RingDescriptor& desc, const F& field, const GradedPresentation& M,
                                            const GradedPresentation& N, int D) {
  auto ambient = make_ring(desc.ambient(), field);
  auto res = resolve(over_ambient(M, desc), *ambient, desc.v() + 1, D, BaseRing::Ambient);
  PresentedModule<F> pn(ambient, presentation_map(over_ambient(N, desc), *ambient));
  TorTable t = tor_from_resolution(res, pn, D);
  AmbientTorCertificate cert;
  cert.nvars = desc.v();
  cert.D = D;
  for (int j = 0; j <= t.j_max; ++j) {
    cert.totals.push_back(t.total(j));
    if (t.total(j) != 0) cert.largest_nonzero = j;
  }
  return cert;
}

/// A run of c consecutive vanishing Tor modules starting at `start`, and the
/// first later nonvanishing Tor if any (a rigidity violation witness).
struct RigidityFinding {
  int start = 0;
  std::optional<int> violation;
};

std::vector<RigidityFinding> rigidity_scan(const TorTable& t, int c);

}  // namespace etalab
