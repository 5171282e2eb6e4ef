#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "etalab/module.hpp"

namespace etalab {

enum class BaseRing { R, Ambient };

/// Truncated minimal graded free resolution F_0 <- F_1 <- ... <- F_J, correct
/// in internal degrees <= D.
template <class F>
struct Resolution {
  std::vector<FreeModule> modules;  // F_0 .. F_J
  std::vector<ModuleMap<F>> maps;   // maps[j] = d_{j+1} : F_{j+1} -> F_j
  BaseRing over = BaseRing::R;
  int J = 0;
  int D = 0;
  bool minimal = true;

  /// d_j : F_j -> F_{j-1}, for 1 <= j <= J.
  const ModuleMap<F>& differential(int j) const { return maps.at(j - 1); }
  /// Largest j with F_j nonzero within the computed range.
  int length() const {
    for (int j = static_cast<int>(modules.size()) - 1; j >= 0; --j)
      if (!modules[j].empty()) return j;
    return -1;
  }
};

/// Graded Betti numbers beta_{j,i}: multiplicity of twist i in F_j.
struct BettiTable {
  std::vector<std::map<int, int>> graded;  // graded[j][i]
  std::vector<int> totals;                  // b_j = rank F_j

  int at(int j, int i) const {
    if (j < 0 || j >= static_cast<int>(graded.size())) return 0;
    auto it = graded[j].find(i);
    return it == graded[j].end() ? 0 : it->second;
  }
};

template <class F>
BettiTable betti_table(const Resolution<F>& res) {
  BettiTable t;
  for (const auto& m : res.modules) {
    std::map<int, int> row;
    for (int a : m.twists) ++row[a];
    t.graded.push_back(std::move(row));
    t.totals.push_back(m.rank());
  }
  return t;
}

/// Minimal resolution of coker(M) over the given ring through F_J, exact in
/// all internal degrees <= D. Throws DegreeBoundExceeded when some F_j with
/// j <= J cannot be seen below D (its generators would all sit above D).
/// With over = Ambient the ring is a polynomial ring and the resolution is
/// expected to stop by step nvars (Hilbert's syzygy theorem, asserted).
template <class F>
Resolution<F> resolve(const GradedPresentation& M, const QuotientRing<F>& ring, int J, int D,
                      BaseRing over = BaseRing::R) {
  if (J < 0) throw std::invalid_argument("homological bound must be non-negative");
  Resolution<F> res;
  res.over = over;
  res.J = J;
  res.D = D;

  ModuleMap<F> pres = minimize_presentation(presentation_map(M, ring), ring);
  if (!pres.target.empty() && D < pres.target.max_twist())
    throw DegreeBoundExceeded(0, "degree bound D=" + std::to_string(D) + " is below generator degree " +
                                     std::to_string(pres.target.max_twist()) + " of " + M.label);
  res.modules.push_back(pres.target);
  if (J == 0) return res;

  auto check_visible = [&](int j) {
    const FreeModule& prev = res.modules[j - 1];
    if (prev.empty()) return;
    if (over == BaseRing::Ambient && j > ring.nvars()) return;
    if (prev.min_twist() + 1 > D)
      throw DegreeBoundExceeded(j, "F_" + std::to_string(j) + " of " + M.label +
                                       " lies entirely above the degree bound D=" + std::to_string(D) +
                                       "; raise D to at least " + std::to_string(prev.min_twist() + 1));
  };

  check_visible(1);
  // exact dims of im(d_j) through D; by exactness they are the kernel dims of d_{j-1}
  std::vector<long> image_dims;
  ModuleMap<F> d1 = image_generators(pres, ring, D, &image_dims);
  res.modules.push_back(d1.source);
  res.maps.push_back(std::move(d1));
  for (int j = 2; j <= J; ++j) {
    check_visible(j);
    std::vector<long> kernel_dims;
    ModuleMap<F> next = kernel_step(res.maps.back(), ring, D, &image_dims, &kernel_dims);
    image_dims = std::move(kernel_dims);
    res.modules.push_back(next.source);
    res.maps.push_back(std::move(next));
  }
  if (over == BaseRing::Ambient && res.length() > ring.nvars())
    throw std::logic_error("resolution over the polynomial ring is longer than the number of variables");
  return res;
}

/// Finite minimal resolution over the ambient polynomial ring of the
/// descriptor, with M read as a module over it (relations f_l * e_r added).
template <class F>
Resolution<F> resolve_over_ambient(const GradedPresentation& M, const RingDescriptor& desc, const F& field,
                                   int D) {
  auto ambient = make_ring(desc.ambient(), field);
  return resolve(over_ambient(M, desc), *ambient, desc.v() + 1, D, BaseRing::Ambient);
}

/// Resolutions keyed by (module data, J, D, base ring). Read-only entries,
/// safe for concurrent use.
template <class F>
class ResolutionCache {
 public:
  using Ptr = std::shared_ptr<const Resolution<F>>;

  Ptr get(const GradedPresentation& M, const QuotientRing<F>& ring, int J, int D,
          BaseRing over = BaseRing::R) {
    Key key{M.fingerprint(), J, D, over};
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    auto built = std::make_shared<const Resolution<F>>(resolve(M, ring, J, D, over));
    std::lock_guard<std::mutex> lock(mutex_);
    return memo_.try_emplace(key, std::move(built)).first->second;
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return memo_.size();
  }

 private:
  using Key = std::tuple<std::string, int, int, BaseRing>;
  mutable std::mutex mutex_;
  std::map<Key, Ptr> memo_;
};

}  // namespace etalab
