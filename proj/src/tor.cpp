#include "etalab/tor.hpp"

namespace etalab {

std::vector<Integer> koszul_residual_at(const TorTable& t, int j) {
  const auto s = symmetric_functions(t.relation_degrees);
  std::vector<Integer> r(t.i_max + 1, 0);
  for (std::size_t k = 0; k < s.size(); ++k) {
    const int src = j - 2 * static_cast<int>(k);
    if (src < 0) break;
    const auto h = t.hilbert(src);
    const auto prod = series_mul(s[k].coeffs(), h, t.i_max);
    for (int i = 0; i <= t.i_max; ++i) {
      if (k % 2)
        r[i] -= prod[i];
      else
        r[i] += prod[i];
    }
  }
  return r;
}

namespace {

bool all_zero(const std::vector<Integer>& v) {
  for (const auto& a : v)
    if (a != 0) return false;
  return true;
}

}  // namespace

std::optional<int> koszul_onset(const TorTable& t) {
  std::optional<int> onset;
  for (int j = t.j_max; j >= 0; --j) {
    if (!all_zero(koszul_residual_at(t, j))) break;
    onset = j;
  }
  return onset;
}

void finish_table(TorTable& t) {
  t.finite.assign(t.j_max + 1, false);
  for (int j = 0; j <= t.j_max; ++j) {
    if (t.i_max + 1 < t.window) continue;
    bool zero = true;
    for (int i = t.i_max - t.window + 1; i <= t.i_max && zero; ++i) zero = t.dims[j][i] == 0;
    t.finite[j] = zero;
  }
  t.finite_length_from.reset();
  for (int j = t.j_max; j >= 0 && t.finite[j]; --j) t.finite_length_from = j;
  t.stabilization = koszul_onset(t);
}

SymmetryReport compare_tables(const TorTable& a, const TorTable& b) {
  SymmetryReport r;
  r.j_max = std::min(a.j_max, b.j_max);
  r.i_max = std::min(a.i_max, b.i_max);
  for (int j = 0; j <= r.j_max; ++j)
    for (int i = 0; i <= r.i_max; ++i) {
      const long dev = std::labs(a.dim(j, i) - b.dim(j, i));
      if (dev > r.max_deviation) {
        r.max_deviation = dev;
        r.j = j;
        r.i = i;
      }
    }
  r.agree = r.max_deviation == 0;
  return r;
}

std::vector<RigidityFinding> rigidity_scan(const TorTable& t, int c) {
  std::vector<RigidityFinding> out;
  if (c < 1) return out;
  for (int s = 0; s + c - 1 <= t.j_max; ++s) {
    bool zero = true;
    for (int j = s; j < s + c && zero; ++j) zero = t.vanishes(j);
    if (!zero) continue;
    RigidityFinding f;
    f.start = s;
    for (int j = s + c; j <= t.j_max; ++j)
      if (!t.vanishes(j)) {
        f.violation = j;
        break;
      }
    out.push_back(f);
  }
  return out;
}

}  // namespace etalab
