#include "sofic/poset.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>

#include "sofic/word.hpp"

namespace sofic {

bool Poset::is_antisymmetric() const {
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      if (i != j && leq[i][j] && leq[j][i]) return false;
    }
  }
  return true;
}

namespace {

/// Shared backtracking for relation-preserving bijections with per-element
/// admissibility (label compatibility folded into `compatible`).
template <typename Compatible>
std::optional<std::vector<int>> relation_isomorphism(
    int n, const std::vector<std::vector<bool>>& ra,
    const std::vector<std::vector<bool>>& rb, Compatible compatible) {
  std::vector<int> phi(n, -1);
  std::vector<bool> used(n, false);

  // Order elements by descending degree for earlier pruning.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> deg(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (ra[i][j]) ++deg[i];
      if (ra[j][i]) ++deg[i];
    }
  }
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return deg[a] > deg[b]; });

  std::function<bool(int)> rec = [&](int k) -> bool {
    if (k == n) return true;
    int i = order[k];
    for (int t = 0; t < n; ++t) {
      if (used[t] || !compatible(i, t)) continue;
      bool ok = true;
      for (int k2 = 0; k2 < k && ok; ++k2) {
        int j = order[k2];
        if (ra[i][j] != rb[t][phi[j]] || ra[j][i] != rb[phi[j]][t]) ok = false;
      }
      if (ra[i][i] != rb[t][t]) ok = false;
      if (!ok) continue;
      phi[i] = t;
      used[t] = true;
      if (rec(k + 1)) return true;
      phi[i] = -1;
      used[t] = false;
    }
    return false;
  };
  if (rec(0)) return phi;
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> poset_isomorphism(const Poset& a,
                                                  const Poset& b) {
  if (a.size != b.size) return std::nullopt;
  // Degree fingerprints must match as multisets.
  auto degs = [](const Poset& p) {
    std::vector<std::pair<int, int>> d(p.size, {0, 0});
    for (int i = 0; i < p.size; ++i) {
      for (int j = 0; j < p.size; ++j) {
        if (i != j && p.leq[i][j]) {
          ++d[i].first;
          ++d[j].second;
        }
      }
    }
    return d;
  };
  auto da = degs(a), db = degs(b);
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  return relation_isomorphism(a.size, a.leq, b.leq,
                              [&](int i, int t) { return da[i] == db[t]; });
}

std::optional<std::vector<int>> labeled_preorder_isomorphism(
    const LabeledPreorder& a, const LabeledPreorder& b) {
  if (a.size != b.size) return std::nullopt;
  auto label_key = [](const DClassLabel& l) {
    return hash_mix(hash_mix(l.regular, l.rank), l.group.fingerprint());
  };
  std::vector<std::uint64_t> ka(a.size), kb(b.size);
  for (int i = 0; i < a.size; ++i) ka[i] = label_key(a.labels[i]);
  for (int i = 0; i < b.size; ++i) kb[i] = label_key(b.labels[i]);
  {
    auto sa = ka, sb = kb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  return relation_isomorphism(
      a.size, a.leq, b.leq, [&](int i, int t) {
        return ka[i] == kb[t] && a.labels[i].regular == b.labels[t].regular &&
               a.labels[i].rank == b.labels[t].rank &&
               group_isomorphic(a.labels[i].group, b.labels[t].group);
      });
}

}  // namespace sofic
