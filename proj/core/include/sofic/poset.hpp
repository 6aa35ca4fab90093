#ifndef SOFIC_POSET_HPP_
#define SOFIC_POSET_HPP_

#include <optional>
#include <string>
#include <vector>

#include "sofic/group.hpp"

namespace sofic {

/// Finite poset given by its full order relation.
struct Poset {
  int size = 0;
  std::vector<std::vector<bool>> leq;  // leq[i][j]: i <= j
  std::vector<std::string> names;      // optional, for reports

  bool is_antisymmetric() const;
};

/// Label of a D-class: (regular flag, Schuetzenberger group, rank).
struct DClassLabel {
  int regular = 0;  // 0 or 1
  GroupTable group;
  int rank = 0;
};

/// Preordered set with labeled elements (the KD / FD invariants).
struct LabeledPreorder {
  int size = 0;
  std::vector<std::vector<bool>> leq;
  std::vector<DClassLabel> labels;
  std::vector<std::string> names;
};

std::optional<std::vector<int>> poset_isomorphism(const Poset& a,
                                                  const Poset& b);

inline bool poset_isomorphic(const Poset& a, const Poset& b) {
  return poset_isomorphism(a, b).has_value();
}

/// Bijection preserving the preorder both ways and matching labels
/// (regularity and rank equal, groups isomorphic).
std::optional<std::vector<int>> labeled_preorder_isomorphism(
    const LabeledPreorder& a, const LabeledPreorder& b);

inline bool labeled_preorder_isomorphic(const LabeledPreorder& a,
                                        const LabeledPreorder& b) {
  return labeled_preorder_isomorphism(a, b).has_value();
}

}  // namespace sofic

#endif  // SOFIC_POSET_HPP_
