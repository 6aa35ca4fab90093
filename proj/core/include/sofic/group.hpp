#ifndef SOFIC_GROUP_HPP_
#define SOFIC_GROUP_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace sofic {

/// Multiplication table of a finite group, with a cheap isomorphism-invariant
/// fingerprint (order, abelian flag, multiset of element orders).
struct GroupTable {
  int order = 1;
  int identity = 0;
  std::vector<std::vector<int>> table;

  static GroupTable trivial();

  bool is_abelian() const;
  int element_order(int g) const;
  std::vector<int> element_order_multiset() const;  // sorted
  std::uint64_t fingerprint() const;
  std::string fingerprint_string() const;  // e.g. "C2" heuristics aside: "2:abelian:[2]"
};

/// Isomorphism test: fingerprint filter, then backtracking on a generating
/// sequence.  Groups here are desk scale.
bool group_isomorphic(const GroupTable& g, const GroupTable& h);

}  // namespace sofic

#endif  // SOFIC_GROUP_HPP_
