#include "sofic/group.hpp"

#include <algorithm>
#include <sstream>

#include "sofic/word.hpp"

namespace sofic {

GroupTable GroupTable::trivial() {
  GroupTable g;
  g.order = 1;
  g.identity = 0;
  g.table = {{0}};
  return g;
}

bool GroupTable::is_abelian() const {
  for (int i = 0; i < order; ++i) {
    for (int j = i + 1; j < order; ++j) {
      if (table[i][j] != table[j][i]) return false;
    }
  }
  return true;
}

int GroupTable::element_order(int g) const {
  int x = g;
  int n = 1;
  while (x != identity) {
    x = table[x][g];
    ++n;
  }
  return n;
}

std::vector<int> GroupTable::element_order_multiset() const {
  std::vector<int> out;
  out.reserve(order);
  for (int g = 0; g < order; ++g) out.push_back(element_order(g));
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t GroupTable::fingerprint() const {
  std::uint64_t h = hash_mix(order, is_abelian() ? 5 : 17);
  for (int v : element_order_multiset()) h = hash_mix(h, v);
  return h;
}

std::string GroupTable::fingerprint_string() const {
  if (order == 1) return "1";
  // Cyclic groups are the only ones that occur at desk scale often enough
  // to deserve a short name.
  auto orders = element_order_multiset();
  if (orders.back() == order) return "C" + std::to_string(order);
  std::ostringstream out;
  out << order << (is_abelian() ? ":ab:[" : ":nonab:[");
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) out << ',';
    out << orders[i];
  }
  out << ']';
  return out.str();
}

namespace {

struct GroupIso {
  const GroupTable& a;
  const GroupTable& b;
  std::vector<int> gens;    // generating sequence of a
  std::vector<int> phi;
  std::vector<bool> used;

  bool assign(int x, int y, std::vector<int>& trail) {
    if (phi[x] == y) return true;
    if (phi[x] >= 0 || used[y]) return false;
    phi[x] = y;
    used[y] = true;
    trail.push_back(x);
    for (int z = 0; z < a.order; ++z) {
      if (phi[z] < 0) continue;
      if (!assign(a.table[x][z], b.table[y][phi[z]], trail)) return false;
      if (!assign(a.table[z][x], b.table[phi[z]][y], trail)) return false;
    }
    return true;
  }

  void undo(std::vector<int>& trail, std::size_t mark) {
    while (trail.size() > mark) {
      int x = trail.back();
      trail.pop_back();
      used[phi[x]] = false;
      phi[x] = -1;
    }
  }

  bool search(std::size_t gi, std::vector<int>& trail) {
    while (gi < gens.size() && phi[gens[gi]] >= 0) ++gi;
    if (gi == gens.size()) {
      for (int x = 0; x < a.order; ++x) {
        if (phi[x] < 0) return false;
      }
      return true;
    }
    int g = gens[gi];
    int go = a.element_order(g);
    for (int y = 0; y < b.order; ++y) {
      if (used[y] || b.element_order(y) != go) continue;
      std::size_t mark = trail.size();
      if (assign(g, y, trail) && search(gi + 1, trail)) return true;
      undo(trail, mark);
    }
    return false;
  }
};

}  // namespace

bool group_isomorphic(const GroupTable& g, const GroupTable& h) {
  if (g.order != h.order) return false;
  if (g.fingerprint() != h.fingerprint()) return false;
  if (g.order == 1) return true;

  // Greedy generating sequence.
  std::vector<int> gens;
  std::vector<bool> gen(g.order, false);
  auto regen = [&] {
    std::fill(gen.begin(), gen.end(), false);
    gen[g.identity] = true;
    std::vector<int> stack{g.identity};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int s : gens) {
        int y = g.table[x][s];
        if (!gen[y]) {
          gen[y] = true;
          stack.push_back(y);
        }
      }
    }
  };
  regen();
  for (int x = 0; x < g.order; ++x) {
    if (!gen[x]) {
      gens.push_back(x);
      regen();
    }
  }

  GroupIso iso{g, h, gens, std::vector<int>(g.order, -1),
               std::vector<bool>(h.order, false)};
  std::vector<int> trail;
  if (!iso.assign(g.identity, h.identity, trail)) return false;
  return iso.search(0, trail);
}

}  // namespace sofic
