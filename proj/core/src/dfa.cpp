#include "sofic/dfa.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "sofic/errors.hpp"

namespace sofic {

Dfa minimal_automaton(const Presentation& p) {
  const int nl = p.num_letters();
  // Subset construction.  The start state is the full vertex set: the right
  // context of a word u in the factor language is the follower set of all
  // vertices reachable by u from anywhere.
  std::vector<std::vector<int>> succ(p.num_vertices(),
                                     std::vector<int>(nl, -1));
  for (const auto& e : p.edges) succ[e.src][e.letter] = e.dst;

  std::map<std::vector<int>, int> subset_id;
  std::vector<std::vector<int>> subsets;
  auto intern = [&](std::vector<int> s) {
    auto [it, fresh] = subset_id.emplace(std::move(s),
                                         static_cast<int>(subsets.size()));
    if (fresh) subsets.push_back(it->first);
    return it->second;
  };

  std::vector<int> full(p.num_vertices());
  std::iota(full.begin(), full.end(), 0);
  int start = intern(full);
  int empty = intern({});

  std::vector<std::vector<int>> delta;
  for (int q = 0; q < static_cast<int>(subsets.size()); ++q) {
    delta.emplace_back(nl, -1);
    for (int a = 0; a < nl; ++a) {
      std::vector<int> nxt;
      for (int v : subsets[q]) {
        int t = succ[v][a];
        if (t >= 0) nxt.push_back(t);
      }
      std::sort(nxt.begin(), nxt.end());
      nxt.erase(std::unique(nxt.begin(), nxt.end()), nxt.end());
      delta[q][a] = intern(std::move(nxt));
    }
  }

  const int ns = static_cast<int>(subsets.size());

  // Moore partition refinement over the complete automaton, sink included.
  // Two subset states merge iff they have equal right languages; the sink is
  // the unique state whose right language is empty.
  std::vector<int> cls(ns);
  for (int q = 0; q < ns; ++q) cls[q] = subsets[q].empty() ? 0 : 1;
  int num_classes = 2;
  for (;;) {
    std::map<std::vector<int>, int> sig_id;
    std::vector<int> next_cls(ns);
    for (int q = 0; q < ns; ++q) {
      std::vector<int> sig{cls[q]};
      for (int a = 0; a < nl; ++a) sig.push_back(cls[delta[q][a]]);
      auto [it, fresh] =
          sig_id.emplace(std::move(sig), static_cast<int>(sig_id.size()));
      (void)fresh;
      next_cls[q] = it->second;
    }
    int nc = static_cast<int>(sig_id.size());
    cls = std::move(next_cls);
    if (nc == num_classes) break;
    num_classes = nc;
  }

  // Deterministic state ids: order classes by their least subset id.
  std::vector<int> rep(num_classes, ns);
  for (int q = 0; q < ns; ++q) rep[cls[q]] = std::min(rep[cls[q]], q);
  std::vector<int> order(num_classes);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return rep[a] < rep[b]; });
  std::vector<int> new_id(num_classes);
  for (int i = 0; i < num_classes; ++i) new_id[order[i]] = i;

  Dfa d;
  d.num_states = num_classes;
  d.alphabet = p.alphabet;
  d.initial = new_id[cls[start]];
  d.sink = new_id[cls[empty]];
  d.next.assign(num_classes, std::vector<int>(nl, -1));
  for (int q = 0; q < ns; ++q) {
    for (int a = 0; a < nl; ++a) {
      d.next[new_id[cls[q]]][a] = new_id[cls[delta[q][a]]];
    }
  }
  return d;
}

}  // namespace sofic
