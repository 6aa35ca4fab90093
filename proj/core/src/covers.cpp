#include "sofic/covers.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "sofic/errors.hpp"

namespace sofic {

std::vector<int> PointedAction::orbit_of_idempotent(int e) const {
  std::set<int> q;
  for (int s = 0; s < num_states; ++s) q.insert(act[s][e]);
  return {q.begin(), q.end()};
}

int PointedAction::element_rank(int s) const {
  std::set<int> image;
  for (int q = 0; q < num_states; ++q) image.insert(act[q][s]);
  image.erase(sink);
  return static_cast<int>(image.size());
}

namespace {

Cover make_cover(const Dfa& d, const TransitionSemigroup& ts,
                 std::vector<int> states) {
  // `states` are non-sink dfa states, sorted; the sink is appended as the
  // action base point.
  Cover c;
  c.dfa_state = states;
  std::vector<int> pos(d.num_states, -1);
  for (std::size_t i = 0; i < states.size(); ++i) {
    pos[states[i]] = static_cast<int>(i);
  }

  std::vector<std::array<std::string, 3>> edges;
  auto state_name = [](int i) { return "q" + std::to_string(i); };
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (int a = 0; a < d.num_letters(); ++a) {
      int t = d.next[states[i]][a];
      if (t == d.sink) continue;
      if (pos[t] < 0) {
        throw Error(ErrorKind::InvalidSemigroup,
                    "cover states not closed under the action");
      }
      edges.push_back({state_name(static_cast<int>(i)), d.alphabet[a],
                       state_name(pos[t])});
    }
  }
  c.graph = make_presentation(edges);
  // make_presentation sorts names lexicographically; rebuild the state
  // order to match the graph's vertex indexing.
  std::vector<int> graph_to_dfa(c.graph.num_vertices(), -1);
  for (int v = 0; v < c.graph.num_vertices(); ++v) {
    int idx = std::stoi(c.graph.vertex_names[v].substr(1));
    graph_to_dfa[v] = states[idx];
  }
  c.dfa_state = graph_to_dfa;

  std::vector<int> dfa_to_cover(d.num_states, -1);
  for (int v = 0; v < c.graph.num_vertices(); ++v) {
    dfa_to_cover[c.dfa_state[v]] = v;
  }

  c.action.num_states = c.graph.num_vertices() + 1;
  c.action.sink = c.graph.num_vertices();
  c.action.sgp = std::make_shared<const FinSemigroupZ>(ts.sgp);
  c.action.act.assign(c.action.num_states,
                      std::vector<int>(ts.sgp.size, c.action.sink));
  for (int v = 0; v < c.graph.num_vertices(); ++v) {
    for (int s = 0; s < ts.sgp.size; ++s) {
      int t = ts.transform[s][c.dfa_state[v]];
      c.action.act[v][s] = t == d.sink ? c.action.sink : dfa_to_cover[t];
    }
  }
  return c;
}

}  // namespace

Cover krieger_cover(const Dfa& d, const TransitionSemigroup& ts) {
  const FinSemigroupZ& s = ts.sgp;
  auto idems = s.nonzero_idempotents();
  std::set<int> krieger;
  for (int x = 0; x < s.size; ++x) {
    if (x == s.zero) continue;
    bool stabilized = false;
    for (int e : idems) {
      if (s.mult(e, x) == x) {
        stabilized = true;
        break;
      }
    }
    if (!stabilized) continue;
    int q = ts.transform[x][d.initial];
    if (q == d.sink) {
      throw Error(ErrorKind::InvalidSemigroup,
                  "non-zero element sends the initial state to the sink");
    }
    krieger.insert(q);
  }
  if (krieger.empty()) {
    throw Error(ErrorKind::EmptyShift, "no Krieger states");
  }
  return make_cover(d, ts, {krieger.begin(), krieger.end()});
}

namespace {

/// Strongly connected components of the dfa restricted to non-sink states;
/// returns component id per state (-1 for the sink), components in reverse
/// topological discovery order.
std::vector<std::vector<int>> nonsink_sccs(const Dfa& d,
                                           std::vector<int>& comp) {
  comp.assign(d.num_states, -1);
  std::vector<std::vector<int>> sccs;
  // Iterative Tarjan.
  std::vector<int> index(d.num_states, -1), low(d.num_states, 0);
  std::vector<bool> on_stack(d.num_states, false);
  std::vector<int> stack;
  int counter = 0;
  struct Frame {
    int v;
    int edge;
  };
  for (int root = 0; root < d.num_states; ++root) {
    if (root == d.sink || index[root] >= 0) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < d.num_letters()) {
        int a = f.edge++;
        int w = d.next[f.v][a];
        if (w == d.sink) continue;
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          std::vector<int> scc;
          for (;;) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = static_cast<int>(sccs.size());
            scc.push_back(w);
            if (w == f.v) break;
          }
          std::sort(scc.begin(), scc.end());
          sccs.push_back(std::move(scc));
        }
        int v = f.v;
        frames.pop_back();
        if (!frames.empty()) {
          low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        }
      }
    }
  }
  return sccs;
}

}  // namespace

Cover fischer_cover(const Dfa& d, const TransitionSemigroup& ts) {
  SemigroupPredicates preds = semigroup_predicates(ts.sgp);
  if (!preds.irreducible_language) {
    throw Error(ErrorKind::NotIrreducible,
                "Fischer cover requires an irreducible shift");
  }
  std::vector<int> comp;
  auto sccs = nonsink_sccs(d, comp);
  // Terminal components: no edge to a non-sink state outside the component.
  std::vector<int> terminal;
  for (std::size_t c = 0; c < sccs.size(); ++c) {
    bool term = true;
    for (int v : sccs[c]) {
      for (int a = 0; a < d.num_letters() && term; ++a) {
        int w = d.next[v][a];
        if (w != d.sink && comp[w] != static_cast<int>(c)) term = false;
      }
      if (!term) break;
    }
    if (term) terminal.push_back(static_cast<int>(c));
  }
  if (terminal.size() != 1) {
    throw Error(ErrorKind::NotIrreducible,
                "no unique terminal strongly connected component");
  }
  return make_cover(d, ts, sccs[terminal.front()]);
}

Presentation pointed_cover_graph(const Cover& c) {
  // The complete labeled graph over A and the zero letter: the sink and its
  // absorbing edges restored.
  std::vector<std::array<std::string, 3>> edges;
  const Presentation& g = c.graph;
  const std::string sink = "sink";
  const std::string zero_letter = "~0";  // not a presentation letter
  for (const auto& e : g.edges) {
    edges.push_back({g.vertex_names[e.src], g.alphabet[e.letter],
                     g.vertex_names[e.dst]});
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    for (int a = 0; a < g.num_letters(); ++a) {
      if (g.out(v, a) < 0) {
        edges.push_back({g.vertex_names[v], g.alphabet[a], sink});
      }
    }
    edges.push_back({g.vertex_names[v], zero_letter, sink});
  }
  for (int a = 0; a < g.num_letters(); ++a) {
    edges.push_back({sink, g.alphabet[a], sink});
  }
  edges.push_back({sink, zero_letter, sink});

  // Bypass trimming/validation: this graph is complete by construction.
  Presentation out;
  std::map<std::string, int> vid;
  std::map<std::string, int> lid;
  for (const auto& e : edges) {
    for (const auto& v : {e[0], e[2]}) {
      if (!vid.count(v)) {
        vid[v] = static_cast<int>(out.vertex_names.size());
        out.vertex_names.push_back(v);
      }
    }
  }
  std::set<std::string> letters;
  for (const auto& e : edges) letters.insert(e[1]);
  for (const auto& l : letters) {
    lid[l] = static_cast<int>(out.alphabet.size());
    out.alphabet.push_back(l);
  }
  for (const auto& e : edges) {
    out.edges.push_back({vid[e[0]], lid[e[1]], vid[e[2]]});
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

KaroubiAction karoubi_action(const PointedAction& a, const ZeroCategory& k) {
  if (!karoubi_action_is_functorial(a, k)) {
    throw Error(ErrorKind::InvalidSemigroup,
                "induced Karoubi action is not functorial");
  }
  KaroubiAction out;
  out.object_states.reserve(k.num_objects());
  for (int o = 0; o < k.num_objects(); ++o) {
    out.object_states.push_back(a.orbit_of_idempotent(k.object_elem[o]));
  }
  out.morph_map.resize(k.num_morphs());
  for (int m = 0; m < k.num_morphs(); ++m) {
    const auto& mo = k.morphs[m];
    for (int q : out.object_states[mo.cod]) {
      out.morph_map[m].push_back(a.apply(q, mo.payload));
    }
  }
  return out;
}

bool karoubi_action_is_functorial(const PointedAction& a,
                                  const ZeroCategory& k) {
  const FinSemigroupZ& s = *a.sgp;
  for (int oe = 0; oe < k.num_objects(); ++oe) {
    int e = k.object_elem[oe];
    auto qe = a.orbit_of_idempotent(e);
    // Identity acts as the identity on Qe.
    for (int q : qe) {
      if (a.apply(q, e) != q) return false;
    }
    // Zero morphisms collapse to the base point.
    for (int q : qe) {
      if (a.apply(q, s.zero) != a.sink) return false;
    }
  }
  // Composition: q . (st) == (q . s) . t for morphism payloads.
  for (int m1 = 0; m1 < k.num_morphs(); ++m1) {
    for (int m2 = 0; m2 < k.num_morphs(); ++m2) {
      if (k.morphs[m1].dom != k.morphs[m2].cod) continue;
      int s1 = k.morphs[m1].payload;
      int s2 = k.morphs[m2].payload;
      auto qe = a.orbit_of_idempotent(k.object_elem[k.morphs[m1].cod]);
      for (int q : qe) {
        if (a.apply(a.apply(q, s1), s2) != a.apply(q, s.mult(s1, s2))) {
          return false;
        }
      }
    }
  }
  return true;
}

Poset cyclic_poset(const PointedAction& a) {
  const FinSemigroupZ& s = *a.sgp;
  auto idems = s.idempotents();
  std::set<int> cyclic_states;  // I = Q . E(S)
  for (int q = 0; q < a.num_states; ++q) {
    for (int e : idems) cyclic_states.insert(a.apply(q, e));
  }
  LocalStructure ls = local_monoids_and_lu(s);

  // Cyclic subsets q . LU(S), deduplicated, ordered by reverse inclusion.
  std::set<std::vector<int>> cycs;
  for (int q : cyclic_states) {
    std::set<int> orbit;
    for (int x : ls.lu) orbit.insert(a.apply(q, x));
    orbit.insert(q);  // q = q.e lies in its own cyclic subset
    cycs.insert(std::vector<int>(orbit.begin(), orbit.end()));
  }
  std::vector<std::vector<int>> elems(cycs.begin(), cycs.end());

  Poset p;
  p.size = static_cast<int>(elems.size());
  p.leq.assign(p.size, std::vector<bool>(p.size, false));
  for (int i = 0; i < p.size; ++i) {
    p.names.push_back("{" + std::to_string(elems[i].size()) + " states}");
    for (int j = 0; j < p.size; ++j) {
      p.leq[i][j] = std::includes(elems[i].begin(), elems[i].end(),
                                  elems[j].begin(), elems[j].end());
    }
  }
  return p;
}

Poset proper_communication_graph(const Presentation& g) {
  // SCC condensation restricted to non-trivial components.
  const int n = g.num_vertices();
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : g.edges) adj[e.src].push_back(e.dst);

  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> sccs;
  {
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    int counter = 0;
    struct Frame {
      int v;
      std::size_t edge;
    };
    for (int root = 0; root < n; ++root) {
      if (index[root] >= 0) continue;
      std::vector<Frame> frames{{root, 0}};
      index[root] = low[root] = counter++;
      stack.push_back(root);
      on_stack[root] = true;
      while (!frames.empty()) {
        Frame& f = frames.back();
        if (f.edge < adj[f.v].size()) {
          int w = adj[f.v][f.edge++];
          if (index[w] < 0) {
            index[w] = low[w] = counter++;
            stack.push_back(w);
            on_stack[w] = true;
            frames.push_back({w, 0});
          } else if (on_stack[w]) {
            low[f.v] = std::min(low[f.v], index[w]);
          }
        } else {
          if (low[f.v] == index[f.v]) {
            std::vector<int> scc;
            for (;;) {
              int w = stack.back();
              stack.pop_back();
              on_stack[w] = false;
              comp[w] = static_cast<int>(sccs.size());
              scc.push_back(w);
              if (w == f.v) break;
            }
            sccs.push_back(std::move(scc));
          }
          int v = f.v;
          frames.pop_back();
          if (!frames.empty()) {
            low[frames.back().v] = std::min(low[frames.back().v], low[v]);
          }
        }
      }
    }
  }

  // Non-trivial: at least two vertices, or a single vertex with a loop.
  std::vector<bool> self_loop(n, false);
  for (const auto& e : g.edges) {
    if (e.src == e.dst) self_loop[e.src] = true;
  }
  std::vector<int> keep;
  for (std::size_t c = 0; c < sccs.size(); ++c) {
    if (sccs[c].size() >= 2 || self_loop[sccs[c].front()]) {
      keep.push_back(static_cast<int>(c));
    }
  }

  // Reachability between components.
  const int nc = static_cast<int>(sccs.size());
  std::vector<std::vector<bool>> reach(nc, std::vector<bool>(nc, false));
  for (int c = 0; c < nc; ++c) reach[c][c] = true;
  for (const auto& e : g.edges) reach[comp[e.src]][comp[e.dst]] = true;
  for (int k = 0; k < nc; ++k) {
    for (int i = 0; i < nc; ++i) {
      if (!reach[i][k]) continue;
      for (int j = 0; j < nc; ++j) {
        if (reach[k][j]) reach[i][j] = true;
      }
    }
  }

  Poset p;
  p.size = static_cast<int>(keep.size());
  p.leq.assign(p.size, std::vector<bool>(p.size, false));
  for (int i = 0; i < p.size; ++i) {
    p.names.push_back("scc" + std::to_string(i));
    for (int j = 0; j < p.size; ++j) {
      p.leq[i][j] = reach[keep[i]][keep[j]];
    }
  }
  return p;
}

LabeledPreorder dclass_labeled_preorder(const FinSemigroupZ& s,
                                        const PointedAction& a) {
  LocalStructure ls = local_monoids_and_lu(s);
  GreenStructure g = green_structure_of_subset(s, ls.lu);

  LabeledPreorder out;
  out.size = g.num_d_classes();
  out.leq.assign(out.size, std::vector<bool>(out.size, false));
  for (int i = 0; i < out.size; ++i) {
    for (int j = 0; j < out.size; ++j) out.leq[i][j] = g.d_leq[i][j];
  }
  for (int c = 0; c < out.size; ++c) {
    DClassLabel l;
    l.regular = g.d_regular[c] ? 1 : 0;
    l.group = g.d_schutz[c];
    l.rank = a.element_rank(g.d_members[c].front());
    out.labels.push_back(l);
    out.names.push_back(s.witness_string(g.d_members[c].front()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Action equivalence

namespace {

struct EtaSearch {
  const PointedAction& a1;
  const PointedAction& a2;
  const ZeroCategory& k1;  // skeletons
  const ZeroCategory& k2;
  const EquivalenceWitness& f;
  SearchBudget& budget;

  std::vector<std::vector<int>> q1, q2;  // per object: pointed state sets
  // eta[(object, state)] -> state of Q2 F(object); flattened assignments.
  std::vector<std::map<int, int>> eta;
  std::vector<std::set<int>> used;

  bool assign(int obj, int q, int target,
              std::vector<std::pair<int, int>>& trail) {
    auto it = eta[obj].find(q);
    if (it != eta[obj].end()) return it->second == target;
    if (used[obj].count(target)) return false;
    eta[obj][q] = target;
    used[obj].insert(target);
    trail.push_back({obj, q});
    // Naturality: eta_dom(q . s) = eta_cod(q) . F(s) for every skeleton
    // morphism out of this object, in both roles.
    for (int m = 0; m < k1.num_morphs(); ++m) {
      const auto& mo = k1.morphs[m];
      int pay1 = k1.morphs[m].payload;
      int pay2 = k2.morphs[f.morph_map[m]].payload;
      if (mo.cod == obj) {
        if (!assign(mo.dom, a1.apply(q, pay1), a2.apply(target, pay2),
                    trail)) {
          return false;
        }
      }
      if (mo.dom == obj) {
        // Constraint only binds already-assigned sources in cod.
        for (const auto& [p, tp] : eta[mo.cod]) {
          if (a1.apply(p, pay1) == q &&
              a2.apply(tp, pay2) != target) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void undo(std::vector<std::pair<int, int>>& trail, std::size_t mark) {
    while (trail.size() > mark) {
      auto [obj, q] = trail.back();
      trail.pop_back();
      used[obj].erase(eta[obj][q]);
      eta[obj].erase(q);
    }
  }

  bool search(std::vector<std::pair<int, int>>& pending, std::size_t idx,
              std::vector<std::pair<int, int>>& trail) {
    while (idx < pending.size() &&
           eta[pending[idx].first].count(pending[idx].second)) {
      ++idx;
    }
    if (idx == pending.size()) return true;
    auto [obj, q] = pending[idx];
    for (int target : q2[obj]) {
      if (used[obj].count(target)) continue;
      budget.tick();
      std::size_t mark = trail.size();
      if (assign(obj, q, target, trail) && search(pending, idx + 1, trail)) {
        return true;
      }
      undo(trail, mark);
    }
    return false;
  }

  std::optional<std::vector<std::vector<std::pair<int, int>>>> run() {
    const int no = k1.num_objects();
    q1.resize(no);
    q2.resize(no);
    for (int o = 0; o < no; ++o) {
      q1[o] = a1.orbit_of_idempotent(k1.object_elem[o]);
      q2[o] = a2.orbit_of_idempotent(k2.object_elem[f.object_map[o]]);
      if (q1[o].size() != q2[o].size()) return std::nullopt;
    }
    eta.assign(no, {});
    used.assign(no, {});
    std::vector<std::pair<int, int>> trail;
    // Base points are matched by definition of pointed maps.
    for (int o = 0; o < no; ++o) {
      if (!assign(o, a1.sink, a2.sink, trail)) return std::nullopt;
    }
    std::vector<std::pair<int, int>> pending;
    for (int o = 0; o < no; ++o) {
      for (int q : q1[o]) pending.push_back({o, q});
    }
    if (!search(pending, 0, trail)) return std::nullopt;
    std::vector<std::vector<std::pair<int, int>>> out(no);
    for (int o = 0; o < no; ++o) {
      out[o].assign(eta[o].begin(), eta[o].end());
    }
    return out;
  }
};

}  // namespace

std::optional<ActionEquivalenceWitness> decide_action_equivalence(
    const PointedAction& a1, const Skeleton& k1, const PointedAction& a2,
    const Skeleton& k2, SearchBudget& budget) {
  std::optional<ActionEquivalenceWitness> out;
  // A single functor may fail to carry a natural isomorphism even when
  // another succeeds, so every equivalence witness is tried.
  for_each_equivalence(k1, k2, budget, [&](const EquivalenceWitness& w) {
    EtaSearch es{a1, a2, k1.cat, k2.cat, w, budget, {}, {}, {}, {}};
    auto eta = es.run();
    if (eta) {
      out = ActionEquivalenceWitness{w, *eta};
      return true;
    }
    return false;
  });
  return out;
}

}  // namespace sofic
