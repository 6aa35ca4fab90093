#include "sofic/semigroup.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "sofic/errors.hpp"

namespace sofic {

std::vector<int> FinSemigroupZ::idempotents() const {
  std::vector<int> out;
  for (int e = 0; e < size; ++e) {
    if (is_idempotent(e)) out.push_back(e);
  }
  return out;
}

std::vector<int> FinSemigroupZ::nonzero_idempotents() const {
  std::vector<int> out;
  for (int e = 0; e < size; ++e) {
    if (e != zero && is_idempotent(e)) out.push_back(e);
  }
  return out;
}

int FinSemigroupZ::eval(const Word& w) const {
  int x = letter_elem.at(w.at(0));
  for (std::size_t i = 1; i < w.size(); ++i) x = mult(x, letter_elem[w[i]]);
  return x;
}

std::optional<int> FinSemigroupZ::identity() const {
  for (int e = 0; e < size; ++e) {
    bool ok = true;
    for (int x = 0; x < size && ok; ++x) {
      if (mult(e, x) != x || mult(x, e) != x) ok = false;
    }
    if (ok) return e;
  }
  return std::nullopt;
}

std::string FinSemigroupZ::witness_string(int e) const {
  if (witnesses.empty() || witnesses[e].empty()) {
    return e == zero ? "0" : "e" + std::to_string(e);
  }
  return word_to_string(witnesses[e], letters);
}

void FinSemigroupZ::validate() const {
  if (size <= 0 || static_cast<int>(table.size()) != size) {
    throw Error(ErrorKind::InvalidSemigroup, "bad table shape");
  }
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != size) {
      throw Error(ErrorKind::InvalidSemigroup, "bad table shape");
    }
    for (int v : row) {
      if (v < 0 || v >= size) {
        throw Error(ErrorKind::InvalidSemigroup, "entry out of range");
      }
    }
  }
  for (int a = 0; a < size; ++a) {
    if (mult(a, zero) != zero || mult(zero, a) != zero) {
      throw Error(ErrorKind::InvalidSemigroup, "zero law fails");
    }
    for (int b = 0; b < size; ++b) {
      for (int c = 0; c < size; ++c) {
        if (mult(mult(a, b), c) != mult(a, mult(b, c))) {
          throw Error(ErrorKind::InvalidSemigroup, "not associative");
        }
      }
    }
  }
  if (!witnesses.empty()) {
    for (int e = 0; e < size; ++e) {
      if (!witnesses[e].empty() && eval(witnesses[e]) != e) {
        throw Error(ErrorKind::InvalidSemigroup, "witness inconsistent");
      }
    }
  }
}

TransitionSemigroup transition_semigroup(const Dfa& d, int max_elements) {
  const int ns = d.num_states;
  const int nl = d.num_letters();

  std::vector<std::vector<int>> gens(nl, std::vector<int>(ns));
  for (int a = 0; a < nl; ++a) {
    for (int q = 0; q < ns; ++q) gens[a][q] = d.next[q][a];
  }

  std::map<std::vector<int>, int> id;
  std::vector<std::vector<int>> elems;
  std::vector<Word> wit;
  std::deque<int> queue;
  auto intern = [&](std::vector<int> t, Word w) {
    auto [it, fresh] = id.emplace(std::move(t), static_cast<int>(elems.size()));
    if (fresh) {
      if (max_elements > 0 && static_cast<int>(elems.size()) >= max_elements) {
        throw Error(ErrorKind::BudgetExceeded,
                    "transition semigroup closure exceeds " +
                        std::to_string(max_elements));
      }
      elems.push_back(it->first);
      wit.push_back(std::move(w));
      queue.push_back(it->second);
    }
    return it->second;
  };

  // BFS in shortlex order gives shortest witnesses with lexicographic
  // tie-break (the alphabet is sorted).
  for (int a = 0; a < nl; ++a) intern(gens[a], {a});
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int a = 0; a < nl; ++a) {
      std::vector<int> t(ns);
      for (int q = 0; q < ns; ++q) t[q] = gens[a][elems[x][q]];
      Word w = wit[x];
      w.push_back(a);
      intern(std::move(t), std::move(w));
    }
  }

  std::vector<int> all_to_sink(ns, d.sink);
  int zero = intern(all_to_sink, {});  // adjoined when not generated

  TransitionSemigroup out;
  out.sgp.size = static_cast<int>(elems.size());
  out.sgp.zero = zero;
  out.sgp.letters = d.alphabet;
  out.sgp.letter_elem.resize(nl);
  for (int a = 0; a < nl; ++a) out.sgp.letter_elem[a] = id.at(gens[a]);
  out.sgp.witnesses = std::move(wit);
  out.sgp.table.assign(out.sgp.size, std::vector<int>(out.sgp.size));
  for (int x = 0; x < out.sgp.size; ++x) {
    for (int y = 0; y < out.sgp.size; ++y) {
      std::vector<int> t(ns);
      for (int q = 0; q < ns; ++q) t[q] = elems[y][elems[x][q]];
      out.sgp.table[x][y] = id.at(t);
    }
  }
  out.transform = std::move(elems);
  return out;
}

namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(int n) { return Bits((n + 63) / 64, 0); }
void bit_set(Bits& b, int i) { b[i >> 6] |= 1ULL << (i & 63); }
bool bit_get(const Bits& b, int i) { return (b[i >> 6] >> (i & 63)) & 1; }

std::vector<int> classify_keys(const std::vector<Bits>& keys) {
  std::map<Bits, int> ids;
  std::vector<int> cls(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    auto [it, fresh] = ids.emplace(keys[i], static_cast<int>(ids.size()));
    (void)fresh;
    cls[i] = it->second;
  }
  return cls;
}

GroupTable schutzenberger_group(const FinSemigroupZ& s,
                                const std::vector<int>& subset,
                                const std::vector<int>& h_members) {
  const int k = static_cast<int>(h_members.size());
  std::vector<int> pos(s.size, -1);
  for (int i = 0; i < k; ++i) pos[h_members[i]] = i;

  // Maps h -> x h for x in the left stabilizer of H inside T^1.
  std::set<std::vector<int>> maps;
  std::vector<int> identity_map(k);
  std::iota(identity_map.begin(), identity_map.end(), 0);
  maps.insert(identity_map);
  for (int x : subset) {
    std::vector<int> m(k);
    bool stabilizes = true;
    for (int i = 0; i < k && stabilizes; ++i) {
      int y = s.mult(x, h_members[i]);
      if (pos[y] < 0) {
        stabilizes = false;
      } else {
        m[i] = pos[y];
      }
    }
    if (stabilizes) maps.insert(std::move(m));
  }

  std::vector<std::vector<int>> ms(maps.begin(), maps.end());
  std::map<std::vector<int>, int> mid;
  for (std::size_t i = 0; i < ms.size(); ++i) mid[ms[i]] = static_cast<int>(i);

  GroupTable g;
  g.order = static_cast<int>(ms.size());
  g.identity = mid.at(identity_map);
  g.table.assign(g.order, std::vector<int>(g.order));
  for (int i = 0; i < g.order; ++i) {
    for (int j = 0; j < g.order; ++j) {
      // (x y) h = x (y h)
      std::vector<int> comp(k);
      for (int h = 0; h < k; ++h) comp[h] = ms[i][ms[j][h]];
      auto it = mid.find(comp);
      if (it == mid.end()) {
        throw Error(ErrorKind::InvalidSemigroup,
                    "stabilizer maps not closed under composition");
      }
      g.table[i][j] = it->second;
    }
  }
  return g;
}

}  // namespace

GreenStructure green_structure_of_subset(const FinSemigroupZ& s,
                                         const std::vector<int>& subset) {
  const int n = static_cast<int>(subset.size());
  GreenStructure g;
  if (n == 0) return g;

  std::vector<int> local(s.size, -1);
  for (int i = 0; i < n; ++i) local[subset[i]] = i;

  std::vector<Bits> rkey(n), lkey(n), jkey(n);
  for (int i = 0; i < n; ++i) {
    int x = subset[i];
    Bits r = make_bits(n), l = make_bits(n), j = make_bits(n);
    bit_set(r, i);
    bit_set(l, i);
    bit_set(j, i);
    for (int tt = 0; tt < n; ++tt) {
      int t = subset[tt];
      bit_set(r, local[s.mult(x, t)]);
      bit_set(l, local[s.mult(t, x)]);
      bit_set(j, local[s.mult(x, t)]);
      bit_set(j, local[s.mult(t, x)]);
      for (int uu = 0; uu < n; ++uu) {
        bit_set(j, local[s.mult(s.mult(t, x), subset[uu])]);
      }
    }
    rkey[i] = std::move(r);
    lkey[i] = std::move(l);
    jkey[i] = std::move(j);
  }

  std::vector<int> rcls = classify_keys(rkey);
  std::vector<int> lcls = classify_keys(lkey);
  std::vector<int> jcls = classify_keys(jkey);

  // H = R intersect L; D = J for finite semigroups.
  std::map<std::pair<int, int>, int> hid;
  std::vector<int> hcls(n);
  for (int i = 0; i < n; ++i) {
    auto [it, fresh] = hid.emplace(std::make_pair(rcls[i], lcls[i]),
                                   static_cast<int>(hid.size()));
    (void)fresh;
    hcls[i] = it->second;
  }

  g.r_class.assign(s.size, -1);
  g.l_class.assign(s.size, -1);
  g.h_class.assign(s.size, -1);
  g.d_class.assign(s.size, -1);
  for (int i = 0; i < n; ++i) {
    g.r_class[subset[i]] = rcls[i];
    g.l_class[subset[i]] = lcls[i];
    g.h_class[subset[i]] = hcls[i];
    g.d_class[subset[i]] = jcls[i];
  }

  int nd = 1 + *std::max_element(jcls.begin(), jcls.end());
  g.d_members.assign(nd, {});
  for (int i = 0; i < n; ++i) g.d_members[jcls[i]].push_back(subset[i]);

  g.d_regular.assign(nd, false);
  for (int c = 0; c < nd; ++c) {
    for (int x : g.d_members[c]) {
      if (s.is_idempotent(x)) {
        g.d_regular[c] = true;
        break;
      }
    }
  }

  g.d_schutz.reserve(nd);
  for (int c = 0; c < nd; ++c) {
    int rep = g.d_members[c].front();
    std::vector<int> h_members;
    for (int i = 0; i < n; ++i) {
      if (hcls[i] == hcls[local[rep]]) h_members.push_back(subset[i]);
    }
    g.d_schutz.push_back(schutzenberger_group(s, subset, h_members));
  }

  g.d_leq.assign(nd, std::vector<bool>(nd, false));
  for (int c = 0; c < nd; ++c) {
    int rep = g.d_members[c].front();
    for (int c2 = 0; c2 < nd; ++c2) {
      // D_c <= D_c2 iff rep lies in the principal two-sided ideal of a
      // representative of c2.
      int rep2 = g.d_members[c2].front();
      g.d_leq[c][c2] = bit_get(jkey[local[rep2]], local[rep]);
    }
  }
  return g;
}

GreenStructure green_structure(const FinSemigroupZ& s) {
  std::vector<int> all(s.size);
  std::iota(all.begin(), all.end(), 0);
  return green_structure_of_subset(s, all);
}

LocalStructure local_monoids_and_lu(const FinSemigroupZ& s) {
  LocalStructure out;
  out.idempotents = s.idempotents();
  for (int e : out.idempotents) {
    std::set<int> m;
    for (int x = 0; x < s.size; ++x) m.insert(s.mult(s.mult(e, x), e));
    out.local_monoid.emplace_back(m.begin(), m.end());
  }
  std::set<int> lu;
  for (int e : out.idempotents) {
    for (int f : out.idempotents) {
      for (int x = 0; x < s.size; ++x) {
        lu.insert(s.mult(s.mult(e, x), f));
      }
    }
  }
  out.lu.assign(lu.begin(), lu.end());
  return out;
}

SemigroupPredicates semigroup_predicates(const FinSemigroupZ& s) {
  SemigroupPredicates out;

  // Aperiodicity via s^n = s^{n+1} with n = |S|.
  out.aperiodic = true;
  for (int x = 0; x < s.size && out.aperiodic; ++x) {
    int p = x;
    for (int i = 1; i < s.size; ++i) p = s.mult(p, x);
    if (s.mult(p, x) != p) out.aperiodic = false;
  }

  // 0-disjunctive: the coarsest congruence saturating {0} is trivial.
  // Start from the two-block partition and refine until stable.
  {
    std::vector<int> cls(s.size);
    for (int x = 0; x < s.size; ++x) cls[x] = (x == s.zero) ? 0 : 1;
    int nc = s.size == 1 ? 1 : 2;
    for (;;) {
      std::map<std::vector<int>, int> sig;
      std::vector<int> next(s.size);
      for (int x = 0; x < s.size; ++x) {
        std::vector<int> key{cls[x]};
        for (int t = 0; t < s.size; ++t) {
          key.push_back(cls[s.mult(x, t)]);
          key.push_back(cls[s.mult(t, x)]);
        }
        auto [it, fresh] = sig.emplace(std::move(key),
                                       static_cast<int>(sig.size()));
        (void)fresh;
        next[x] = it->second;
      }
      int n2 = static_cast<int>(sig.size());
      cls = std::move(next);
      if (n2 == nc) break;
      nc = n2;
    }
    out.zero_disjunctive = (nc == s.size);
  }

  // Irreducibility: for all non-zero s, t there is r in S^1 with s r t != 0.
  out.irreducible_language = true;
  for (int x = 0; x < s.size && out.irreducible_language; ++x) {
    if (x == s.zero) continue;
    for (int y = 0; y < s.size && out.irreducible_language; ++y) {
      if (y == s.zero) continue;
      bool ok = s.mult(x, y) != s.zero;
      for (int r = 0; r < s.size && !ok; ++r) {
        if (s.mult(s.mult(x, r), y) != s.zero) ok = true;
      }
      if (!ok) out.irreducible_language = false;
    }
  }

  // Local-monoid conditions.
  out.local_sl = true;
  out.local_ecom = true;
  for (int e = 0; e < s.size; ++e) {
    if (!s.is_idempotent(e)) continue;
    std::set<int> m;
    for (int x = 0; x < s.size; ++x) m.insert(s.mult(s.mult(e, x), e));
    for (int x : m) {
      if (s.mult(x, x) != x) out.local_sl = false;
      for (int y : m) {
        if (s.mult(x, y) != s.mult(y, x)) out.local_sl = false;
        if (s.is_idempotent(x) && s.is_idempotent(y) &&
            s.mult(x, y) != s.mult(y, x)) {
          out.local_ecom = false;
        }
      }
    }
  }
  return out;
}

SynchronizingSets synchronizing_and_magic(const FinSemigroupZ& s) {
  SynchronizingSets out;
  for (int x = 0; x < s.size; ++x) {
    if (x == s.zero) continue;
    bool sync = true;
    for (int r = 0; r < s.size && sync; ++r) {
      int rx = s.mult(r, x);
      if (rx == s.zero) continue;
      for (int t = 0; t < s.size && sync; ++t) {
        if (s.mult(x, t) != s.zero && s.mult(rx, t) == s.zero) sync = false;
      }
    }
    if (sync) {
      out.synchronizing.push_back(x);
      if (s.is_idempotent(x)) out.magic.push_back(x);
    }
  }
  return out;
}

FinSemigroupZ brandt_semigroup(int n) {
  FinSemigroupZ s;
  s.size = n * n + 1;
  s.zero = n * n;
  s.table.assign(s.size, std::vector<int>(s.size, s.zero));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          if (j == k) s.table[i * n + j][k * n + l] = i * n + l;
        }
      }
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Context oracle

namespace {

/// Reachable subset machine of a presentation, no minimization.
struct SubsetMachine {
  std::vector<std::vector<int>> subsets;
  std::vector<std::vector<int>> delta;
  int start = -1;
  int empty = -1;
  int num_letters = 0;

  int walk(int q, const Word& w) const {
    for (int a : w) q = delta[q][a];
    return q;
  }
};

SubsetMachine build_subset_machine(const Presentation& p) {
  SubsetMachine m;
  m.num_letters = p.num_letters();
  std::vector<std::vector<int>> succ(p.num_vertices(),
                                     std::vector<int>(m.num_letters, -1));
  for (const auto& e : p.edges) succ[e.src][e.letter] = e.dst;

  std::map<std::vector<int>, int> id;
  auto intern = [&](std::vector<int> s) {
    auto [it, fresh] =
        id.emplace(std::move(s), static_cast<int>(m.subsets.size()));
    if (fresh) m.subsets.push_back(it->first);
    return it->second;
  };
  std::vector<int> full(p.num_vertices());
  std::iota(full.begin(), full.end(), 0);
  m.start = intern(full);
  m.empty = intern({});
  for (int q = 0; q < static_cast<int>(m.subsets.size()); ++q) {
    m.delta.emplace_back(m.num_letters, -1);
    for (int a = 0; a < m.num_letters; ++a) {
      std::vector<int> nxt;
      for (int v : m.subsets[q]) {
        int t = succ[v][a];
        if (t >= 0) nxt.push_back(t);
      }
      std::sort(nxt.begin(), nxt.end());
      nxt.erase(std::unique(nxt.begin(), nxt.end()), nxt.end());
      m.delta[q][a] = intern(std::move(nxt));
    }
  }
  return m;
}

/// Number of right-language classes of the subset machine (independent
/// re-derivation of the minimal automaton's state count for the bound
/// precondition).
int count_context_classes(const SubsetMachine& m) {
  int ns = static_cast<int>(m.subsets.size());
  std::vector<int> cls(ns);
  for (int q = 0; q < ns; ++q) cls[q] = m.subsets[q].empty() ? 0 : 1;
  int nc = 2;
  for (;;) {
    std::map<std::vector<int>, int> sig;
    std::vector<int> next(ns);
    for (int q = 0; q < ns; ++q) {
      std::vector<int> key{cls[q]};
      for (int a = 0; a < m.num_letters; ++a) key.push_back(cls[m.delta[q][a]]);
      auto [it, fresh] = sig.emplace(std::move(key),
                                     static_cast<int>(sig.size()));
      (void)fresh;
      next[q] = it->second;
    }
    int n2 = static_cast<int>(sig.size());
    cls = std::move(next);
    if (n2 == nc) return nc;
    nc = n2;
  }
}

}  // namespace

ContextVerdict context_oracle(const Presentation& p, const Word& u,
                              const Word& v, int bound) {
  SubsetMachine m = build_subset_machine(p);
  int classes = count_context_classes(m);
  int required = 2 * classes * classes;
  if (bound < required) {
    throw Error(ErrorKind::BoundTooSmall,
                "bound " + std::to_string(bound) + " < 2*" +
                    std::to_string(classes) + "^2");
  }

  // Enumerate left contexts x in BFS order; contexts reaching the same
  // subset state are interchangeable, so each state is visited once.
  std::vector<Word> x_witness(m.subsets.size());
  std::vector<bool> x_seen(m.subsets.size(), false);
  std::deque<int> queue{m.start};
  x_seen[m.start] = true;

  // Memoized verdict per (P.u, P.v) pair: shortest separating y, if any.
  std::map<std::pair<int, int>, std::optional<Word>> pair_verdict;
  auto separate = [&](int a0, int b0) -> std::optional<Word> {
    std::pair<int, int> key{std::min(a0, b0), std::max(a0, b0)};
    auto it = pair_verdict.find(key);
    if (it != pair_verdict.end()) return it->second;  // y is side-agnostic
    std::optional<Word> res;
    std::map<std::pair<int, int>, bool> seen;
    std::deque<std::pair<std::pair<int, int>, Word>> q2;
    q2.push_back({{a0, b0}, {}});
    seen[{a0, b0}] = true;
    while (!q2.empty()) {
      auto [pr, y] = q2.front();
      q2.pop_front();
      bool ae = m.subsets[pr.first].empty();
      bool be = m.subsets[pr.second].empty();
      if (ae != be) {
        res = y;
        break;
      }
      if (ae && be) continue;
      for (int a = 0; a < m.num_letters; ++a) {
        std::pair<int, int> nx{m.delta[pr.first][a], m.delta[pr.second][a]};
        if (!seen[nx]) {
          seen[nx] = true;
          Word y2 = y;
          y2.push_back(a);
          q2.push_back({nx, std::move(y2)});
        }
      }
    }
    pair_verdict[key] = res;
    return res;
  };

  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    int pu = m.walk(q, u);
    int pv = m.walk(q, v);
    if (auto y = separate(pu, pv)) {
      ContextWitness w;
      w.x = x_witness[q];
      w.y = *y;
      w.u_side_in_language = !m.subsets[m.walk(pu, *y)].empty();
      return {false, w};
    }
    for (int a = 0; a < m.num_letters; ++a) {
      int nq = m.delta[q][a];
      if (!x_seen[nq]) {
        x_seen[nq] = true;
        x_witness[nq] = x_witness[q];
        x_witness[nq].push_back(a);
        queue.push_back(nq);
      }
    }
  }
  return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

std::vector<std::uint64_t> element_colors(const FinSemigroupZ& s) {
  std::vector<std::uint64_t> color(s.size);
  for (int x = 0; x < s.size; ++x) {
    color[x] = hash_mix(x == s.zero ? 11 : 7, s.is_idempotent(x) ? 13 : 3);
  }
  for (int round = 0; round < 4; ++round) {
    std::vector<std::uint64_t> next(s.size);
    for (int x = 0; x < s.size; ++x) {
      std::vector<std::uint64_t> sig;
      sig.reserve(s.size);
      for (int y = 0; y < s.size; ++y) {
        std::uint64_t h = hash_mix(color[y], color[s.mult(x, y)]);
        sig.push_back(hash_mix(h, color[s.mult(y, x)]));
      }
      std::sort(sig.begin(), sig.end());
      std::uint64_t h = color[x];
      for (auto v : sig) h = hash_mix(h, v);
      next[x] = h;
    }
    color = std::move(next);
  }
  return color;
}

std::vector<int> greedy_generators(const FinSemigroupZ& s) {
  std::vector<int> gens;
  std::vector<bool> generated(s.size, false);
  auto regen = [&] {
    std::fill(generated.begin(), generated.end(), false);
    std::vector<int> stack;
    for (int g : gens) {
      if (!generated[g]) {
        generated[g] = true;
        stack.push_back(g);
      }
    }
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int g : gens) {
        for (int y : {s.mult(x, g), s.mult(g, x)}) {
          if (!generated[y]) {
            generated[y] = true;
            stack.push_back(y);
          }
        }
      }
    }
  };
  for (int x = 0; x < s.size; ++x) {
    if (!generated[x]) {
      gens.push_back(x);
      regen();
    }
  }
  return gens;
}

struct IsoSearch {
  const FinSemigroupZ& a;
  const FinSemigroupZ& b;
  std::vector<std::uint64_t> ca, cb;
  std::vector<int> gens;
  std::vector<int> phi;      // a elem -> b elem or -1
  std::vector<bool> used;    // b elem taken

  bool assign(int x, int y, std::vector<int>& trail) {
    if (phi[x] == y) return true;
    if (phi[x] >= 0 || used[y] || ca[x] != cb[y]) return false;
    phi[x] = y;
    used[y] = true;
    trail.push_back(x);
    // Close under products with every already-assigned element.
    for (int z = 0; z < a.size; ++z) {
      if (phi[z] < 0) continue;
      if (!assign(a.mult(x, z), b.mult(y, phi[z]), trail)) return false;
      if (!assign(a.mult(z, x), b.mult(phi[z], y), trail)) return false;
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
      for (int x = 0; x < a.size; ++x) {
        if (phi[x] < 0) return false;
      }
      return true;  // total, injective, multiplicative by construction
    }
    int g = gens[gi];
    for (int y = 0; y < b.size; ++y) {
      if (used[y] || cb[y] != ca[g]) continue;
      std::size_t mark = trail.size();
      if (assign(g, y, trail) && search(gi + 1, trail)) return true;
      undo(trail, mark);
    }
    return false;
  }
};

}  // namespace

bool semigroup_isomorphic(const FinSemigroupZ& a, const FinSemigroupZ& b) {
  if (a.size != b.size) return false;
  IsoSearch is{a, b, element_colors(a), element_colors(b), {}, {}, {}};
  {
    auto sa = is.ca;
    auto sb = is.cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  is.gens = greedy_generators(a);
  is.phi.assign(a.size, -1);
  is.used.assign(b.size, false);
  std::vector<int> trail;
  return is.search(0, trail);
}

// ---------------------------------------------------------------------------
// Table file format

FinSemigroupZ load_semigroup(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream probe(line);
    std::string tok;
    if (probe >> tok) lines.push_back(line);
  }
  if (lines.size() < 2) {
    throw Error(ErrorKind::ParseError, "semigroup file too short");
  }

  auto parse_prefixed = [&](const std::string& l, const std::string& prefix) {
    std::istringstream ls(l);
    std::string head;
    ls >> head;
    if (head != prefix) {
      throw Error(ErrorKind::ParseError, "expected `" + prefix + "`");
    }
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    return toks;
  };

  auto names = parse_prefixed(lines[0], "elements:");
  if (names.empty()) throw Error(ErrorKind::ParseError, "no elements");
  std::map<std::string, int> id;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!id.emplace(names[i], static_cast<int>(i)).second) {
      throw Error(ErrorKind::ParseError, "duplicate element " + names[i]);
    }
  }
  auto zero_toks = parse_prefixed(lines[1], "zero:");
  if (zero_toks.size() != 1 || !id.count(zero_toks[0])) {
    throw Error(ErrorKind::ParseError, "bad zero line");
  }

  FinSemigroupZ s;
  s.size = static_cast<int>(names.size());
  s.zero = id[zero_toks[0]];
  if (lines.size() != 2 + names.size()) {
    throw Error(ErrorKind::ParseError, "expected " +
                                           std::to_string(names.size()) +
                                           " table rows");
  }
  for (std::size_t r = 0; r < names.size(); ++r) {
    std::istringstream ls(lines[2 + r]);
    std::vector<int> row;
    std::string t;
    while (ls >> t) {
      auto it = id.find(t);
      if (it == id.end()) {
        throw Error(ErrorKind::ParseError, "unknown element " + t);
      }
      row.push_back(it->second);
    }
    if (row.size() != names.size()) {
      throw Error(ErrorKind::ParseError, "bad row length");
    }
    s.table.push_back(std::move(row));
  }
  s.validate();
  return s;
}

std::string serialize_semigroup(const FinSemigroupZ& s) {
  std::ostringstream out;
  out << "elements:";
  for (int i = 0; i < s.size; ++i) out << " e" << i;
  out << "\nzero: e" << s.zero << '\n';
  for (int i = 0; i < s.size; ++i) {
    for (int j = 0; j < s.size; ++j) {
      if (j) out << ' ';
      out << 'e' << s.table[i][j];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace sofic
