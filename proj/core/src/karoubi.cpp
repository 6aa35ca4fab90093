#include "sofic/karoubi.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "sofic/errors.hpp"

namespace sofic {

void SearchBudget::tick() {
  if (++used > limit) {
    throw Error(ErrorKind::BudgetExceeded,
                "search exceeded " + std::to_string(limit) + " nodes");
  }
}

namespace {

std::uint64_t morph_key(int cod, int elem, int dom) {
  return (static_cast<std::uint64_t>(cod) << 42) ^
         (static_cast<std::uint64_t>(elem) << 21) ^
         static_cast<std::uint64_t>(dom);
}

}  // namespace

void ZeroCategory::build_index() const {
  if (!index_.empty() || morphs.empty()) return;
  index_.reserve(morphs.size() * 2);
  for (int m = 0; m < num_morphs(); ++m) {
    index_.emplace(morph_key(morphs[m].cod, morphs[m].payload, morphs[m].dom),
                   m);
  }
}

int ZeroCategory::morph_id(int cod, int elem, int dom) const {
  build_index();
  auto it = index_.find(morph_key(cod, elem, dom));
  return it == index_.end() ? -1 : it->second;
}

int ZeroCategory::compose(int f, int g) const {
  const Morph& mf = morphs[f];
  const Morph& mg = morphs[g];
  // (e,s,f)(f,t,g) = (e,st,g); defined when dom(f) == cod(g).
  int id = morph_id(mf.cod, base->mult(mf.payload, mg.payload), mg.dom);
  return id;
}

ZeroCategory karoubi_envelope(std::shared_ptr<const FinSemigroupZ> s) {
  ZeroCategory c;
  c.base = s;
  c.object_elem = s->idempotents();
  const int no = c.num_objects();
  c.zero_morph.assign(no, std::vector<int>(no, -1));
  c.identity.assign(no, -1);
  c.hom.assign(no, std::vector<std::vector<int>>(no));
  for (int oe = 0; oe < no; ++oe) {
    int e = c.object_elem[oe];
    if (e == s->zero) c.trivial_object = oe;
    for (int of = 0; of < no; ++of) {
      int f = c.object_elem[of];
      // eSf = {s : s = e s f}
      std::set<int> vals;
      for (int x = 0; x < s->size; ++x) {
        vals.insert(s->mult(s->mult(e, x), f));
      }
      for (int v : vals) {
        int m = static_cast<int>(c.morphs.size());
        c.morphs.push_back({oe, of, v});
        c.hom[oe][of].push_back(m);
        if (v == s->zero) c.zero_morph[oe][of] = m;
        if (oe == of && v == e) c.identity[oe] = m;
      }
    }
  }
  return c;
}

namespace {

/// Isomorphism pairs between two objects: (u, v) with u : f -> e,
/// v : e -> f, uv = 1_e, vu = 1_f.
std::vector<std::pair<int, int>> object_isos(const ZeroCategory& c, int oe,
                                             int of) {
  std::vector<std::pair<int, int>> out;
  for (int u : c.hom[oe][of]) {
    for (int v : c.hom[of][oe]) {
      if (c.compose(u, v) == c.identity[oe] &&
          c.compose(v, u) == c.identity[of]) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

ZeroCategory full_subcategory(const ZeroCategory& c,
                              const std::vector<int>& objects) {
  ZeroCategory out;
  out.base = c.base;
  const int no = static_cast<int>(objects.size());
  out.object_elem.resize(no);
  for (int i = 0; i < no; ++i) {
    out.object_elem[i] = c.object_elem[objects[i]];
    if (objects[i] == c.trivial_object) out.trivial_object = i;
  }
  out.zero_morph.assign(no, std::vector<int>(no, -1));
  out.identity.assign(no, -1);
  out.hom.assign(no, std::vector<std::vector<int>>(no));
  for (int i = 0; i < no; ++i) {
    for (int j = 0; j < no; ++j) {
      for (int m : c.hom[objects[i]][objects[j]]) {
        int nm = static_cast<int>(out.morphs.size());
        out.morphs.push_back({i, j, c.morphs[m].payload});
        out.hom[i][j].push_back(nm);
        if (c.zero_morph[objects[i]][objects[j]] == m) {
          out.zero_morph[i][j] = nm;
        }
        if (c.identity[objects[i]] == m && i == j) out.identity[i] = nm;
      }
    }
  }
  return out;
}

}  // namespace

Skeleton skeleton(const ZeroCategory& c) {
  const int no = c.num_objects();
  Skeleton sk;
  sk.object_class.assign(no, -1);
  sk.to_rep.assign(no, -1);
  sk.from_rep.assign(no, -1);

  std::vector<int> reps;
  for (int o = 0; o < no; ++o) {
    bool placed = false;
    for (std::size_t r = 0; r < reps.size() && !placed; ++r) {
      auto isos = object_isos(c, reps[r], o);
      if (!isos.empty()) {
        sk.object_class[o] = static_cast<int>(r);
        sk.to_rep[o] = isos.front().first;    // o -> rep
        sk.from_rep[o] = isos.front().second; // rep -> o
        placed = true;
      }
    }
    if (!placed) {
      sk.object_class[o] = static_cast<int>(reps.size());
      sk.to_rep[o] = c.identity[o];
      sk.from_rep[o] = c.identity[o];
      reps.push_back(o);
    }
  }
  sk.cat = full_subcategory(c, reps);
  return sk;
}

// ---------------------------------------------------------------------------
// Category isomorphism search (between skeletons)

namespace {

std::vector<std::uint64_t> morph_colors(const ZeroCategory& c) {
  const int nm = c.num_morphs();
  std::vector<std::uint64_t> color(nm);
  for (int m = 0; m < nm; ++m) {
    bool is_id = c.identity[c.morphs[m].cod] == m &&
                 c.morphs[m].cod == c.morphs[m].dom;
    color[m] = hash_mix(is_id ? 23 : 5, 1);
  }
  for (int round = 0; round < 4; ++round) {
    std::vector<std::uint64_t> next(nm);
    for (int m = 0; m < nm; ++m) {
      std::vector<std::uint64_t> sig;
      for (int g = 0; g < nm; ++g) {
        if (c.morphs[m].dom == c.morphs[g].cod) {
          sig.push_back(hash_mix(hash_mix(1, color[g]),
                                 color[c.compose(m, g)]));
        }
        if (c.morphs[g].dom == c.morphs[m].cod) {
          sig.push_back(hash_mix(hash_mix(2, color[g]),
                                 color[c.compose(g, m)]));
        }
      }
      std::sort(sig.begin(), sig.end());
      std::uint64_t h = color[m];
      for (auto v : sig) h = hash_mix(h, v);
      next[m] = h;
    }
    color = std::move(next);
  }
  return color;
}

std::vector<std::uint64_t> object_colors(const ZeroCategory& c,
                                         const std::vector<std::uint64_t>& mc) {
  const int no = c.num_objects();
  std::vector<std::uint64_t> color(no);
  for (int o = 0; o < no; ++o) {
    std::vector<std::uint64_t> sig;
    for (int m = 0; m < c.num_morphs(); ++m) {
      if (c.morphs[m].cod == o) sig.push_back(hash_mix(1, mc[m]));
      if (c.morphs[m].dom == o) sig.push_back(hash_mix(2, mc[m]));
    }
    std::sort(sig.begin(), sig.end());
    std::uint64_t h = hash_mix(9, static_cast<std::uint64_t>(
                                      c.hom[o][o].size()));
    for (auto v : sig) h = hash_mix(h, v);
    color[o] = h;
  }
  return color;
}

struct CatIsoSearch {
  const ZeroCategory& c1;
  const ZeroCategory& c2;
  SearchBudget& budget;
  const std::function<bool(const EquivalenceWitness&)>& cb;
  std::vector<std::uint64_t> mc1, mc2, oc1, oc2;
  std::vector<int> obj_map;
  std::vector<bool> obj_used;
  std::vector<int> phi;       // morph map c1 -> c2
  std::vector<bool> used;     // c2 morph taken
  std::vector<int> order;     // c1 morph processing order
  bool done = false;

  bool assign(int m, int h, std::vector<int>& trail) {
    if (phi[m] == h) return true;
    if (phi[m] >= 0 || used[h]) return false;
    if (mc1[m] != mc2[h]) return false;
    const auto& a = c1.morphs[m];
    const auto& b = c2.morphs[h];
    if (obj_map[a.cod] != b.cod || obj_map[a.dom] != b.dom) return false;
    phi[m] = h;
    used[h] = true;
    trail.push_back(m);
    // Propagate composition constraints against assigned morphisms.
    for (int g = 0; g < c1.num_morphs(); ++g) {
      if (phi[g] < 0) continue;
      if (c1.morphs[m].dom == c1.morphs[g].cod) {
        if (!assign(c1.compose(m, g), c2.compose(phi[m], phi[g]), trail)) {
          return false;
        }
      }
      if (c1.morphs[g].dom == c1.morphs[m].cod) {
        if (!assign(c1.compose(g, m), c2.compose(phi[g], phi[m]), trail)) {
          return false;
        }
      }
    }
    return true;
  }

  void undo(std::vector<int>& trail, std::size_t mark) {
    while (trail.size() > mark) {
      int m = trail.back();
      trail.pop_back();
      used[phi[m]] = false;
      phi[m] = -1;
    }
  }

  bool emit() {
    EquivalenceWitness w;
    w.object_map = obj_map;
    w.morph_map = phi;
    // Fullness forces zero preservation; check it rather than assume it.
    for (int i = 0; i < c1.num_objects(); ++i) {
      for (int j = 0; j < c1.num_objects(); ++j) {
        int z = c1.zero_morph[i][j];
        if (z >= 0 && phi[z] != c2.zero_morph[obj_map[i]][obj_map[j]]) {
          throw Error(ErrorKind::InvalidSemigroup,
                      "category isomorphism does not preserve zero");
        }
      }
    }
    return cb(w);
  }

  bool morph_search(std::size_t oi, std::vector<int>& trail) {
    while (oi < order.size() && phi[order[oi]] >= 0) ++oi;
    if (oi == order.size()) {
      if (emit()) {
        done = true;
        return true;
      }
      return false;
    }
    int m = order[oi];
    const auto& a = c1.morphs[m];
    for (int h : c2.hom[obj_map[a.cod]][obj_map[a.dom]]) {
      budget.tick();
      std::size_t mark = trail.size();
      if (assign(m, h, trail) && morph_search(oi + 1, trail)) return true;
      undo(trail, mark);
      if (done) return true;
    }
    return false;
  }

  bool object_search(int o) {
    if (o == c1.num_objects()) {
      // Objects fixed; identities are forced, then backtrack on morphisms.
      std::vector<int> trail;
      phi.assign(c1.num_morphs(), -1);
      used.assign(c2.num_morphs(), false);
      for (int i = 0; i < c1.num_objects(); ++i) {
        if (!assign(c1.identity[i], c2.identity[obj_map[i]], trail)) {
          return false;
        }
      }
      order.clear();
      for (int m = 0; m < c1.num_morphs(); ++m) order.push_back(m);
      morph_search(0, trail);
      return done;
    }
    for (int t = 0; t < c2.num_objects(); ++t) {
      if (obj_used[t] || oc1[o] != oc2[t]) continue;
      if (c1.hom[o][o].size() != c2.hom[t][t].size()) continue;
      budget.tick();
      obj_map[o] = t;
      obj_used[t] = true;
      if (object_search(o + 1)) return true;
      obj_used[t] = false;
      obj_map[o] = -1;
      if (done) return true;
    }
    return false;
  }
};

}  // namespace

bool for_each_equivalence(
    const Skeleton& c1, const Skeleton& c2, SearchBudget& budget,
    const std::function<bool(const EquivalenceWitness&)>& cb) {
  const ZeroCategory& a = c1.cat;
  const ZeroCategory& b = c2.cat;
  if (a.num_objects() != b.num_objects()) return false;
  if (a.num_morphs() != b.num_morphs()) return false;

  CatIsoSearch s{a,  b,  budget, cb, morph_colors(a), morph_colors(b),
                 {}, {}, {},     {}, {},              {},
                 {}, false};
  s.oc1 = object_colors(a, s.mc1);
  s.oc2 = object_colors(b, s.mc2);
  {
    auto x = s.oc1;
    auto y = s.oc2;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
    auto mx = s.mc1;
    auto my = s.mc2;
    std::sort(mx.begin(), mx.end());
    std::sort(my.begin(), my.end());
    if (mx != my) return false;
  }
  s.obj_map.assign(a.num_objects(), -1);
  s.obj_used.assign(b.num_objects(), false);
  s.object_search(0);
  return s.done;
}

std::optional<EquivalenceWitness> decide_equivalence(const Skeleton& c1,
                                                     const Skeleton& c2,
                                                     SearchBudget& budget) {
  std::optional<EquivalenceWitness> out;
  for_each_equivalence(c1, c2, budget, [&](const EquivalenceWitness& w) {
    out = w;
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Divisor subcategories

DivisorSubcategories divisor_subcategories(const ZeroCategory& c) {
  DivisorSubcategories out;
  const FinSemigroupZ& s = *c.base;
  for (int m = 0; m < c.num_morphs(); ++m) {
    if (c.is_zero_morph(m)) continue;
    const auto& f = c.morphs[m];
    int x = f.payload;
    int e = c.object_elem[f.cod];
    int fe = c.object_elem[f.dom];

    // nzd: composites with composable non-zero morphisms stay non-zero.
    bool nzd = true;
    for (int g = 0; g < c.num_morphs() && nzd; ++g) {
      if (c.is_zero_morph(g)) continue;
      const auto& mg = c.morphs[g];
      if (mg.dom == f.cod && s.mult(mg.payload, x) == s.zero) nzd = false;
      if (f.dom == mg.cod && s.mult(x, mg.payload) == s.zero) nzd = false;
    }
    if (nzd) out.nzd.push_back(m);

    // snzd: re != 0 => rx != 0 and ft != 0 => xt != 0, over all of S.
    bool snzd = true;
    for (int r = 0; r < s.size && snzd; ++r) {
      if (s.mult(r, e) != s.zero && s.mult(r, x) == s.zero) snzd = false;
    }
    for (int t = 0; t < s.size && snzd; ++t) {
      if (s.mult(fe, t) != s.zero && s.mult(x, t) == s.zero) snzd = false;
    }
    if (snzd) out.snzd.push_back(m);
  }
  return out;
}

bool is_snzd_preorder(const ZeroCategory& c) {
  auto div = divisor_subcategories(c);
  const int no = c.num_objects();
  std::vector<std::vector<int>> count(no, std::vector<int>(no, 0));
  for (int m : div.snzd) {
    if (++count[c.morphs[m].cod][c.morphs[m].dom] > 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Morphism iso-classes and the Krieger semigroup

MorphismClasses morphism_iso_classes(const ZeroCategory& c) {
  const int nm = c.num_morphs();
  std::vector<int> parent(nm);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  // Collect all isomorphisms.
  std::vector<int> isos;
  for (int i = 0; i < c.num_objects(); ++i) {
    for (int j = 0; j < c.num_objects(); ++j) {
      for (auto [u, v] : object_isos(c, i, j)) {
        isos.push_back(u);
        isos.push_back(v);
      }
    }
  }
  std::sort(isos.begin(), isos.end());
  isos.erase(std::unique(isos.begin(), isos.end()), isos.end());

  // f ~ phi f and f ~ f psi generate the relation f = phi g psi.
  for (int m = 0; m < nm; ++m) {
    for (int u : isos) {
      if (c.morphs[u].dom == c.morphs[m].cod) unite(m, c.compose(u, m));
      if (c.morphs[m].dom == c.morphs[u].cod) unite(m, c.compose(m, u));
    }
  }
  // All zero morphisms form a single class.
  int zrep = -1;
  for (int m = 0; m < nm; ++m) {
    if (c.is_zero_morph(m)) {
      if (zrep < 0) zrep = m;
      unite(m, zrep);
    }
  }

  MorphismClasses out;
  out.class_of.assign(nm, -1);
  std::map<int, int> root_to_class;
  for (int m = 0; m < nm; ++m) {
    int r = find(m);
    auto [it, fresh] =
        root_to_class.emplace(r, static_cast<int>(out.members.size()));
    if (fresh) out.members.push_back({});
    out.class_of[m] = it->second;
    out.members[it->second].push_back(m);
  }
  if (zrep >= 0) out.zero_class = out.class_of[zrep];
  return out;
}

KriegerSemigroup krieger_semigroup(const ZeroCategory& c) {
  if (!is_snzd_preorder(c)) {
    throw Error(ErrorKind::NotAPreorder,
                "snzd subcategory is not a preorder");
  }
  auto div = divisor_subcategories(c);
  const int no = c.num_objects();
  // Unique snzd arrow per hom-set, if any: snzd_at[cod][dom].
  std::vector<std::vector<int>> snzd_at(no, std::vector<int>(no, -1));
  for (int m : div.snzd) snzd_at[c.morphs[m].cod][c.morphs[m].dom] = m;

  MorphismClasses cls = morphism_iso_classes(c);

  // Element 0 of the result is the zero; non-zero classes follow in class
  // order.
  KriegerSemigroup out;
  std::vector<int> elem_of_class(cls.members.size(), -1);
  out.rep_morph.push_back(-1);
  for (std::size_t k = 0; k < cls.members.size(); ++k) {
    if (static_cast<int>(k) == cls.zero_class) continue;
    elem_of_class[k] = static_cast<int>(out.rep_morph.size());
    out.rep_morph.push_back(cls.members[k].front());
  }
  const int n = static_cast<int>(out.rep_morph.size());

  auto product = [&](int a, int b) -> int {
    if (a == 0 || b == 0) return 0;
    int f1 = out.rep_morph[a];
    int f2 = out.rep_morph[b];
    // h : r(f2) -> d(f1), i.e. a morphism with cod = dom(f1), dom = cod(f2).
    int h = snzd_at[c.morphs[f1].dom][c.morphs[f2].cod];
    if (h < 0) return 0;
    int fh = c.compose(f1, h);
    int m = c.compose(fh, f2);
    if (c.is_zero_morph(m)) return 0;
    return elem_of_class[cls.class_of[m]];
  };

  out.sgp.size = n;
  out.sgp.zero = 0;
  out.sgp.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) out.sgp.table[a][b] = product(a, b);
  }
  out.sgp.validate();  // associativity and zero laws, exhaustively
  return out;
}

}  // namespace sofic
