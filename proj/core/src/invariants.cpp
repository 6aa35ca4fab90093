#include "sofic/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sofic/errors.hpp"

namespace sofic {

using json = nlohmann::ordered_json;

ShiftHandle make_shift(const std::string& name, Presentation p) {
  ShiftHandle h;
  h.name = name;
  h.dfa = minimal_automaton(p);
  h.presentation = std::move(p);
  return h;
}

bool property_a(const Analysis& a) {
  if (!a.preds.aperiodic) return false;  // Cor: property (A) forces aperiodicity
  return a.snzd_preorder;
}

ClassFlags classify_shift(const Analysis& a) {
  ClassFlags f;
  f.irreducible = a.preds.irreducible_language;
  f.synchronizing = !a.sync.synchronizing.empty();
  f.local_sl = a.preds.local_sl;
  f.local_ecom = a.preds.local_ecom;
  f.aperiodic = a.preds.aperiodic;
  f.zero_disjunctive = a.preds.zero_disjunctive;
  f.finite_type = f.irreducible && f.local_sl;
  f.almost_finite_type = f.irreducible && f.local_ecom;
  f.property_a = a.preds.aperiodic && a.snzd_preorder;
  return f;
}

Poset subsynchronizing_poset(const Analysis& a,
                             std::vector<std::string>* witnesses) {
  const FinSemigroupZ& s = *a.sgp;
  if (a.sync.magic.empty()) {
    if (witnesses) witnesses->clear();
    return Poset{};
  }
  // One representative per D-class of magic idempotents.
  std::map<int, int> rep_of_class;
  for (int e : a.sync.magic) {
    int d = a.green.d_class[e];
    if (!rep_of_class.count(d)) rep_of_class[d] = e;
  }
  std::vector<int> reps;
  for (auto& [d, e] : rep_of_class) reps.push_back(e);

  const int n = static_cast<int>(reps.size());
  // e <= f iff fSe != {0}, i.e. a non-zero morphism e -> f exists.
  auto below = [&](int e, int f) {
    for (int x = 0; x < s.size; ++x) {
      if (s.mult(s.mult(f, x), e) != s.zero) return true;
    }
    return false;
  };
  std::vector<std::vector<bool>> pre(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) pre[i][j] = below(reps[i], reps[j]);
  }
  // Collapse mutual pairs (distinct D-classes can generate the same
  // subsynchronizing subshift).
  std::vector<int> cls(n, -1);
  int nc = 0;
  for (int i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = nc;
    for (int j = i + 1; j < n; ++j) {
      if (cls[j] < 0 && pre[i][j] && pre[j][i]) cls[j] = nc;
    }
    ++nc;
  }
  Poset p;
  p.size = nc;
  p.leq.assign(nc, std::vector<bool>(nc, false));
  std::vector<int> class_rep(nc, -1);
  for (int i = 0; i < n; ++i) {
    if (class_rep[cls[i]] < 0) class_rep[cls[i]] = i;
    for (int j = 0; j < n; ++j) {
      if (pre[i][j]) p.leq[cls[i]][cls[j]] = true;
    }
  }
  if (witnesses) {
    witnesses->clear();
    for (int c = 0; c < nc; ++c) {
      witnesses->push_back(s.witness_string(reps[class_rep[c]]));
    }
  }
  for (int c = 0; c < nc; ++c) {
    p.names.push_back(s.witness_string(reps[class_rep[c]]));
  }
  return p;
}

Analysis analyze_shift(const ShiftHandle& h) {
  Analysis a;
  a.shift = h;
  a.ts = transition_semigroup(h.dfa);
  a.sgp = std::make_shared<const FinSemigroupZ>(a.ts.sgp);
  a.green = green_structure(*a.sgp);
  a.preds = semigroup_predicates(*a.sgp);
  a.sync = synchronizing_and_magic(*a.sgp);
  a.karoubi = karoubi_envelope(a.sgp);
  a.skel = skeleton(a.karoubi);
  a.divisors = divisor_subcategories(a.karoubi);
  {
    const int no = a.karoubi.num_objects();
    std::vector<std::vector<int>> cnt(no, std::vector<int>(no, 0));
    a.snzd_preorder = true;
    for (int m : a.divisors.snzd) {
      if (++cnt[a.karoubi.morphs[m].cod][a.karoubi.morphs[m].dom] > 1) {
        a.snzd_preorder = false;
        break;
      }
    }
  }
  a.flags = classify_shift(a);
  a.krieger = krieger_cover(h.dfa, a.ts);
  if (a.flags.irreducible) {
    a.fischer = fischer_cover(h.dfa, a.ts);
    a.fd = dclass_labeled_preorder(*a.sgp, a.fischer->action);
  }
  a.p_poset = cyclic_poset(a.krieger.action);
  a.kd = dclass_labeled_preorder(*a.sgp, a.krieger.action);
  if (a.flags.property_a) {
    a.krieger_sgp = krieger_semigroup(a.karoubi);
  }
  a.subs = subsynchronizing_poset(a, &a.subs_witnesses);

  // Flag consistency is a structural invariant of the report.
  if (a.flags.property_a && !a.flags.aperiodic) {
    throw Error(ErrorKind::InvalidSemigroup, "property (A) without aperiodicity");
  }
  if (a.flags.finite_type && !a.flags.almost_finite_type) {
    throw Error(ErrorKind::InvalidSemigroup, "finite type outside AFT");
  }
  return a;
}

SemigroupAnalysis analyze_semigroup(FinSemigroupZ s) {
  SemigroupAnalysis a;
  a.sgp = std::make_shared<const FinSemigroupZ>(std::move(s));
  a.green = green_structure(*a.sgp);
  a.preds = semigroup_predicates(*a.sgp);
  a.sync = synchronizing_and_magic(*a.sgp);
  a.karoubi = karoubi_envelope(a.sgp);
  a.skel = skeleton(a.karoubi);
  a.snzd_preorder = is_snzd_preorder(a.karoubi);
  if (a.snzd_preorder) a.krieger_sgp = krieger_semigroup(a.karoubi);
  return a;
}

// ---------------------------------------------------------------------------
// Comparison

namespace {

std::string bool_str(bool b) { return b ? "true" : "false"; }

struct RowRunner {
  ComparisonVerdict& v;
  bool exhaustive;
  bool stop = false;

  void flag_row(const std::string& name, bool l, bool r) {
    if (stop && !exhaustive) {
      v.table.push_back({name, RowStatus::Skipped, "", ""});
      return;
    }
    ComparisonRow row{name,
                      l == r ? RowStatus::Match : RowStatus::Mismatch,
                      bool_str(l), bool_str(r)};
    if (l != r && !stop) {
      v.distinguished = true;
      v.separating_invariant = name;
      stop = true;
    }
    v.table.push_back(std::move(row));
  }

  void check_row(const std::string& name, bool applicable,
                 const std::function<bool()>& match, const std::string& l,
                 const std::string& r) {
    if (!applicable) {
      v.table.push_back({name, RowStatus::NotApplicable, l, r});
      return;
    }
    if (stop && !exhaustive) {
      v.table.push_back({name, RowStatus::Skipped, "", ""});
      return;
    }
    bool ok = match();
    v.table.push_back(
        {name, ok ? RowStatus::Match : RowStatus::Mismatch, l, r});
    if (!ok && !stop) {
      v.distinguished = true;
      v.separating_invariant = name;
      stop = true;
    }
  }
};

std::string preorder_summary(const LabeledPreorder& p) {
  std::ostringstream out;
  out << p.size << " classes [";
  for (int i = 0; i < p.size; ++i) {
    if (i) out << ", ";
    out << "(" << p.labels[i].regular << ","
        << p.labels[i].group.fingerprint_string() << "," << p.labels[i].rank
        << ")";
  }
  out << "]";
  return out.str();
}

std::string poset_summary(const Poset& p) {
  int edges = 0;
  for (int i = 0; i < p.size; ++i) {
    for (int j = 0; j < p.size; ++j) {
      if (i != j && p.leq[i][j]) ++edges;
    }
  }
  return std::to_string(p.size) + " elements, " + std::to_string(edges) +
         " relations";
}

}  // namespace

ComparisonVerdict compare_shifts(const Analysis& a, const Analysis& b,
                                 SearchBudget& budget, bool exhaustive) {
  ComparisonVerdict v;
  RowRunner run{v, exhaustive};

  // Monoid case: flow equivalent shifts with monoid syntactic semigroups
  // have isomorphic syntactic semigroups.
  bool am = a.sgp->identity().has_value();
  bool bm = b.sgp->identity().has_value();
  run.check_row(
      "syntactic_monoid", am && bm,
      [&] { return semigroup_isomorphic(*a.sgp, *b.sgp); },
      am ? "monoid(" + std::to_string(a.sgp->size) + ")" : "not a monoid",
      bm ? "monoid(" + std::to_string(b.sgp->size) + ")" : "not a monoid");

  run.check_row(
      "kd_preorder", true, [&] { return labeled_preorder_isomorphic(a.kd, b.kd); },
      preorder_summary(a.kd), preorder_summary(b.kd));

  run.check_row(
      "p_poset", true, [&] { return poset_isomorphic(a.p_poset, b.p_poset); },
      poset_summary(a.p_poset), poset_summary(b.p_poset));

  run.flag_row("property_a", a.flags.property_a, b.flags.property_a);
  run.flag_row("irreducible", a.flags.irreducible, b.flags.irreducible);
  run.flag_row("finite_type", a.flags.finite_type, b.flags.finite_type);
  run.flag_row("almost_finite_type", a.flags.almost_finite_type,
               b.flags.almost_finite_type);
  run.flag_row("aperiodic", a.flags.aperiodic, b.flags.aperiodic);
  run.flag_row("local_sl", a.flags.local_sl, b.flags.local_sl);
  run.flag_row("local_ecom", a.flags.local_ecom, b.flags.local_ecom);

  run.check_row(
      "fd_preorder", a.fd.has_value() && b.fd.has_value(),
      [&] { return labeled_preorder_isomorphic(*a.fd, *b.fd); },
      a.fd ? preorder_summary(*a.fd) : "undefined",
      b.fd ? preorder_summary(*b.fd) : "undefined");

  run.check_row(
      "subs_poset", true, [&] { return poset_isomorphic(a.subs, b.subs); },
      poset_summary(a.subs), poset_summary(b.subs));

  run.check_row(
      "krieger_semigroup",
      a.krieger_sgp.has_value() && b.krieger_sgp.has_value(),
      [&] {
        return semigroup_isomorphic(a.krieger_sgp->sgp, b.krieger_sgp->sgp);
      },
      a.krieger_sgp ? "order " + std::to_string(a.krieger_sgp->sgp.size)
                    : "undefined",
      b.krieger_sgp ? "order " + std::to_string(b.krieger_sgp->sgp.size)
                    : "undefined");

  try {
    run.check_row(
        "karoubi_equivalence", true,
        [&] { return decide_equivalence(a.skel, b.skel, budget).has_value(); },
        std::to_string(a.skel.cat.num_objects()) + " skeleton objects",
        std::to_string(b.skel.cat.num_objects()) + " skeleton objects");

    run.check_row(
        "action_equivalence", true,
        [&] {
          return decide_action_equivalence(a.krieger.action, a.skel,
                                           b.krieger.action, b.skel, budget)
              .has_value();
        },
        std::to_string(a.krieger.action.num_states) + " pointed states",
        std::to_string(b.krieger.action.num_states) + " pointed states");
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExceeded) throw;
    v.budget_exceeded = true;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Reports

namespace {

json group_json(const GroupTable& g) {
  json j;
  j["order"] = g.order;
  j["abelian"] = g.is_abelian();
  j["element_orders"] = g.element_order_multiset();
  j["fingerprint"] = g.fingerprint_string();
  j["table"] = g.table;
  return j;
}

json poset_json(const Poset& p) {
  json j;
  j["size"] = p.size;
  json rel = json::array();
  for (int i = 0; i < p.size; ++i) {
    for (int k = 0; k < p.size; ++k) {
      if (i != k && p.leq[i][k]) rel.push_back({i, k});
    }
  }
  j["relation"] = rel;
  if (!p.names.empty()) j["elements"] = p.names;
  return j;
}

json preorder_json(const LabeledPreorder& p) {
  json j;
  j["size"] = p.size;
  json rel = json::array();
  for (int i = 0; i < p.size; ++i) {
    for (int k = 0; k < p.size; ++k) {
      if (i != k && p.leq[i][k]) rel.push_back({i, k});
    }
  }
  j["relation"] = rel;
  json labels = json::array();
  for (const auto& l : p.labels) {
    json lj;
    lj["regular"] = l.regular;
    lj["rank"] = l.rank;
    lj["group"] = group_json(l.group);
    labels.push_back(lj);
  }
  j["labels"] = labels;
  if (!p.names.empty()) j["elements"] = p.names;
  return j;
}

json flags_json(const ClassFlags& f) {
  json j;
  j["irreducible"] = f.irreducible;
  j["synchronizing"] = f.synchronizing;
  j["finite_type"] = f.finite_type;
  j["almost_finite_type"] = f.almost_finite_type;
  j["aperiodic"] = f.aperiodic;
  j["property_a"] = f.property_a;
  j["local_sl"] = f.local_sl;
  j["local_ecom"] = f.local_ecom;
  j["zero_disjunctive"] = f.zero_disjunctive;
  return j;
}

json semigroup_json(const FinSemigroupZ& s, const GreenStructure& g) {
  json j;
  j["order"] = s.size;
  j["idempotent_count"] = static_cast<int>(s.idempotents().size());
  j["d_class_count"] = g.num_d_classes();
  j["zero_is_adjoined"] =
      !s.witnesses.empty() && s.witnesses[s.zero].empty();
  if (!s.letters.empty()) {
    json gens;
    for (std::size_t a = 0; a < s.letters.size(); ++a) {
      gens[s.letters[a]] = s.letter_elem[a];
    }
    j["generators"] = gens;
    json wit = json::array();
    for (int e = 0; e < s.size; ++e) wit.push_back(s.witness_string(e));
    j["witnesses"] = wit;
  }
  return j;
}

json karoubi_json(const ZeroCategory& k, const Skeleton& skel,
                  bool snzd_preorder) {
  json j;
  j["objects"] = k.num_objects();
  j["morphisms"] = k.num_morphs();
  j["skeleton_objects"] = skel.cat.num_objects();
  std::vector<int> lm;
  for (int o = 0; o < skel.cat.num_objects(); ++o) {
    lm.push_back(static_cast<int>(skel.cat.hom[o][o].size()));
  }
  std::sort(lm.begin(), lm.end());
  j["local_monoid_orders"] = lm;
  j["snzd_is_preorder"] = snzd_preorder;
  return j;
}

}  // namespace

std::string report_json(const Analysis& a, bool pretty) {
  json j;
  j["input"] = a.shift.name;
  j["kind"] = "shift";
  {
    json p;
    p["vertices"] = a.shift.presentation.num_vertices();
    p["edges"] = static_cast<int>(a.shift.presentation.edges.size());
    p["alphabet"] = a.shift.presentation.alphabet;
    j["presentation"] = p;
  }
  {
    json m;
    m["states"] = a.shift.dfa.num_states;
    m["nonsink_states"] = a.shift.dfa.num_nonsink();
    j["minimal_automaton"] = m;
  }
  j["semigroup"] = semigroup_json(*a.sgp, a.green);
  j["karoubi"] = karoubi_json(a.karoubi, a.skel, a.snzd_preorder);
  j["flags"] = flags_json(a.flags);
  j["krieger_cover"] =
      json{{"states", a.krieger.graph.num_vertices()}};
  j["fischer_cover"] =
      a.fischer ? json{{"states", a.fischer->graph.num_vertices()}}
                : json(nullptr);
  j["p_poset"] = poset_json(a.p_poset);
  j["kd_preorder"] = preorder_json(a.kd);
  j["fd_preorder"] = a.fd ? preorder_json(*a.fd) : json(nullptr);
  if (a.krieger_sgp) {
    json k;
    k["order"] = a.krieger_sgp->sgp.size;
    k["table"] = a.krieger_sgp->sgp.table;
    j["krieger_semigroup"] = k;
  } else {
    j["krieger_semigroup"] = nullptr;
  }
  j["subs_poset"] = poset_json(a.subs);
  return pretty ? j.dump(2) : j.dump();
}

std::string report_json(const SemigroupAnalysis& a, const std::string& name,
                        bool pretty) {
  json j;
  j["input"] = name;
  j["kind"] = "semigroup";
  j["semigroup"] = semigroup_json(*a.sgp, a.green);
  j["karoubi"] = karoubi_json(a.karoubi, a.skel, a.snzd_preorder);
  {
    json f;
    f["aperiodic"] = a.preds.aperiodic;
    f["zero_disjunctive"] = a.preds.zero_disjunctive;
    f["irreducible_language"] = a.preds.irreducible_language;
    f["local_sl"] = a.preds.local_sl;
    f["local_ecom"] = a.preds.local_ecom;
    f["has_magic_idempotent"] = !a.sync.magic.empty();
    j["predicates"] = f;
  }
  if (a.krieger_sgp) {
    json k;
    k["order"] = a.krieger_sgp->sgp.size;
    k["table"] = a.krieger_sgp->sgp.table;
    j["krieger_semigroup"] = k;
  } else {
    j["krieger_semigroup"] = nullptr;
  }
  return pretty ? j.dump(2) : j.dump();
}

namespace {

const char* status_str(RowStatus s) {
  switch (s) {
    case RowStatus::Match: return "match";
    case RowStatus::Mismatch: return "mismatch";
    case RowStatus::NotApplicable: return "n/a";
    case RowStatus::Skipped: return "skipped";
  }
  return "?";
}

}  // namespace

std::string verdict_json(const ComparisonVerdict& v, const std::string& left,
                         const std::string& right, bool pretty) {
  json j;
  j["left"] = left;
  j["right"] = right;
  if (v.budget_exceeded) {
    j["verdict"] = "budget_exceeded";
  } else {
    j["verdict"] = v.distinguished ? "distinguished" : "karoubi_equivalent";
  }
  j["separating_invariant"] =
      v.distinguished ? json(v.separating_invariant) : json(nullptr);
  json table = json::array();
  for (const auto& row : v.table) {
    json r;
    r["invariant"] = row.invariant;
    r["status"] = status_str(row.status);
    r["left"] = row.left;
    r["right"] = row.right;
    table.push_back(r);
  }
  j["table"] = table;
  return pretty ? j.dump(2) : j.dump();
}

std::string report_text(const Analysis& a) {
  std::ostringstream out;
  out << "shift " << a.shift.name << "\n";
  out << "  presentation: " << a.shift.presentation.num_vertices()
      << " vertices, " << a.shift.presentation.edges.size() << " edges\n";
  out << "  minimal automaton: " << a.shift.dfa.num_states << " states ("
      << a.shift.dfa.num_nonsink() << " non-sink)\n";
  out << "  syntactic semigroup: order " << a.sgp->size << ", "
      << a.sgp->idempotents().size() << " idempotents, "
      << a.green.num_d_classes() << " D-classes\n";
  out << "  karoubi: " << a.karoubi.num_objects() << " objects, skeleton "
      << a.skel.cat.num_objects() << "\n";
  out << "  krieger cover: " << a.krieger.graph.num_vertices() << " states";
  if (a.fischer) {
    out << "; fischer cover: " << a.fischer->graph.num_vertices()
        << " states";
  }
  out << "\n";
  auto flag = [&](const char* n, bool b) {
    out << "  " << n << ": " << (b ? "true" : "false") << "\n";
  };
  flag("irreducible", a.flags.irreducible);
  flag("synchronizing", a.flags.synchronizing);
  flag("finite_type", a.flags.finite_type);
  flag("almost_finite_type", a.flags.almost_finite_type);
  flag("aperiodic", a.flags.aperiodic);
  flag("property_a", a.flags.property_a);
  out << "  P poset: " << poset_summary(a.p_poset) << "\n";
  out << "  KD: " << preorder_summary(a.kd) << "\n";
  if (a.fd) out << "  FD: " << preorder_summary(*a.fd) << "\n";
  if (a.krieger_sgp) {
    out << "  krieger semigroup: order " << a.krieger_sgp->sgp.size << "\n";
  }
  out << "  subs poset: " << poset_summary(a.subs) << "\n";
  return out.str();
}

std::string report_text(const SemigroupAnalysis& a, const std::string& name) {
  std::ostringstream out;
  out << "semigroup " << name << "\n";
  out << "  order " << a.sgp->size << ", " << a.sgp->idempotents().size()
      << " idempotents, " << a.green.num_d_classes() << " D-classes\n";
  out << "  karoubi: " << a.karoubi.num_objects() << " objects, skeleton "
      << a.skel.cat.num_objects() << "\n";
  out << "  snzd preorder: " << (a.snzd_preorder ? "true" : "false") << "\n";
  if (a.krieger_sgp) {
    out << "  krieger semigroup: order " << a.krieger_sgp->sgp.size << "\n";
  }
  return out.str();
}

std::string verdict_text(const ComparisonVerdict& v, const std::string& left,
                         const std::string& right) {
  std::ostringstream out;
  out << "compare " << left << " vs " << right << "\n";
  for (const auto& row : v.table) {
    out << "  " << row.invariant << ": " << status_str(row.status);
    if (row.status == RowStatus::Mismatch) {
      out << "  [" << row.left << " | " << row.right << "]";
    }
    out << "\n";
  }
  if (v.budget_exceeded) {
    out << "verdict: budget exceeded\n";
  } else if (v.distinguished) {
    out << "verdict: distinguished by " << v.separating_invariant << "\n";
  } else {
    out << "verdict: karoubi_equivalent (all invariants match; flow "
           "equivalence itself is not decided)\n";
  }
  return out.str();
}

}  // namespace sofic
