#ifndef SOFIC_INVARIANTS_HPP_
#define SOFIC_INVARIANTS_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sofic/covers.hpp"
#include "sofic/dfa.hpp"
#include "sofic/karoubi.hpp"
#include "sofic/poset.hpp"
#include "sofic/presentation.hpp"
#include "sofic/semigroup.hpp"

namespace sofic {

/// A named shift given by a presentation, with its minimal automaton.
struct ShiftHandle {
  std::string name;
  Presentation presentation;
  Dfa dfa;
};

ShiftHandle make_shift(const std::string& name, Presentation p);

struct ClassFlags {
  bool irreducible = false;
  bool synchronizing = false;  // a non-zero synchronizing element exists
  bool finite_type = false;
  bool almost_finite_type = false;
  bool aperiodic = false;
  bool property_a = false;
  bool local_sl = false;
  bool local_ecom = false;
  bool zero_disjunctive = false;
};

/// Everything the analyze pipeline computes for one shift; immutable once
/// built, shareable across threads.
struct Analysis {
  ShiftHandle shift;
  std::shared_ptr<const FinSemigroupZ> sgp;
  TransitionSemigroup ts;  // ts.sgp mirrors *sgp
  GreenStructure green;
  SemigroupPredicates preds;
  SynchronizingSets sync;
  ZeroCategory karoubi;
  Skeleton skel;
  DivisorSubcategories divisors;
  bool snzd_preorder = false;
  ClassFlags flags;
  Cover krieger;
  std::optional<Cover> fischer;  // irreducible inputs only
  Poset p_poset;                 // P(X)
  LabeledPreorder kd;
  std::optional<LabeledPreorder> fd;
  std::optional<KriegerSemigroup> krieger_sgp;  // when property (A) holds
  Poset subs;                                    // quotient poset of magic idempotents
  std::vector<std::string> subs_witnesses;       // representative words
};

Analysis analyze_shift(const ShiftHandle& h);

/// Decision for property (A): the snzd subcategory of the Karoubi envelope
/// is a preorder; returns false immediately when the semigroup is not
/// aperiodic.
bool property_a(const Analysis& a);

ClassFlags classify_shift(const Analysis& a);

/// Quotient poset of magic idempotents: D-class representatives preordered
/// by existence of a non-zero connecting morphism, collapsed to a poset.
/// Empty when no magic idempotent exists.
Poset subsynchronizing_poset(const Analysis& a, std::vector<std::string>* witnesses);

/// Raw-semigroup analysis (no shift attached): the Karoubi-side subset of
/// the report.
struct SemigroupAnalysis {
  std::shared_ptr<const FinSemigroupZ> sgp;
  GreenStructure green;
  SemigroupPredicates preds;
  SynchronizingSets sync;
  ZeroCategory karoubi;
  Skeleton skel;
  bool snzd_preorder = false;
  std::optional<KriegerSemigroup> krieger_sgp;
};

SemigroupAnalysis analyze_semigroup(FinSemigroupZ s);

enum class RowStatus { Match, Mismatch, NotApplicable, Skipped };

struct ComparisonRow {
  std::string invariant;
  RowStatus status = RowStatus::Skipped;
  std::string left, right;  // short value summaries
};

struct ComparisonVerdict {
  bool distinguished = false;
  bool budget_exceeded = false;  // partial table retained when set
  std::string separating_invariant;  // set when distinguished
  std::vector<ComparisonRow> table;
};

/// Runs the invariant battery cheapest-first with short-circuit on the
/// first mismatch (unless exhaustive).  A full match is reported as
/// karoubi-equivalent, an inconclusive positive: flow equivalence itself is
/// not decided.
ComparisonVerdict compare_shifts(const Analysis& a, const Analysis& b,
                                 SearchBudget& budget, bool exhaustive = false);

/// JSON serializations (stable field names).
std::string report_json(const Analysis& a, bool pretty = true);
std::string report_json(const SemigroupAnalysis& a, const std::string& name,
                        bool pretty = true);
std::string verdict_json(const ComparisonVerdict& v, const std::string& left,
                         const std::string& right, bool pretty = true);

/// Plain-text renderings for --format text.
std::string report_text(const Analysis& a);
std::string report_text(const SemigroupAnalysis& a, const std::string& name);
std::string verdict_text(const ComparisonVerdict& v, const std::string& left,
                         const std::string& right);

}  // namespace sofic

#endif  // SOFIC_INVARIANTS_HPP_
