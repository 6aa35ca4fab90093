#ifndef SOFIC_COVERS_HPP_
#define SOFIC_COVERS_HPP_

#include <memory>
#include <optional>
#include <vector>

#include "sofic/dfa.hpp"
#include "sofic/karoubi.hpp"
#include "sofic/poset.hpp"
#include "sofic/presentation.hpp"
#include "sofic/semigroup.hpp"

namespace sofic {

/// Action of a semigroup with zero on a pointed state set; the base point
/// (sink) absorbs: sink . s = sink and q . 0 = sink.
struct PointedAction {
  int num_states = 0;  // sink included
  int sink = 0;
  std::shared_ptr<const FinSemigroupZ> sgp;
  std::vector<std::vector<int>> act;  // act[state][elem]

  int apply(int q, int s) const { return act[q][s]; }

  /// Qe = {q . e}, sorted, base point included.
  std::vector<int> orbit_of_idempotent(int e) const;

  /// Number of non-sink states in the image of s.
  int element_rank(int s) const;
};

/// A cover: labeled graph (sink omitted) plus the pointed action on its
/// state set with the sink adjoined.  Graph vertex i is action state i; the
/// sink is the last action state.
struct Cover {
  Presentation graph;
  PointedAction action;
  std::vector<int> dfa_state;  // cover state -> state of the minimal automaton
};

/// Right Krieger cover, computed inside the minimal automaton: the non-sink
/// states are exactly those of the form i.s with s != 0 stabilized by a
/// non-zero idempotent (es = s).  The action is the restriction of the
/// automaton action and is faithful.
Cover krieger_cover(const Dfa& d, const TransitionSemigroup& ts);

/// Right Fischer cover: the unique terminal strongly connected component of
/// the minimal automaton minus the sink.  Defined here for irreducible
/// inputs only.
///
/// Throws Error{NotIrreducible}.
Cover fischer_cover(const Dfa& d, const TransitionSemigroup& ts);

/// The Krieger cover graph with the sink and its absorbing edges restored
/// (the complete labeled graph over A and the zero letter).
Presentation pointed_cover_graph(const Cover& c);

/// The action of the Karoubi envelope induced by a pointed semigroup
/// action: A(e) = Qe, and the morphism (e,s,f) acts Qe -> Qf by q . s
/// (contravariantly: identities act as identities, composition is
/// respected, zero morphisms collapse to the base point).
struct KaroubiAction {
  std::vector<std::vector<int>> object_states;  // Qe per object, sorted
  // Per morphism: parallel arrays map object_states[cod][i] to a state of
  // object_states[dom].
  std::vector<std::vector<int>> morph_map;
};

KaroubiAction karoubi_action(const PointedAction& a, const ZeroCategory& k);

/// Functoriality check of the induced Karoubi action; used by tests and
/// asserted by karoubi_action itself.
bool karoubi_action_is_functorial(const PointedAction& a,
                                  const ZeroCategory& k);

/// Poset P(Q) of cyclic LU-subsets {q . LU(S)}, q in Q.E(S), ordered by
/// reverse inclusion.
Poset cyclic_poset(const PointedAction& a);

/// Condensation of a labeled graph restricted to its non-trivial strongly
/// connected components (a single vertex counts only with a loop), ordered
/// by strict reachability.
Poset proper_communication_graph(const Presentation& g);

/// Labeled preorder of the D-classes of LU(S) with labels (regular flag,
/// Schuetzenberger group, rank under the action); realizes KD for the
/// Krieger action and FD for the Fischer action.  Ranks count non-sink
/// image states.
LabeledPreorder dclass_labeled_preorder(const FinSemigroupZ& s,
                                        const PointedAction& a);

/// A witness that two Karoubi actions are equivalent: a skeleton
/// isomorphism F together with pointed bijections eta_e : Q1 e -> Q2 F(e)
/// natural in every skeleton morphism.
struct ActionEquivalenceWitness {
  EquivalenceWitness functor;
  // Per skeleton object of the first category: the bijection as a list of
  // (state of Q1 e, state of Q2 F(e)) pairs.
  std::vector<std::vector<std::pair<int, int>>> eta;
};

std::optional<ActionEquivalenceWitness> decide_action_equivalence(
    const PointedAction& a1, const Skeleton& k1, const PointedAction& a2,
    const Skeleton& k2, SearchBudget& budget);

}  // namespace sofic

#endif  // SOFIC_COVERS_HPP_
