#ifndef SOFIC_SEMIGROUP_HPP_
#define SOFIC_SEMIGROUP_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sofic/dfa.hpp"
#include "sofic/group.hpp"
#include "sofic/word.hpp"

namespace sofic {

/// A finite semigroup with zero.  Elements are ids 0..size-1; `table[s][t]`
/// is the product st.  `witnesses[s]` is the shortest word over the
/// generating alphabet mapping to s (shortlex, empty for an adjoined zero or
/// when the semigroup was not built from letters).
struct FinSemigroupZ {
  int size = 0;
  std::vector<std::vector<int>> table;
  int zero = 0;
  std::vector<std::string> letters;   // generating alphabet; may be empty
  std::vector<int> letter_elem;       // letter id -> element id
  std::vector<Word> witnesses;        // per element, over `letters`

  int mult(int a, int b) const { return table[a][b]; }
  bool is_idempotent(int e) const { return table[e][e] == e; }
  std::vector<int> idempotents() const;
  std::vector<int> nonzero_idempotents() const;

  /// Image of a word under the letter map; zero for the empty word is not
  /// defined, so the word must be non-empty.
  int eval(const Word& w) const;

  /// Identity element if the semigroup is a monoid.
  std::optional<int> identity() const;

  std::string witness_string(int e) const;

  /// Checks associativity, zero laws and witness consistency.
  /// Throws Error{InvalidSemigroup}.
  void validate() const;
};

/// transition_semigroup output: the abstract semigroup together with the
/// faithful action on the automaton states (sink included).
struct TransitionSemigroup {
  FinSemigroupZ sgp;
  std::vector<std::vector<int>> transform;  // transform[elem][state]
};

/// Closure of the letter transformations of a minimal automaton under
/// composition; the all-to-sink map is adjoined as zero when not generated.
/// Isomorphic to the syntactic semigroup of the presented shift.
/// A non-zero `max_elements` aborts oversized closures with
/// Error{BudgetExceeded} (used to reject corpus instances).
TransitionSemigroup transition_semigroup(const Dfa& d, int max_elements = 0);

/// Green's relations, regularity and Schuetzenberger groups, computed from
/// the multiplication table (principal ideal comparison over S^1).
struct GreenStructure {
  // element -> class id, for each relation
  std::vector<int> r_class, l_class, h_class, d_class;
  std::vector<std::vector<int>> d_members;
  std::vector<bool> d_regular;
  std::vector<GroupTable> d_schutz;
  // d_leq[i][j]: some element of class j is a factor of some element of
  // class i; a partial order since D = J for finite semigroups.
  std::vector<std::vector<bool>> d_leq;

  int num_d_classes() const { return static_cast<int>(d_members.size()); }
};

GreenStructure green_structure(const FinSemigroupZ& s);

/// Same, restricted to a subsemigroup given as an element subset closed
/// under multiplication (ids refer to the ambient semigroup).
GreenStructure green_structure_of_subset(const FinSemigroupZ& s,
                                         const std::vector<int>& subset);

/// Local monoid eSe at each idempotent, and LU(S) = E(S) S E(S).
struct LocalStructure {
  std::vector<int> idempotents;
  std::vector<std::vector<int>> local_monoid;  // per idempotent, element ids
  std::vector<int> lu;                         // sorted element ids
};

LocalStructure local_monoids_and_lu(const FinSemigroupZ& s);

struct SemigroupPredicates {
  bool aperiodic = false;
  bool zero_disjunctive = false;
  bool irreducible_language = false;
  bool local_sl = false;    // every eSe idempotent and commutative
  bool local_ecom = false;  // idempotents commute in every eSe
};

SemigroupPredicates semigroup_predicates(const FinSemigroupZ& s);

/// Synchronizing elements (rs, st != 0 implies rst != 0) and magic
/// idempotents (non-zero synchronizing idempotents).
struct SynchronizingSets {
  std::vector<int> synchronizing;  // non-zero, sorted
  std::vector<int> magic;          // sorted
};

SynchronizingSets synchronizing_and_magic(const FinSemigroupZ& s);

/// Brandt semigroup B_n: n x n matrix units plus zero,
/// (i,j)(k,l) = (i,l) if j = k else 0.
FinSemigroupZ brandt_semigroup(int n);

/// Verdict of the brute-force context comparison below.
struct ContextWitness {
  Word x, y;                 // the separating context
  bool u_side_in_language;   // true: xuy in L, xvy not; false: the reverse
};

struct ContextVerdict {
  bool equal = false;
  std::optional<ContextWitness> witness;
};

/// Independent oracle for context equality of two words in the factor
/// language, working directly on the presentation by exhausting contexts
/// (x, y) with |x|, |y| <= bound; distinct pairs reachable through the same
/// subset-state pair are explored once.  The bound must be at least
/// 2 * (number of right-context classes)^2, which makes the verdict exact
/// by state-pair pumping.
///
/// Throws Error{BoundTooSmall}.
ContextVerdict context_oracle(const Presentation& p, const Word& u,
                              const Word& v, int bound);

/// Semigroup-with-zero isomorphism: iterated table-signature refinement,
/// then backtracking over images of a generating set.  Zero maps to zero.
bool semigroup_isomorphic(const FinSemigroupZ& a, const FinSemigroupZ& b);

/// Table file format: `elements: e0 e1 ...`, `zero: ei`, then one row of the
/// product table per element.  Throws Error{ParseError, InvalidSemigroup}.
FinSemigroupZ load_semigroup(const std::string& text);
std::string serialize_semigroup(const FinSemigroupZ& s);

}  // namespace sofic

#endif  // SOFIC_SEMIGROUP_HPP_
