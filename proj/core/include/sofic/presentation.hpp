#ifndef SOFIC_PRESENTATION_HPP_
#define SOFIC_PRESENTATION_HPP_

#include <array>
#include <string>
#include <vector>

#include "sofic/word.hpp"

namespace sofic {

struct FinSemigroupZ;  // semigroup.hpp

/// One labeled edge of a presentation; all fields are indices.
struct Edge {
  int src;
  int letter;
  int dst;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A finite right-resolving essential labeled multigraph presenting a sofic
/// shift.  Invariants (enforced by the constructors in this header):
///   - no two edges share (src, letter);
///   - every vertex has in-degree and out-degree at least one;
///   - the vertex set is non-empty.
/// Values are immutable after construction and safe to share across threads.
struct Presentation {
  std::vector<std::string> vertex_names;
  std::vector<std::string> alphabet;  // sorted tokens
  std::vector<Edge> edges;            // sorted by (src, letter, dst)

  int num_vertices() const { return static_cast<int>(vertex_names.size()); }
  int num_letters() const { return static_cast<int>(alphabet.size()); }

  /// Successor of `v` under `letter`, or -1 (well defined: right-resolving).
  int out(int v, int letter) const;

  int letter_id(const std::string& token) const;  // -1 if absent

  /// True if there is a vertex from which `w` labels a path.
  bool readable(const Word& w) const;
};

/// Parses the edge-list format: one `<src> <label> <dst>` per line, `#`
/// comments and blank lines ignored.  The result is trimmed to its essential
/// part and validated.
///
/// Throws Error{ParseError, NotRightResolving, EmptyShift}.
Presentation load_presentation(const std::string& text);

/// Builds a validated presentation from explicit edge triples (token form).
Presentation make_presentation(
    const std::vector<std::array<std::string, 3>>& edge_tokens);

/// Canonical serialization: vertices are renumbered by BFS from the
/// lexicographically least edge, edges emitted in sorted order.  Identical
/// presentations serialize byte-identically.
std::string serialize_presentation(const Presentation& p);

/// The canonically renumbered copy of `p` (the form serialize emits).
Presentation canonicalize(const Presentation& p);

/// Replaces every edge (s, alpha, t) by (s, alpha, m), (m, fresh, t) with a
/// new intermediate vertex m per edge.  Presents the symbol expansion of the
/// shift relative to alpha.
///
/// Throws Error{LetterNotInAlphabet, LetterCollision}.
Presentation symbol_expansion(const Presentation& p, const std::string& alpha,
                              const std::string& fresh);

/// Conjugacy-preserving recoding: vertices are (length n-1 label path,
/// endpoint) pairs, edges are labeled by n-blocks.  n = 1 is the identity.
Presentation higher_block(const Presentation& p, int n);

/// Same vertex set, edges = length-n label paths labeled by words over the
/// power alphabet; presents the n-th higher power shift.  n = 1 is the
/// identity.
Presentation higher_power(const Presentation& p, int n);

/// Presentation of the shift induced by a finite prolongable semigroup with
/// zero and a generating letter map, built from the right-Cayley automaton
/// of the semigroup and trimmed to its essential part.
///
/// Throws Error{NotProlongable, GensDoNotGenerate, EmptyShift}.
Presentation induced_shift(const FinSemigroupZ& s);

}  // namespace sofic

#endif  // SOFIC_PRESENTATION_HPP_
