#ifndef SOFIC_KAROUBI_HPP_
#define SOFIC_KAROUBI_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sofic/semigroup.hpp"

namespace sofic {

/// Search budget shared by the backtracking searches in this module.
/// Exceeding `limit` raises Error{BudgetExceeded}, which is never conflated
/// with a not-equivalent verdict.
struct SearchBudget {
  long long limit = 10'000'000;
  long long used = 0;

  void tick();
};

/// A finite category with zero backed by a semigroup with zero: objects are
/// idempotents, a morphism from f to e is a triple (e, s, f) with s in eSf,
/// and (e,s,f)(f,t,g) = (e,st,g).  Arrows point f -> e (source on the
/// right); `dom` is f and `cod` is e throughout this module.
struct ZeroCategory {
  struct Morph {
    int cod;      // object index
    int dom;      // object index
    int payload;  // semigroup element
  };

  std::shared_ptr<const FinSemigroupZ> base;
  std::vector<int> object_elem;  // object index -> idempotent element
  int trivial_object = -1;       // object whose identity is zero, or -1
  std::vector<Morph> morphs;
  std::vector<int> identity;                     // object -> morph id
  std::vector<std::vector<int>> zero_morph;      // [cod][dom] -> morph id
  std::vector<std::vector<std::vector<int>>> hom;  // [cod][dom] -> morph ids

  int num_objects() const { return static_cast<int>(object_elem.size()); }
  int num_morphs() const { return static_cast<int>(morphs.size()); }
  bool is_zero_morph(int m) const {
    return morphs[m].payload == base->zero;
  }
  /// f after g: defined when dom(f) == cod(g).
  int compose(int f, int g) const;
  int morph_id(int cod, int elem, int dom) const;  // -1 if absent

 private:
  mutable std::unordered_map<std::uint64_t, int> index_;
  void build_index() const;
};

/// Karoubi envelope of a semigroup with zero.
ZeroCategory karoubi_envelope(std::shared_ptr<const FinSemigroupZ> s);

/// Skeleton: one object per isomorphism class (equivalently, per D-class of
/// idempotents), with recorded isomorphism witnesses into the chosen
/// representatives.
struct Skeleton {
  ZeroCategory cat;                    // full subcategory on representatives
  std::vector<int> object_class;      // original object -> skeleton object
  // Witnesses in the original category: to_rep[o] : o -> rep,
  // from_rep[o] : rep -> o, mutually inverse.
  std::vector<int> to_rep;
  std::vector<int> from_rep;
};

Skeleton skeleton(const ZeroCategory& c);

/// A witness that two categories are equivalent: an isomorphism between
/// their skeletons (object and morphism bijections).
struct EquivalenceWitness {
  std::vector<int> object_map;  // skel1 object -> skel2 object
  std::vector<int> morph_map;   // skel1 morph id -> skel2 morph id
};

/// Decides equivalence by searching for an isomorphism between the
/// skeletons (sound and complete: equivalent categories have isomorphic
/// skeletons).  Any witness found maps zero morphisms to zero morphisms, a
/// consequence of fullness that is asserted, not assumed.
std::optional<EquivalenceWitness> decide_equivalence(const Skeleton& c1,
                                                     const Skeleton& c2,
                                                     SearchBudget& budget);

/// Visits every skeleton isomorphism until `cb` returns true; returns
/// whether some call did.
bool for_each_equivalence(const Skeleton& c1, const Skeleton& c2,
                          SearchBudget& budget,
                          const std::function<bool(const EquivalenceWitness&)>& cb);

/// Non-zero divisors and strong non-zero divisors of a Karoubi envelope,
/// each closed under composition; every snzd is an nzd, and the two sets
/// coincide for syntactic semigroups of sofic shifts.
struct DivisorSubcategories {
  std::vector<int> nzd;   // morph ids, sorted
  std::vector<int> snzd;  // morph ids, sorted
};

DivisorSubcategories divisor_subcategories(const ZeroCategory& c);

/// True iff every hom-set of the snzd subcategory has at most one morphism.
bool is_snzd_preorder(const ZeroCategory& c);

/// Partition of the morphisms under f = phi g psi with phi, psi
/// isomorphisms, with all zero morphisms merged into one class.
struct MorphismClasses {
  std::vector<int> class_of;             // morph id -> class id
  std::vector<std::vector<int>> members;  // class id -> morph ids
  int zero_class = -1;
};

MorphismClasses morphism_iso_classes(const ZeroCategory& c);

/// The semigroup of iso-classes of morphisms with the product mediated by
/// the unique snzd arrow between range and domain objects; requires the
/// snzd subcategory to be a preorder.
///
/// Throws Error{NotAPreorder}.
struct KriegerSemigroup {
  FinSemigroupZ sgp;                 // letters empty; element 0 is the zero
  std::vector<int> rep_morph;        // per element, a representative morph (-1 for zero)
};

KriegerSemigroup krieger_semigroup(const ZeroCategory& c);

}  // namespace sofic

#endif  // SOFIC_KAROUBI_HPP_
