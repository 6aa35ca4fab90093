#ifndef SOFIC_TESTS_FIXTURES_HPP_
#define SOFIC_TESTS_FIXTURES_HPP_

#include <string>

#include "sofic/presentation.hpp"

namespace sofic::testing {

inline Presentation golden_mean() {
  return load_presentation("1 a 1\n1 b 2\n2 a 1\n");
}

inline Presentation even_shift() {
  return load_presentation("A 1 A\nA 0 B\nB 0 A\n");
}

inline Presentation full_shift_ab() {
  return load_presentation("1 a 1\n1 b 1\n");
}

inline Presentation full_shift_a() { return load_presentation("1 a 1\n"); }

/// Disjoint union of the golden mean shift on {a,b} and the full shift
/// on {c}.
inline Presentation golden_plus_full() {
  return load_presentation("1 a 1\n1 b 2\n2 a 1\n3 c 3\n");
}

/// Two full shifts on disjoint letters, a reducible non-irreducible input.
inline Presentation two_full_shifts() {
  return load_presentation("1 a 1\n2 b 2\n");
}

}  // namespace sofic::testing

#endif  // SOFIC_TESTS_FIXTURES_HPP_
