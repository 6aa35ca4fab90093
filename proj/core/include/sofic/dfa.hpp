#ifndef SOFIC_DFA_HPP_
#define SOFIC_DFA_HPP_

#include <string>
#include <vector>

#include "sofic/presentation.hpp"
#include "sofic/word.hpp"

namespace sofic {

/// Minimal complete deterministic automaton of the factor language of a
/// presentation.  The transition function is total; the sink is absorbing
/// and is the unique state with empty right language.  A word belongs to the
/// language iff walking it from `initial` avoids the sink.
struct Dfa {
  int num_states = 0;
  int initial = 0;
  int sink = 0;
  std::vector<std::string> alphabet;
  std::vector<std::vector<int>> next;  // next[state][letter]

  int num_letters() const { return static_cast<int>(alphabet.size()); }
  int num_nonsink() const { return num_states - 1; }

  /// Non-sink states are exactly those with a non-empty right language.
  bool coaccessible(int state) const { return state != sink; }

  int step(int state, const Word& w) const {
    for (int a : w) state = next[state][a];
    return state;
  }

  bool accepts(const Word& w) const { return step(initial, w) != sink; }
};

/// Subset construction with start state = the full vertex set, followed by
/// partition refinement over the complete automaton (sink included).  The
/// result's states are in bijection with the right contexts of the factor
/// language; the sink is kept even when unreachable by letters.
Dfa minimal_automaton(const Presentation& p);

}  // namespace sofic

#endif  // SOFIC_DFA_HPP_
