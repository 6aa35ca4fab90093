#include "sofic/corpus.hpp"

#include <array>

#include "sofic/dfa.hpp"
#include "sofic/errors.hpp"
#include "sofic/karoubi.hpp"
#include "sofic/semigroup.hpp"

namespace sofic {

CorpusGenerator::CorpusGenerator(std::uint64_t seed, CorpusLimits limits)
    : rng_(seed), limits_(limits) {}

std::optional<Presentation> CorpusGenerator::draw() {
  std::uniform_int_distribution<int> nv_dist(1, limits_.max_vertices);
  std::uniform_int_distribution<int> nl_dist(1, limits_.max_letters);
  // Bias toward the larger sizes: trivial graphs survive trimming far more
  // often, and a corpus of full shifts would exercise nothing.
  int nv = std::max(nv_dist(rng_), nv_dist(rng_));
  int nl = std::max(nl_dist(rng_), nl_dist(rng_));
  std::uniform_int_distribution<int> target(0, nv - 1);
  std::uniform_int_distribution<int> coin(0, 99);
  static const std::array<const char*, 3> letters{"a", "b", "c"};

  std::vector<std::array<std::string, 3>> edges;
  for (int v = 0; v < nv; ++v) {
    for (int a = 0; a < nl; ++a) {
      if (coin(rng_) < 65) {
        edges.push_back({"v" + std::to_string(v), letters[a],
                         "v" + std::to_string(target(rng_))});
      }
    }
  }
  if (edges.empty()) return std::nullopt;
  try {
    Presentation p = make_presentation(edges);
    Dfa d = minimal_automaton(p);
    if (d.num_states > limits_.max_dfa_states) return std::nullopt;
    TransitionSemigroup ts = transition_semigroup(d, limits_.max_semigroup);
    // Cap the share of near-trivial instances (full shifts and friends).
    if (ts.sgp.size <= 2 && 10 * (trivial_accepted_ + 1) > accepted_ + 10) {
      return std::nullopt;
    }
    if (ts.sgp.size <= 2) ++trivial_accepted_;
    ++accepted_;
    auto karoubi = karoubi_envelope(
        std::make_shared<const FinSemigroupZ>(ts.sgp));
    if (karoubi.num_morphs() > limits_.max_karoubi_morphs) {
      return std::nullopt;
    }
    // Higher-block recodings of this instance must stay at desk scale too.
    for (int n : {2, 3}) {
      Presentation bn = higher_block(p, n);
      if (bn.num_vertices() > 90 ||
          static_cast<int>(bn.edges.size()) > 420) {
        return std::nullopt;
      }
      Dfa dn = minimal_automaton(bn);
      if (dn.num_states > limits_.max_block_dfa_states) return std::nullopt;
      transition_semigroup(dn, limits_.max_block_semigroup);
    }
    // The expansion of any letter must stay within the semigroup cap too.
    for (const auto& letter : p.alphabet) {
      Presentation x = symbol_expansion(p, letter, fresh_letter(p));
      transition_semigroup(minimal_automaton(x), limits_.max_block_semigroup);
    }
    return p;
  } catch (const Error&) {
    return std::nullopt;  // trimmed empty or oversized closure
  }
}

Presentation CorpusGenerator::next() {
  for (;;) {
    if (auto p = draw()) return *p;
  }
}

std::string CorpusGenerator::pick_letter(const Presentation& p) {
  std::uniform_int_distribution<int> dist(0, p.num_letters() - 1);
  return p.alphabet[dist(rng_)];
}

std::string CorpusGenerator::fresh_letter(const Presentation& p) {
  for (int k = 0;; ++k) {
    std::string cand = "z" + std::to_string(k);
    if (p.letter_id(cand) < 0) return cand;
  }
}

}  // namespace sofic
