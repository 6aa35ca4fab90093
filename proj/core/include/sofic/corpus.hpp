#ifndef SOFIC_CORPUS_HPP_
#define SOFIC_CORPUS_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sofic/presentation.hpp"

namespace sofic {

/// Size caps a generated instance must satisfy; instances violating them
/// are redrawn so that downstream searches stay at desk scale.
struct CorpusLimits {
  int max_vertices = 5;
  int max_letters = 3;
  int max_dfa_states = 14;
  int max_semigroup = 160;
  int max_karoubi_morphs = 2200;
  int max_block_dfa_states = 64;   // applied to higher_block(p, n), n <= 3
  int max_block_semigroup = 400;   // ditto, and to symbol expansions
};

/// Deterministic stream of pseudo-random essential right-resolving
/// presentations (fixed seed => fixed corpus).
class CorpusGenerator {
 public:
  explicit CorpusGenerator(std::uint64_t seed, CorpusLimits limits = {});

  /// Next presentation satisfying the limits.
  Presentation next();

  /// A letter of p chosen pseudo-randomly (for expansion tests).
  std::string pick_letter(const Presentation& p);

  /// Fresh letter not in p's alphabet.
  static std::string fresh_letter(const Presentation& p);

 private:
  std::optional<Presentation> draw();

  std::mt19937_64 rng_;
  CorpusLimits limits_;
  int accepted_ = 0;
  int trivial_accepted_ = 0;
};

}  // namespace sofic

#endif  // SOFIC_CORPUS_HPP_
