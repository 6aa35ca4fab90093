#ifndef SOFIC_WORD_HPP_
#define SOFIC_WORD_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace sofic {

/// A word over an indexed alphabet; entries are letter ids.
using Word = std::vector<int>;

/// Renders a word using the given letter tokens.  Single-character tokens
/// are concatenated; otherwise tokens are joined with '.' so that the
/// result parses back unambiguously.
std::string word_to_string(const Word& w, const std::vector<std::string>& letters);

/// Joins letter tokens into one block token (same rule as word_to_string).
std::string join_block(const std::vector<std::string>& tokens);

/// Order-sensitive 64-bit mixer for cheap structural fingerprints.
inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace sofic

#endif  // SOFIC_WORD_HPP_
