#include "sofic/word.hpp"

namespace sofic {

std::string join_block(const std::vector<std::string>& tokens) {
  bool all_single = true;
  for (const auto& t : tokens) {
    if (t.size() != 1) {
      all_single = false;
      break;
    }
  }
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i && !all_single) out += '.';
    out += tokens[i];
  }
  return out;
}

std::string word_to_string(const Word& w,
                           const std::vector<std::string>& letters) {
  std::vector<std::string> tokens;
  tokens.reserve(w.size());
  for (int a : w) tokens.push_back(letters[a]);
  return join_block(tokens);
}

}  // namespace sofic
