#include "sofic/presentation.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "sofic/errors.hpp"
#include "sofic/semigroup.hpp"

namespace sofic {

namespace {

struct RawEdge {
  std::string src, label, dst;
  friend auto operator<=>(const RawEdge&, const RawEdge&) = default;
};

Presentation build_from_raw(std::vector<RawEdge> raw) {
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

  // Right-resolving: no two edges share (src, label).
  for (std::size_t i = 1; i < raw.size(); ++i) {
    if (raw[i].src == raw[i - 1].src && raw[i].label == raw[i - 1].label) {
      throw Error(ErrorKind::NotRightResolving,
                  "duplicate (source, label) pair: " + raw[i].src + " " +
                      raw[i].label);
    }
  }

  // Trim to the essential part: iteratively delete vertices with in-degree
  // or out-degree zero.
  std::set<std::string> alive;
  for (const auto& e : raw) {
    alive.insert(e.src);
    alive.insert(e.dst);
  }
  bool changed = true;
  while (changed && !alive.empty()) {
    changed = false;
    std::map<std::string, int> indeg, outdeg;
    for (const auto& e : raw) {
      if (alive.count(e.src) && alive.count(e.dst)) {
        ++outdeg[e.src];
        ++indeg[e.dst];
      }
    }
    for (auto it = alive.begin(); it != alive.end();) {
      if (indeg[*it] == 0 || outdeg[*it] == 0) {
        it = alive.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  if (alive.empty()) {
    throw Error(ErrorKind::EmptyShift, "trimming removed every vertex");
  }

  Presentation p;
  std::map<std::string, int> vid;
  for (const auto& v : alive) {
    vid[v] = static_cast<int>(p.vertex_names.size());
    p.vertex_names.push_back(v);
  }
  std::set<std::string> letters;
  for (const auto& e : raw) {
    if (alive.count(e.src) && alive.count(e.dst)) letters.insert(e.label);
  }
  std::map<std::string, int> lid;
  for (const auto& l : letters) {
    lid[l] = static_cast<int>(p.alphabet.size());
    p.alphabet.push_back(l);
  }
  for (const auto& e : raw) {
    if (alive.count(e.src) && alive.count(e.dst)) {
      p.edges.push_back({vid[e.src], lid[e.label], vid[e.dst]});
    }
  }
  std::sort(p.edges.begin(), p.edges.end());
  return p;
}

}  // namespace

int Presentation::out(int v, int letter) const {
  for (const auto& e : edges) {
    if (e.src == v && e.letter == letter) return e.dst;
  }
  return -1;
}

int Presentation::letter_id(const std::string& token) const {
  auto it = std::lower_bound(alphabet.begin(), alphabet.end(), token);
  if (it != alphabet.end() && *it == token) {
    return static_cast<int>(it - alphabet.begin());
  }
  return -1;
}

bool Presentation::readable(const Word& w) const {
  for (int v = 0; v < num_vertices(); ++v) {
    int q = v;
    for (int a : w) {
      q = out(q, a);
      if (q < 0) break;
    }
    if (q >= 0) return true;
  }
  return false;
}

Presentation load_presentation(const std::string& text) {
  std::vector<RawEdge> raw;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string a, b, c, extra;
    if (!(ls >> a)) continue;  // blank
    if (!(ls >> b >> c) || (ls >> extra)) {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(lineno) +
                      ": expected `<src> <label> <dst>`");
    }
    raw.push_back({a, b, c});
  }
  if (raw.empty()) {
    throw Error(ErrorKind::ParseError, "no edges in input");
  }
  return build_from_raw(std::move(raw));
}

Presentation make_presentation(
    const std::vector<std::array<std::string, 3>>& edge_tokens) {
  std::vector<RawEdge> raw;
  raw.reserve(edge_tokens.size());
  for (const auto& e : edge_tokens) raw.push_back({e[0], e[1], e[2]});
  if (raw.empty()) throw Error(ErrorKind::ParseError, "no edges");
  return build_from_raw(std::move(raw));
}

Presentation canonicalize(const Presentation& p) {
  // Renumber vertices by BFS from the lexicographically least edge; explore
  // each vertex's out-edges ordered by (label, target name).
  const int n = p.num_vertices();
  std::vector<std::tuple<std::string, std::string, std::string, int, int>> keyed;
  for (const auto& e : p.edges) {
    keyed.emplace_back(p.vertex_names[e.src], p.alphabet[e.letter],
                       p.vertex_names[e.dst], e.src, e.dst);
  }
  std::sort(keyed.begin(), keyed.end());

  std::vector<int> order(n, -1);
  int next_id = 0;
  std::deque<int> queue;
  auto visit = [&](int v) {
    if (order[v] < 0) {
      order[v] = next_id++;
      queue.push_back(v);
    }
  };
  while (next_id < n) {
    for (const auto& k : keyed) {
      if (order[std::get<3>(k)] < 0) {
        visit(std::get<3>(k));
        break;
      }
    }
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      std::vector<std::pair<std::string, int>> outs;
      for (const auto& e : p.edges) {
        if (e.src == v) outs.emplace_back(p.alphabet[e.letter], e.dst);
      }
      std::sort(outs.begin(), outs.end(),
                [&](const auto& a, const auto& b) {
                  if (a.first != b.first) return a.first < b.first;
                  return p.vertex_names[a.second] < p.vertex_names[b.second];
                });
      for (const auto& [label, dst] : outs) visit(dst);
    }
  }

  Presentation q;
  q.alphabet = p.alphabet;
  q.vertex_names.resize(n);
  for (int v = 0; v < n; ++v) {
    q.vertex_names[order[v]] = std::to_string(order[v]);
  }
  for (const auto& e : p.edges) {
    q.edges.push_back({order[e.src], e.letter, order[e.dst]});
  }
  std::sort(q.edges.begin(), q.edges.end());
  return q;
}

std::string serialize_presentation(const Presentation& p) {
  Presentation c = canonicalize(p);
  std::ostringstream out;
  for (const auto& e : c.edges) {
    out << c.vertex_names[e.src] << ' ' << c.alphabet[e.letter] << ' '
        << c.vertex_names[e.dst] << '\n';
  }
  return out.str();
}

Presentation symbol_expansion(const Presentation& p, const std::string& alpha,
                              const std::string& fresh) {
  int a = p.letter_id(alpha);
  if (a < 0) {
    throw Error(ErrorKind::LetterNotInAlphabet, "no letter `" + alpha + "`");
  }
  if (p.letter_id(fresh) >= 0 || fresh == alpha) {
    throw Error(ErrorKind::LetterCollision,
                "expansion letter `" + fresh + "` already in the alphabet");
  }
  std::set<std::string> taken(p.vertex_names.begin(), p.vertex_names.end());
  std::vector<std::array<std::string, 3>> out;
  int mid = 0;
  auto fresh_vertex = [&] {
    std::string m;
    do {
      m = "m" + std::to_string(mid++);
    } while (taken.count(m));
    taken.insert(m);
    return m;
  };
  for (const auto& e : p.edges) {
    const std::string& s = p.vertex_names[e.src];
    const std::string& t = p.vertex_names[e.dst];
    if (e.letter == a) {
      // One fresh vertex per expanded edge keeps the graph right-resolving.
      std::string m = fresh_vertex();
      out.push_back({s, alpha, m});
      out.push_back({m, fresh, t});
    } else {
      out.push_back({s, p.alphabet[e.letter], t});
    }
  }
  return make_presentation(out);
}

Presentation higher_block(const Presentation& p, int n) {
  if (n <= 1) return p;
  // Vertices: (label path of length n-1, endpoint).  Extending along an
  // edge shifts the window by one letter.
  using Node = std::pair<Word, int>;
  std::map<Node, int> id;
  std::vector<Node> nodes;
  auto node_id = [&](const Node& nd) {
    auto [it, fresh] = id.emplace(nd, static_cast<int>(nodes.size()));
    if (fresh) nodes.push_back(nd);
    return it->second;
  };
  // Enumerate all length n-1 paths.
  std::vector<std::pair<Word, int>> frontier;
  for (int v = 0; v < p.num_vertices(); ++v) frontier.push_back({{}, v});
  for (int step = 0; step < n - 1; ++step) {
    std::vector<std::pair<Word, int>> next;
    for (const auto& [w, v] : frontier) {
      for (const auto& e : p.edges) {
        if (e.src != v) continue;
        Word w2 = w;
        w2.push_back(e.letter);
        next.push_back({std::move(w2), e.dst});
      }
    }
    frontier = std::move(next);
  }
  for (const auto& [w, v] : frontier) node_id({w, v});

  auto node_name = [&](const Node& nd) {
    std::string s = "[";
    for (std::size_t i = 0; i < nd.first.size(); ++i) {
      if (i) s += ',';
      s += p.alphabet[nd.first[i]];
    }
    s += "|" + p.vertex_names[nd.second] + "]";
    return s;
  };

  std::vector<std::array<std::string, 3>> out;
  for (const auto& nd : nodes) {
    for (const auto& e : p.edges) {
      if (e.src != nd.second) continue;
      Word block = nd.first;
      block.push_back(e.letter);
      std::vector<std::string> tokens;
      for (int a : block) tokens.push_back(p.alphabet[a]);
      Word w2(block.begin() + 1, block.end());
      Node to{w2, e.dst};
      node_id(to);
      out.push_back({node_name(nd), join_block(tokens), node_name(to)});
    }
  }
  if (out.empty()) throw Error(ErrorKind::EmptyShift, "no length-n paths");
  return make_presentation(out);
}

Presentation higher_power(const Presentation& p, int n) {
  if (n <= 1) return p;
  std::vector<std::array<std::string, 3>> out;
  // All length-n label paths; the walk from a fixed source under a fixed
  // word is unique (right-resolving), so no duplicate edges arise.
  struct Walk {
    int v;
    Word w;
  };
  for (int v = 0; v < p.num_vertices(); ++v) {
    std::vector<Walk> frontier{{v, {}}};
    for (int step = 0; step < n; ++step) {
      std::vector<Walk> next;
      for (const auto& walk : frontier) {
        for (const auto& e : p.edges) {
          if (e.src != walk.v) continue;
          Word w2 = walk.w;
          w2.push_back(e.letter);
          next.push_back({e.dst, std::move(w2)});
        }
      }
      frontier = std::move(next);
    }
    for (const auto& walk : frontier) {
      std::vector<std::string> tokens;
      for (int a : walk.w) tokens.push_back(p.alphabet[a]);
      out.push_back({p.vertex_names[v], join_block(tokens),
                     p.vertex_names[walk.v]});
    }
  }
  if (out.empty()) throw Error(ErrorKind::EmptyShift, "no length-n paths");
  return make_presentation(out);
}

Presentation induced_shift(const FinSemigroupZ& s) {
  if (s.letters.empty()) {
    throw Error(ErrorKind::GensDoNotGenerate,
                "semigroup carries no generating letter map");
  }
  // Prolongability: SsS != {0} for every non-zero s.
  for (int x = 0; x < s.size; ++x) {
    if (x == s.zero) continue;
    bool ok = false;
    for (int a = 0; a < s.size && !ok; ++a) {
      for (int b = 0; b < s.size && !ok; ++b) {
        if (s.mult(s.mult(a, x), b) != s.zero) ok = true;
      }
    }
    if (!ok) {
      throw Error(ErrorKind::NotProlongable,
                  "S s S = {0} for element " + std::to_string(x));
    }
  }
  // The letter images must generate every non-zero element.
  std::vector<bool> gen(s.size, false);
  std::vector<int> stack;
  for (int e : s.letter_elem) {
    if (!gen[e]) {
      gen[e] = true;
      stack.push_back(e);
    }
  }
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int e : s.letter_elem) {
      int y = s.mult(x, e);
      if (!gen[y]) {
        gen[y] = true;
        stack.push_back(y);
      }
    }
  }
  for (int x = 0; x < s.size; ++x) {
    if (x != s.zero && !gen[x]) {
      throw Error(ErrorKind::GensDoNotGenerate,
                  "letter images do not generate element " +
                      std::to_string(x));
    }
  }

  // Right-Cayley automaton on S^1: state -1 is the adjoined identity.
  auto state_name = [&](int x) {
    return x < 0 ? std::string("i") : "s" + std::to_string(x);
  };
  std::vector<std::array<std::string, 3>> out;
  for (int x = -1; x < s.size; ++x) {
    if (x == s.zero) continue;
    for (std::size_t a = 0; a < s.letters.size(); ++a) {
      int y = x < 0 ? s.letter_elem[a] : s.mult(x, s.letter_elem[a]);
      if (y == s.zero) continue;
      out.push_back({state_name(x), s.letters[a], state_name(y)});
    }
  }
  if (out.empty()) throw Error(ErrorKind::EmptyShift, "induced language empty");
  return make_presentation(out);  // trims the transient part
}

}  // namespace sofic
