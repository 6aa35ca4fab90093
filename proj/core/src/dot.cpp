#include "sofic/dot.hpp"

#include <map>
#include <sstream>

namespace sofic {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string dot_presentation(const Presentation& p, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << escape(name) << "\" {\n";
  out << "  rankdir=LR;\n  node [shape=circle];\n";
  for (int v = 0; v < p.num_vertices(); ++v) {
    out << "  v" << v << " [label=\"" << escape(p.vertex_names[v]) << "\"];\n";
  }
  for (const auto& e : p.edges) {
    out << "  v" << e.src << " -> v" << e.dst << " [label=\""
        << escape(p.alphabet[e.letter]) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string dot_category(const ZeroCategory& c, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << escape(name) << "\" {\n";
  out << "  node [shape=box];\n";
  for (int o = 0; o < c.num_objects(); ++o) {
    out << "  o" << o << " [label=\""
        << escape(c.base->witness_string(c.object_elem[o]))
        << (o == c.trivial_object ? " (zero)" : "") << "\"];\n";
  }
  // One edge per hom-set with its non-zero morphism count.
  for (int cod = 0; cod < c.num_objects(); ++cod) {
    for (int dom = 0; dom < c.num_objects(); ++dom) {
      int nonzero = 0;
      for (int m : c.hom[cod][dom]) {
        if (!c.is_zero_morph(m)) ++nonzero;
      }
      if (nonzero > 0) {
        out << "  o" << dom << " -> o" << cod << " [label=\"" << nonzero
            << "\"];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

namespace {

/// Hasse edges: covers of the quotient order.
std::vector<std::pair<int, int>> hasse_edges(
    int n, const std::vector<std::vector<bool>>& leq) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || !leq[i][j] || leq[j][i]) continue;
      bool covered = true;
      for (int k = 0; k < n && covered; ++k) {
        if (k == i || k == j) continue;
        if (leq[i][k] && !leq[k][i] && leq[k][j] && !leq[j][k]) {
          covered = false;
        }
      }
      if (covered) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace

std::string dot_poset(const Poset& p, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << escape(name) << "\" {\n  node [shape=ellipse];\n";
  for (int i = 0; i < p.size; ++i) {
    std::string label =
        i < static_cast<int>(p.names.size()) ? p.names[i] : std::to_string(i);
    out << "  n" << i << " [label=\"" << escape(label) << "\"];\n";
  }
  for (auto [i, j] : hasse_edges(p.size, p.leq)) {
    out << "  n" << i << " -> n" << j << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string dot_labeled_preorder(const LabeledPreorder& p,
                                 const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << escape(name) << "\" {\n  node [shape=ellipse];\n";
  for (int i = 0; i < p.size; ++i) {
    std::string head =
        i < static_cast<int>(p.names.size()) ? p.names[i] + "|" : "";
    out << "  n" << i << " [label=\"" << escape(head) << "("
        << p.labels[i].regular << ","
        << escape(p.labels[i].group.fingerprint_string()) << ","
        << p.labels[i].rank << ")\"];\n";
  }
  for (auto [i, j] : hasse_edges(p.size, p.leq)) {
    out << "  n" << i << " -> n" << j << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace sofic
