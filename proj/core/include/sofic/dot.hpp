#ifndef SOFIC_DOT_HPP_
#define SOFIC_DOT_HPP_

#include <string>

#include "sofic/karoubi.hpp"
#include "sofic/poset.hpp"
#include "sofic/presentation.hpp"

namespace sofic {

/// Vertices as circles, edge labels as text.
std::string dot_presentation(const Presentation& p, const std::string& name);

/// Objects as nodes, one edge per non-zero morphism class annotated with
/// its multiplicity.
std::string dot_category(const ZeroCategory& c, const std::string& name);

/// Hasse diagram.
std::string dot_poset(const Poset& p, const std::string& name);

/// Hasse diagram with "(eps, group, rank)" node annotations.
std::string dot_labeled_preorder(const LabeledPreorder& p,
                                 const std::string& name);

}  // namespace sofic

#endif  // SOFIC_DOT_HPP_
