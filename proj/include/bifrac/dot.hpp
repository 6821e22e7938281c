#pragma once

#include <string>

#include "bifrac/certificate.hpp"
#include "bifrac/witness.hpp"

namespace bifrac {

// Diagrams render as Graphviz digraphs. A 1-cell is an edge split at a small
// point node; a 2-cell is a dashed edge between the point nodes of the 1-cells
// bounding it.

std::string render_span(const TwoCategory& k, const FractionSpan& s);
std::string render_rep(const TwoCategory& k, const SpanPair& sp, const FractionTwoCellRep& r);
std::string render_equivalence(const TwoCategory& k, const FractionEquivalence& e);

}  // namespace bifrac
