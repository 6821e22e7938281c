#include "bifrac/dot.hpp"

#include <sstream>
#include <vector>

namespace bifrac {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

class Diagram {
 public:
  Diagram(const TwoCategory& k, std::string name) : k_(k), name_(std::move(name)) {}

  std::string node(const std::string& id, ObjId x) {
    nodes_.push_back("  " + id + " [label=" + quote(k_.name(x)) + "];");
    return id;
  }

  /// Returns the id of the point node splitting the edge.
  std::string arrow(const std::string& from, const std::string& to, OneCell f) {
    const std::string mid = "m" + std::to_string(mids_++);
    nodes_.push_back("  " + mid + " [shape=point, width=0.04];");
    edges_.push_back("  " + from + " -> " + mid + " [arrowhead=none];");
    edges_.push_back("  " + mid + " -> " + to + " [label=" + quote(k_.name(f)) + "];");
    return mid;
  }

  void cell(const std::string& from, const std::string& to, TwoCell a) {
    edges_.push_back("  " + from + " -> " + to + " [style=dashed, constraint=false, arrowhead=vee, label=" +
                     quote(k_.name(a)) + "];");
  }

  std::string str() const {
    std::ostringstream out;
    out << "digraph " << name_ << " {\n  rankdir=RL;\n  node [shape=plaintext];\n";
    for (const auto& n : nodes_) out << n << "\n";
    for (const auto& e : edges_) out << e << "\n";
    out << "}\n";
    return out.str();
  }

 private:
  const TwoCategory& k_;
  std::string name_;
  std::vector<std::string> nodes_, edges_;
  int mids_ = 0;
};

struct RepLegs {
  std::string w1, w2, f1, f2, p1, p2;
};

RepLegs draw_rep(Diagram& d, const SpanPair& sp, const FractionTwoCellRep& r, const std::string& v) {
  RepLegs legs;
  legs.w1 = d.arrow("u1", "x", sp.s1.back);
  legs.f1 = d.arrow("u1", "y", sp.s1.fwd);
  legs.w2 = d.arrow("u2", "x", sp.s2.back);
  legs.f2 = d.arrow("u2", "y", sp.s2.fwd);
  legs.p1 = d.arrow(v, "u1", r.p1);
  legs.p2 = d.arrow(v, "u2", r.p2);
  return legs;
}

}  // namespace

std::string render_span(const TwoCategory& k, const FractionSpan& s) {
  Diagram d(k, "span");
  d.node("x", s.source);
  d.node("u", s.apex);
  d.node("y", s.target);
  d.arrow("u", "x", s.back);
  d.arrow("u", "y", s.fwd);
  return d.str();
}

std::string render_rep(const TwoCategory& k, const SpanPair& sp, const FractionTwoCellRep& r) {
  Diagram d(k, "rep");
  d.node("x", sp.s1.source);
  d.node("u1", sp.s1.apex);
  d.node("u2", sp.s2.apex);
  d.node("y", sp.s1.target);
  d.node("v", r.mediator);
  const RepLegs legs = draw_rep(d, sp, r, "v");
  d.cell(legs.w1, legs.w2, r.alpha);
  d.cell(legs.f1, legs.f2, r.beta);
  return d.str();
}

std::string render_equivalence(const TwoCategory& k, const FractionEquivalence& e) {
  Diagram d(k, "equivalence");
  const auto& sp = e.spans;
  d.node("x", sp.s1.source);
  d.node("u1", sp.s1.apex);
  d.node("u2", sp.s2.apex);
  d.node("y", sp.s1.target);
  d.node("v", e.r1.mediator);
  d.node("v2", e.r2.mediator);
  d.node("t", e.witness.t);
  const RepLegs a = draw_rep(d, sp, e.r1, "v");
  const std::string p1b = d.arrow("v2", "u1", e.r2.p1);
  const std::string p2b = d.arrow("v2", "u2", e.r2.p2);
  d.arrow("t", "v", e.witness.q);
  d.arrow("t", "v2", e.witness.q2);
  d.cell(a.w1, a.w2, e.r1.alpha);
  d.cell(a.f1, a.f2, e.r1.beta);
  d.cell(p1b, p2b, e.r2.alpha);
  d.cell(p1b, p2b, e.r2.beta);
  d.cell(p1b, a.p1, e.witness.gamma1);
  d.cell(a.p2, p2b, e.witness.gamma2);
  return d.str();
}

}  // namespace bifrac
