#include "bifrac/certificate.hpp"

#include "bifrac/error.hpp"

namespace bifrac {

namespace {

struct Reject {
  std::string reason;
};

}  // namespace

void Evaluator::record(std::string op, std::vector<std::string> args, std::string result) {
  if (log_) log_->push_back({std::move(op), std::move(args), std::move(result)});
}

OneCell Evaluator::compose(OneCell g, OneCell f) {
  const OneCell r = k_.compose(g, f);
  record("compose1", {k_.name(g), k_.name(f)}, k_.name(r));
  return r;
}

TwoCell Evaluator::vcomp(TwoCell b, TwoCell a) {
  const TwoCell r = k_.vcomp(b, a);
  record("vcomp", {k_.name(b), k_.name(a)}, k_.name(r));
  return r;
}

TwoCell Evaluator::whisker_left(OneCell h, TwoCell a) {
  const TwoCell r = k_.whisker_left(h, a);
  record("whisker_l", {k_.name(h), k_.name(a)}, k_.name(r));
  return r;
}

TwoCell Evaluator::whisker_right(TwoCell a, OneCell h) {
  const TwoCell r = k_.whisker_right(a, h);
  record("whisker_r", {k_.name(a), k_.name(h)}, k_.name(r));
  return r;
}

OneCell Evaluator::identity(ObjId x) {
  const OneCell r = k_.identity(x);
  record("id1", {k_.name(x)}, k_.name(r));
  return r;
}

TwoCell Evaluator::identity(OneCell f) {
  const TwoCell r = k_.identity(f);
  record("id2", {k_.name(f)}, k_.name(r));
  return r;
}

ObjId Evaluator::source(OneCell f) {
  const ObjId r = k_.source(f);
  record("src1", {k_.name(f)}, k_.name(r));
  return r;
}

ObjId Evaluator::target(OneCell f) {
  const ObjId r = k_.target(f);
  record("tgt1", {k_.name(f)}, k_.name(r));
  return r;
}

OneCell Evaluator::source(TwoCell a) {
  const OneCell r = k_.source(a);
  record("src2", {k_.name(a)}, k_.name(r));
  return r;
}

OneCell Evaluator::target(TwoCell a) {
  const OneCell r = k_.target(a);
  record("tgt2", {k_.name(a)}, k_.name(r));
  return r;
}

std::optional<TwoCell> Evaluator::inverse(TwoCell a) {
  auto r = bifrac::inverse(k_, a);
  record("inverse", {k_.name(a)}, r ? k_.name(*r) : std::string("none"));
  return r;
}

bool Evaluator::member(const std::string& cls, OneCell f) {
  const CellClass* c = cls == "J" ? classes_.j : cls == "W" ? classes_.w : nullptr;
  if (!c) throw Error(ErrorKind::Input, "certificate refers to unknown class '" + cls + "'");
  const bool r = c->contains(f);
  record("member", {cls, k_.name(f)}, r ? "true" : "false");
  return r;
}

const char* kind_of(const Claim& c) {
  struct {
    const char* operator()(const FillerSquare&) const { return "filler_square"; }
    const char* operator()(const LocalSplitting&) const { return "local_splitting"; }
    const char* operator()(const Bf1Equivalence&) const { return "bf1_equivalence"; }
    const char* operator()(const Bf2Composite&) const { return "bf2_composite"; }
    const char* operator()(const Bf3Square&) const { return "bf3_square"; }
    const char* operator()(const Bf4Witness&) const { return "bf4_witness"; }
    const char* operator()(const FractionEquivalence&) const { return "fraction_equivalence"; }
  } v;
  return std::visit(v, c);
}

namespace {

std::string check_filler(Evaluator& ev, const FillerSquare& s) {
  if (!ev.member("J", s.q)) return "q ∈ J";
  if (!ev.member("J", s.left)) return "left ∈ J";
  if (ev.target(s.q) != ev.target(s.f)) return "q, f share codomain";
  if (ev.source(s.top) != s.corner || ev.target(s.top) != ev.source(s.q)) return "top: corner → dom q";
  if (ev.source(s.left) != s.corner || ev.target(s.left) != ev.source(s.f)) return "left: corner → dom f";
  if (ev.source(s.cell) != ev.compose(s.q, s.top)) return "cell source = q∘top";
  if (ev.target(s.cell) != ev.compose(s.f, s.left)) return "cell target = f∘left";
  if (!ev.inverse(s.cell)) return "cell invertible";
  return {};
}

std::string check_splitting(Evaluator& ev, const LocalSplitting& s) {
  if (!ev.member("J", s.cover)) return "cover ∈ J";
  if (ev.target(s.cover) != ev.target(s.f)) return "cover lands in codomain";
  if (ev.source(s.section) != ev.source(s.cover) || ev.target(s.section) != ev.source(s.f)) return "section boundary";
  if (ev.source(s.cell) != ev.compose(s.f, s.section)) return "cell source = f∘section";
  if (ev.target(s.cell) != s.cover) return "cell target = cover";
  if (!ev.inverse(s.cell)) return "cell invertible";
  return {};
}

std::string check_bf1(Evaluator& ev, const Bf1Equivalence& e) {
  const auto& p = e.p;
  const ObjId x = ev.source(p.f), y = ev.target(p.f);
  if (ev.source(p.g) != y || ev.target(p.g) != x) return "g: y → x";
  if (ev.source(p.unit) != ev.identity(x) || ev.target(p.unit) != ev.compose(p.g, p.f)) return "unit: id ⇒ g∘f";
  if (ev.source(p.counit) != ev.compose(p.f, p.g) || ev.target(p.counit) != ev.identity(y)) return "counit: f∘g ⇒ id";
  if (!ev.inverse(p.unit)) return "unit invertible";
  if (!ev.inverse(p.counit)) return "counit invertible";
  if (!ev.member("W", p.f)) return "equivalence ∈ W";
  return {};
}

std::string check_bf2(Evaluator& ev, const Bf2Composite& c) {
  if (!ev.member("W", c.g)) return "g ∈ W";
  if (!ev.member("W", c.f)) return "f ∈ W";
  const OneCell gf = ev.compose(c.g, c.f);
  if (!ev.member("W", gf)) return "g∘f ∈ W";
  if (c.splitting.f != gf) return "splitting is of g∘f";
  return check_splitting(ev, c.splitting);
}

std::string check_bf3(Evaluator& ev, const Bf3Square& s) {
  if (!ev.member("W", s.w)) return "w ∈ W";
  if (!ev.member("W", s.v)) return "v ∈ W";
  if (ev.target(s.w) != ev.target(s.f)) return "w, f share codomain";
  if (ev.source(s.top) != s.corner || ev.target(s.top) != ev.source(s.w)) return "top: corner → dom w";
  if (ev.source(s.v) != s.corner || ev.target(s.v) != ev.source(s.f)) return "v: corner → dom f";
  if (ev.source(s.cell) != ev.compose(s.w, s.top)) return "cell source = w∘top";
  if (ev.target(s.cell) != ev.compose(s.f, s.v)) return "cell target = f∘v";
  if (!ev.inverse(s.cell)) return "cell invertible";
  return {};
}

std::string check_bf4(Evaluator& ev, const Bf4Witness& b) {
  if (!ev.member("W", b.w)) return "w ∈ W";
  if (!ev.member("W", b.v)) return "v ∈ W";
  if (ev.source(b.alpha) != ev.compose(b.w, b.f) || ev.target(b.alpha) != ev.compose(b.w, b.g)) {
    return "alpha: w∘f ⇒ w∘g";
  }
  if (ev.source(b.beta) != ev.compose(b.f, b.v) || ev.target(b.beta) != ev.compose(b.g, b.v)) {
    return "beta: f∘v ⇒ g∘v";
  }
  const TwoCell av = ev.whisker_right(b.alpha, b.v);
  if (av != ev.whisker_left(b.w, b.beta)) return "alpha∘v = w∘beta";
  if (ev.inverse(b.alpha) && !ev.inverse(b.beta)) return "alpha invertible ⇒ beta invertible";
  if (b.beta_count == 1) {
    const TwoCategory& k = ev.cat();
    std::size_t n = 0;
    for (TwoCell c : k.cells(k.compose(b.f, b.v), k.compose(b.g, b.v))) {
      if (k.whisker_left(b.w, c) == av) ++n;
    }
    if (n != 1) return "beta unique";
  }
  for (const auto& c : b.comparisons) {
    if (ev.source(c.beta2) != ev.compose(b.f, c.v2) || ev.target(c.beta2) != ev.compose(b.g, c.v2)) {
      return "beta2: f∘v2 ⇒ g∘v2";
    }
    if (ev.whisker_right(b.alpha, c.v2) != ev.whisker_left(b.w, c.beta2)) return "alpha∘v2 = w∘beta2";
    const OneCell vu = ev.compose(b.v, c.u), v2u2 = ev.compose(c.v2, c.u2);
    if (!ev.member("W", vu) || !ev.member("W", v2u2)) return "v∘u, v2∘u2 ∈ W";
    if (ev.source(c.eps) != vu || ev.target(c.eps) != v2u2) return "eps: v∘u ⇒ v2∘u2";
    if (!ev.inverse(c.eps)) return "eps invertible";
    const TwoCell top = ev.vcomp(ev.whisker_left(b.g, c.eps), ev.whisker_right(b.beta, c.u));
    const TwoCell bottom = ev.vcomp(ev.whisker_right(c.beta2, c.u2), ev.whisker_left(b.f, c.eps));
    if (top != bottom) return "comparison square (g∘eps)·(beta∘u) = (beta2∘u2)·(f∘eps)";
  }
  return {};
}

std::string check_span(Evaluator& ev, const FractionSpan& s, const char* which) {
  if (!ev.member("W", s.back)) return std::string(which) + " backward leg ∈ W";
  if (ev.source(s.back) != s.apex || ev.target(s.back) != s.source) return std::string(which) + " backward leg boundary";
  if (ev.source(s.fwd) != s.apex || ev.target(s.fwd) != s.target) return std::string(which) + " forward leg boundary";
  return {};
}

std::string check_rep(Evaluator& ev, const SpanPair& sp, const FractionTwoCellRep& r, const char* which) {
  const std::string w(which);
  if (ev.source(r.p1) != r.mediator || ev.target(r.p1) != sp.s1.apex) return w + " p1: v → u1";
  if (ev.source(r.p2) != r.mediator || ev.target(r.p2) != sp.s2.apex) return w + " p2: v → u2";
  const OneCell w1p1 = ev.compose(sp.s1.back, r.p1), w2p2 = ev.compose(sp.s2.back, r.p2);
  if (!ev.member("W", w1p1) || !ev.member("W", w2p2)) return w + " w_i∘p_i ∈ W";
  if (ev.source(r.alpha) != w1p1 || ev.target(r.alpha) != w2p2) return w + " alpha: w1∘p1 ⇒ w2∘p2";
  if (!ev.inverse(r.alpha)) return w + " alpha invertible";
  if (ev.source(r.beta) != ev.compose(sp.s1.fwd, r.p1) || ev.target(r.beta) != ev.compose(sp.s2.fwd, r.p2)) {
    return w + " beta: f1∘p1 ⇒ f2∘p2";
  }
  return {};
}

std::string check_fraction(Evaluator& ev, const FractionEquivalence& e) {
  const auto& sp = e.spans;
  if (sp.s1.source != sp.s2.source || sp.s1.target != sp.s2.target) return "spans parallel";
  for (auto* why : {&sp.s1, &sp.s2}) {
    if (auto r = check_span(ev, *why, why == &sp.s1 ? "span 1" : "span 2"); !r.empty()) return r;
  }
  if (auto r = check_rep(ev, sp, e.r1, "rep 1"); !r.empty()) return r;
  if (auto r = check_rep(ev, sp, e.r2, "rep 2"); !r.empty()) return r;
  const auto& x = e.witness;
  if (ev.source(x.q) != x.t || ev.target(x.q) != e.r1.mediator) return "q: t → v";
  if (ev.source(x.q2) != x.t || ev.target(x.q2) != e.r2.mediator) return "q': t → v'";
  const OneCell p1q = ev.compose(e.r1.p1, x.q), p2q = ev.compose(e.r1.p2, x.q);
  const OneCell p1q2 = ev.compose(e.r2.p1, x.q2), p2q2 = ev.compose(e.r2.p2, x.q2);
  if (ev.source(x.gamma1) != p1q2 || ev.target(x.gamma1) != p1q) return "gamma1: p1'∘q' ⇒ p1∘q";
  if (ev.source(x.gamma2) != p2q || ev.target(x.gamma2) != p2q2) return "gamma2: p2∘q ⇒ p2'∘q'";
  if (!ev.inverse(x.gamma1) || !ev.inverse(x.gamma2)) return "gamma1, gamma2 invertible";
  if (!ev.member("W", ev.compose(sp.s1.back, p1q)) || !ev.member("W", ev.compose(sp.s1.back, p1q2))) {
    return "w1∘p1∘q, w1∘p1'∘q' ∈ W";
  }
  const TwoCell lhs1 = ev.vcomp(ev.whisker_left(sp.s2.back, x.gamma2),
                                ev.vcomp(ev.whisker_right(e.r1.alpha, x.q), ev.whisker_left(sp.s1.back, x.gamma1)));
  if (lhs1 != ev.whisker_right(e.r2.alpha, x.q2)) return "alpha pasting equation";
  const TwoCell lhs2 = ev.vcomp(ev.whisker_left(sp.s2.fwd, x.gamma2),
                                ev.vcomp(ev.whisker_right(e.r1.beta, x.q), ev.whisker_left(sp.s1.fwd, x.gamma1)));
  if (lhs2 != ev.whisker_right(e.r2.beta, x.q2)) return "beta pasting equation";
  return {};
}

}  // namespace

std::string check(Evaluator& ev, const Claim& c) {
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FillerSquare>) return check_filler(ev, v);
        if constexpr (std::is_same_v<T, LocalSplitting>) return check_splitting(ev, v);
        if constexpr (std::is_same_v<T, Bf1Equivalence>) return check_bf1(ev, v);
        if constexpr (std::is_same_v<T, Bf2Composite>) return check_bf2(ev, v);
        if constexpr (std::is_same_v<T, Bf3Square>) return check_bf3(ev, v);
        if constexpr (std::is_same_v<T, Bf4Witness>) return check_bf4(ev, v);
        if constexpr (std::is_same_v<T, FractionEquivalence>) return check_fraction(ev, v);
      },
      c);
}

Certificate certify(const TwoCategory& k, Classes classes, Claim claim) {
  Certificate cert{std::move(claim), {}};
  Evaluator ev(k, classes, &cert.pastings);
  if (auto why = check(ev, cert.claim); !why.empty()) {
    throw Error(ErrorKind::CrossCheckFailure, std::string(kind_of(cert.claim)) + " does not hold: " + why);
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

class Names {
 public:
  explicit Names(const TwoCategory& k) : k_(k) {}

  Json operator()(ObjId x) const { return k_.name(x); }
  Json operator()(OneCell f) const { return k_.name(f); }
  Json operator()(TwoCell a) const { return k_.name(a); }

  ObjId obj(const Json& j, const char* key) const {
    auto r = k_.find_object(str(j, key));
    if (!r) throw Reject{std::string("unknown object for '") + key + "'"};
    return *r;
  }
  OneCell one(const Json& j, const char* key) const {
    auto r = k_.find_one_cell(str(j, key));
    if (!r) throw Reject{std::string("unknown 1-cell for '") + key + "'"};
    return *r;
  }
  TwoCell two(const Json& j, const char* key) const {
    auto r = k_.find_two_cell(str(j, key));
    if (!r) throw Reject{std::string("unknown 2-cell for '") + key + "'"};
    return *r;
  }

 private:
  static std::string str(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_string()) throw Reject{std::string("missing '") + key + "'"};
    return j.at(key).get<std::string>();
  }
  const TwoCategory& k_;
};

Json span_json(const Names& n, const FractionSpan& s) {
  return {{"source", n(s.source)}, {"target", n(s.target)}, {"apex", n(s.apex)}, {"back", n(s.back)}, {"fwd", n(s.fwd)}};
}

FractionSpan span_from(const Names& n, const Json& j) {
  return {n.obj(j, "source"), n.obj(j, "target"), n.obj(j, "apex"), n.one(j, "back"), n.one(j, "fwd")};
}

Json rep_json(const Names& n, const FractionTwoCellRep& r) {
  return {{"mediator", n(r.mediator)}, {"p1", n(r.p1)}, {"p2", n(r.p2)}, {"alpha", n(r.alpha)}, {"beta", n(r.beta)}};
}

FractionTwoCellRep rep_from(const Names& n, const Json& j) {
  return {n.obj(j, "mediator"), n.one(j, "p1"), n.one(j, "p2"), n.two(j, "alpha"), n.two(j, "beta")};
}

Json splitting_json(const Names& n, const LocalSplitting& s) {
  return {{"f", n(s.f)}, {"cover", n(s.cover)}, {"section", n(s.section)}, {"cell", n(s.cell)}};
}

LocalSplitting splitting_from(const Names& n, const Json& j) {
  return {n.one(j, "f"), n.one(j, "cover"), n.one(j, "section"), n.two(j, "cell")};
}

Json claim_json(const Names& n, const Claim& c) {
  return std::visit(
      [&](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FillerSquare>) {
          return {{"q", n(v.q)},     {"f", n(v.f)},       {"corner", n(v.corner)},
                  {"top", n(v.top)}, {"left", n(v.left)}, {"cell", n(v.cell)}};
        } else if constexpr (std::is_same_v<T, LocalSplitting>) {
          return splitting_json(n, v);
        } else if constexpr (std::is_same_v<T, Bf1Equivalence>) {
          return {{"f", n(v.p.f)}, {"g", n(v.p.g)}, {"unit", n(v.p.unit)}, {"counit", n(v.p.counit)}};
        } else if constexpr (std::is_same_v<T, Bf2Composite>) {
          return {{"g", n(v.g)}, {"f", n(v.f)}, {"splitting", splitting_json(n, v.splitting)}};
        } else if constexpr (std::is_same_v<T, Bf3Square>) {
          return {{"w", n(v.w)},     {"f", n(v.f)}, {"corner", n(v.corner)},
                  {"top", n(v.top)}, {"v", n(v.v)}, {"cell", n(v.cell)}};
        } else if constexpr (std::is_same_v<T, Bf4Witness>) {
          Json comps = Json::array();
          for (const auto& c : v.comparisons) {
            comps.push_back(
                {{"v2", n(c.v2)}, {"beta2", n(c.beta2)}, {"u", n(c.u)}, {"u2", n(c.u2)}, {"eps", n(c.eps)}});
          }
          return {{"w", n(v.w)}, {"f", n(v.f)},       {"g", n(v.g)},
                  {"alpha", n(v.alpha)}, {"v", n(v.v)}, {"beta", n(v.beta)},
                  {"beta_count", v.beta_count}, {"comparisons", std::move(comps)}};
        } else {
          const FractionEquivalence& e = v;
          return {{"span1", span_json(n, e.spans.s1)},
                  {"span2", span_json(n, e.spans.s2)},
                  {"rep1", rep_json(n, e.r1)},
                  {"rep2", rep_json(n, e.r2)},
                  {"witness",
                   {{"t", n(e.witness.t)},
                    {"q", n(e.witness.q)},
                    {"q2", n(e.witness.q2)},
                    {"gamma1", n(e.witness.gamma1)},
                    {"gamma2", n(e.witness.gamma2)}}}};
        }
      },
      c);
}

Claim claim_from(const Names& n, const std::string& kind, const Json& j) {
  if (kind == "filler_square") {
    return FillerSquare{n.one(j, "q"), n.one(j, "f"), n.obj(j, "corner"), n.one(j, "top"), n.one(j, "left"), n.two(j, "cell")};
  }
  if (kind == "local_splitting") return splitting_from(n, j);
  if (kind == "bf1_equivalence") {
    return Bf1Equivalence{{n.one(j, "f"), n.one(j, "g"), n.two(j, "unit"), n.two(j, "counit")}};
  }
  if (kind == "bf2_composite") {
    if (!j.contains("splitting")) throw Reject{"missing 'splitting'"};
    return Bf2Composite{n.one(j, "g"), n.one(j, "f"), splitting_from(n, j.at("splitting"))};
  }
  if (kind == "bf3_square") {
    return Bf3Square{n.one(j, "w"), n.one(j, "f"), n.obj(j, "corner"), n.one(j, "top"), n.one(j, "v"), n.two(j, "cell")};
  }
  if (kind == "bf4_witness") {
    Bf4Witness b{n.one(j, "w"), n.one(j, "f"), n.one(j, "g"), n.two(j, "alpha"), n.one(j, "v"), n.two(j, "beta"), 0, {}};
    if (!j.contains("beta_count") || !j.at("beta_count").is_number_unsigned()) throw Reject{"missing 'beta_count'"};
    b.beta_count = j.at("beta_count").get<std::size_t>();
    for (const auto& c : j.value("comparisons", Json::array())) {
      b.comparisons.push_back({n.one(c, "v2"), n.two(c, "beta2"), n.one(c, "u"), n.one(c, "u2"), n.two(c, "eps")});
    }
    return b;
  }
  if (kind == "fraction_equivalence") {
    for (const char* key : {"span1", "span2", "rep1", "rep2", "witness"}) {
      if (!j.contains(key)) throw Reject{std::string("missing '") + key + "'"};
    }
    const Json& w = j.at("witness");
    return FractionEquivalence{{span_from(n, j.at("span1")), span_from(n, j.at("span2"))},
                               rep_from(n, j.at("rep1")),
                               rep_from(n, j.at("rep2")),
                               {n.obj(w, "t"), n.one(w, "q"), n.one(w, "q2"), n.two(w, "gamma1"), n.two(w, "gamma2")}};
  }
  throw Reject{"unknown certificate kind '" + kind + "'"};
}

// Recomputes one recorded evaluation; returns the recomputed result name.
std::string replay(Evaluator& ev, const TwoCategory& k, const Evaluation& e) {
  auto need = [&](std::size_t n) {
    if (e.args.size() != n) throw Reject{"pasting entry '" + e.op + "' has the wrong arity"};
  };
  auto obj = [&](const std::string& s) {
    auto r = k.find_object(s);
    if (!r) throw Reject{"pasting entry references unknown object '" + s + "'"};
    return *r;
  };
  auto one = [&](const std::string& s) {
    auto r = k.find_one_cell(s);
    if (!r) throw Reject{"pasting entry references unknown 1-cell '" + s + "'"};
    return *r;
  };
  auto two = [&](const std::string& s) {
    auto r = k.find_two_cell(s);
    if (!r) throw Reject{"pasting entry references unknown 2-cell '" + s + "'"};
    return *r;
  };
  auto composable1 = [&](OneCell g, OneCell f) {
    if (k.target(f) != k.source(g)) throw Reject{"pasting entry composes non-composable 1-cells"};
  };
  const auto& a = e.args;
  if (e.op == "compose1") {
    need(2);
    composable1(one(a[0]), one(a[1]));
    return k.name(ev.compose(one(a[0]), one(a[1])));
  }
  if (e.op == "vcomp") {
    need(2);
    if (k.target(two(a[1])) != k.source(two(a[0]))) throw Reject{"pasting entry composes non-composable 2-cells"};
    return k.name(ev.vcomp(two(a[0]), two(a[1])));
  }
  if (e.op == "whisker_l") {
    need(2);
    composable1(one(a[0]), k.source(two(a[1])));
    return k.name(ev.whisker_left(one(a[0]), two(a[1])));
  }
  if (e.op == "whisker_r") {
    need(2);
    composable1(k.source(two(a[0])), one(a[1]));
    return k.name(ev.whisker_right(two(a[0]), one(a[1])));
  }
  if (e.op == "id1") {
    need(1);
    return k.name(ev.identity(obj(a[0])));
  }
  if (e.op == "id2") {
    need(1);
    return k.name(ev.identity(one(a[0])));
  }
  if (e.op == "src1") {
    need(1);
    return k.name(ev.source(one(a[0])));
  }
  if (e.op == "tgt1") {
    need(1);
    return k.name(ev.target(one(a[0])));
  }
  if (e.op == "src2") {
    need(1);
    return k.name(ev.source(two(a[0])));
  }
  if (e.op == "tgt2") {
    need(1);
    return k.name(ev.target(two(a[0])));
  }
  if (e.op == "inverse") {
    need(1);
    auto r = ev.inverse(two(a[0]));
    return r ? k.name(*r) : "none";
  }
  if (e.op == "member") {
    need(2);
    if (a[0] != "J" && a[0] != "W") throw Reject{"pasting entry refers to unknown class '" + a[0] + "'"};
    return ev.member(a[0], one(a[1])) ? "true" : "false";
  }
  throw Reject{"unknown pasting operation '" + e.op + "'"};
}

}  // namespace

Json to_json(const TwoCategory& k, const CertificateBundle& b) {
  Names n(k);
  Json doc;
  doc["schema"] = kCertSchema;
  doc["instance_hash"] = b.instance_hash;
  doc["coverage"] = b.coverage;
  Json certs = Json::array();
  for (const auto& c : b.certificates) {
    Json pastings = Json::array();
    for (const auto& e : c.pastings) {
      Json row = Json::array({e.op});
      for (const auto& a : e.args) row.push_back(a);
      row.push_back(e.result);
      pastings.push_back(std::move(row));
    }
    certs.push_back({{"kind", kind_of(c.claim)}, {"claim", claim_json(n, c.claim)}, {"pastings", std::move(pastings)}});
  }
  doc["certificates"] = std::move(certs);
  return doc;
}

Json parse_bundle(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Input, std::string("certificate is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.value("schema", "") != std::string(kCertSchema) || !doc.contains("certificates") ||
      !doc.at("certificates").is_array()) {
    throw Error(ErrorKind::Input, std::string("expected schema ") + kCertSchema);
  }
  return doc;
}

CertVerdict validate_bundle(const TwoCategory& k, Classes classes, const std::string& instance_hash, const Json& bundle) {
  CertVerdict v;
  if (bundle.value("instance_hash", "") != instance_hash) {
    v.ok = false;
    v.rejections.push_back("instance hash mismatch: certificate was issued for a different instance");
    return v;
  }
  Names n(k);
  std::size_t i = 0;
  for (const auto& c : bundle.at("certificates")) {
    const std::string kind = c.value("kind", "?");
    const std::string label = "certificate #" + std::to_string(i++) + " (" + kind + "): ";
    ++v.checked;
    try {
      if (!c.contains("claim") || !c.contains("pastings") || !c.at("pastings").is_array()) throw Reject{"malformed"};
      const Claim claim = claim_from(n, kind, c.at("claim"));
      Evaluator replayer(k, classes);
      std::size_t row_index = 0;
      for (const auto& row : c.at("pastings")) {
        if (!row.is_array() || row.size() < 2) throw Reject{"malformed pasting entry"};
        Evaluation e{row.front().get<std::string>(), {}, row.back().get<std::string>()};
        for (std::size_t j = 1; j + 1 < row.size(); ++j) e.args.push_back(row[j].get<std::string>());
        const std::string got = replay(replayer, k, e);
        if (got != e.result) {
          std::string desc = e.op + "(";
          for (std::size_t j = 0; j < e.args.size(); ++j) desc += (j ? "," : "") + e.args[j];
          throw Reject{"pasting entry #" + std::to_string(row_index) + " " + desc + ") = " + e.result +
                       " fails; recomputed " + got};
        }
        ++row_index;
      }
      Evaluator fresh(k, classes);
      if (auto why = check(fresh, claim); !why.empty()) throw Reject{"violated: " + why};
    } catch (const Reject& r) {
      v.ok = false;
      v.rejections.push_back(label + r.reason);
    } catch (const Json::exception& e) {
      v.ok = false;
      v.rejections.push_back(label + "malformed: " + e.what());
    }
  }
  return v;
}

}  // namespace bifrac
