#pragma once

#include <cstddef>
#include <vector>

#include "bifrac/ids.hpp"

namespace bifrac {

/// x ← apex → y with the backward leg in W.
struct FractionSpan {
  ObjId source, target;
  ObjId apex;
  OneCell back, fwd;

  friend bool operator==(const FractionSpan&, const FractionSpan&) = default;
};

/// Representative of a 2-cell between spans (w1, f1) ⇒ (w2, f2): legs
/// p1: v → u1, p2: v → u2, invertible alpha: w1∘p1 ⇒ w2∘p2 and
/// beta: f1∘p1 ⇒ f2∘p2.
struct FractionTwoCellRep {
  ObjId mediator;
  OneCell p1, p2;
  TwoCell alpha, beta;

  friend bool operator==(const FractionTwoCellRep&, const FractionTwoCellRep&) = default;
  friend auto operator<=>(const FractionTwoCellRep&, const FractionTwoCellRep&) = default;
};

/// Mediating data identifying rep r = (v, p1, p2, α, β) with r' = (v', p1', p2', α', β'):
/// q: t → v, q2: t → v', invertible gamma1: p1'∘q2 ⇒ p1∘q and
/// gamma2: p2∘q ⇒ p2'∘q2, subject to
///   (w2 γ2)·(α q)·(w1 γ1) = α' q2   and   (f2 γ2)·(β q)·(f1 γ1) = β' q2.
struct EquivalenceWitness {
  ObjId t;
  OneCell q, q2;
  TwoCell gamma1, gamma2;
};

/// Comparison data for the second half of BF4: eps: v∘u ⇒ v2∘u2 invertible
/// with (g ε)·(β u) = (β2 u2)·(f ε).
struct Bf4Comparison {
  OneCell v2;
  TwoCell beta2;
  OneCell u, u2;
  TwoCell eps;
};

/// alpha: w∘f ⇒ w∘g answered by v in W and beta: f∘v ⇒ g∘v with alpha∘v = w∘beta.
struct Bf4Witness {
  OneCell w, f, g;
  TwoCell alpha;
  OneCell v;
  TwoCell beta;
  std::size_t beta_count = 0;
  std::vector<Bf4Comparison> comparisons;
};

/// BF3 square for w: a' → a in W and f: c → a: top: p → a', v: p → c in W and
/// invertible cell: w∘top ⇒ f∘v.
struct Bf3Square {
  OneCell w, f;
  ObjId corner;
  OneCell top, v;
  TwoCell cell;
};

}  // namespace bifrac
