#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "bifrac/bf.hpp"
#include "bifrac/certificate.hpp"
#include "bifrac/search.hpp"
#include "bifrac/site.hpp"
#include "bifrac/witness.hpp"

namespace bifrac {

enum class Equivalence { Equivalent, NotEquivalent, NotEquivalentWithinBound };
const char* to_string(Equivalence e);

struct EquivalenceResult {
  Equivalence verdict = Equivalence::NotEquivalent;
  std::optional<EquivalenceWitness> witness;

  explicit operator bool() const { return verdict == Equivalence::Equivalent; }
};

/// A chosen BF3 filler for the cospan u1 → x ← u2 of two parallel spans:
/// p1: v → u1, p2: v → u2, invertible alpha: w1∘p1 ⇒ w2∘p2.
struct CospanFiller {
  ObjId v;
  OneCell p1, p2;
  TwoCell alpha;
};

/// Normal-form data over a chosen filler: q: v' → v in W and
/// beta: f1∘p1∘q ⇒ f2∘p2∘q.
struct NormalFormData {
  OneCell q;
  TwoCell beta;
};

/// The proof's triangle: r: v0 → v in V, s: v0 → v' and invertible phi: q∘s ⇒ r.
struct CofinalTriangle {
  OneCell r, s;
  TwoCell phi;
};

/// A span isomorphic to the input together with an invertible rep from the
/// new span to the old one.
struct NormalizedSpan {
  FractionSpan span;
  FractionTwoCellRep iso;  // span ⇒ input
};

struct Retraction {
  FractionTwoCellRep rep;  // (r, gamma)
  EquivalenceWitness witness;  // from the (q, beta) rep to rep
};

struct LocalisationInverse {
  FractionSpan inverse;
  FractionSpan gf, fg;                  // composites G∘F and F∘G
  FractionTwoCellRep unit, counit;  // id ⇒ G∘F, F∘G ⇒ id, both invertible
};

struct HomCatPresentation {
  ObjId x, y;
  std::vector<FractionSpan> spans;       // all spans with backward leg in V
  std::vector<std::size_t> span_class;   // class index of each span
  std::vector<std::size_t> class_reps;   // index into spans of each class representative
  /// 2-cell classes between representatives i ⇒ j, each keyed by its first
  /// normal form in enumeration order.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<FractionTwoCellRep>> two_cells;
  /// (i, j, k, a, b) ↦ c: class b (j ⇒ k) composed after class a (i ⇒ j) is class c (i ⇒ k).
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::size_t>, std::size_t> vcomp;
  Outcome outcome = Outcome::Found;  // BudgetExhausted when some search ran out

  std::size_t span_classes() const { return class_reps.size(); }
  std::size_t two_cell_classes() const;
};

/// Hom-level constructions of the bicategory of fractions for a class W on a
/// 2-site. All searches are bounded by `budget` and iterate in load order.
class Fractions {
 public:
  Fractions(const TwoSite& site, CellClass w, SearchBudget budget);

  const TwoCategory& cat() const { return site_.cat(); }
  const TwoSite& site() const { return site_; }
  const CellClass& w() const { return w_; }
  const SearchBudget& budget() const { return budget_; }
  Classes classes() const { return {&site_.j.cells, &w_}; }

  FractionSpan localise(OneCell f) const;
  FractionSpan identity_span(ObjId x) const;
  std::string validate(const FractionSpan& s) const;
  std::string validate(const SpanPair& sp, const FractionTwoCellRep& r) const;
  std::string validate(const SpanPair& sp, const FractionTwoCellRep& r1, const FractionTwoCellRep& r2,
                       const EquivalenceWitness& e) const;

  /// G∘F through the minimal BF3 square for (back leg of G, forward leg of F).
  SearchResult<FractionSpan> compose(const FractionSpan& g, const FractionSpan& f) const;
  /// G∘F through a given square; throws BoundaryMismatch if it does not fit.
  FractionSpan compose(const FractionSpan& g, const FractionSpan& f, const Bf3Square& sq) const;

  FractionTwoCellRep identity_rep(const FractionSpan& s) const;
  /// Reversed rep sp.s2 ⇒ sp.s1 when beta is invertible.
  std::optional<FractionTwoCellRep> formal_inverse(const SpanPair& sp, const FractionTwoCellRep& r) const;
  /// All reps between the spans; mediators range over all objects.
  std::vector<FractionTwoCellRep> reps(const SpanPair& sp) const;
  /// Reps whose beta is invertible, which represent invertible 2-arrows.
  SearchResult<FractionTwoCellRep> find_invertible_rep(const SpanPair& sp) const;

  /// Throws Error(BoundaryMismatch) unless both reps are valid between sp.
  EquivalenceResult equivalent(const SpanPair& sp, const FractionTwoCellRep& r1, const FractionTwoCellRep& r2) const;
  EquivalenceWitness reflexivity(const FractionTwoCellRep& r) const;
  /// Witness for r2 ~ r1 from one for r1 ~ r2.
  EquivalenceWitness symmetry(const EquivalenceWitness& e) const;

  SearchResult<CospanFiller> chosen_filler(const SpanPair& sp) const;
  FractionTwoCellRep from_normal_form(const SpanPair& sp, const CospanFiller& c, const NormalFormData& n) const;
  /// Some q in W with r's legs and alpha equal to the filler's whiskered by q.
  std::optional<NormalFormData> as_normal_form(const SpanPair& sp, const CospanFiller& c,
                                               const FractionTwoCellRep& r) const;
  /// r itself when already of normal form, else the first equivalent normal form.
  SearchResult<FractionTwoCellRep> normal_form(const SpanPair& sp, const FractionTwoCellRep& r,
                                               const CospanFiller& c) const;
  /// First normal form equivalent to r, with q ranging over `legs` (W by
  /// default): the class key of r.
  SearchResult<FractionTwoCellRep> class_key(const SpanPair& sp, const FractionTwoCellRep& r, const CospanFiller& c,
                                             const CellClass* legs = nullptr) const;

  /// r23 · r12 for reps s1 ⇒ s2 ⇒ s3, built by BF3 on the middle legs and a
  /// BF4 lift of the resulting square.
  SearchResult<FractionTwoCellRep> vertical_compose(const FractionSpan& s1, const FractionSpan& s2,
                                                    const FractionSpan& s3, const FractionTwoCellRep& r23,
                                                    const FractionTwoCellRep& r12) const;

  SearchResult<NormalizedSpan> normalize_backward_leg(const FractionSpan& s, const CellClass& v) const;
  /// The rep (r, gamma) built from (q, beta) over the filler and a triangle.
  Retraction retract_to_cofinal(const SpanPair& sp, const CospanFiller& c, const NormalFormData& n,
                                const CofinalTriangle& t) const;
  /// Cofinality search for the triangle, then the construction above.
  SearchResult<Retraction> retract_to_cofinal(const SpanPair& sp, const CospanFiller& c, const NormalFormData& n,
                                              const CellClass& v) const;

  HomCatPresentation hom_category(ObjId x, ObjId y, const CellClass& v, bool with_vcomp = true) const;

  SearchResult<LocalisationInverse> localisation_inverse(const FractionSpan& f) const;

 private:
  const TwoSite& site_;
  CellClass w_;
  SearchBudget budget_;
};

}  // namespace bifrac
