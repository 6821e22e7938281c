#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bifrac/certificate.hpp"
#include "bifrac/search.hpp"
#include "bifrac/site.hpp"
#include "bifrac/witness.hpp"

namespace bifrac {

/// BF1: every 1-cell with a pseudoinverse in the instance lies in W.
AxiomVerdict check_bf1(const TwoCategory& k, const CellClass& w, const SearchBudget& budget,
                       std::vector<Pseudoinverse>* equivalences = nullptr);

/// BF2: W closed under composition and under invertible 2-cells w ⇒ f.
AxiomVerdict check_bf2(const TwoCategory& k, const CellClass& w);

/// BF3 by search over corners: top: p → dom w, v: p → dom f in W.
SearchResult<Bf3Square> check_bf3(const TwoCategory& k, const CellClass& w, OneCell wc, OneCell f,
                                  const SearchBudget& budget);

/// BF3 for W = W_J: split w through a cover, then fill the cover along f.
SearchResult<Bf3Square> bf3_from_site(const TwoSite& site, const CellClass& w, OneCell wc, OneCell f,
                                      const SearchBudget& budget);

struct Bf4Outcome {
  SearchResult<Bf4Witness> witness;
  bool w_ff = false;
  std::string failure;  // empty when the axiom holds for this α

  bool ok() const { return failure.empty() && witness.value.has_value(); }
};

/// BF4 for alpha: w∘f ⇒ w∘g. For ff w: v = id and the unique β with
/// w∘β = alpha, plus comparison data against every competing pair (v', β')
/// enumerable in the instance and every pair in `extra`. Otherwise a bounded
/// search over v ∈ W.
Bf4Outcome check_bf4(const TwoCategory& k, const CellClass& w, OneCell wc, TwoCell alpha, const SearchBudget& budget,
                     const std::vector<std::pair<OneCell, TwoCell>>& extra = {});
/// Same, with f, g given and ff-ness of w already decided.
Bf4Outcome check_bf4(const TwoCategory& k, const CellClass& w, OneCell wc, OneCell f, OneCell g, TwoCell alpha,
                     const SearchBudget& budget, const std::vector<std::pair<OneCell, TwoCell>>& extra, bool w_ff);

struct FractionAxiomReport {
  std::string coverage;
  CellClass w;
  AxiomVerdict bf1{"BF1 equivalences lie in W"};
  AxiomVerdict bf2{"BF2 closure under composition and isomorphism"};
  AxiomVerdict bf3{"BF3 squares with v in W"};
  AxiomVerdict bf4{"BF4 unique beta with comparison data"};
  CertificateBundle certificates;

  bool passed() const {
    for (const auto* v : {&bf1, &bf2, &bf3, &bf4}) {
      if (v->status != Status::Pass) return false;
    }
    return true;
  }
};

/// Checks BF1–BF4 for W_J over every applicable cell of the instance,
/// following the constructive proof, and certifies every witness. The proof
/// treats J as part of W_J, so BF3 and BF4 also range over J members.
FractionAxiomReport verify_fraction_axioms(const TwoSite& site, const SearchBudget& budget, const std::string& instance_hash = {});

}  // namespace bifrac
