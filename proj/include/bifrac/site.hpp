#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bifrac/search.hpp"
#include "bifrac/two_category.hpp"

namespace bifrac {

/// A class of 1-cells of one instance, decided once per cell at construction.
class CellClass {
 public:
  CellClass() = default;
  CellClass(std::string name, std::vector<bool> members) : name_(std::move(name)), members_(std::move(members)) {}

  static CellClass all(const TwoCategory& k);
  static CellClass identities(const TwoCategory& k);
  static CellClass of(const TwoCategory& k, std::string name, const std::function<bool(OneCell)>& pred);
  /// Throws Error(NotAOneCell) for unknown names.
  static CellClass extensional(const TwoCategory& k, std::string name, const std::vector<std::string>& cells);

  const std::string& name() const { return name_; }
  bool contains(OneCell f) const { return f.index() < members_.size() && members_[f.index()]; }
  std::size_t size() const;
  std::vector<OneCell> members() const;
  /// Members with target y, in load order.
  std::vector<OneCell> into(const TwoCategory& k, ObjId y) const;

 private:
  std::string name_;
  std::vector<bool> members_;
};

/// The square of coverage condition (ii): for q: u → x in J and f: y → x,
/// a corner v with top: v → u, left: v → y in J and an invertible
/// cell: q∘top ⇒ f∘left.
struct FillerSquare {
  OneCell q, f;
  ObjId corner;
  OneCell top, left;
  TwoCell cell;
};

/// A J-local splitting of f: x → y: cover: u → y in J, section: u → x and an
/// invertible cell: f∘section ⇒ cover.
struct LocalSplitting {
  OneCell f;
  OneCell cover, section;
  TwoCell cell;
};

using FillerOracle = std::function<std::optional<FillerSquare>(OneCell q, OneCell f)>;
/// Internal criterion for J-local splitness; nullopt where it does not apply.
using SplitCriterion = std::function<std::optional<bool>(OneCell f)>;

struct Coverage {
  CellClass cells;
  FillerOracle filler_oracle;
};

struct TwoSite {
  std::shared_ptr<const TwoCategory> k;
  Coverage j;
  SplitCriterion split_criterion;

  const TwoCategory& cat() const { return *k; }
};

Coverage identities_only(const TwoCategory& k);

/// Empty string when valid, otherwise the first violated condition.
std::string validate(const TwoCategory& k, const CellClass& j, const FillerSquare& sq);
std::string validate(const TwoCategory& k, const CellClass& j, const LocalSplitting& s);

/// Oracle result first (validated; an invalid oracle answer is a hard error),
/// then exhaustive search over corner objects in load order.
SearchResult<FillerSquare> find_filler(const TwoSite& site, OneCell q, OneCell f, const SearchBudget& budget);

enum class Status { Pass, Fail, Unverified };
const char* to_string(Status s);

struct AxiomVerdict {
  AxiomVerdict() = default;
  explicit AxiomVerdict(std::string name) : axiom(std::move(name)) {}

  std::string axiom;
  Status status = Status::Pass;
  std::size_t checked = 0;
  std::size_t remaining = 0;
  std::vector<std::string> counterexamples;

  void fail(std::string why) {
    status = Status::Fail;
    counterexamples.push_back(std::move(why));
  }
};

struct AxiomReport {
  AxiomVerdict closure{"(i) identities and composition"};
  AxiomVerdict fillers{"(ii) filler squares"};
  AxiomVerdict ff{"(iii) members are ff"};
  std::vector<FillerSquare> squares;

  bool passed() const {
    return closure.status == Status::Pass && fillers.status == Status::Pass && ff.status == Status::Pass;
  }
};

AxiomReport verify_coverage_axioms(const TwoSite& site, const SearchBudget& budget);

/// Searches covers into the codomain and sections in load order. When the site
/// carries a split criterion and the search was exhaustive, disagreement
/// throws Error(CrossCheckFailure).
SearchResult<LocalSplitting> is_j_locally_split(const TwoSite& site, OneCell f, const SearchBudget& budget);

struct WeVerdict {
  enum class Kind { WeakEquivalence, NotFF, NotSplit, NotSplitWithinBound };
  Kind kind;
  FfVerdict ff;
  std::optional<LocalSplitting> splitting;

  bool weak_equivalence() const { return kind == Kind::WeakEquivalence; }
};
const char* to_string(WeVerdict::Kind k);

WeVerdict is_weak_equivalence(const TwoSite& site, OneCell f, const SearchBudget& budget);

/// W_J over the whole instance. Throws Error(CrossCheckFailure) if some
/// splitting search runs out of budget, since membership would be unknown.
CellClass weak_equivalences(const TwoSite& site, const SearchBudget& budget);

/// Splitting of g∘f pasted from splittings of f and g through a filler for
/// the cover of f along the section of g.
SearchResult<LocalSplitting> compose_splittings(const TwoSite& site, const LocalSplitting& g, const LocalSplitting& f,
                                                const SearchBudget& budget);
/// Splitting of f obtained from one of w and an invertible a: w ⇒ f.
LocalSplitting transport_splitting(const TwoCategory& k, const LocalSplitting& w, TwoCell a);

/// f∘s ≅ g with g in the subclass.
struct CofinalWitness {
  OneCell f, g, s;
  TwoCell cell;  // f∘s ⇒ g, invertible
};

SearchResult<CofinalWitness> find_cofinal_witness(const TwoCategory& k, const CellClass& sub, OneCell f,
                                                  const SearchBudget& budget);

struct CofinalVerdict {
  Status status = Status::Pass;
  std::vector<CofinalWitness> witnesses;
  std::optional<OneCell> counterexample;
};

/// Is `sub` cofinal in `cls`, relative to the cells of this instance.
CofinalVerdict is_cofinal(const TwoCategory& k, const CellClass& sub, const CellClass& cls, const SearchBudget& budget);

}  // namespace bifrac
