#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "bifrac/two_category.hpp"

namespace bifrac {

/// Limits for witness searches. `max_candidates` caps the number of candidate
/// tuples examined by one search; `max_depth` caps how many objects are tried
/// as corner or mediator objects.
struct SearchBudget {
  std::size_t max_candidates = std::numeric_limits<std::size_t>::max();
  std::size_t max_depth = std::numeric_limits<std::size_t>::max();

  static SearchBudget exhaustive(const TwoCategory& k) {
    return {std::numeric_limits<std::size_t>::max(), k.object_count()};
  }
  bool covers(const TwoCategory& k) const {
    return max_candidates == std::numeric_limits<std::size_t>::max() && max_depth >= k.object_count();
  }
};

enum class Outcome { Found, NotFound, BudgetExhausted };

const char* to_string(Outcome o);

/// Result of a bounded search. `NotFound` is only reported when the search
/// space was exhausted; otherwise the verdict is `BudgetExhausted`.
template <class T>
struct SearchResult {
  std::optional<T> value;
  Outcome outcome = Outcome::NotFound;

  static SearchResult found(T v) { return {std::move(v), Outcome::Found}; }
  static SearchResult none(Outcome o) { return {std::nullopt, o}; }
  explicit operator bool() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }
};

/// Counts candidates against a budget.
class Meter {
 public:
  explicit Meter(const SearchBudget& b) : budget_(b) {}
  /// False once the candidate budget is spent.
  bool charge() {
    if (used_ >= budget_.max_candidates) {
      exhausted_ = true;
      return false;
    }
    ++used_;
    return true;
  }
  bool depth_ok(std::size_t corner_index) {
    if (corner_index < budget_.max_depth) return true;
    exhausted_ = true;
    return false;
  }
  bool exhausted() const { return exhausted_; }
  Outcome miss() const { return exhausted_ ? Outcome::BudgetExhausted : Outcome::NotFound; }

 private:
  SearchBudget budget_;
  std::size_t used_ = 0;
  bool exhausted_ = false;
};

struct FfWitness {
  enum class Failure { NotFaithful, NotFull };
  Failure failure;
  ObjId z;
  OneCell a, b;  // 1-cells z → u
  /// NotFaithful: two distinct 2-cells a ⇒ b with the same image.
  /// NotFull: a single 2-cell q∘a ⇒ q∘b without preimage.
  std::vector<TwoCell> cells;
};

struct FfVerdict {
  bool ff = true;
  std::optional<FfWitness> witness;
};

/// Decides whether post-composition q∘- : K(z,u) → K(z,x) is fully faithful for
/// every object z of the instance.
FfVerdict is_ff_one_cell(const TwoCategory& k, OneCell q);

std::string describe(const TwoCategory& k, const FfWitness& w);

/// An internal equivalence: g with invertible η: id ⇒ g∘f and ε: f∘g ⇒ id.
struct Pseudoinverse {
  OneCell f, g;
  TwoCell unit, counit;
};

SearchResult<Pseudoinverse> find_pseudoinverse(const TwoCategory& k, OneCell f, const SearchBudget& budget);

/// Re-checks boundaries and invertibility of a pseudoinverse witness.
bool validate(const TwoCategory& k, const Pseudoinverse& p);

}  // namespace bifrac
