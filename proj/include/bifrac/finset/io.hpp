#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bifrac/finset/functor.hpp"
#include "bifrac/window_io.hpp"

namespace bifrac::finset {

inline constexpr const char* kCategorySchema = "bifrac-category/1";
inline constexpr const char* kFunctorSchema = "bifrac-functor/1";
inline constexpr const char* kNatTransSchema = "bifrac-nattrans/1";
inline constexpr const char* kFinsetSchema = "bifrac-finset/1";

/// objects, morphisms {id, src, tgt}, identities, compose triples [g, f, g∘f].
Json category_to_json(const FiniteCategory& c);
/// Throws Error(Input) for schema problems, Error(AxiomViolation) for bad data.
FiniteCategory category_from_json(const Json& doc);
std::string category_hash(const FiniteCategory& c);

/// Source and target are referenced by category hash.
Json functor_to_json(const FiniteFunctor& f);
/// Throws Error(Input) when a referenced hash matches none of `known`.
FiniteFunctor functor_from_json(const Json& doc, const std::vector<CategoryPtr>& known);

Json nat_trans_to_json(const FiniteNatTrans& t);
FiniteNatTrans nat_trans_from_json(const Json& doc, const std::vector<CategoryPtr>& known);

/// An instance file for the finset backend: the categories of the window,
/// the groupoid flag and an optional coverage declaration.
struct FinsetDocument {
  std::vector<FiniteCategory> categories;
  bool groupoids_only = false;
  std::optional<CoverageDecl> coverage;
};

Json finset_to_json(const FinsetDocument& doc);
FinsetDocument finset_from_json(const Json& doc);

}  // namespace bifrac::finset
