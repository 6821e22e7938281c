#pragma once

#include <memory>
#include <optional>
#include <string>

#include "bifrac/finset/instance.hpp"
#include "bifrac/site.hpp"
#include "bifrac/window_io.hpp"

namespace bifrac {

/// An instance file loaded into a 2-site. Both backends materialize a window;
/// the instance hash is the content hash of that window.
struct LoadedInstance {
  std::shared_ptr<const Window> window;
  std::shared_ptr<const finset::FinsetWindow> finset;  // null for plain window files
  TwoSite site;
  std::string hash;
};

/// "jt_surjections", "identities_only" or a comma-separated list of 1-cell names.
CoverageDecl parse_coverage(const std::string& text);

/// Accepts window and finset instance documents. The override replaces the
/// coverage declared in the file; without either, finset instances use
/// jt_surjections and windows identities_only. Throws Error(Input) when
/// jt_surjections is requested for a plain window.
LoadedInstance load_instance(const Json& doc, const std::optional<CoverageDecl>& override = std::nullopt);

TwoSite make_site(const std::shared_ptr<const Window>& w, const std::shared_ptr<const finset::FinsetWindow>& fw,
                  const CoverageDecl& coverage);

}  // namespace bifrac
