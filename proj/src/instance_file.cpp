#include "bifrac/instance_file.hpp"

#include <sstream>

#include "bifrac/error.hpp"
#include "bifrac/finset/io.hpp"
#include "bifrac/finset/site.hpp"

namespace bifrac {

CoverageDecl parse_coverage(const std::string& text) {
  if (text == "jt_surjections" || text == "identities_only") return CoverageDecl{text};
  std::vector<std::string> cells;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) cells.push_back(item);
  }
  if (cells.empty()) throw Error(ErrorKind::Input, "empty coverage declaration");
  return CoverageDecl{cells};
}

TwoSite make_site(const std::shared_ptr<const Window>& w, const std::shared_ptr<const finset::FinsetWindow>& fw,
                  const CoverageDecl& coverage) {
  if (!coverage.named()) {
    return TwoSite{w, Coverage{CellClass::extensional(*w, "J", std::get<std::vector<std::string>>(coverage.spec)),
                               nullptr},
                   nullptr};
  }
  const auto& name = std::get<std::string>(coverage.spec);
  if (name == "identities_only") return TwoSite{w, identities_only(*w), nullptr};
  if (name == "jt_surjections") {
    if (!fw) throw Error(ErrorKind::Input, "jt_surjections needs a finset instance");
    return finset::jt_site(fw);
  }
  throw Error(ErrorKind::Input, "unknown coverage '" + name + "'");
}

LoadedInstance load_instance(const Json& doc, const std::optional<CoverageDecl>& override) {
  LoadedInstance out;
  std::optional<CoverageDecl> declared;
  const std::string schema = doc.is_object() ? doc.value("schema", "") : "";
  if (schema == finset::kFinsetSchema) {
    auto fd = finset::finset_from_json(doc);
    out.finset = std::make_shared<const finset::FinsetWindow>(finset::cat2_instance(fd.categories, fd.groupoids_only));
    out.window = out.finset->window_ptr();
    declared = fd.coverage ? fd.coverage : CoverageDecl{std::string("jt_surjections")};
  } else if (schema == kWindowSchema) {
    auto wd = window_from_json(doc);
    out.window = std::make_shared<const Window>(std::move(wd.window));
    declared = wd.coverage ? wd.coverage : CoverageDecl{std::string("identities_only")};
  } else {
    throw Error(ErrorKind::Input, "unknown instance schema '" + schema + "'");
  }
  out.site = make_site(out.window, out.finset, override ? *override : *declared);
  out.hash = content_hash(*out.window);
  return out;
}

}  // namespace bifrac
