#include "bifrac/finset/category.hpp"

#include "bifrac/error.hpp"

namespace bifrac::finset {

FiniteCategory::FiniteCategory(std::string name, std::vector<std::string> objects, std::vector<Morphism> morphisms,
                               std::vector<std::uint32_t> identities, const std::vector<Triple>& compose)
    : name_(std::move(name)),
      objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)) {
  auto fail = [&](const std::string& what) { throw Error(ErrorKind::AxiomViolation, name_ + ": " + what); };
  const std::size_t no = objects_.size(), nm = morphisms_.size();

  for (const auto& m : morphisms_) {
    if (m.source >= no || m.target >= no) fail("morphism '" + m.name + "' has an unknown endpoint");
  }
  if (identities_.size() != no) fail("identity assignment incomplete");
  for (std::uint32_t o = 0; o < no; ++o) {
    const auto i = identities_[o];
    if (i >= nm || morphisms_[i].source != o || morphisms_[i].target != o) {
      fail("identity of object '" + objects_[o] + "' is not an endomorphism of it");
    }
  }

  table_.assign(nm * nm, kNone);
  for (const auto& [g, f, gf] : compose) {
    if (g >= nm || f >= nm || gf >= nm) fail("composition triple references an unknown morphism");
    if (morphisms_[f].target != morphisms_[g].source) {
      fail("composite " + morphisms_[g].name + "∘" + morphisms_[f].name + " given for non-composable pair");
    }
    if (morphisms_[gf].source != morphisms_[f].source || morphisms_[gf].target != morphisms_[g].target) {
      fail("composite " + morphisms_[g].name + "∘" + morphisms_[f].name + " has the wrong endpoints");
    }
    auto& slot = table_[g * nm + f];
    if (slot != kNone && slot != gf) fail("conflicting composites for " + morphisms_[g].name + "∘" + morphisms_[f].name);
    slot = gf;
  }
  for (std::uint32_t o = 0; o < no; ++o) {
    const auto i = identities_[o];
    for (std::uint32_t f = 0; f < nm; ++f) {
      if (morphisms_[f].target == o && table_[i * nm + f] == kNone) table_[i * nm + f] = f;
      if (morphisms_[f].source == o && table_[f * nm + i] == kNone) table_[f * nm + i] = f;
    }
  }

  homs_.assign(no * no, {});
  for (std::uint32_t m = 0; m < nm; ++m) homs_[morphisms_[m].source * no + morphisms_[m].target].push_back(m);

  for (std::uint32_t f = 0; f < nm; ++f) {
    for (std::uint32_t g = 0; g < nm; ++g) {
      const bool composable = morphisms_[f].target == morphisms_[g].source;
      if (composable && table_[g * nm + f] == kNone) {
        fail("composite " + morphisms_[g].name + "∘" + morphisms_[f].name + " missing");
      }
    }
    if (table_[identities_[morphisms_[f].target] * nm + f] != f || table_[f * nm + identities_[morphisms_[f].source]] != f) {
      fail("unit law fails at '" + morphisms_[f].name + "'");
    }
  }
  for (std::uint32_t f = 0; f < nm; ++f) {
    for (std::uint32_t g = 0; g < nm; ++g) {
      if (morphisms_[f].target != morphisms_[g].source) continue;
      const auto gf = table_[g * nm + f];
      for (std::uint32_t h = 0; h < nm; ++h) {
        if (morphisms_[g].target != morphisms_[h].source) continue;
        if (table_[h * nm + gf] != table_[table_[h * nm + g] * nm + f]) {
          fail("associativity fails at (" + morphisms_[h].name + ", " + morphisms_[g].name + ", " +
               morphisms_[f].name + ")");
        }
      }
    }
  }
}

FiniteCategory FiniteCategory::terminal(std::string name) { return discrete(1, std::move(name)); }

FiniteCategory FiniteCategory::discrete(std::size_t n, std::string name) {
  std::vector<std::string> objs;
  std::vector<Morphism> mors;
  std::vector<std::uint32_t> ids;
  for (std::uint32_t i = 0; i < n; ++i) {
    objs.push_back(n == 1 ? "*" : std::to_string(i));
    mors.push_back({"id" + (n == 1 ? std::string() : std::to_string(i)), i, i});
    ids.push_back(i);
  }
  return FiniteCategory(std::move(name), std::move(objs), std::move(mors), std::move(ids), {});
}

FiniteCategory FiniteCategory::codiscrete(std::size_t n, std::string name) {
  std::vector<std::string> objs;
  std::vector<Morphism> mors;
  std::vector<std::uint32_t> ids(n);
  auto idx = [n](std::size_t i, std::size_t j) { return static_cast<std::uint32_t>(i * n + j); };
  for (std::uint32_t i = 0; i < n; ++i) objs.push_back(std::to_string(i));
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) mors.push_back({std::to_string(i) + ">" + std::to_string(j), i, j});
    ids[i] = idx(i, i);
  }
  std::vector<Triple> comp;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) comp.push_back({idx(j, k), idx(i, j), idx(i, k)});
  return FiniteCategory(std::move(name), std::move(objs), std::move(mors), std::move(ids), comp);
}

FiniteCategory FiniteCategory::cyclic_group(std::size_t n, std::string name) {
  std::vector<Morphism> mors;
  for (std::uint32_t i = 0; i < n; ++i) mors.push_back({i == 0 ? "e" : "g" + std::to_string(i), 0, 0});
  std::vector<Triple> comp;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) comp.push_back({i, j, static_cast<std::uint32_t>((i + j) % n)});
  return FiniteCategory(std::move(name), {"*"}, std::move(mors), {0}, comp);
}

FiniteCategory FiniteCategory::ordinal(std::size_t n, std::string name) {
  std::vector<std::string> objs;
  std::vector<Morphism> mors;
  std::vector<std::uint32_t> ids(n);
  std::vector<std::vector<std::uint32_t>> idx(n, std::vector<std::uint32_t>(n, kNone));
  for (std::uint32_t i = 0; i < n; ++i) objs.push_back(std::to_string(i));
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i; j < n; ++j) {
      idx[i][j] = static_cast<std::uint32_t>(mors.size());
      mors.push_back({std::to_string(i) + "<=" + std::to_string(j), i, j});
    }
    ids[i] = idx[i][i];
  }
  std::vector<Triple> comp;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) comp.push_back({idx[j][k], idx[i][j], idx[i][k]});
  return FiniteCategory(std::move(name), std::move(objs), std::move(mors), std::move(ids), comp);
}

FiniteCategory FiniteCategory::coproduct(const FiniteCategory& a, const FiniteCategory& b, std::string name) {
  std::vector<std::string> objs;
  std::vector<Morphism> mors;
  std::vector<std::uint32_t> ids;
  const auto ao = static_cast<std::uint32_t>(a.object_count());
  const auto am = static_cast<std::uint32_t>(a.morphism_count());
  for (const auto& o : a.objects_) objs.push_back("l." + o);
  for (const auto& o : b.objects_) objs.push_back("r." + o);
  for (const auto& m : a.morphisms_) mors.push_back({"l." + m.name, m.source, m.target});
  for (const auto& m : b.morphisms_) mors.push_back({"r." + m.name, m.source + ao, m.target + ao});
  for (auto i : a.identities_) ids.push_back(i);
  for (auto i : b.identities_) ids.push_back(i + am);
  std::vector<Triple> comp = a.composition_triples();
  for (auto [g, f, gf] : b.composition_triples()) comp.push_back({g + am, f + am, gf + am});
  return FiniteCategory(std::move(name), std::move(objs), std::move(mors), std::move(ids), comp);
}

std::optional<std::uint32_t> FiniteCategory::inverse(std::uint32_t m) const {
  const auto& mm = morphisms_[m];
  for (std::uint32_t n : hom(mm.target, mm.source)) {
    if (compose(n, m) == identities_[mm.source] && compose(m, n) == identities_[mm.target]) return n;
  }
  return std::nullopt;
}

bool FiniteCategory::is_groupoid() const {
  for (std::uint32_t m = 0; m < morphisms_.size(); ++m) {
    if (!inverse(m)) return false;
  }
  return true;
}

bool FiniteCategory::isomorphic(std::uint32_t a, std::uint32_t b) const {
  for (std::uint32_t m : hom(a, b)) {
    if (inverse(m)) return true;
  }
  return false;
}

std::vector<FiniteCategory::Triple> FiniteCategory::composition_triples() const {
  std::vector<Triple> out;
  const auto nm = morphisms_.size();
  for (std::uint32_t g = 0; g < nm; ++g)
    for (std::uint32_t f = 0; f < nm; ++f)
      if (table_[g * nm + f] != kNone) out.push_back({g, f, table_[g * nm + f]});
  return out;
}

bool FiniteCategory::same_morphisms(const FiniteCategory& o) const {
  if (morphisms_.size() != o.morphisms_.size()) return false;
  for (std::size_t i = 0; i < morphisms_.size(); ++i) {
    const auto &x = morphisms_[i], &y = o.morphisms_[i];
    if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
  }
  return true;
}

}  // namespace bifrac::finset
