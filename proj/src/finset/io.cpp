#include "bifrac/finset/io.hpp"

#include <unordered_map>

#include "bifrac/error.hpp"

namespace bifrac::finset {

namespace {

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw Error(ErrorKind::Input, std::string("missing field '") + key + "'");
  return doc.at(key);
}

void expect_schema(const Json& doc, const char* schema) {
  if (!doc.is_object() || doc.value("schema", "") != std::string(schema)) {
    throw Error(ErrorKind::Input, std::string("expected schema ") + schema);
  }
}

std::string str(const Json& v, const char* what) {
  if (!v.is_string()) throw Error(ErrorKind::Input, std::string(what) + " must be a string");
  return v.get<std::string>();
}

std::uint32_t index_of(const std::unordered_map<std::string, std::uint32_t>& names, const Json& v, const char* what) {
  auto it = names.find(str(v, what));
  if (it == names.end()) throw Error(ErrorKind::Input, std::string("unknown ") + what + " '" + v.get<std::string>() + "'");
  return it->second;
}

std::unordered_map<std::string, std::uint32_t> object_index(const FiniteCategory& c) {
  std::unordered_map<std::string, std::uint32_t> m;
  for (std::uint32_t i = 0; i < c.object_count(); ++i) m.emplace(c.object_name(i), i);
  return m;
}

std::unordered_map<std::string, std::uint32_t> morphism_index(const FiniteCategory& c) {
  std::unordered_map<std::string, std::uint32_t> m;
  for (std::uint32_t i = 0; i < c.morphism_count(); ++i) m.emplace(c.morphism(i).name, i);
  return m;
}

CategoryPtr resolve(const Json& v, const std::vector<CategoryPtr>& known) {
  const std::string h = str(v, "category hash");
  for (const auto& c : known) {
    if (category_hash(*c) == h) return c;
  }
  throw Error(ErrorKind::Input, "no loaded category has hash " + h);
}

Json maps_to_json(const FiniteFunctor& f) {
  Json objs = Json::array(), mors = Json::array();
  for (auto o : f.obj_map) objs.push_back(f.target->object_name(o));
  for (auto m : f.mor_map) mors.push_back(f.target->morphism(m).name);
  return {{"obj_map", std::move(objs)}, {"mor_map", std::move(mors)}};
}

}  // namespace

Json category_to_json(const FiniteCategory& c) {
  Json doc;
  doc["schema"] = kCategorySchema;
  doc["name"] = c.name();
  doc["objects"] = c.objects();
  Json mors = Json::array();
  for (const auto& m : c.morphisms()) {
    mors.push_back({{"id", m.name}, {"src", c.object_name(m.source)}, {"tgt", c.object_name(m.target)}});
  }
  doc["morphisms"] = std::move(mors);
  Json ids = Json::array();
  for (auto m : c.identities()) ids.push_back(c.morphism(m).name);
  doc["identities"] = std::move(ids);
  Json comp = Json::array();
  for (const auto& t : c.composition_triples()) {
    comp.push_back(Json::array({c.morphism(t[0]).name, c.morphism(t[1]).name, c.morphism(t[2]).name}));
  }
  doc["compose"] = std::move(comp);
  return doc;
}

FiniteCategory category_from_json(const Json& doc) {
  expect_schema(doc, kCategorySchema);
  std::vector<std::string> objects;
  std::unordered_map<std::string, std::uint32_t> objs, mors;
  for (const auto& o : field(doc, "objects")) {
    objs.emplace(str(o, "object"), static_cast<std::uint32_t>(objects.size()));
    objects.push_back(o.get<std::string>());
  }
  std::vector<FiniteCategory::Morphism> morphisms;
  for (const auto& m : field(doc, "morphisms")) {
    mors.emplace(str(field(m, "id"), "morphism id"), static_cast<std::uint32_t>(morphisms.size()));
    morphisms.push_back({m.at("id").get<std::string>(), index_of(objs, field(m, "src"), "object"),
                         index_of(objs, field(m, "tgt"), "object")});
  }
  std::vector<std::uint32_t> identities;
  for (const auto& i : field(doc, "identities")) identities.push_back(index_of(mors, i, "morphism"));
  std::vector<FiniteCategory::Triple> triples;
  for (const auto& t : field(doc, "compose")) {
    if (!t.is_array() || t.size() != 3) throw Error(ErrorKind::Input, "compose entries are [g, f, g∘f]");
    triples.push_back({index_of(mors, t[0], "morphism"), index_of(mors, t[1], "morphism"), index_of(mors, t[2], "morphism")});
  }
  return FiniteCategory(str(field(doc, "name"), "name"), std::move(objects), std::move(morphisms),
                        std::move(identities), triples);
}

std::string category_hash(const FiniteCategory& c) { return content_hash(category_to_json(c)); }

Json functor_to_json(const FiniteFunctor& f) {
  Json doc;
  doc["schema"] = kFunctorSchema;
  doc["source"] = category_hash(*f.source);
  doc["target"] = category_hash(*f.target);
  const Json maps = maps_to_json(f);
  for (auto& [k, v] : maps.items()) doc[k] = v;
  return doc;
}

FiniteFunctor functor_from_json(const Json& doc, const std::vector<CategoryPtr>& known) {
  expect_schema(doc, kFunctorSchema);
  FiniteFunctor f{resolve(field(doc, "source"), known), resolve(field(doc, "target"), known), {}, {}};
  const auto objs = object_index(*f.target);
  const auto mors = morphism_index(*f.target);
  for (const auto& o : field(doc, "obj_map")) f.obj_map.push_back(index_of(objs, o, "object"));
  for (const auto& m : field(doc, "mor_map")) f.mor_map.push_back(index_of(mors, m, "morphism"));
  if (f.obj_map.size() != f.source->object_count() || f.mor_map.size() != f.source->morphism_count()) {
    throw Error(ErrorKind::Input, "functor maps do not cover the source category");
  }
  check_functor(f);
  return f;
}

Json nat_trans_to_json(const FiniteNatTrans& t) {
  Json doc;
  doc["schema"] = kNatTransSchema;
  doc["source_category"] = category_hash(*t.source.source);
  doc["target_category"] = category_hash(*t.source.target);
  doc["from"] = maps_to_json(t.source);
  doc["to"] = maps_to_json(t.target);
  Json comps = Json::array();
  for (auto m : t.components) comps.push_back(t.source.target->morphism(m).name);
  doc["components"] = std::move(comps);
  return doc;
}

FiniteNatTrans nat_trans_from_json(const Json& doc, const std::vector<CategoryPtr>& known) {
  expect_schema(doc, kNatTransSchema);
  auto functor = [&](const char* key) {
    Json f = field(doc, key);
    f["schema"] = kFunctorSchema;
    f["source"] = field(doc, "source_category");
    f["target"] = field(doc, "target_category");
    return functor_from_json(f, known);
  };
  FiniteNatTrans t{functor("from"), functor("to"), {}};
  const auto mors = morphism_index(*t.source.target);
  for (const auto& m : field(doc, "components")) t.components.push_back(index_of(mors, m, "morphism"));
  if (t.components.size() != t.source.source->object_count()) {
    throw Error(ErrorKind::Input, "one component per source object expected");
  }
  check_nat_trans(t);
  return t;
}

Json finset_to_json(const FinsetDocument& doc) {
  Json out;
  out["schema"] = kFinsetSchema;
  out["groupoids_only"] = doc.groupoids_only;
  Json cats = Json::array();
  for (const auto& c : doc.categories) cats.push_back(category_to_json(c));
  out["categories"] = std::move(cats);
  if (doc.coverage) {
    if (doc.coverage->named()) {
      out["coverage"] = {{"named", std::get<std::string>(doc.coverage->spec)}};
    } else {
      out["coverage"] = {{"cells", std::get<std::vector<std::string>>(doc.coverage->spec)}};
    }
  }
  return out;
}

FinsetDocument finset_from_json(const Json& doc) {
  expect_schema(doc, kFinsetSchema);
  FinsetDocument out;
  out.groupoids_only = doc.value("groupoids_only", false);
  for (const auto& c : field(doc, "categories")) out.categories.push_back(category_from_json(c));
  if (doc.contains("coverage")) {
    const Json& c = doc.at("coverage");
    if (c.contains("named")) {
      out.coverage = CoverageDecl{str(c.at("named"), "coverage name")};
    } else if (c.contains("cells")) {
      out.coverage = CoverageDecl{c.at("cells").get<std::vector<std::string>>()};
    } else {
      throw Error(ErrorKind::Input, "coverage needs 'named' or 'cells'");
    }
  }
  return out;
}

}  // namespace bifrac::finset
