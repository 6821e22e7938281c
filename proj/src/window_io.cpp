#include "bifrac/window_io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "bifrac/error.hpp"

namespace bifrac {

namespace {

Json rows_to_json(const std::vector<WindowData::Row>& rows, const std::vector<std::string>& a,
                  const std::vector<std::string>& b, const std::vector<std::string>& r) {
  Json out = Json::array();
  for (const auto& row : rows) out.push_back(Json::array({a[row[0]], b[row[1]], r[row[2]]}));
  return out;
}

std::uint32_t lookup(const std::unordered_map<std::string, std::uint32_t>& names, const Json& v, const char* what) {
  if (!v.is_string()) throw Error(ErrorKind::Input, std::string(what) + " reference must be a string");
  auto it = names.find(v.get<std::string>());
  if (it == names.end()) {
    throw Error(ErrorKind::MalformedTable, std::string("unknown ") + what + " '" + v.get<std::string>() + "'");
  }
  return it->second;
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw Error(ErrorKind::Input, std::string("missing field '") + key + "'");
  return doc.at(key);
}

}  // namespace

Json window_to_json(const Window& w, const std::optional<CoverageDecl>& coverage) {
  const auto& d = w.data();
  std::vector<std::string> ones, twos;
  for (const auto& c : d.one_cells) ones.push_back(c.name);
  for (const auto& c : d.two_cells) twos.push_back(c.name);

  Json doc;
  doc["schema"] = kWindowSchema;
  doc["objects"] = d.objects;
  Json oc = Json::array();
  for (const auto& c : d.one_cells) oc.push_back({{"id", c.name}, {"src", d.objects[c.source]}, {"tgt", d.objects[c.target]}});
  doc["one_cells"] = std::move(oc);
  Json tc = Json::array();
  for (const auto& c : d.two_cells) tc.push_back({{"id", c.name}, {"src", ones[c.source]}, {"tgt", ones[c.target]}});
  doc["two_cells"] = std::move(tc);

  Json ids1 = Json::array(), ids2 = Json::array();
  for (std::size_t i = 0; i < d.identity1.size(); ++i) ids1.push_back(Json::array({d.objects[i], ones[d.identity1[i]]}));
  for (std::size_t i = 0; i < d.identity2.size(); ++i) ids2.push_back(Json::array({ones[i], twos[d.identity2[i]]}));
  Json tables;
  tables["identities"] = {{"objects", std::move(ids1)}, {"one_cells", std::move(ids2)}};
  tables["compose1"] = rows_to_json(d.compose1, ones, ones, ones);
  tables["vcomp"] = rows_to_json(d.vcomp, twos, twos, twos);
  tables["whisker_l"] = rows_to_json(d.whisker_l, ones, twos, twos);
  tables["whisker_r"] = rows_to_json(d.whisker_r, twos, ones, twos);
  doc["tables"] = std::move(tables);

  if (coverage) {
    if (coverage->named()) {
      doc["coverage"] = {{"named", std::get<std::string>(coverage->spec)}};
    } else {
      doc["coverage"] = {{"cells", std::get<std::vector<std::string>>(coverage->spec)}};
    }
  }
  return doc;
}

WindowDocument window_from_json(const Json& doc) {
  if (!doc.is_object() || doc.value("schema", "") != std::string(kWindowSchema)) {
    throw Error(ErrorKind::Input, std::string("expected schema ") + kWindowSchema);
  }
  WindowData d;
  std::unordered_map<std::string, std::uint32_t> objs, ones, twos;

  for (const auto& o : field(doc, "objects")) {
    objs.emplace(o.get<std::string>(), static_cast<std::uint32_t>(d.objects.size()));
    d.objects.push_back(o.get<std::string>());
  }
  for (const auto& c : field(doc, "one_cells")) {
    auto id = field(c, "id").get<std::string>();
    d.one_cells.push_back({id, lookup(objs, field(c, "src"), "object"), lookup(objs, field(c, "tgt"), "object")});
    ones.emplace(id, static_cast<std::uint32_t>(d.one_cells.size() - 1));
  }
  for (const auto& c : field(doc, "two_cells")) {
    auto id = field(c, "id").get<std::string>();
    d.two_cells.push_back({id, lookup(ones, field(c, "src"), "1-cell"), lookup(ones, field(c, "tgt"), "1-cell")});
    twos.emplace(id, static_cast<std::uint32_t>(d.two_cells.size() - 1));
  }

  const Json& tables = field(doc, "tables");
  const Json& ids = field(tables, "identities");
  d.identity1.assign(d.objects.size(), UINT32_MAX);
  d.identity2.assign(d.one_cells.size(), UINT32_MAX);
  for (const auto& e : field(ids, "objects")) d.identity1[lookup(objs, e.at(0), "object")] = lookup(ones, e.at(1), "1-cell");
  for (const auto& e : field(ids, "one_cells")) d.identity2[lookup(ones, e.at(0), "1-cell")] = lookup(twos, e.at(1), "2-cell");
  for (auto i : d.identity1) {
    if (i == UINT32_MAX) throw Error(ErrorKind::MalformedTable, "object without identity 1-cell");
  }
  for (auto i : d.identity2) {
    if (i == UINT32_MAX) throw Error(ErrorKind::MalformedTable, "1-cell without identity 2-cell");
  }

  auto rows = [&](const char* key, const auto& a, const auto& b, const auto& r, const char* ka, const char* kb,
                  const char* kr) {
    std::vector<WindowData::Row> out;
    for (const auto& e : field(tables, key)) {
      if (!e.is_array() || e.size() != 3) throw Error(ErrorKind::Input, std::string(key) + " rows must be triples");
      out.push_back({lookup(a, e[0], ka), lookup(b, e[1], kb), lookup(r, e[2], kr)});
    }
    return out;
  };
  d.compose1 = rows("compose1", ones, ones, ones, "1-cell", "1-cell", "1-cell");
  d.vcomp = rows("vcomp", twos, twos, twos, "2-cell", "2-cell", "2-cell");
  d.whisker_l = rows("whisker_l", ones, twos, twos, "1-cell", "2-cell", "2-cell");
  d.whisker_r = rows("whisker_r", twos, ones, twos, "2-cell", "1-cell", "2-cell");

  std::optional<CoverageDecl> coverage;
  if (doc.contains("coverage")) {
    const Json& c = doc.at("coverage");
    if (c.contains("named")) {
      coverage = CoverageDecl{c.at("named").get<std::string>()};
    } else if (c.contains("cells")) {
      auto cells = c.at("cells").get<std::vector<std::string>>();
      for (const auto& n : cells) {
        if (!ones.count(n)) throw Error(ErrorKind::MalformedTable, "coverage references unknown 1-cell '" + n + "'");
      }
      coverage = CoverageDecl{std::move(cells)};
    } else {
      throw Error(ErrorKind::Input, "coverage must be {\"named\": ...} or {\"cells\": [...]}");
    }
  }
  return WindowDocument{Window(std::move(d)), std::move(coverage)};
}

std::string dump_canonical(const Json& doc) { return doc.dump(1) + "\n"; }

std::string content_hash(const Json& doc) {
  const std::string text = doc.dump();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

std::string content_hash(const Window& w) { return content_hash(window_to_json(w)); }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Input, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Input, "'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Input, "cannot write '" + path + "'");
  out << text;
}

}  // namespace bifrac
