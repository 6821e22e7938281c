// bifrac: batch front-end for the 2-site and fractions engine.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bifrac/bf.hpp"
#include "bifrac/dot.hpp"
#include "bifrac/error.hpp"
#include "bifrac/fractions.hpp"
#include "bifrac/instance_file.hpp"
#include "bifrac/slice.hpp"

namespace {

using namespace bifrac;

constexpr int kPass = 0;
constexpr int kCounterexample = 1;
constexpr int kBudget = 2;
constexpr int kInputError = 3;

constexpr const char* kReportSchema = "bifrac-report/1";

struct Config {
  std::string instance;
  std::string coverage;
  std::size_t budget_candidates = 0;
  std::size_t budget_depth = 0;
  std::string out;
  std::string cert;
  std::string dot;
  std::string cell;
  std::string x, y;
  std::string over;
  std::string variant = "lax";
  std::string span;
  std::size_t index = 0;
  bool check = false;
  bool no_vcomp = false;
};

SearchBudget budget_for(const Config& cfg, const TwoCategory& k) {
  SearchBudget b = SearchBudget::exhaustive(k);
  if (const char* env = std::getenv("BIFRAC_BUDGET")) {
    std::string s(env);
    const auto colon = s.find(':');
    try {
      b.max_candidates = std::stoull(s.substr(0, colon));
      if (colon != std::string::npos) b.max_depth = std::stoull(s.substr(colon + 1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::Input, "BIFRAC_BUDGET must be CANDIDATES[:DEPTH]");
    }
  }
  if (cfg.budget_candidates) b.max_candidates = cfg.budget_candidates;
  if (cfg.budget_depth) b.max_depth = cfg.budget_depth;
  return b;
}

LoadedInstance load(const Config& cfg) {
  if (cfg.instance.empty()) throw Error(ErrorKind::Input, "--instance is required");
  std::optional<CoverageDecl> cov;
  if (!cfg.coverage.empty()) cov = parse_coverage(cfg.coverage);
  return load_instance(read_json_file(cfg.instance), cov);
}

Json report_head(const char* command, const LoadedInstance& inst, const SearchBudget& b) {
  Json r;
  r["schema"] = kReportSchema;
  r["command"] = command;
  r["instance_hash"] = inst.hash;
  r["coverage"] = inst.site.j.cells.name();
  r["budget"] = {{"max_candidates", b.max_candidates}, {"max_depth", b.max_depth}};
  return r;
}

void emit(const Config& cfg, const Json& report) {
  const std::string text = report.dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(cfg.out, text);
  }
}

Json verdict_json(const AxiomVerdict& v) {
  return {{"axiom", v.axiom},
          {"status", to_string(v.status)},
          {"checked", v.checked},
          {"remaining", v.remaining},
          {"counterexamples", v.counterexamples}};
}

int verdict_exit(std::initializer_list<const AxiomVerdict*> vs) {
  int code = kPass;
  for (const auto* v : vs) {
    if (v->status == Status::Fail) return kCounterexample;
    if (v->status == Status::Unverified) code = kBudget;
  }
  return code;
}

void summary(const AxiomVerdict& v) {
  std::cerr << "  " << v.axiom << ": " << to_string(v.status) << " (" << v.checked << " checked";
  if (v.remaining) std::cerr << ", " << v.remaining << " unverified";
  std::cerr << ")\n";
  for (const auto& c : v.counterexamples) std::cerr << "    " << c << "\n";
}

void write_bundle(const Config& cfg, const TwoCategory& k, const CertificateBundle& b) {
  if (!cfg.cert.empty()) write_text_file(cfg.cert, to_json(k, b).dump() + "\n");
}

OneCell cell_named(const TwoCategory& k, const std::string& name) {
  auto f = k.find_one_cell(name);
  if (!f) throw Error(ErrorKind::NotAOneCell, "no 1-cell named '" + name + "'");
  return *f;
}

ObjId object_named(const TwoCategory& k, const std::string& name) {
  auto x = k.find_object(name);
  if (!x) throw Error(ErrorKind::NotAnObject, "no object named '" + name + "'");
  return *x;
}

int cmd_check_site(const Config& cfg) {
  const auto inst = load(cfg);
  const auto& k = inst.site.cat();
  const auto b = budget_for(cfg, k);
  const auto r = verify_coverage_axioms(inst.site, b);
  Json rep = report_head("check-site", inst, b);
  rep["axioms"] = Json::array({verdict_json(r.closure), verdict_json(r.fillers), verdict_json(r.ff)});
  emit(cfg, rep);
  std::cerr << "coverage " << inst.site.j.cells.name() << " on " << k.object_count() << " objects\n";
  for (const auto* v : {&r.closure, &r.fillers, &r.ff}) summary(*v);
  CertificateBundle bundle{inst.hash, inst.site.j.cells.name(), {}};
  for (const auto& sq : r.squares) bundle.certificates.push_back(certify(k, {&inst.site.j.cells, nullptr}, sq));
  write_bundle(cfg, k, bundle);
  return verdict_exit({&r.closure, &r.fillers, &r.ff});
}

CellClass weak_equivalences_or_budget(const TwoSite& site, const SearchBudget& b) {
  try {
    return weak_equivalences(site, b);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::CrossCheckFailure && !b.covers(site.cat())) throw std::out_of_range(e.what());
    throw;
  }
}

int cmd_check_bf(const Config& cfg) {
  const auto inst = load(cfg);
  const auto& k = inst.site.cat();
  const auto b = budget_for(cfg, k);
  weak_equivalences_or_budget(inst.site, b);
  const auto r = verify_fraction_axioms(inst.site, b, inst.hash);
  Json rep = report_head("check-bf", inst, b);
  rep["weak_equivalences"] = r.w.size();
  rep["axioms"] = Json::array({verdict_json(r.bf1), verdict_json(r.bf2), verdict_json(r.bf3), verdict_json(r.bf4)});
  rep["certificates"] = r.certificates.certificates.size();
  emit(cfg, rep);
  std::cerr << r.w.name() << " has " << r.w.size() << " members\n";
  for (const auto* v : {&r.bf1, &r.bf2, &r.bf3, &r.bf4}) summary(*v);
  write_bundle(cfg, k, r.certificates);
  return verdict_exit({&r.bf1, &r.bf2, &r.bf3, &r.bf4});
}

int cmd_we(const Config& cfg) {
  const auto inst = load(cfg);
  const auto& k = inst.site.cat();
  const auto b = budget_for(cfg, k);
  const OneCell f = cell_named(k, cfg.cell);
  const auto v = is_weak_equivalence(inst.site, f, b);
  Json rep = report_head("we", inst, b);
  rep["cell"] = k.name(f);
  rep["verdict"] = to_string(v.kind);
  rep["ff"] = v.ff.ff;
  if (v.ff.witness) rep["ff_witness"] = describe(k, *v.ff.witness);
  if (v.splitting) {
    rep["splitting"] = {{"cover", k.name(v.splitting->cover)},
                        {"section", k.name(v.splitting->section)},
                        {"cell", k.name(v.splitting->cell)}};
  }
  emit(cfg, rep);
  std::cerr << k.name(f) << ": " << to_string(v.kind) << "\n";
  if (v.ff.witness) std::cerr << "  " << describe(k, *v.ff.witness) << "\n";
  if (v.splitting) {
    std::cerr << "  split by cover " << k.name(v.splitting->cover) << ", section " << k.name(v.splitting->section)
              << "\n";
  }
  switch (v.kind) {
    case WeVerdict::Kind::WeakEquivalence: return kPass;
    case WeVerdict::Kind::NotSplitWithinBound: return kBudget;
    default: return kCounterexample;
  }
}

int cmd_homcat(const Config& cfg) {
  const auto inst = load(cfg);
  const auto& k = inst.site.cat();
  const auto b = budget_for(cfg, k);
  Fractions fr(inst.site, weak_equivalences_or_budget(inst.site, b), b);
  const CellClass& v = inst.site.j.cells;
  const auto cof = is_cofinal(k, v, fr.w(), b);
  Json rep = report_head("homcat", inst, b);
  rep["cofinal"] = to_string(cof.status);
  if (cof.counterexample) rep["cofinal_counterexample"] = k.name(*cof.counterexample);
  std::cerr << v.name() << " cofinal in " << fr.w().name() << ": " << to_string(cof.status) << "\n";

  std::vector<ObjId> xs, ys;
  if (cfg.x.empty()) {
    for (ObjId o : k.objects()) xs.push_back(o);
  } else {
    xs.push_back(object_named(k, cfg.x));
  }
  if (cfg.y.empty()) {
    for (ObjId o : k.objects()) ys.push_back(o);
  } else {
    ys.push_back(object_named(k, cfg.y));
  }
  CertificateBundle bundle{inst.hash, v.name(), {}};
  bool exhausted = false;
  Json homs = Json::array();
  for (ObjId x : xs) {
    for (ObjId y : ys) {
      const auto h = fr.hom_category(x, y, v, !cfg.no_vcomp);
      exhausted |= h.outcome == Outcome::BudgetExhausted;
      Json spans = Json::array();
      for (std::size_t c : h.class_reps) {
        spans.push_back({{"apex", k.name(h.spans[c].apex)}, {"back", k.name(h.spans[c].back)},
                         {"fwd", k.name(h.spans[c].fwd)}});
      }
      homs.push_back({{"x", k.name(x)},
                      {"y", k.name(y)},
                      {"spans", h.spans.size()},
                      {"span_classes", h.span_classes()},
                      {"two_cell_classes", h.two_cell_classes()},
                      {"vcomp_entries", h.vcomp.size()},
                      {"outcome", to_string(h.outcome)},
                      {"representatives", std::move(spans)}});
      std::cerr << "  " << k.name(x) << " -> " << k.name(y) << ": " << h.span_classes() << " span classes, "
                << h.two_cell_classes() << " 2-cell classes\n";
      if (cfg.cert.empty()) continue;
      for (const auto& [ij, classes] : h.two_cells) {
        const SpanPair sp{h.spans[h.class_reps[ij.first]], h.spans[h.class_reps[ij.second]]};
        for (const auto& r : fr.reps(sp)) {
          for (const auto& c : classes) {
            auto e = fr.equivalent(sp, r, c);
            if (!e) continue;
            bundle.certificates.push_back(certify(k, fr.classes(), FractionEquivalence{sp, r, c, *e.witness}));
            break;
          }
        }
      }
    }
  }
  rep["homs"] = std::move(homs);
  emit(cfg, rep);
  write_bundle(cfg, k, bundle);
  if (cof.status == Status::Fail) return kCounterexample;
  return exhausted || cof.status == Status::Unverified ? kBudget : kPass;
}

int cmd_slice(const Config& cfg) {
  const auto inst = load(cfg);
  const auto& k = inst.site.cat();
  auto variant = parse_slice_variant(cfg.variant);
  if (!variant) throw Error(ErrorKind::Input, "variant must be lax, strict or groupoid");
  auto sl = std::make_shared<const SliceInstance>(build_lax_slice(inst.site.k, object_named(k, cfg.over), *variant));
  const Window& w = sl->window();
  const TwoSite site = slice_site(inst.site, sl);
  std::vector<std::string> cover;
  for (OneCell f : site.j.cells.members()) cover.push_back(w.name(f));
  const Json doc = window_to_json(w, CoverageDecl{cover});
  std::cerr << to_string(*variant) << " slice over " << cfg.over << ": " << w.object_count() << " objects, "
            << w.one_cell_count() << " 1-cells, " << w.two_cell_count() << " 2-cells\n";
  if (!cfg.out.empty()) write_text_file(cfg.out, dump_canonical(doc));
  if (!cfg.check) {
    if (cfg.out.empty()) std::cout << dump_canonical(doc);
    return kPass;
  }
  const auto b = budget_for(cfg, w);
  const auto r = verify_slice_is_2site(inst.site, sl, b);
  for (const auto* v : {&r.axioms.closure, &r.axioms.fillers, &r.axioms.ff, &r.lifting}) summary(*v);
  const auto t = verify_fraction_axioms(site, b, content_hash(w));
  for (const auto* v : {&t.bf1, &t.bf2, &t.bf3, &t.bf4}) summary(*v);
  write_bundle(cfg, w, t.certificates);
  return verdict_exit({&r.axioms.closure, &r.axioms.fillers, &r.axioms.ff, &r.lifting, &t.bf1, &t.bf2, &t.bf3, &t.bf4});
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Input, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int cmd_validate_cert(const Config& cfg) {
  const auto inst = load(cfg);
  const auto& k = inst.site.cat();
  if (cfg.cert.empty()) throw Error(ErrorKind::Input, "--cert is required");
  const Json bundle = parse_bundle(read_text(cfg.cert));
  const auto b = budget_for(cfg, k);
  const CellClass w = weak_equivalences_or_budget(inst.site, b);
  CertVerdict v;
  if (bundle.value("coverage", "") != inst.site.j.cells.name()) {
    v.ok = false;
    v.rejections.push_back("coverage mismatch: certificate was issued for " + bundle.value("coverage", "?"));
  } else {
    v = validate_bundle(k, {&inst.site.j.cells, &w}, inst.hash, bundle);
  }
  Json rep = report_head("validate-cert", inst, b);
  rep["checked"] = v.checked;
  rep["valid"] = v.ok;
  rep["rejections"] = v.rejections;
  emit(cfg, rep);
  std::cerr << v.checked << " certificates checked: " << (v.ok ? "all valid" : "REJECTED") << "\n";
  for (const auto& r : v.rejections) std::cerr << "  " << r << "\n";
  return v.ok ? kPass : kCounterexample;
}

int cmd_render_dot(const Config& cfg) {
  const auto inst = load(cfg);
  const auto& k = inst.site.cat();
  std::string text;
  if (!cfg.span.empty()) {
    const auto comma = cfg.span.find(',');
    if (comma == std::string::npos) throw Error(ErrorKind::Input, "--span expects BACK,FWD");
    const OneCell back = cell_named(k, cfg.span.substr(0, comma)), fwd = cell_named(k, cfg.span.substr(comma + 1));
    if (k.source(back) != k.source(fwd)) throw Error(ErrorKind::Input, "span legs must share their source");
    text = render_span(k, {k.target(back), k.target(fwd), k.source(back), back, fwd});
  } else if (!cfg.cell.empty()) {
    const OneCell f = cell_named(k, cfg.cell);
    text = render_span(k, {k.source(f), k.target(f), k.source(f), k.identity(k.source(f)), f});
  } else if (!cfg.cert.empty()) {
    const Json bundle = parse_bundle(read_text(cfg.cert));
    const auto& certs = bundle.at("certificates");
    if (cfg.index >= certs.size()) throw Error(ErrorKind::Input, "certificate index out of range");
    const Json& c = certs[cfg.index];
    if (c.value("kind", "") != "fraction_equivalence") {
      throw Error(ErrorKind::Input, "only fraction_equivalence certificates render as diagrams");
    }
    const Json& cl = c.at("claim");
    auto one = [&](const Json& j, const char* key) { return cell_named(k, j.at(key).get<std::string>()); };
    auto two = [&](const Json& j, const char* key) {
      auto a = k.find_two_cell(j.at(key).get<std::string>());
      if (!a) throw Error(ErrorKind::Input, "unknown 2-cell in certificate");
      return *a;
    };
    auto obj = [&](const Json& j, const char* key) { return object_named(k, j.at(key).get<std::string>()); };
    auto span = [&](const Json& j) {
      return FractionSpan{obj(j, "source"), obj(j, "target"), obj(j, "apex"), one(j, "back"), one(j, "fwd")};
    };
    auto rep = [&](const Json& j) {
      return FractionTwoCellRep{obj(j, "mediator"), one(j, "p1"), one(j, "p2"), two(j, "alpha"), two(j, "beta")};
    };
    const Json& w = cl.at("witness");
    text = render_equivalence(k, {{span(cl.at("span1")), span(cl.at("span2"))},
                                  rep(cl.at("rep1")),
                                  rep(cl.at("rep2")),
                                  {obj(w, "t"), one(w, "q"), one(w, "q2"), two(w, "gamma1"), two(w, "gamma2")}});
  } else {
    throw Error(ErrorKind::Input, "render-dot needs --span, --cell or --cert");
  }
  if (cfg.dot.empty()) {
    std::cout << text;
  } else {
    write_text_file(cfg.dot, text);
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strict 2-categories with a coverage: weak equivalences, fraction axioms and hom-categories"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--instance,--base", cfg.instance, "instance file (window or finset)");
    sub->add_option("--coverage", cfg.coverage, "jt_surjections, identities_only or a comma-separated cell list");
    sub->add_option("--budget-candidates", cfg.budget_candidates, "candidate cap per search");
    sub->add_option("--budget-depth", cfg.budget_depth, "corner/mediator object cap per search");
    sub->add_option("--out", cfg.out, "report file");
  };

  auto* check_site = app.add_subcommand("check-site", "verify the coverage axioms");
  common(check_site);
  check_site->add_option("--cert", cfg.cert, "write filler certificates");

  auto* check_bf = app.add_subcommand("check-bf", "verify BF1-BF4 for the weak equivalences");
  common(check_bf);
  check_bf->add_option("--cert", cfg.cert, "write the certificate bundle");

  auto* we = app.add_subcommand("we", "decide whether a 1-cell is a weak equivalence");
  common(we);
  we->add_option("--cell", cfg.cell, "1-cell name")->required();

  auto* homcat = app.add_subcommand("homcat", "enumerate hom-categories of the localisation");
  common(homcat);
  homcat->add_option("--x", cfg.x, "source object (default: all)");
  homcat->add_option("--y", cfg.y, "target object (default: all)");
  homcat->add_option("--cert", cfg.cert, "write equivalence certificates for every representative");
  homcat->add_flag("--no-vcomp", cfg.no_vcomp, "skip the vertical composition table");

  auto* slice = app.add_subcommand("slice", "materialize a slice over an object as a window file");
  common(slice);
  slice->add_option("--over", cfg.over, "object to slice over")->required();
  slice->add_option("--variant", cfg.variant, "lax, strict or groupoid");
  slice->add_flag("--check", cfg.check, "verify the slice site and BF1-BF4 on it");
  slice->add_option("--cert", cfg.cert, "with --check, write the slice certificate bundle");

  auto* validate = app.add_subcommand("validate-cert", "re-validate a certificate bundle");
  common(validate);
  validate->add_option("--cert", cfg.cert, "certificate bundle")->required();

  auto* render = app.add_subcommand("render-dot", "emit a diagram as Graphviz");
  common(render);
  render->add_option("--span", cfg.span, "BACK,FWD legs of a span");
  render->add_option("--cell", cfg.cell, "render the span of a single 1-cell");
  render->add_option("--cert", cfg.cert, "certificate bundle");
  render->add_option("--index", cfg.index, "certificate index");
  render->add_option("--dot", cfg.dot, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*check_site) return cmd_check_site(cfg);
    if (*check_bf) return cmd_check_bf(cfg);
    if (*we) return cmd_we(cfg);
    if (*homcat) return cmd_homcat(cfg);
    if (*slice) return cmd_slice(cfg);
    if (*validate) return cmd_validate_cert(cfg);
    if (*render) return cmd_render_dot(cfg);
  } catch (const std::out_of_range& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == ErrorKind::CrossCheckFailure || e.kind() == ErrorKind::AxiomViolation ? kCounterexample
                                                                                            : kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
