#include "bifrac/search.hpp"

#include <unordered_set>

namespace bifrac {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Found: return "Found";
    case Outcome::NotFound: return "NotFound";
    case Outcome::BudgetExhausted: return "NotFoundWithinBound";
  }
  return "?";
}

FfVerdict is_ff_one_cell(const TwoCategory& k, OneCell q) {
  const ObjId u = k.source(q);
  for (ObjId z : k.objects()) {
    const auto homs = k.hom(z, u);
    for (OneCell a : homs) {
      const OneCell qa = k.compose(q, a);
      for (OneCell b : homs) {
        const OneCell qb = k.compose(q, b);
        std::unordered_map<TwoCell, TwoCell> preimage;
        for (TwoCell c : k.cells(a, b)) {
          const TwoCell img = k.whisker_left(q, c);
          auto [it, fresh] = preimage.emplace(img, c);
          if (!fresh) return {false, FfWitness{FfWitness::Failure::NotFaithful, z, a, b, {it->second, c}}};
        }
        for (TwoCell d : k.cells(qa, qb)) {
          if (!preimage.count(d)) return {false, FfWitness{FfWitness::Failure::NotFull, z, a, b, {d}}};
        }
      }
    }
  }
  return {};
}

std::string describe(const TwoCategory& k, const FfWitness& w) {
  std::string out = w.failure == FfWitness::Failure::NotFull ? "not full" : "not faithful";
  out += " at z=" + k.name(w.z) + " between " + k.name(w.a) + " and " + k.name(w.b) + ":";
  for (TwoCell c : w.cells) out += " " + k.name(c);
  return out;
}

SearchResult<Pseudoinverse> find_pseudoinverse(const TwoCategory& k, OneCell f, const SearchBudget& budget) {
  Meter meter(budget);
  const ObjId x = k.source(f), y = k.target(f);
  const OneCell id_x = k.identity(x), id_y = k.identity(y);
  for (OneCell g : k.hom(y, x)) {
    if (!meter.charge()) break;
    auto unit = find_invertible(k, id_x, k.compose(g, f));
    if (!unit) continue;
    auto counit = find_invertible(k, k.compose(f, g), id_y);
    if (!counit) continue;
    return SearchResult<Pseudoinverse>::found({f, g, *unit, *counit});
  }
  return SearchResult<Pseudoinverse>::none(meter.miss());
}

bool validate(const TwoCategory& k, const Pseudoinverse& p) {
  const ObjId x = k.source(p.f), y = k.target(p.f);
  if (k.source(p.g) != y || k.target(p.g) != x) return false;
  if (k.source(p.unit) != k.identity(x) || k.target(p.unit) != k.compose(p.g, p.f)) return false;
  if (k.source(p.counit) != k.compose(p.f, p.g) || k.target(p.counit) != k.identity(y)) return false;
  return is_invertible(k, p.unit) && is_invertible(k, p.counit);
}

}  // namespace bifrac
