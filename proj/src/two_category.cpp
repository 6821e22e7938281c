#include "bifrac/two_category.hpp"

namespace bifrac {

TwoCell hcomp(const TwoCategory& k, TwoCell b, TwoCell a) {
  return k.vcomp(k.whisker_left(k.target(b), a), k.whisker_right(b, k.source(a)));
}

std::optional<TwoCell> inverse(const TwoCategory& k, TwoCell a) {
  const OneCell f = k.source(a);
  const OneCell g = k.target(a);
  const TwoCell id_f = k.identity(f);
  const TwoCell id_g = k.identity(g);
  for (TwoCell b : k.cells(g, f)) {
    if (k.vcomp(b, a) == id_f && k.vcomp(a, b) == id_g) return b;
  }
  return std::nullopt;
}

bool is_invertible(const TwoCategory& k, TwoCell a) { return inverse(k, a).has_value(); }

std::optional<TwoCell> find_invertible(const TwoCategory& k, OneCell f, OneCell g) {
  for (TwoCell a : k.cells(f, g)) {
    if (is_invertible(k, a)) return a;
  }
  return std::nullopt;
}

bool is_identity(const TwoCategory& k, OneCell f) {
  return k.source(f) == k.target(f) && k.identity(k.source(f)) == f;
}

TwoCell vchain(const TwoCategory& k, std::initializer_list<TwoCell> cells) {
  auto it = cells.begin();
  TwoCell acc = *it++;
  for (; it != cells.end(); ++it) acc = k.vcomp(*it, acc);
  return acc;
}

}  // namespace bifrac
