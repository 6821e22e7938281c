#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bifrac::finset {

inline constexpr std::uint32_t kNone = UINT32_MAX;

/// A category with finitely many objects and morphisms, given by an explicit
/// composition table. Objects and morphisms are dense local indices.
class FiniteCategory {
 public:
  struct Morphism {
    std::string name;
    std::uint32_t source = 0;
    std::uint32_t target = 0;
  };
  using Triple = std::array<std::uint32_t, 3>;  // {g, f, g∘f}

  /// Throws Error(AxiomViolation) unless the data is a category.
  FiniteCategory(std::string name, std::vector<std::string> objects, std::vector<Morphism> morphisms,
                 std::vector<std::uint32_t> identities, const std::vector<Triple>& compose);

  static FiniteCategory terminal(std::string name = "1");
  static FiniteCategory discrete(std::size_t n, std::string name);
  static FiniteCategory codiscrete(std::size_t n, std::string name);
  /// One object with automorphism group Z/n.
  static FiniteCategory cyclic_group(std::size_t n, std::string name);
  /// The finite ordinal 0 → 1 → … → n-1 as a poset category.
  static FiniteCategory ordinal(std::size_t n, std::string name);
  static FiniteCategory coproduct(const FiniteCategory& a, const FiniteCategory& b, std::string name);

  const std::string& name() const { return name_; }
  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }
  const std::string& object_name(std::uint32_t o) const { return objects_[o]; }
  const Morphism& morphism(std::uint32_t m) const { return morphisms_[m]; }
  std::uint32_t source(std::uint32_t m) const { return morphisms_[m].source; }
  std::uint32_t target(std::uint32_t m) const { return morphisms_[m].target; }
  std::uint32_t identity(std::uint32_t o) const { return identities_[o]; }
  /// g∘f, or kNone when not composable.
  std::uint32_t compose(std::uint32_t g, std::uint32_t f) const { return table_[g * morphisms_.size() + f]; }
  std::span<const std::uint32_t> hom(std::uint32_t a, std::uint32_t b) const { return homs_[a * objects_.size() + b]; }

  std::optional<std::uint32_t> inverse(std::uint32_t m) const;
  bool is_groupoid() const;
  bool isomorphic(std::uint32_t a, std::uint32_t b) const;

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }
  const std::vector<std::uint32_t>& identities() const { return identities_; }
  std::vector<Triple> composition_triples() const;

  friend bool operator==(const FiniteCategory& a, const FiniteCategory& b) {
    return a.objects_ == b.objects_ && a.identities_ == b.identities_ && a.table_ == b.table_ &&
           a.same_morphisms(b);
  }

 private:
  bool same_morphisms(const FiniteCategory& o) const;

  std::string name_;
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<std::uint32_t> identities_;
  std::vector<std::uint32_t> table_;
  std::vector<std::vector<std::uint32_t>> homs_;
};

}  // namespace bifrac::finset
