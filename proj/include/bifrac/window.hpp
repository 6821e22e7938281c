#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bifrac/two_category.hpp"

namespace bifrac {

/// Raw carrier of a finite window: names, boundaries and composition tables
/// given by dense indices. Table rows are `{second, first, result}` in the
/// order the operation is written, e.g. compose1 row {g, f, g∘f} and
/// whisker_r row {a, h, a∘h}.
struct WindowData {
  struct CellDecl {
    std::string name;
    std::uint32_t source = 0;
    std::uint32_t target = 0;
  };
  using Row = std::array<std::uint32_t, 3>;

  std::vector<std::string> objects;
  std::vector<CellDecl> one_cells;
  std::vector<CellDecl> two_cells;
  std::vector<std::uint32_t> identity1;  // per object
  std::vector<std::uint32_t> identity2;  // per 1-cell
  std::vector<Row> compose1;
  std::vector<Row> vcomp;
  std::vector<Row> whisker_l;
  std::vector<Row> whisker_r;
};

/// A strict 2-category presented by explicit finite tables.
class Window final : public TwoCategory {
 public:
  /// Throws Error(MalformedTable) when an entry references an unknown cell,
  /// a name is duplicated, or a table row is given twice with different results.
  explicit Window(WindowData data);

  std::size_t object_count() const override { return data_.objects.size(); }
  std::size_t one_cell_count() const override { return data_.one_cells.size(); }
  std::size_t two_cell_count() const override { return data_.two_cells.size(); }

  const std::string& name(ObjId x) const override { return data_.objects[x.index()]; }
  const std::string& name(OneCell f) const override { return data_.one_cells[f.index()].name; }
  const std::string& name(TwoCell a) const override { return data_.two_cells[a.index()].name; }

  ObjId source(OneCell f) const override { return ObjId{data_.one_cells[f.index()].source}; }
  ObjId target(OneCell f) const override { return ObjId{data_.one_cells[f.index()].target}; }
  OneCell source(TwoCell a) const override { return OneCell{data_.two_cells[a.index()].source}; }
  OneCell target(TwoCell a) const override { return OneCell{data_.two_cells[a.index()].target}; }

  std::span<const OneCell> hom(ObjId x, ObjId y) const override;
  std::span<const TwoCell> cells(OneCell f, OneCell g) const override;
  std::span<const OneCell> out_of(ObjId x) const { return out_[x.index()]; }
  std::span<const OneCell> into(ObjId x) const { return in_[x.index()]; }

  OneCell identity(ObjId x) const override { return OneCell{data_.identity1[x.index()]}; }
  TwoCell identity(OneCell f) const override { return TwoCell{data_.identity2[f.index()]}; }
  OneCell compose(OneCell g, OneCell f) const override;
  TwoCell vcomp(TwoCell b, TwoCell a) const override;
  TwoCell whisker_left(OneCell h, TwoCell a) const override;
  TwoCell whisker_right(TwoCell a, OneCell h) const override;

  std::optional<OneCell> try_compose(OneCell g, OneCell f) const;
  std::optional<TwoCell> try_vcomp(TwoCell b, TwoCell a) const;
  std::optional<TwoCell> try_whisker_left(OneCell h, TwoCell a) const;
  std::optional<TwoCell> try_whisker_right(TwoCell a, OneCell h) const;

  std::optional<ObjId> find_object(const std::string& name) const override;
  std::optional<OneCell> find_one_cell(const std::string& name) const override;
  std::optional<TwoCell> find_two_cell(const std::string& name) const override;

  const WindowData& data() const { return data_; }

 private:
  using Table = std::unordered_map<std::uint64_t, std::uint32_t>;

  WindowData data_;
  Table compose1_, vcomp_, whisker_l_, whisker_r_;
  std::unordered_map<std::uint64_t, std::vector<OneCell>> hom_;
  std::unordered_map<std::uint64_t, std::vector<TwoCell>> cells_;
  std::vector<std::vector<OneCell>> out_, in_;
  std::unordered_map<std::string, std::uint32_t> object_names_, one_names_, two_names_;
};

struct Violation {
  std::string law;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

/// Exhaustive check of the strict 2-category laws: boundaries, table
/// completeness, associativity and unit laws for both compositions,
/// functoriality of whiskering and the interchange law.
ValidationReport validate_window(const Window& w);

}  // namespace bifrac
