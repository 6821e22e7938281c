#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "bifrac/window.hpp"

namespace bifrac {

using Json = nlohmann::ordered_json;

inline constexpr const char* kWindowSchema = "bifrac-window/1";

/// Coverage declaration carried by an instance file: either a named predicate
/// ("jt_surjections", "identities_only") or an explicit list of 1-cell names.
struct CoverageDecl {
  std::variant<std::string, std::vector<std::string>> spec;

  bool named() const { return std::holds_alternative<std::string>(spec); }
};

struct WindowDocument {
  Window window;
  std::optional<CoverageDecl> coverage;
};

Json window_to_json(const Window& w, const std::optional<CoverageDecl>& coverage = std::nullopt);
/// Throws Error(MalformedTable) for unknown cell names and Error(Input) for
/// schema problems.
WindowDocument window_from_json(const Json& doc);

std::string dump_canonical(const Json& doc);

/// Hex SHA-256 of the canonical serialization.
std::string content_hash(const Json& doc);
std::string content_hash(const Window& w);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace bifrac
