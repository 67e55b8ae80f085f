#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "skewbrace/brace.hpp"
#include "skewbrace/group.hpp"
#include "skewbrace/search.hpp"
#include "skewbrace/ybe.hpp"

// File formats
//
// Cayley table, text:   "n" on the first line, then n lines of n integers.
// Cayley table, JSON:   {"n": n, "table": [[...], ...]}
// Brace, JSON:          {"n": n, "dot": [[...]], "circ": [[...]]}
// Brace, text:          dot table block, one blank line, circ table block.
// R-map, JSON:          {"n": n, "r": [[[s, t], ...], ...]}  with r[a][b] = R(a, b)
// R-map, CSV:           one line "a,b,first,second" per pair, no header.
//
// JSON is recognised by a leading '{' (after whitespace). Parse failures throw
// Error(kMalformed); table contents then go through validate_table().

namespace skewbrace::io {

std::string read_file(const std::filesystem::path& path);

GroupTable parse_group_table(std::string_view input);
std::string format_group_table_text(const GroupTable& g);
std::string format_group_table_json(const GroupTable& g);

/// The two tables of a brace file, before the compatibility law is checked.
struct TablePair {
  GroupTable dot;
  GroupTable circ;
};

TablePair parse_table_pair(std::string_view input);
/// parse_table_pair() followed by make_brace().
SkewBrace parse_brace(std::string_view input);
std::string format_brace_json(const SkewBrace& b);
std::string format_brace_text(const SkewBrace& b);

/// True for JSON input carrying an "r" field.
bool looks_like_rmap(std::string_view input);
YbeMap parse_rmap_json(std::string_view input);
std::string format_rmap_json(const YbeMap& r);
std::string format_rmap_csv(const YbeMap& r);

struct CatalogSummary {
  std::size_t count_raw = 0;
  std::size_t count_up_to_iso = 0;
  std::string tool_version;
};

/// {"order", "up_to_iso", "count_raw", "count_up_to_iso", "tool_version",
///  "braces": [brace objects]}
std::string format_catalog_json(const BraceCatalog& catalog, const CatalogSummary& summary);

}  // namespace skewbrace::io
