#include "skewbrace/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace skewbrace::io {

namespace {

using nlohmann::json;

bool is_json(std::string_view input) {
  const auto pos = input.find_first_not_of(" \t\r\n");
  return pos != std::string_view::npos && input[pos] == '{';
}

json parse_json(std::string_view input) {
  try {
    return json::parse(input);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kMalformed, std::string("invalid JSON: ") + e.what());
  }
}

int json_order(const json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
    throw Error(ErrorCode::kMalformed, "JSON object needs an integer field \"n\"");
  }
  const int n = doc["n"].get<int>();
  if (n <= 0) throw Error(ErrorCode::kMalformed, "\"n\" must be positive");
  return n;
}

GroupTable table_from_json(const json& doc, const char* field, int n) {
  if (!doc.contains(field) || !doc[field].is_array()) {
    throw Error(ErrorCode::kMalformed, std::string("missing array field \"") + field + "\"");
  }
  const json& rows = doc[field];
  if (rows.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::kMalformed, std::string("\"") + field + "\" must have n rows");
  }
  std::vector<Element> cells;
  cells.reserve(static_cast<std::size_t>(n) * n);
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
      throw Error(ErrorCode::kMalformed, std::string("\"") + field + "\" rows must have n entries");
    }
    for (const json& v : row) {
      if (!v.is_number_integer()) {
        throw Error(ErrorCode::kMalformed, std::string("\"") + field + "\" entries must be integers");
      }
      cells.push_back(v.get<Element>());
    }
  }
  return validate_table(n, cells);
}

// Reads one text Cayley block starting at `lines[pos]`; advances `pos`.
GroupTable table_from_lines(const std::vector<std::string>& lines, std::size_t& pos) {
  auto malformed = [](const std::string& what) { return Error(ErrorCode::kMalformed, what); };
  if (pos >= lines.size()) throw malformed("expected a table size line");
  int n = 0;
  {
    std::istringstream header(lines[pos]);
    std::string extra;
    if (!(header >> n) || (header >> extra)) {
      throw malformed("line " + std::to_string(pos + 1) + ": expected a single integer n");
    }
  }
  if (n <= 0) throw malformed("table size must be positive");
  ++pos;
  std::vector<Element> cells;
  cells.reserve(static_cast<std::size_t>(n) * n);
  for (int row = 0; row < n; ++row, ++pos) {
    if (pos >= lines.size()) throw malformed("table ends after " + std::to_string(row) + " rows");
    std::istringstream ls(lines[pos]);
    long long v = 0;
    int count = 0;
    while (ls >> v) {
      // Anything that does not fit an Element is out of range either way.
      const bool fits = v >= std::numeric_limits<Element>::min() &&
                        v <= std::numeric_limits<Element>::max();
      cells.push_back(fits ? static_cast<Element>(v) : -1);
      ++count;
    }
    if (!ls.eof()) {
      throw malformed("line " + std::to_string(pos + 1) + ": non-integer entry");
    }
    if (count != n) {
      throw malformed("line " + std::to_string(pos + 1) + ": expected " + std::to_string(n) +
                      " entries, got " + std::to_string(count));
    }
  }
  return validate_table(n, cells);
}

std::vector<std::string> split_lines(std::string_view input) {
  std::vector<std::string> lines;
  std::istringstream is{std::string(input)};
  for (std::string line; std::getline(is, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t") == std::string::npos;
}

void expect_only_blank(const std::vector<std::string>& lines, std::size_t pos) {
  for (; pos < lines.size(); ++pos) {
    if (!is_blank(lines[pos])) {
      throw Error(ErrorCode::kMalformed, "unexpected content on line " + std::to_string(pos + 1));
    }
  }
}

void write_rows(std::ostringstream& os, const GroupTable& g, const char* indent) {
  const int n = g.order();
  os << "[\n";
  for (Element a = 0; a < n; ++a) {
    os << indent << "  [";
    for (Element b = 0; b < n; ++b) os << (b ? ", " : "") << g(a, b);
    os << "]" << (a + 1 < n ? "," : "") << "\n";
  }
  os << indent << "]";
}

void write_brace_object(std::ostringstream& os, const SkewBrace& b, const char* indent) {
  const std::string inner = std::string(indent) + "  ";
  os << "{\n" << inner << "\"n\": " << b.order() << ",\n" << inner << "\"dot\": ";
  write_rows(os, b.dot(), inner.c_str());
  os << ",\n" << inner << "\"circ\": ";
  write_rows(os, b.circ(), inner.c_str());
  os << "\n" << indent << "}";
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kMalformed, "cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

GroupTable parse_group_table(std::string_view input) {
  if (is_json(input)) {
    const json doc = parse_json(input);
    return table_from_json(doc, "table", json_order(doc));
  }
  const auto lines = split_lines(input);
  std::size_t pos = 0;
  while (pos < lines.size() && is_blank(lines[pos])) ++pos;
  GroupTable g = table_from_lines(lines, pos);
  expect_only_blank(lines, pos);
  return g;
}

std::string format_group_table_text(const GroupTable& g) {
  std::ostringstream os;
  const int n = g.order();
  os << n << "\n";
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) os << (b ? " " : "") << g(a, b);
    os << "\n";
  }
  return os.str();
}

std::string format_group_table_json(const GroupTable& g) {
  std::ostringstream os;
  os << "{\n  \"n\": " << g.order() << ",\n  \"table\": ";
  write_rows(os, g, "  ");
  os << "\n}\n";
  return os.str();
}

TablePair parse_table_pair(std::string_view input) {
  if (is_json(input)) {
    const json doc = parse_json(input);
    const int n = json_order(doc);
    GroupTable dot = table_from_json(doc, "dot", n);
    GroupTable circ = table_from_json(doc, "circ", n);
    return {std::move(dot), std::move(circ)};
  }
  const auto lines = split_lines(input);
  std::size_t pos = 0;
  while (pos < lines.size() && is_blank(lines[pos])) ++pos;
  GroupTable dot = table_from_lines(lines, pos);
  if (pos >= lines.size() || !is_blank(lines[pos])) {
    throw Error(ErrorCode::kMalformed, "expected one blank line between the dot and circ tables");
  }
  ++pos;
  GroupTable circ = table_from_lines(lines, pos);
  expect_only_blank(lines, pos);
  if (dot.order() != circ.order()) {
    throw Error(ErrorCode::kCarrierMismatch, "dot and circ tables have different sizes");
  }
  return {std::move(dot), std::move(circ)};
}

SkewBrace parse_brace(std::string_view input) {
  auto [dot, circ] = parse_table_pair(input);
  return make_brace(std::move(dot), std::move(circ));
}

std::string format_brace_json(const SkewBrace& b) {
  std::ostringstream os;
  write_brace_object(os, b, "");
  os << "\n";
  return os.str();
}

std::string format_brace_text(const SkewBrace& b) {
  return format_group_table_text(b.dot()) + "\n" + format_group_table_text(b.circ());
}

bool looks_like_rmap(std::string_view input) {
  if (!is_json(input)) return false;
  const json doc = parse_json(input);
  return doc.is_object() && doc.contains("r");
}

YbeMap parse_rmap_json(std::string_view input) {
  const json doc = parse_json(input);
  const int n = json_order(doc);
  if (!doc.contains("r") || !doc["r"].is_array() || doc["r"].size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::kMalformed, "\"r\" must be an array of n rows");
  }
  std::vector<ElementPair> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (const json& row : doc["r"]) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
      throw Error(ErrorCode::kMalformed, "\"r\" rows must have n entries");
    }
    for (const json& pair : row) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
          !pair[1].is_number_integer()) {
        throw Error(ErrorCode::kMalformed, "\"r\" entries must be [first, second] integer pairs");
      }
      entries.emplace_back(pair[0].get<Element>(), pair[1].get<Element>());
    }
  }
  return YbeMap(n, std::move(entries));
}

std::string format_rmap_json(const YbeMap& r) {
  const int n = r.order();
  std::ostringstream os;
  os << "{\n  \"n\": " << n << ",\n  \"r\": [\n";
  for (Element a = 0; a < n; ++a) {
    os << "    [";
    for (Element b = 0; b < n; ++b) {
      const auto& [s, t] = r(a, b);
      os << (b ? ", " : "") << "[" << s << ", " << t << "]";
    }
    os << "]" << (a + 1 < n ? "," : "") << "\n";
  }
  os << "  ]\n}\n";
  return os.str();
}

std::string format_rmap_csv(const YbeMap& r) {
  std::ostringstream os;
  for (Element a = 0; a < r.order(); ++a) {
    for (Element b = 0; b < r.order(); ++b) {
      const auto& [s, t] = r(a, b);
      os << a << "," << b << "," << s << "," << t << "\n";
    }
  }
  return os.str();
}

std::string format_catalog_json(const BraceCatalog& catalog, const CatalogSummary& summary) {
  std::ostringstream os;
  os << "{\n"
     << "  \"order\": " << catalog.order << ",\n"
     << "  \"up_to_iso\": " << (catalog.up_to_iso ? "true" : "false") << ",\n"
     << "  \"count_raw\": " << summary.count_raw << ",\n"
     << "  \"count_up_to_iso\": " << summary.count_up_to_iso << ",\n"
     << "  \"tool_version\": " << json(summary.tool_version).dump() << ",\n"
     << "  \"braces\": [";
  for (std::size_t i = 0; i < catalog.braces.size(); ++i) {
    os << (i ? ",\n    " : "\n    ");
    write_brace_object(os, catalog.braces[i], "    ");
  }
  os << (catalog.braces.empty() ? "]\n" : "\n  ]\n") << "}\n";
  return os.str();
}

}  // namespace skewbrace::io
