#pragma once

#include <string>

#include "skewbrace/brace.hpp"
#include "skewbrace/group.hpp"

namespace skewbrace::testing {

/// x o y = x + y + 2xy (mod 4). As a table this is exactly xor on {0,1,2,3}.
inline GroupTable radical_circ_z4() {
  return table_from_operation(4, [](Element x, Element y) { return (x + y + 2 * x * y) % 4; });
}

/// Z/4 with the x + y + 2xy circle operation.
inline SkewBrace radical_brace_z4() { return make_brace(cyclic_group(4), radical_circ_z4()); }

/// A relabelled copy of Z/4 (generator 1 squares to 3) that violates the
/// compatibility law against Z/4 addition; first failing triple (1, 1, 1).
inline GroupTable incompatible_circ_z4() {
  return validate_table({{0, 1, 2, 3}, {1, 3, 0, 2}, {2, 0, 3, 1}, {3, 2, 1, 0}});
}

inline std::string data_path(const std::string& name) {
  return std::string(SKEWBRACE_TEST_DATA_DIR) + "/" + name;
}

}  // namespace skewbrace::testing
