#pragma once

#include <string>
#include <string_view>

#include "c1p/pqtree.hpp"

namespace c1p {

// S-expression form: a leaf is its bare token, an internal node is
// `(P child ...)` or `(Q child ...)`, children separated by single spaces.
std::string to_sexpr(const PqNode& node);
std::string to_sexpr(const PqTree& tree);

/// Throws ParseError on bad syntax, MalformedTree on a leafless tree.
PqTree parse_sexpr(std::string_view text);

// JSON mirror: {"kind":"P"|"Q","children":[...]} or {"kind":"leaf","label":"a"}.
std::string to_json(const PqTree& tree);
PqTree parse_tree_json(std::string_view text);

/// JSON if the first non-blank character is `{`, s-expression otherwise.
PqTree parse_tree(std::string_view text);

}  // namespace c1p
