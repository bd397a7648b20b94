#pragma once

#include <string>
#include <string_view>

#include "alphaidx/graph.hpp"

namespace alphaidx {

/// graph6 decoding. Leading ">>graph6<<" and surrounding whitespace are
/// stripped. Throws ParseError with the byte offset of the defect.
Graph graph6_decode(std::string_view text);
std::string graph6_encode(const Graph& g);

/// One "u v" pair per line, 0-indexed; '#' starts a comment. The order is
/// the largest index plus one. ParseError offsets are 1-based line numbers.
Graph edgelist_decode(std::string_view text);
std::string edgelist_encode(const Graph& g);

}  // namespace alphaidx
