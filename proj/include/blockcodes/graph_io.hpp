#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "blockcodes/graph.hpp"

namespace blockcodes {

enum class GraphFormat { Graph6, EdgeList };

enum class ParseErrorKind {
    MalformedHeader,
    MalformedBody,
    VertexOutOfRange,
    DuplicateEdge,
    SelfLoop,
    TooLarge,
};

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ParseErrorKind kind() const { return kind_; }

private:
    ParseErrorKind kind_;
};

/// graph6 (standard bit-packed, optional ">>graph6<<" prefix) or the edge
/// list "n m" followed by m lines "u v", 0-based. Trailing whitespace is
/// ignored.
Graph parse_graph(std::string_view text, GraphFormat format);

/// graph6 without header or newline; edge list with sorted edges and a
/// trailing newline.
std::string emit_graph(const Graph& g, GraphFormat format);

/// Edge list if the first non-blank line holds two integers, graph6 otherwise.
GraphFormat detect_format(std::string_view text);

/// One graph per non-blank line, graph6 only.
std::vector<Graph> parse_graph6_lines(std::string_view text);

const char* format_name(GraphFormat f);
GraphFormat parse_format_name(std::string_view name);

}  // namespace blockcodes
