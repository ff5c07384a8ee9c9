#include "blockcodes/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace blockcodes {

namespace {

constexpr char kBias = 63;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        auto pos = text.find('\n');
        std::string_view line = text.substr(0, pos);
        line = trim(line);
        if (!line.empty()) lines.push_back(line);
        if (pos == std::string_view::npos) break;
        text.remove_prefix(pos + 1);
    }
    return lines;
}

/// Parses whitespace-separated integers; false if anything else is present.
bool parse_ints(std::string_view line, std::vector<long>& out) {
    out.clear();
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size()) break;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
        if (ec != std::errc{} || ptr != line.data() + j) return false;
        out.push_back(value);
        i = j;
    }
    return true;
}

Graph parse_edge_list(std::string_view text) {
    auto lines = split_lines(text);
    if (lines.empty()) throw ParseError(ParseErrorKind::MalformedHeader, "edge list: missing header line");
    std::vector<long> nums;
    if (!parse_ints(lines[0], nums) || nums.size() != 2 || nums[0] < 0 || nums[1] < 0) {
        throw ParseError(ParseErrorKind::MalformedHeader, "edge list: header must be \"n m\"");
    }
    const long n = nums[0];
    const long m = nums[1];
    if (n > kMaxVertices) {
        throw ParseError(ParseErrorKind::TooLarge, "edge list: order " + std::to_string(n) + " exceeds " +
                                                       std::to_string(kMaxVertices));
    }
    if (static_cast<long>(lines.size()) - 1 != m) {
        throw ParseError(ParseErrorKind::MalformedBody, "edge list: expected " + std::to_string(m) + " edge lines, got " +
                                                            std::to_string(lines.size() - 1));
    }
    std::vector<VertexSet> adj(static_cast<std::size_t>(n));
    for (long i = 1; i <= m; ++i) {
        if (!parse_ints(lines[i], nums) || nums.size() != 2) {
            throw ParseError(ParseErrorKind::MalformedBody, "edge list: line " + std::to_string(i + 1) + " is not \"u v\"");
        }
        const long u = nums[0];
        const long v = nums[1];
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw ParseError(ParseErrorKind::VertexOutOfRange, "edge list: vertex index out of range on line " +
                                                                   std::to_string(i + 1));
        }
        if (u == v) throw ParseError(ParseErrorKind::SelfLoop, "edge list: self-loop on line " + std::to_string(i + 1));
        if (adj[u].contains(v)) {
            throw ParseError(ParseErrorKind::DuplicateEdge, "edge list: duplicate edge on line " + std::to_string(i + 1));
        }
        adj[u].insert(static_cast<Vertex>(v));
        adj[v].insert(static_cast<Vertex>(u));
    }
    return Graph::from_adjacency(std::move(adj));
}

Graph parse_graph6(std::string_view s) {
    s = trim(s);
    if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
    if (s.empty()) throw ParseError(ParseErrorKind::MalformedHeader, "graph6: empty input");
    for (char c : s) {
        if (c < kBias || c > 126) throw ParseError(ParseErrorKind::MalformedBody, "graph6: byte outside 63..126");
    }
    long n = 0;
    std::size_t pos = 0;
    if (s[0] != '~') {
        n = s[0] - kBias;
        pos = 1;
    } else if (s.size() >= 2 && s[1] == '~') {
        throw ParseError(ParseErrorKind::TooLarge, "graph6: 8-byte order header exceeds supported order");
    } else {
        if (s.size() < 4) throw ParseError(ParseErrorKind::MalformedHeader, "graph6: truncated order header");
        n = (long{s[1] - kBias} << 12) | (long{s[2] - kBias} << 6) | long{s[3] - kBias};
        if (n < 63) throw ParseError(ParseErrorKind::MalformedHeader, "graph6: non-minimal order header");
        pos = 4;
    }
    if (n > kMaxVertices) {
        throw ParseError(ParseErrorKind::TooLarge, "graph6: order " + std::to_string(n) + " exceeds " +
                                                       std::to_string(kMaxVertices));
    }
    const long bits = n * (n - 1) / 2;
    const long chars = (bits + 5) / 6;
    if (static_cast<long>(s.size() - pos) != chars) {
        throw ParseError(ParseErrorKind::MalformedBody, "graph6: body length " + std::to_string(s.size() - pos) +
                                                            ", expected " + std::to_string(chars));
    }
    std::vector<VertexSet> adj(static_cast<std::size_t>(n));
    long k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int byte = s[pos + k / 6] - kBias;
            if ((byte >> (5 - k % 6)) & 1) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    for (; k < chars * 6; ++k) {
        const int byte = s[pos + k / 6] - kBias;
        if ((byte >> (5 - k % 6)) & 1) throw ParseError(ParseErrorKind::MalformedBody, "graph6: nonzero padding bits");
    }
    return Graph::from_adjacency(std::move(adj));
}

std::string emit_graph6(const Graph& g) {
    const int n = g.n();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
        out.push_back(static_cast<char>((n & 0x3f) + kBias));
    }
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::Graph6 ? parse_graph6(text) : parse_edge_list(text);
}

std::string emit_graph(const Graph& g, GraphFormat format) {
    if (format == GraphFormat::Graph6) return emit_graph6(g);
    std::ostringstream os;
    auto edges = g.edges();
    os << g.n() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) os << u << ' ' << v << '\n';
    return os.str();
}

GraphFormat detect_format(std::string_view text) {
    auto lines = split_lines(text);
    std::vector<long> nums;
    if (!lines.empty() && parse_ints(lines[0], nums) && nums.size() == 2) return GraphFormat::EdgeList;
    return GraphFormat::Graph6;
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
    std::vector<Graph> out;
    for (auto line : split_lines(text)) out.push_back(parse_graph6(line));
    return out;
}

const char* format_name(GraphFormat f) { return f == GraphFormat::Graph6 ? "graph6" : "edgelist"; }

GraphFormat parse_format_name(std::string_view name) {
    if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
    if (name == "edgelist" || name == "edge-list") return GraphFormat::EdgeList;
    throw std::invalid_argument("unknown graph format: " + std::string(name));
}

}  // namespace blockcodes
