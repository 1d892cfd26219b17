#include "fsk/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fsk {
namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";
constexpr std::uint64_t kMaxOrder = (std::uint64_t{1} << 36) - 1;

void append_order(std::string& out, std::uint64_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    } else {
        out.append("~~");
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
}

std::string_view trim_line_end(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
    const std::uint64_t n = g.vertex_count();
    if (n > kMaxOrder) throw std::invalid_argument("graph too large for graph6");
    std::string out;
    append_order(out, n);
    unsigned acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        const VertexSet& col = g.neighbors(j);
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (col.contains(i) ? 1U : 0U);
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

Graph decode_graph6(std::string_view text) {
    std::size_t pos = 0;
    if (text.starts_with(kHeader)) pos = kHeader.size();
    const std::string_view body = trim_line_end(text);
    if (body.size() <= pos) throw ParseError("graph6: missing order byte", pos);

    auto byte_at = [&](std::size_t i) -> unsigned {
        if (i >= body.size()) throw ParseError("graph6: truncated input", body.size());
        const auto c = static_cast<unsigned char>(body[i]);
        if (c < 63 || c > 126) throw ParseError("graph6: byte outside printable range 63..126", i);
        return c - 63U;
    };

    std::uint64_t n = 0;
    if (byte_at(pos) < 63) {
        n = byte_at(pos);
        pos += 1;
    } else if (pos + 1 < body.size() && byte_at(pos + 1) == 63) {
        for (std::size_t i = 0; i < 6; ++i) n = (n << 6) | byte_at(pos + 2 + i);
        pos += 8;
    } else {
        for (std::size_t i = 0; i < 3; ++i) n = (n << 6) | byte_at(pos + 1 + i);
        pos += 4;
    }

    const unsigned __int128 wide_bits = static_cast<unsigned __int128>(n) * (n - (n > 0 ? 1 : 0)) / 2;
    const unsigned __int128 wide_bytes = (wide_bits + 5) / 6;
    if (body.size() - pos < wide_bytes) throw ParseError("graph6: truncated adjacency bit vector", body.size());
    const auto bits = static_cast<std::uint64_t>(wide_bits);
    const auto bytes = static_cast<std::uint64_t>(wide_bytes);
    if (body.size() - pos > bytes) throw ParseError("graph6: trailing bytes after adjacency bit vector", pos + bytes);

    Graph g(n);
    std::uint64_t index = 0;
    Vertex i = 0;
    Vertex j = 1;
    for (std::uint64_t b = 0; b < bytes; ++b) {
        const unsigned value = byte_at(pos + b);
        for (int shift = 5; shift >= 0; --shift) {
            const bool set = ((value >> shift) & 1U) != 0;
            if (index < bits) {
                if (set) g.add_edge(i, j);
                if (++i == j) {
                    i = 0;
                    ++j;
                }
            } else if (set) {
                throw ParseError("graph6: nonzero padding bits", pos + b);
            }
            ++index;
        }
    }
    return g;
}

std::string encode_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

namespace {

// Tokenizer that remembers offsets for error messages.
struct IntReader {
    std::string_view text;
    std::size_t pos = 0;

    bool at_end() {
        skip_space();
        return pos >= text.size();
    }
    void skip_space() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
            ++pos;
    }
    std::uint64_t next(const char* what) {
        skip_space();
        if (pos >= text.size()) throw ParseError(std::string("edge list: expected ") + what, pos);
        std::uint64_t value = 0;
        const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{} || ptr == text.data() + pos)
            throw ParseError(std::string("edge list: expected ") + what, pos);
        pos = static_cast<std::size_t>(ptr - text.data());
        return value;
    }
};

}  // namespace

Graph decode_edge_list(std::string_view text) {
    IntReader reader{text};
    const auto n = reader.next("vertex count");
    const auto m = reader.next("edge count");
    Graph g(n);
    for (std::uint64_t e = 0; e < m; ++e) {
        const std::size_t at = reader.pos;
        const auto u = reader.next("edge endpoint");
        const auto v = reader.next("edge endpoint");
        if (u >= n || v >= n) throw ParseError("edge list: endpoint out of range", at);
        if (u == v) throw ParseError("edge list: loop", at);
        if (!g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
            throw ParseError("edge list: duplicate edge", at);
    }
    if (!reader.at_end()) throw ParseError("edge list: trailing content", reader.pos);
    return g;
}

GraphFormat detect_format(std::string_view text) {
    const std::string_view line = text.substr(0, text.find('\n'));
    bool digits = false;
    bool space = false;
    for (char c : line) {
        if (c >= '0' && c <= '9') digits = true;
        else if (c == ' ' || c == '\t' || c == '\r') space = true;
        else return GraphFormat::Graph6;
    }
    return digits && space ? GraphFormat::EdgeList : GraphFormat::Graph6;
}

Graph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    if (detect_format(text) == GraphFormat::EdgeList) return decode_edge_list(text);
    return decode_graph6(text.substr(0, text.find('\n')));
}

void write_graph_file(const std::filesystem::path& path, const Graph& g, GraphFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    if (format == GraphFormat::Graph6) out << encode_graph6(g) << '\n';
    else out << encode_edge_list(g);
}

}  // namespace fsk
