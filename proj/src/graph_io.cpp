#include "regfactor/graph_io.hpp"

#include "regfactor/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

namespace regfactor {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::size_t parse_count(std::string_view tok, std::size_t line, const char* what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, std::string("expected non-negative integer for ") + what +
                                   ", got '" + std::string(tok) + "'");
    return value;
}

bool is_blank(std::string_view line) {
    return std::all_of(line.begin(), line.end(),
                       [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

} // namespace

std::string write_mgf(const Multigraph& g) {
    std::ostringstream out;
    out << "mgf " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const auto& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Multigraph read_mgf(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::size_t n = 0, m = 0;
    bool have_header = false;
    while (!have_header && std::getline(in, line)) {
        ++lineno;
        if (is_blank(line))
            continue;
        auto tok = split_ws(line);
        if (tok.size() != 3 || tok[0] != "mgf")
            throw ParseError(lineno, "expected header 'mgf <n> <m>'");
        n = parse_count(tok[1], lineno, "vertex count");
        m = parse_count(tok[2], lineno, "edge count");
        have_header = true;
    }
    if (!have_header)
        throw ParseError(lineno, "empty input, expected 'mgf <n> <m>' header");

    Multigraph g(n);
    std::size_t read = 0;
    while (read < m && std::getline(in, line)) {
        ++lineno;
        auto tok = split_ws(line);
        if (tok.size() != 2)
            throw ParseError(lineno, "expected edge line '<u> <v>'");
        auto u = parse_count(tok[0], lineno, "endpoint");
        auto v = parse_count(tok[1], lineno, "endpoint");
        if (u >= n || v >= n)
            throw ParseError(lineno, "endpoint out of range for " + std::to_string(n) + " vertices");
        g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
        ++read;
    }
    if (read < m)
        throw ParseError(lineno, "expected " + std::to_string(m) + " edges, found " +
                                     std::to_string(read));
    while (std::getline(in, line)) {
        ++lineno;
        if (!is_blank(line))
            throw ParseError(lineno, "unexpected content after the last edge");
    }
    return g;
}

Multigraph parse_mgf(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_mgf(in);
}

// graph6 -----------------------------------------------------------------------

namespace {

void append_size(std::string& out, std::size_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else if (n <= 68719476735ULL) {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        throw DomainError("graph too large for graph6");
    }
}

} // namespace

std::string write_graph6(const Multigraph& g) {
    if (!g.is_simple())
        throw DomainError("graph6 requires a simple graph (no loops or parallel edges)");
    const std::size_t n = g.num_vertices();
    std::vector<bool> adj(n * n, false);
    for (const auto& e : g.edges()) {
        adj[e.u * n + e.v] = true;
        adj[e.v * n + e.u] = true;
    }
    std::string out;
    append_size(out, n);
    int bits = 0, acc = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (adj[i * n + j] ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                bits = acc = 0;
            }
        }
    }
    if (bits) {
        acc <<= 6 - bits;
        out.push_back(static_cast<char>(acc + 63));
    }
    return out;
}

Multigraph parse_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.starts_with(header))
        text.remove_prefix(header.size());
    if (text.empty())
        throw ParseError(1, "empty graph6 string");
    for (char c : text)
        if (c < 63 || c > 126)
            throw ParseError(1, "invalid graph6 character");

    std::size_t pos = 0;
    auto next = [&]() -> std::size_t {
        if (pos >= text.size())
            throw ParseError(1, "truncated graph6 string");
        return static_cast<std::size_t>(text[pos++] - 63);
    };
    std::size_t n = 0;
    if (text[0] != 126) {
        n = next();
    } else if (text.size() > 1 && text[1] != 126) {
        ++pos;
        for (int i = 0; i < 3; ++i)
            n = (n << 6) | next();
    } else {
        pos += 2;
        for (int i = 0; i < 6; ++i)
            n = (n << 6) | next();
    }
    const std::size_t pairs = n * (n ? n - 1 : 0) / 2;
    const std::size_t expected = (pairs + 5) / 6;
    if (text.size() - pos != expected)
        throw ParseError(1, "graph6 body has " + std::to_string(text.size() - pos) +
                                " bytes, expected " + std::to_string(expected));
    Multigraph g(n);
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            const auto byte = static_cast<std::size_t>(text[pos + k / 6] - 63);
            if ((byte >> (5 - k % 6)) & 1U)
                g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
        }
    }
    return g;
}

std::string write_dot(const Multigraph& g, std::string_view name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        out << "  " << v << ";\n";
    for (const auto& e : g.edges())
        out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

Multigraph parse_graph_auto(std::string_view text) {
    auto tok = split_ws(text.substr(0, std::min<std::size_t>(text.size(), 64)));
    if (!tok.empty() && tok[0] == "mgf")
        return parse_mgf(text);
    return parse_graph6(text);
}

Multigraph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(0, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph_auto(buf.str());
}

} // namespace regfactor
