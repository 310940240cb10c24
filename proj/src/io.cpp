#include "chromatica/io.hpp"

#include "chromatica/error.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace chromatica::io {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> significant_lines(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ss(raw);
        Line line{number, {}};
        for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
    fail(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

long long to_int(const Line& line, const std::string& tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        parse_fail(line.number, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) parse_fail(line.number, "expected an integer, got '" + tok + "'");
    return v;
}

Integer to_big(const Line& line, const std::string& tok) {
    Integer v;
    std::string digits = (!tok.empty() && tok[0] == '+') ? tok.substr(1) : tok;
    if (digits.empty() || v.set_str(digits, 10) != 0)
        parse_fail(line.number, "expected an integer, got '" + tok + "'");
    return v;
}

std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::Io, "cannot open " + path);
    return in;
}

}  // namespace

Graph parse_graph(std::istream& in) {
    auto lines = significant_lines(in);
    if (lines.empty()) fail(ErrorCode::Parse, "line 1: missing header \"n m\"");
    const Line& header = lines.front();
    if (header.tokens.size() != 2) parse_fail(header.number, "header must be \"n m\"");
    long long n = to_int(header, header.tokens[0]);
    long long m = to_int(header, header.tokens[1]);
    if (n < 1) parse_fail(header.number, "vertex count must be at least 1");
    if (m < 0) parse_fail(header.number, "edge count must be nonnegative");
    if (static_cast<long long>(lines.size()) - 1 != m)
        parse_fail(header.number, "header declares " + std::to_string(m) + " edges, file has " +
                                      std::to_string(lines.size() - 1));

    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens.size() != 2) parse_fail(line.number, "edge must be \"u v\"");
        long long u = to_int(line, line.tokens[0]);
        long long v = to_int(line, line.tokens[1]);
        if (u < 1 || u > n || v < 1 || v > n)
            parse_fail(line.number, "vertex out of range 1.." + std::to_string(n));
        if (u == v) parse_fail(line.number, "loop at vertex " + std::to_string(u));
        Edge e(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        if (!seen.insert(e).second) parse_fail(line.number, "duplicate edge");
        edges.push_back(e);
    }
    return Graph(static_cast<std::size_t>(n), edges);
}

Graph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

Graph load_graph(const std::string& path) {
    auto in = open(path);
    return parse_graph(in);
}

std::string render_graph(const Graph& g) {
    std::ostringstream os;
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) os << e.u + 1 << ' ' << e.v + 1 << '\n';
    return os.str();
}

ProjLineArrangement parse_lines(std::istream& in) {
    ProjLineArrangement out;
    for (const auto& line : significant_lines(in)) {
        if (line.tokens.size() != 3) parse_fail(line.number, "line must be \"a b c\"");
        Integer a = to_big(line, line.tokens[0]);
        Integer b = to_big(line, line.tokens[1]);
        Integer c = to_big(line, line.tokens[2]);
        if (sgn(a) == 0 && sgn(b) == 0 && sgn(c) == 0) parse_fail(line.number, "zero triple is not a line");
        ProjLine l(a, b, c);
        if (out.contains(l)) parse_fail(line.number, "duplicate line after normalization");
        out.add(l);
    }
    return out;
}

ProjLineArrangement parse_lines_text(const std::string& text) {
    std::istringstream in(text);
    return parse_lines(in);
}

ProjLineArrangement load_lines(const std::string& path) {
    auto in = open(path);
    return parse_lines(in);
}

std::string render_lines(const ProjLineArrangement& a) {
    std::ostringstream os;
    for (const auto& l : a.lines()) {
        const auto& c = l.coeffs();
        os << c[0].get_str() << ' ' << c[1].get_str() << ' ' << c[2].get_str() << '\n';
    }
    return os.str();
}

}  // namespace chromatica::io
