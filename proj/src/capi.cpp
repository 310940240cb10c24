#include "chromatica/chromatica.h"

#include "chromatica/arrangement.hpp"
#include "chromatica/chromatic.hpp"
#include "chromatica/error.hpp"
#include "chromatica/io.hpp"
#include "chromatica/oracles.hpp"
#include "chromatica/os_coefficients.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

using namespace chromatica;

struct chrom_graph {
    Graph value;
};

struct chrom_poly {
    Poly value;
};

struct chrom_lines {
    ProjLineArrangement value;
};

namespace {

thread_local std::string last_error;

chrom_status status_of(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return CHROM_E_INVALID_ARGUMENT;
        case ErrorCode::Parse: return CHROM_E_PARSE;
        case ErrorCode::Io: return CHROM_E_IO;
        case ErrorCode::TooLarge: return CHROM_E_TOO_LARGE;
        case ErrorCode::NotPrime: return CHROM_E_NOT_PRIME;
        case ErrorCode::NonDivisible: return CHROM_E_NON_DIVISIBLE;
        case ErrorCode::EdgeAbsent: return CHROM_E_EDGE_ABSENT;
        case ErrorCode::InvalidEdge: return CHROM_E_INVALID_EDGE;
        case ErrorCode::HypothesisViolated: return CHROM_E_HYPOTHESIS_VIOLATED;
        case ErrorCode::NotIsomorphicUnderMap: return CHROM_E_NOT_ISOMORPHIC;
        case ErrorCode::Domain: return CHROM_E_DOMAIN;
        case ErrorCode::LineAlreadyPresent: return CHROM_E_LINE_PRESENT;
        case ErrorCode::EmptyArrangement: return CHROM_E_EMPTY_ARRANGEMENT;
        case ErrorCode::NonIntegral: return CHROM_E_NON_INTEGRAL;
        case ErrorCode::Internal: return CHROM_E_INTERNAL;
    }
    return CHROM_E_INTERNAL;
}

template <typename F>
chrom_status guarded(F&& body) noexcept {
    try {
        body();
        return CHROM_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return CHROM_E_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return CHROM_E_INTERNAL;
    }
}

void require(const void* p, const char* what) {
    if (!p) fail(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

chrom_rule to_c(const EdgeAdditionRule& r) {
    chrom_rule out{};
    switch (r.kind) {
        case EdgeAdditionRule::Kind::Bridge: out.kind = CHROM_RULE_BRIDGE; break;
        case EdgeAdditionRule::Kind::MinimalCycle: out.kind = CHROM_RULE_MINIMAL_CYCLE; break;
        case EdgeAdditionRule::Kind::Fallback: out.kind = CHROM_RULE_FALLBACK; break;
    }
    out.cycle_length = r.cycle_length;
    return out;
}

void to_c(const ComputationTrace& t, chrom_trace* out) {
    if (!out) return;
    out->recursion_nodes = t.recursion_nodes;
    out->memo_hits = t.memo_hits;
    out->bridge_rules = t.bridge_rules;
    out->minimal_cycle_rules = t.minimal_cycle_rules;
    out->fallback_rules = t.fallback_rules;
}

Integer from_i64(int64_t x) {
    Integer v;
    mpz_set_si(v.get_mpz_t(), static_cast<long>(x));
    return v;
}

}  // namespace

extern "C" {

const char* chrom_version(void) { return "1.0.0"; }

const char* chrom_status_name(chrom_status status) {
    switch (status) {
        case CHROM_OK: return "ok";
        case CHROM_E_INVALID_ARGUMENT: return "invalid argument";
        case CHROM_E_PARSE: return "parse error";
        case CHROM_E_IO: return "i/o error";
        case CHROM_E_TOO_LARGE: return "size limit exceeded";
        case CHROM_E_NOT_PRIME: return "not prime";
        case CHROM_E_NON_DIVISIBLE: return "not divisible";
        case CHROM_E_EDGE_ABSENT: return "edge absent";
        case CHROM_E_INVALID_EDGE: return "invalid edge";
        case CHROM_E_HYPOTHESIS_VIOLATED: return "hypothesis violated";
        case CHROM_E_NOT_ISOMORPHIC: return "not isomorphic under map";
        case CHROM_E_DOMAIN: return "domain error";
        case CHROM_E_LINE_PRESENT: return "line already present";
        case CHROM_E_EMPTY_ARRANGEMENT: return "empty arrangement";
        case CHROM_E_NON_INTEGRAL: return "non-integral";
        case CHROM_E_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* chrom_last_error(void) { return last_error.c_str(); }

void chrom_string_free(char* s) { std::free(s); }

void chrom_options_default(chrom_options* options) {
    if (!options) return;
    EngineOptions d;
    options->memoize = d.memoize ? 1 : 0;
    options->memo_max_vertices = d.memo_max_vertices;
    options->node_limit = d.node_limit;
}

chrom_status chrom_graph_create(size_t n, const uint32_t* endpoints, size_t edge_count, chrom_graph** out) {
    return guarded([&] {
        require(out, "out");
        if (edge_count) require(endpoints, "endpoints");
        std::vector<Edge> edges;
        edges.reserve(edge_count);
        for (size_t i = 0; i < edge_count; ++i) edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
        for (size_t i = 0; i < edge_count; ++i)
            if (endpoints[2 * i] == endpoints[2 * i + 1]) fail(ErrorCode::InvalidEdge, "loop");
        *out = new chrom_graph{Graph(n, edges)};
    });
}

chrom_status chrom_graph_parse(const char* text, chrom_graph** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new chrom_graph{io::parse_graph_text(text)};
    });
}

chrom_status chrom_graph_load(const char* path, chrom_graph** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = new chrom_graph{io::load_graph(path)};
    });
}

void chrom_graph_free(chrom_graph* g) { delete g; }

size_t chrom_graph_vertex_count(const chrom_graph* g) { return g ? g->value.vertex_count() : 0; }

size_t chrom_graph_edge_count(const chrom_graph* g) { return g ? g->value.edge_count() : 0; }

chrom_status chrom_graph_edge(const chrom_graph* g, size_t index, uint32_t* u, uint32_t* v) {
    return guarded([&] {
        require(g, "graph");
        if (index >= g->value.edge_count()) fail(ErrorCode::InvalidArgument, "edge index out of range");
        const Edge& e = g->value.edges()[index];
        if (u) *u = e.u;
        if (v) *v = e.v;
    });
}

chrom_status chrom_graph_render(const chrom_graph* g, char** out) {
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = dup_string(io::render_graph(g->value));
    });
}

chrom_status chrom_graph_add_edge(const chrom_graph* g, uint32_t u, uint32_t v, chrom_graph** out) {
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = new chrom_graph{g->value.with_edge(Edge(u, v))};
    });
}

chrom_status chrom_graph_delete_edge(const chrom_graph* g, uint32_t u, uint32_t v, chrom_graph** out) {
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = new chrom_graph{delete_edge(g->value, Edge(u, v))};
    });
}

chrom_status chrom_graph_contract_edge(const chrom_graph* g, uint32_t u, uint32_t v, chrom_graph** out) {
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = new chrom_graph{contract_edge(g->value, Edge(u, v))};
    });
}

chrom_status chrom_graph_canonical_key(const chrom_graph* g, char** out) {
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        static constexpr char hex[] = "0123456789abcdef";
        std::string s;
        for (unsigned char c : canonical_key(g->value).bytes) {
            s.push_back(hex[c >> 4]);
            s.push_back(hex[c & 15]);
        }
        *out = dup_string(s);
    });
}

void chrom_poly_free(chrom_poly* p) { delete p; }

long chrom_poly_degree(const chrom_poly* p) { return p ? p->value.degree() : -1; }

chrom_status chrom_poly_coeff(const chrom_poly* p, size_t power, char** decimal) {
    return guarded([&] {
        require(p, "poly");
        require(decimal, "out");
        *decimal = dup_string(p->value.coeff(power).get_str());
    });
}

chrom_status chrom_poly_to_string(const chrom_poly* p, char** out) {
    return guarded([&] {
        require(p, "poly");
        require(out, "out");
        *out = dup_string(p->value.to_string());
    });
}

chrom_status chrom_poly_to_json(const chrom_poly* p, char** out) {
    return guarded([&] {
        require(p, "poly");
        require(out, "out");
        *out = dup_string(p->value.to_json());
    });
}

chrom_status chrom_poly_eval(const chrom_poly* p, int64_t x, char** decimal) {
    return guarded([&] {
        require(p, "poly");
        require(decimal, "out");
        *decimal = dup_string(p->value.eval(from_i64(x)).get_str());
    });
}

int chrom_poly_equal(const chrom_poly* a, const chrom_poly* b) { return a && b && a->value == b->value; }

chrom_status chrom_chromatic(const chrom_graph* g, chrom_method method, const chrom_options* options, chrom_poly** out,
                             chrom_trace* trace) {
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        EngineOptions eo;
        if (options) {
            eo.memoize = options->memoize != 0;
            eo.memo_max_vertices = options->memo_max_vertices;
            eo.node_limit = options->node_limit;
        }
        ComputationTrace t;
        Poly p;
        switch (method) {
            case CHROM_METHOD_AUTO: {
                ChromaticEngine engine(eo);
                p = engine.chromatic(g->value, &t);
                break;
            }
            case CHROM_METHOD_DELCONTR: {
                eo.memoize = false;
                ChromaticEngine engine(eo);
                p = engine.chromatic(g->value, &t);
                break;
            }
            case CHROM_METHOD_INDUCTIVE: {
                auto r = inductive_chromatic(g->value);
                p = std::move(r.chi);
                t = r.trace;
                break;
            }
            case CHROM_METHOD_WHITNEY:
                p = oracles::whitney_chromatic(g->value);
                break;
            case CHROM_METHOD_LATTICE:
                p = oracles::bond_lattice_characteristic(g->value);
                break;
            default:
                fail(ErrorCode::InvalidArgument, "unknown method");
        }
        to_c(t, trace);
        *out = new chrom_poly{std::move(p)};
    });
}

chrom_status chrom_closed_form(chrom_family family, size_t n, chrom_poly** out) {
    return guarded([&] {
        require(out, "out");
        GraphFamily kind;
        switch (family) {
            case CHROM_FAMILY_TREE: kind = GraphFamily::Tree; break;
            case CHROM_FAMILY_COMPLETE: kind = GraphFamily::Complete; break;
            case CHROM_FAMILY_CYCLE: kind = GraphFamily::Cycle; break;
            default: fail(ErrorCode::InvalidArgument, "unknown family");
        }
        *out = new chrom_poly{closed_form({kind, n})};
    });
}

chrom_status chrom_classify_edge(const chrom_graph* g, uint32_t u, uint32_t v, chrom_rule* out) {
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        if (u == v) fail(ErrorCode::InvalidEdge, "new edge is a loop");
        *out = to_c(classify_edge_addition(g->value, Edge(u, v)));
    });
}

chrom_status chrom_extend_by_edge(const chrom_graph* g, const chrom_poly* chi, uint32_t u, uint32_t v,
                                  chrom_graph** graph_out, chrom_poly** chi_out, chrom_rule* rule_out) {
    return guarded([&] {
        require(g, "graph");
        require(chi, "chi");
        require(chi_out, "chi_out");
        if (u == v) fail(ErrorCode::InvalidEdge, "new edge is a loop");
        auto ext = extend_by_edge(g->value, chi->value, Edge(u, v));
        if (rule_out) *rule_out = to_c(ext.rule);
        auto* p = new chrom_poly{std::move(ext.chi)};
        if (graph_out) {
            try {
                *graph_out = new chrom_graph{std::move(ext.graph)};
            } catch (...) {
                delete p;
                throw;
            }
        }
        *chi_out = p;
    });
}

chrom_status chrom_chambers(const chrom_poly* chi, char** chambers_out, char** bounded_out) {
    return guarded([&] {
        require(chi, "chi");
        auto c = chambers(chi->value);
        std::string a = c.chambers.get_str(), b = c.bounded.get_str();
        char* pa = chambers_out ? dup_string(a) : nullptr;
        if (bounded_out) {
            try {
                *bounded_out = dup_string(b);
            } catch (...) {
                std::free(pa);
                throw;
            }
        }
        if (chambers_out) *chambers_out = pa;
    });
}

chrom_status chrom_add_edge_chambers(const chrom_graph* g, const char* chambers_decimal, uint32_t u, uint32_t v,
                                     char** out) {
    return guarded([&] {
        require(g, "graph");
        require(chambers_decimal, "chambers");
        require(out, "out");
        Integer c;
        if (c.set_str(chambers_decimal, 10) != 0) fail(ErrorCode::InvalidArgument, "chamber count is not a decimal integer");
        if (u == v) fail(ErrorCode::InvalidEdge, "new edge is a loop");
        *out = dup_string(add_edge_chambers(g->value, c, Edge(u, v)).get_str());
    });
}

chrom_status chrom_lines_parse(const char* text, chrom_lines** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new chrom_lines{io::parse_lines_text(text)};
    });
}

chrom_status chrom_lines_load(const char* path, chrom_lines** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = new chrom_lines{io::load_lines(path)};
    });
}

void chrom_lines_free(chrom_lines* a) { delete a; }

size_t chrom_lines_count(const chrom_lines* a) { return a ? a->value.size() : 0; }

chrom_status chrom_lines_intersect_count(const chrom_lines* a, int64_t x, int64_t y, int64_t z, size_t* k) {
    return guarded([&] {
        require(a, "lines");
        require(k, "out");
        *k = intersect_count(a->value, ProjLine(from_i64(x), from_i64(y), from_i64(z)));
    });
}

chrom_status chrom_lines_characteristic(const chrom_lines* a, chrom_poly** out) {
    return guarded([&] {
        require(a, "lines");
        require(out, "out");
        *out = new chrom_poly{characteristic_lines(a->value)};
    });
}

chrom_status chrom_count_patterns(const chrom_graph* g, chrom_patterns* out) {
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        auto p = count_patterns(g->value);
        *out = chrom_patterns{p.m, p.k3, p.c4, p.k4, p.g0};
    });
}

chrom_status chrom_leading_coefficients(const chrom_graph* g, char* out[4], size_t* count) {
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        require(count, "count");
        auto coeffs = leading_coefficients(g->value);
        std::vector<std::string> text;
        for (const auto& c : coeffs) text.push_back(c.get_str());
        size_t made = 0;
        try {
            for (; made < text.size(); ++made) out[made] = dup_string(text[made]);
        } catch (...) {
            for (size_t i = 0; i < made; ++i) std::free(out[i]);
            throw;
        }
        *count = made;
    });
}

chrom_status chrom_coloring_count(const chrom_graph* g, int64_t k, char** decimal) {
    return guarded([&] {
        require(g, "graph");
        require(decimal, "out");
        *decimal = dup_string(oracles::coloring_count(g->value, static_cast<long>(k)).get_str());
    });
}

chrom_status chrom_fp_point_count(const chrom_graph* g, int64_t p, char** decimal) {
    return guarded([&] {
        require(g, "graph");
        require(decimal, "out");
        *decimal = dup_string(oracles::fp_point_count(g->value, static_cast<long>(p)).get_str());
    });
}

}  // extern "C"
