#include "formats.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace ttr {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

int64_t parse_int(const std::string& s, const std::string& what) {
    try {
        size_t used = 0;
        int64_t v = std::stoll(s, &used);
        require(used == s.size(), ErrorCode::Parse, "bad integer in " + what + ": '" + s + "'");
        return v;
    } catch (const Error&) {
        throw;
    } catch (...) {
        fail(ErrorCode::Parse, "bad integer in " + what + ": '" + s + "'");
    }
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace

Rep parse_rep(const Algebra& alg, const std::string& text) {
    Rep m;
    m.alg = &alg;
    std::istringstream in(text);
    std::string line;
    bool have_dims = false;
    std::vector<bool> seen(alg.quiver().arrows.size(), false);
    int pending_arrow = -1, pending_row = 0;
    while (std::getline(in, line)) {
        auto toks = tokens_of(strip_comment(line));
        if (toks.empty()) continue;
        if (pending_arrow >= 0) {
            const Arrow& a = alg.quiver().arrows[pending_arrow];
            FpMat& mat = m.arrow_maps[pending_arrow];
            require(static_cast<int>(toks.size()) == m.dims[a.src], ErrorCode::Parse,
                    "matrix row for arrow '" + a.label + "' needs " +
                        std::to_string(m.dims[a.src]) + " entries");
            for (size_t c = 0; c < toks.size(); ++c)
                mat.set(pending_row, static_cast<uint32_t>(c),
                        parse_int(toks[c], "map " + a.label));
            if (++pending_row == m.dims[a.tgt]) pending_arrow = -1;
            continue;
        }
        if (toks[0] == "dims") {
            require(!have_dims, ErrorCode::Parse, "duplicate dims line");
            require(static_cast<int>(toks.size()) == alg.vertex_count() + 1, ErrorCode::Parse,
                    "dims line needs one entry per vertex");
            for (int v = 0; v < alg.vertex_count(); ++v) {
                int64_t d = parse_int(toks[v + 1], "dims");
                require(d >= 0, ErrorCode::Parse, "negative dimension");
                m.dims.push_back(static_cast<int>(d));
            }
            for (const Arrow& a : alg.quiver().arrows)
                m.arrow_maps.emplace_back(alg.field(), m.dims[a.tgt], m.dims[a.src]);
            have_dims = true;
        } else if (toks[0] == "map") {
            require(have_dims, ErrorCode::Parse, "'map' before 'dims'");
            require(toks.size() == 2, ErrorCode::Parse, "usage: map <arrow-label>");
            int idx = alg.quiver().arrow_index(toks[1]);
            require(idx >= 0, ErrorCode::Parse, "unknown arrow '" + toks[1] + "'");
            require(!seen[idx], ErrorCode::Parse, "duplicate map for arrow '" + toks[1] + "'");
            seen[idx] = true;
            const Arrow& a = alg.quiver().arrows[idx];
            if (m.dims[a.tgt] > 0 && m.dims[a.src] > 0) {
                pending_arrow = idx;
                pending_row = 0;
            }
        } else {
            fail(ErrorCode::Parse, "unexpected line: '" + line + "'");
        }
    }
    require(have_dims, ErrorCode::Parse, "module file has no dims line");
    require(pending_arrow < 0, ErrorCode::Parse, "truncated matrix block");
    validate_rep(m);
    return m;
}

Rep load_rep(const Algebra& alg, const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), ErrorCode::Parse, "cannot open module file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_rep(alg, buf.str());
}

namespace {

bool is_shorthand(const std::string& s) {
    bool expect_letter = true;
    for (size_t i = 0; i < s.size();) {
        if (expect_letter) {
            if (s[i] != 'P' && s[i] != 'S' && s[i] != 'I') return false;
            ++i;
            if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return false;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            expect_letter = false;
        } else {
            if (s[i] != '+') return false;
            ++i;
            expect_letter = true;
        }
    }
    return !expect_letter && !s.empty();
}

Rep shorthand_rep(const Algebra& alg, const std::string& s) {
    std::vector<Rep> parts;
    size_t i = 0;
    while (i < s.size()) {
        char kind = s[i++];
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        int v = std::stoi(s.substr(start, i - start)) - 1;  // 1-based in I/O
        require(v >= 0 && v < alg.vertex_count(), ErrorCode::BadArgument,
                "vertex out of range in module shorthand: " + s);
        if (kind == 'P')
            parts.push_back(projective_rep(alg, v));
        else if (kind == 'S')
            parts.push_back(simple_rep(alg, v));
        else
            parts.push_back(injective_rep(alg, v));
        if (i < s.size()) ++i;  // skip '+'
    }
    return direct_sum(parts);
}

std::optional<std::vector<int>> parse_gvec(const std::string& s, int n) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') return std::nullopt;
    std::vector<int> g;
    std::string body = s.substr(1, s.size() - 2);
    std::istringstream in(body);
    std::string part;
    while (std::getline(in, part, ',')) {
        try {
            g.push_back(std::stoi(part));
        } catch (...) {
            return std::nullopt;
        }
    }
    if (static_cast<int>(g.size()) != n) return std::nullopt;
    return g;
}

}  // namespace

Rep resolve_module(const Algebra& alg, const std::string& designator, int cap, uint64_t seed) {
    require(!designator.empty(), ErrorCode::BadArgument, "empty module designator");
    if (is_shorthand(designator)) return shorthand_rep(alg, designator);
    if (auto g = parse_gvec(designator, alg.vertex_count())) {
        MutationGraph graph = enumerate(alg, cap, seed);
        for (const auto& [key, node] : graph.nodes)
            for (size_t k = 0; k < node.pair.summand_gvecs.size(); ++k)
                if (node.pair.summand_gvecs[k] == *g) return node.pair.summands[k];
        fail(ErrorCode::BadArgument,
             "no enumerated summand has g-vector " + designator);
    }
    return load_rep(alg, designator);
}

namespace {

std::string dims_csv(const Rep& m) {
    std::vector<std::string> parts;
    for (int d : m.dims) parts.push_back(std::to_string(d));
    return join(parts, ",");
}

std::string support_csv(const SttiltPair& p) {
    std::vector<std::string> parts;
    for (int v : p.support) parts.push_back(std::to_string(v + 1));
    return join(parts, ",");
}

}  // namespace

std::string records_text(const MutationGraph& g, const std::map<std::string, int>* fdims) {
    std::set<std::string> has_in, has_out;
    for (const auto& [a, b] : g.arrows) {
        has_out.insert(a);
        has_in.insert(b);
    }
    std::ostringstream out;
    for (const auto& [key, node] : g.nodes) {
        out << "key=" << key;
        out << " dims=" << dims_csv(node.pair.module);
        out << " support=" << support_csv(node.pair);
        out << " neighbors=" << join({node.neighbors.begin(), node.neighbors.end()}, "|");
        out << " is_max=" << (has_in.count(key) ? "false" : "true");
        out << " is_min=" << (has_out.count(key) ? "false" : "true");
        if (fdims) {
            auto it = fdims->find(key);
            require(it != fdims->end(), ErrorCode::Internal, "missing reduced dimension");
            out << " fdim=" << it->second;
        }
        out << "\n";
    }
    return out.str();
}

std::string dot_text(const MutationGraph& g) {
    std::ostringstream out;
    out << "digraph sttilt {\n";
    for (const auto& [key, node] : g.nodes)
        out << "  \"" << key << "\" [label=\"" << dims_csv(node.pair.module) << "|"
            << support_csv(node.pair) << "\"];\n";
    for (const auto& [a, b] : g.arrows) out << "  \"" << a << "\" -> \"" << b << "\";\n";
    out << "}\n";
    return out.str();
}

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ull;
    return h;
}

std::string cache_file_name(const std::string& alg_text, uint32_t p) {
    std::ostringstream out;
    out << std::hex << fnv1a(alg_text) << std::dec << "_p" << p << ".graph";
    return out.str();
}

namespace {

void write_complex(std::ostringstream& out, const TwoTerm& x) {
    out << "minus1";
    for (int v : x.minus1) out << " " << v;
    out << "\nzero";
    for (int v : x.zero) out << " " << v;
    out << "\n";
    for (size_t r = 0; r < x.diff.size(); ++r)
        for (size_t c = 0; c < x.diff[r].size(); ++c) {
            bool any = false;
            for (uint32_t coef : x.diff[r][c]) any = any || coef != 0;
            if (!any) continue;
            out << "entry " << r << " " << c;
            for (size_t i = 0; i < x.diff[r][c].size(); ++i)
                if (x.diff[r][c][i] != 0) out << " " << i << ":" << x.diff[r][c][i];
            out << "\n";
        }
}

}  // namespace

std::string serialize_graph(const MutationGraph& g) {
    std::ostringstream out;
    out << "ttrgraph 1\n";
    out << "p " << g.alg->field().p << "\n";
    out << "complete " << (g.complete ? 1 : 0) << "\n";
    for (const auto& [key, node] : g.nodes) {
        out << "node " << key << "\n";
        write_complex(out, node.pair.complex);
        out << "endnode\n";
    }
    for (const auto& [a, b] : g.arrows) out << "arrow " << a << " " << b << "\n";
    return out.str();
}

MutationGraph deserialize_graph(const Algebra& alg, const std::string& text, uint64_t seed) {
    MutationGraph g;
    g.alg = &alg;
    std::istringstream in(text);
    std::string line;
    require(std::getline(in, line) && tokens_of(line) == std::vector<std::string>{"ttrgraph", "1"},
            ErrorCode::Parse, "bad cache header");
    bool in_node = false;
    std::string node_key;
    TwoTerm cur;
    while (std::getline(in, line)) {
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        const std::string& cmd = toks[0];
        if (cmd == "p") {
            require(toks.size() == 2 && parse_int(toks[1], "cache p") ==
                                            static_cast<int64_t>(alg.field().p),
                    ErrorCode::Parse, "cache field prime mismatch");
        } else if (cmd == "complete") {
            g.complete = toks.size() == 2 && toks[1] == "1";
        } else if (cmd == "node") {
            require(!in_node && toks.size() == 2, ErrorCode::Parse, "bad node line");
            in_node = true;
            node_key = toks[1];
            cur = TwoTerm{};
            cur.alg = &alg;
        } else if (cmd == "minus1" || cmd == "zero") {
            require(in_node, ErrorCode::Parse, "complex data outside node block");
            auto& vec = cmd == "minus1" ? cur.minus1 : cur.zero;
            for (size_t i = 1; i < toks.size(); ++i)
                vec.push_back(static_cast<int>(parse_int(toks[i], "cache vertex")));
        } else if (cmd == "entry") {
            require(in_node && toks.size() >= 3, ErrorCode::Parse, "bad entry line");
            if (cur.diff.empty())
                cur.diff.assign(cur.zero.size(),
                                std::vector<AlgElt>(cur.minus1.size(), alg.zero_elt()));
            size_t r = static_cast<size_t>(parse_int(toks[1], "cache row"));
            size_t c = static_cast<size_t>(parse_int(toks[2], "cache col"));
            require(r < cur.zero.size() && c < cur.minus1.size(), ErrorCode::Parse,
                    "entry out of range");
            for (size_t i = 3; i < toks.size(); ++i) {
                auto pos = toks[i].find(':');
                require(pos != std::string::npos, ErrorCode::Parse, "bad entry term");
                size_t idx = static_cast<size_t>(parse_int(toks[i].substr(0, pos), "cache idx"));
                int64_t coef = parse_int(toks[i].substr(pos + 1), "cache coef");
                require(idx < cur.diff[r][c].size(), ErrorCode::Parse, "entry index out of range");
                cur.diff[r][c][idx] = alg.field().reduce(coef);
            }
        } else if (cmd == "endnode") {
            require(in_node, ErrorCode::Parse, "stray endnode");
            if (cur.diff.empty())
                cur.diff.assign(cur.zero.size(),
                                std::vector<AlgElt>(cur.minus1.size(), alg.zero_elt()));
            SttiltPair pair = make_pair(cur, seed);
            require(pair.key == node_key, ErrorCode::Parse,
                    "cached node key does not match its complex");
            g.nodes[node_key] = GraphNode{std::move(pair), {}};
            in_node = false;
        } else if (cmd == "arrow") {
            require(toks.size() == 3, ErrorCode::Parse, "bad arrow line");
            g.arrows.insert({toks[1], toks[2]});
        } else {
            fail(ErrorCode::Parse, "unknown cache line: " + line);
        }
    }
    require(!in_node, ErrorCode::Parse, "truncated cache file");
    for (const auto& [a, b] : g.arrows) {
        require(g.nodes.count(a) && g.nodes.count(b), ErrorCode::Parse,
                "cache arrow references unknown node");
        g.nodes[a].neighbors.insert(b);
        g.nodes[b].neighbors.insert(a);
    }
    return g;
}

}  // namespace ttr
