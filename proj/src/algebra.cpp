#include "algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ttr {

int Quiver::arrow_index(const std::string& label) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].label == label) return static_cast<int>(i);
    return -1;
}

namespace {

struct PathTable {
    // All paths of length < cutoff, ordered by (length, discovery order).
    std::vector<Algebra::BasisPath> paths;
    std::vector<int> length_start;  // index of first path of each length
    std::map<std::pair<int, std::vector<int>>, int> index;  // (src, word) -> index

    int find(int src, const std::vector<int>& word) const {
        auto it = index.find({src, word});
        return it == index.end() ? -1 : it->second;
    }
};

constexpr int kMaxPaths = 60000;

PathTable enumerate_paths(const Quiver& q, int cutoff) {
    PathTable t;
    for (int v = 0; v < q.n; ++v) {
        t.index[{v, {}}] = static_cast<int>(t.paths.size());
        t.paths.push_back({v, v, {}});
    }
    t.length_start = {0, static_cast<int>(t.paths.size())};
    int lo = 0, hi = static_cast<int>(t.paths.size());
    for (int len = 1; len < cutoff; ++len) {
        for (int i = lo; i < hi; ++i) {
            Algebra::BasisPath base = t.paths[i];
            for (size_t a = 0; a < q.arrows.size(); ++a) {
                if (q.arrows[a].src != base.tgt) continue;
                Algebra::BasisPath ext = base;
                ext.word.push_back(static_cast<int>(a));
                ext.tgt = q.arrows[a].tgt;
                require(static_cast<int>(t.paths.size()) < kMaxPaths, ErrorCode::NotFiniteDimensional,
                        "path count explosion while searching for a nilpotency degree; "
                        "the algebra appears to be infinite dimensional");
                t.index[{ext.src, ext.word}] = static_cast<int>(t.paths.size());
                t.paths.push_back(std::move(ext));
            }
        }
        lo = hi;
        hi = static_cast<int>(t.paths.size());
        t.length_start.push_back(hi);
    }
    return t;
}

void validate_relations(const Quiver& q, const std::vector<Relation>& rels) {
    for (const Relation& r : rels) {
        require(!r.terms.empty(), ErrorCode::Parse, "empty relation");
        int src = -1, tgt = -1;
        for (const RelTerm& t : r.terms) {
            require(t.word.size() >= 2, ErrorCode::NonAdmissible,
                    "relation has a term of length < 2; the ideal is not admissible");
            int s = q.arrows[t.word.front()].src;
            int e = q.arrows[t.word.front()].tgt;
            for (size_t i = 1; i < t.word.size(); ++i) {
                require(q.arrows[t.word[i]].src == e, ErrorCode::Parse,
                        "relation word is not composable");
                e = q.arrows[t.word[i]].tgt;
            }
            if (src < 0) {
                src = s;
                tgt = e;
            } else {
                require(src == s && tgt == e, ErrorCode::Parse,
                        "relation terms do not share source/target");
            }
        }
    }
}

// Span of the ideal (I + R^cutoff) inside the space of paths of length < cutoff.
RowSpan ideal_span(const PrimeField& fld, const Quiver& q, const std::vector<Relation>& rels,
                   const PathTable& t, int cutoff) {
    RowSpan span(fld, static_cast<uint32_t>(t.paths.size()));
    for (const Relation& r : rels) {
        int min_len = cutoff;
        for (const RelTerm& term : r.terms) min_len = std::min(min_len, (int)term.word.size());
        int rsrc = q.arrows[r.terms[0].word.front()].src;
        int rtgt = q.arrows[r.terms[0].word.back()].tgt;
        for (size_t pi = 0; pi < t.paths.size(); ++pi) {
            const auto& p = t.paths[pi];
            if (p.tgt != rsrc || p.length() + min_len >= cutoff) continue;
            for (size_t qi = 0; qi < t.paths.size(); ++qi) {
                const auto& suf = t.paths[qi];
                if (suf.src != rtgt || p.length() + min_len + suf.length() >= cutoff) continue;
                std::vector<uint32_t> row(t.paths.size(), 0);
                bool nonzero = false;
                for (const RelTerm& term : r.terms) {
                    int total = p.length() + (int)term.word.size() + suf.length();
                    if (total >= cutoff) continue;  // lies in R^cutoff
                    std::vector<int> word = p.word;
                    word.insert(word.end(), term.word.begin(), term.word.end());
                    word.insert(word.end(), suf.word.begin(), suf.word.end());
                    int idx = t.find(p.src, word);
                    require(idx >= 0, ErrorCode::Internal, "path lookup failed");
                    row[idx] = fld.add(row[idx], fld.reduce(term.coeff));
                    nonzero = true;
                }
                if (nonzero) span.insert(std::move(row));
            }
        }
    }
    return span;
}

}  // namespace

Algebra Algebra::build(const Quiver& q, const std::vector<Relation>& rels, PrimeField fld,
                       int length_bound) {
    require(q.n >= 1, ErrorCode::Parse, "quiver needs at least one vertex");
    validate_relations(q, rels);

    // Find the smallest L such that every path of length L falls into the
    // ideal span computed at cutoff L+1; then A = kQ/(I + R^L) = kQ/I for an
    // admissible ideal.
    for (int L = 1; L <= length_bound; ++L) {
        int cutoff = L + 1;
        PathTable t = enumerate_paths(q, cutoff);
        RowSpan span = ideal_span(fld, q, rels, t, cutoff);
        bool stable = true;
        for (int i = t.length_start[L]; i < t.length_start[L + 1] && stable; ++i) {
            std::vector<uint32_t> unit(t.paths.size(), 0);
            unit[i] = 1 % fld.p;
            stable = span.contains(unit);
        }
        if (!stable) continue;

        Algebra a;
        a.fld_ = fld;
        a.quiver_ = q;
        a.relations_ = rels;
        a.nilpotency_ = L;

        std::vector<int> basis_of_path(t.paths.size(), -1);  // path idx -> basis idx
        for (size_t i = 0; i < t.paths.size(); ++i) {
            if (span.is_pivot(static_cast<uint32_t>(i))) continue;
            basis_of_path[i] = static_cast<int>(a.basis_.size());
            a.basis_.push_back(t.paths[i]);
        }
        int dim = static_cast<int>(a.basis_.size());

        // Normal form of every enumerated path, over the quotient basis.
        std::vector<std::vector<uint32_t>> nf(t.paths.size(), std::vector<uint32_t>(dim, 0));
        for (size_t i = 0; i < t.paths.size(); ++i) {
            if (basis_of_path[i] >= 0) {
                nf[i][basis_of_path[i]] = 1 % fld.p;
                continue;
            }
            std::vector<uint32_t> unit(t.paths.size(), 0);
            unit[i] = 1 % fld.p;
            auto red = span.reduce(std::move(unit));
            for (size_t j = 0; j < red.size(); ++j)
                if (red[j]) {
                    require(basis_of_path[j] >= 0, ErrorCode::Internal, "non-canonical reduction");
                    nf[i][basis_of_path[j]] = red[j];
                }
        }

        a.idem_.assign(q.n, -1);
        for (int v = 0; v < q.n; ++v) {
            a.idem_[v] = basis_of_path[t.find(v, {})];
            require(a.idem_[v] >= 0, ErrorCode::Internal, "idempotent fell out of the basis");
        }
        a.arrow_basis_.assign(q.arrows.size(), -1);
        for (size_t ar = 0; ar < q.arrows.size(); ++ar) {
            int pi = t.find(q.arrows[ar].src, {static_cast<int>(ar)});
            a.arrow_basis_[ar] = pi >= 0 ? basis_of_path[pi] : -1;
        }
        a.pair_basis_.assign(static_cast<size_t>(q.n) * q.n, {});
        for (int b = 0; b < dim; ++b)
            a.pair_basis_[a.basis_[b].src * q.n + a.basis_[b].tgt].push_back(b);

        a.table_.assign(static_cast<size_t>(dim) * dim, {});
        for (int b1 = 0; b1 < dim; ++b1)
            for (int b2 = 0; b2 < dim; ++b2) {
                const BasisPath &p1 = a.basis_[b1], &p2 = a.basis_[b2];
                if (p1.tgt != p2.src || p1.length() + p2.length() >= L) continue;
                std::vector<int> word = p1.word;
                word.insert(word.end(), p2.word.begin(), p2.word.end());
                int pi = t.find(p1.src, word);
                require(pi >= 0, ErrorCode::Internal, "product path missing");
                auto& cell = a.table_[static_cast<size_t>(b1) * dim + b2];
                for (int j = 0; j < dim; ++j)
                    if (nf[pi][j]) cell.emplace_back(j, nf[pi][j]);
            }

        // Build-time sanity: associativity on all basis triples (small dims)
        // and every relation evaluating to zero.
        if (dim <= 64) {
            for (int x = 0; x < dim; ++x)
                for (int y = 0; y < dim; ++y)
                    for (int z = 0; z < dim; ++z) {
                        AlgElt left = a.mult(a.mult(a.unit_elt(x), a.unit_elt(y)), a.unit_elt(z));
                        AlgElt right = a.mult(a.unit_elt(x), a.mult(a.unit_elt(y), a.unit_elt(z)));
                        require(left == right, ErrorCode::Internal,
                                "multiplication table is not associative");
                    }
        }
        for (const Relation& r : rels) {
            AlgElt v = a.zero_elt();
            for (const RelTerm& term : r.terms) {
                if (static_cast<int>(term.word.size()) >= L) continue;
                int pi = t.find(q.arrows[term.word.front()].src, term.word);
                require(pi >= 0, ErrorCode::Internal, "relation path missing");
                for (int j = 0; j < dim; ++j)
                    v[j] = fld.add(v[j], fld.mul(nf[pi][j], fld.reduce(term.coeff)));
            }
            for (uint32_t c : v)
                require(c == 0, ErrorCode::Internal, "relation does not vanish in the quotient");
        }
        return a;
    }
    fail(ErrorCode::NotFiniteDimensional,
         "no nilpotency degree <= " + std::to_string(length_bound) +
             " found; kQ/I is not finite dimensional (or the bound is too small)");
}

AlgElt Algebra::unit_elt(int basis_index) const {
    AlgElt v = zero_elt();
    v[basis_index] = 1 % fld_.p;
    return v;
}

AlgElt Algebra::mult(const AlgElt& a, const AlgElt& b) const {
    require(a.size() == basis_.size() && b.size() == basis_.size(), ErrorCode::BadArgument,
            "element has wrong coordinate length");
    AlgElt out = zero_elt();
    int dim = static_cast<int>(basis_.size());
    for (int i = 0; i < dim; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < dim; ++j) {
            if (!b[j]) continue;
            uint32_t c = fld_.mul(a[i], b[j]);
            for (const auto& [k, s] : table_[static_cast<size_t>(i) * dim + j])
                out[k] = fld_.add(out[k], fld_.mul(c, s));
        }
    }
    return out;
}

std::vector<std::vector<int>> Algebra::cartan_matrix() const {
    std::vector<std::vector<int>> c(quiver_.n, std::vector<int>(quiver_.n, 0));
    for (const BasisPath& b : basis_) c[b.src][b.tgt]++;
    return c;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

RelTerm parse_term(const Quiver& q, const std::string& tok, int sign) {
    RelTerm term;
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : tok) {
        if (ch == '*') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    require(parts.size() >= 2, ErrorCode::Parse, "relation term needs coeff*word: " + tok);
    try {
        term.coeff = std::stoll(parts[0]) * sign;
    } catch (...) {
        fail(ErrorCode::Parse, "bad coefficient in relation term: " + tok);
    }
    for (size_t i = 1; i < parts.size(); ++i) {
        int a = q.arrow_index(parts[i]);
        require(a >= 0, ErrorCode::Parse, "unknown arrow label in relation: " + parts[i]);
        term.word.push_back(a);
    }
    return term;
}

}  // namespace

AlgebraSpec parse_algebra_spec(const std::string& text) {
    AlgebraSpec spec;
    bool vertices_seen = false;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::vector<std::string> toks = split_ws(line);
        if (toks.empty()) continue;
        const std::string where = " (line " + std::to_string(lineno) + ")";
        if (toks[0] == "field") {
            require(toks.size() == 2, ErrorCode::Parse, "usage: field <p>" + where);
            uint32_t p = 0;
            try {
                p = static_cast<uint32_t>(std::stoul(toks[1]));
            } catch (...) {
                fail(ErrorCode::Parse, "bad field characteristic" + where);
            }
            require(is_prime(p), ErrorCode::Parse, "field characteristic must be prime" + where);
            spec.fld = PrimeField(p);
            spec.field_given = true;
        } else if (toks[0] == "vertices") {
            require(toks.size() == 2, ErrorCode::Parse, "usage: vertices <n>" + where);
            spec.quiver.n = std::stoi(toks[1]);
            require(spec.quiver.n >= 1, ErrorCode::Parse, "need at least one vertex" + where);
            vertices_seen = true;
        } else if (toks[0] == "arrow") {
            require(toks.size() == 4, ErrorCode::Parse, "usage: arrow <label> <src> <tgt>" + where);
            require(vertices_seen, ErrorCode::Parse, "arrow before vertices" + where);
            Arrow a;
            a.label = toks[1];
            require(spec.quiver.arrow_index(a.label) < 0, ErrorCode::Parse,
                    "duplicate arrow label " + a.label + where);
            try {
                a.src = std::stoi(toks[2]) - 1;
                a.tgt = std::stoi(toks[3]) - 1;
            } catch (...) {
                fail(ErrorCode::Parse, "bad arrow endpoints" + where);
            }
            require(a.src >= 0 && a.src < spec.quiver.n && a.tgt >= 0 && a.tgt < spec.quiver.n,
                    ErrorCode::Parse, "arrow endpoint out of range" + where);
            spec.quiver.arrows.push_back(std::move(a));
        } else if (toks[0] == "relation") {
            require(toks.size() >= 2, ErrorCode::Parse, "empty relation" + where);
            Relation r;
            r.terms.push_back(parse_term(spec.quiver, toks[1], +1));
            size_t i = 2;
            while (i < toks.size()) {
                require(i + 1 < toks.size() && (toks[i] == "+" || toks[i] == "-"),
                        ErrorCode::Parse, "relation terms must be joined by + or -" + where);
                r.terms.push_back(parse_term(spec.quiver, toks[i + 1], toks[i] == "+" ? 1 : -1));
                i += 2;
            }
            spec.relations.push_back(std::move(r));
        } else {
            fail(ErrorCode::Parse, "unknown declaration '" + toks[0] + "'" + where);
        }
    }
    require(vertices_seen, ErrorCode::Parse, "algebra description has no 'vertices' declaration");
    return spec;
}

std::string format_elt(const Algebra& a, const AlgElt& x) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < x.size(); ++i) {
        if (!x[i]) continue;
        if (!first) os << " + ";
        first = false;
        os << x[i] << "*";
        const auto& b = a.basis()[i];
        if (b.word.empty()) {
            os << "e" << (b.src + 1);
        } else {
            for (size_t j = 0; j < b.word.size(); ++j) {
                if (j) os << "*";
                os << a.quiver().arrows[b.word[j]].label;
            }
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace ttr
