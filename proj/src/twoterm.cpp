#include "twoterm.hpp"

#include <algorithm>
#include <sstream>

namespace ttr {

namespace {

void check_same_algebra(const TwoTerm& x, const TwoTerm& y) {
    require(x.alg == y.alg, ErrorCode::AlgebraMismatch, "complexes over different algebras");
}

}  // namespace

TwoTerm zero_complex(const Algebra& alg) { return TwoTerm{&alg, {}, {}, {}}; }

TwoTerm stalk_complex(const Algebra& alg, int vertex) {
    return TwoTerm{&alg, {}, {vertex}, {{}}};
}

TwoTerm shifted_stalk_complex(const Algebra& alg, int vertex) {
    return TwoTerm{&alg, {vertex}, {}, {}};
}

TwoTerm stalk_a(const Algebra& alg) {
    TwoTerm x = zero_complex(alg);
    for (int v = 0; v < alg.vertex_count(); ++v) {
        x.zero.push_back(v);
        x.diff.push_back({});
    }
    return x;
}

TwoTerm shifted_a(const Algebra& alg) {
    TwoTerm x = zero_complex(alg);
    for (int v = 0; v < alg.vertex_count(); ++v) x.minus1.push_back(v);
    return x;
}

TwoTerm complex_direct_sum(const std::vector<TwoTerm>& parts) {
    require(!parts.empty(), ErrorCode::BadArgument, "complex_direct_sum of nothing");
    const Algebra& alg = *parts[0].alg;
    TwoTerm out = zero_complex(alg);
    for (const TwoTerm& p : parts) {
        require(p.alg == &alg, ErrorCode::AlgebraMismatch, "complex sum over mixed algebras");
        out.minus1.insert(out.minus1.end(), p.minus1.begin(), p.minus1.end());
        out.zero.insert(out.zero.end(), p.zero.begin(), p.zero.end());
    }
    out.diff.assign(out.zero.size(), std::vector<AlgElt>(out.minus1.size(), alg.zero_elt()));
    size_t roff = 0, coff = 0;
    for (const TwoTerm& p : parts) {
        for (size_t r = 0; r < p.zero.size(); ++r)
            for (size_t c = 0; c < p.minus1.size(); ++c) out.diff[roff + r][coff + c] = p.diff[r][c];
        roff += p.zero.size();
        coff += p.minus1.size();
    }
    return out;
}

TwoTerm presentation_complex(const Presentation& pres, const Algebra& alg) {
    TwoTerm x = zero_complex(alg);
    x.zero = pres.p_zero;
    x.minus1 = pres.p_minus1;
    x.diff = pres.diff;
    return x;
}

HomShift1 hom_shift1(const TwoTerm& x, const TwoTerm& y) {
    check_same_algebra(x, y);
    const Algebra& alg = *x.alg;
    const PrimeField& f = alg.field();
    // Coordinates: (row r over y.zero, col c over x.minus1, basis path in
    // e_{y.zero[r]} A e_{x.minus1[c]}).
    std::vector<std::vector<int>> offset(y.zero.size(), std::vector<int>(x.minus1.size(), 0));
    int width = 0;
    for (size_t r = 0; r < y.zero.size(); ++r)
        for (size_t c = 0; c < x.minus1.size(); ++c) {
            offset[r][c] = width;
            width += static_cast<int>(alg.pair_basis(y.zero[r], x.minus1[c]).size());
        }
    HomShift1 out;
    if (width == 0) return out;
    RowSpan span(f, width);
    auto pack = [&](size_t r, size_t c, const AlgElt& e, std::vector<uint32_t>& vec) {
        const auto& pb = alg.pair_basis(y.zero[r], x.minus1[c]);
        for (size_t i = 0; i < pb.size(); ++i)
            vec[offset[r][c] + i] = f.add(vec[offset[r][c] + i], e[pb[i]]);
    };
    // d_Y o h for unit homs h: X^{-1} -> Y^{-1}
    for (size_t rp = 0; rp < y.minus1.size(); ++rp)
        for (size_t c = 0; c < x.minus1.size(); ++c)
            for (int beta : alg.pair_basis(y.minus1[rp], x.minus1[c])) {
                std::vector<uint32_t> vec(width, 0);
                for (size_t r = 0; r < y.zero.size(); ++r)
                    pack(r, c, alg.mult(y.diff[r][rp], alg.unit_elt(beta)), vec);
                span.insert(std::move(vec));
            }
    // g o d_X for unit homs g: X^0 -> Y^0
    for (size_t r = 0; r < y.zero.size(); ++r)
        for (size_t k = 0; k < x.zero.size(); ++k)
            for (int gamma : alg.pair_basis(y.zero[r], x.zero[k])) {
                std::vector<uint32_t> vec(width, 0);
                for (size_t c = 0; c < x.minus1.size(); ++c)
                    pack(r, c, alg.mult(alg.unit_elt(gamma), x.diff[k][c]), vec);
                span.insert(std::move(vec));
            }
    out.dim = width - static_cast<int>(span.dim());
    // Representatives: unit vectors at non-pivot coordinates.
    for (size_t r = 0; r < y.zero.size(); ++r)
        for (size_t c = 0; c < x.minus1.size(); ++c) {
            const auto& pb = alg.pair_basis(y.zero[r], x.minus1[c]);
            for (size_t i = 0; i < pb.size(); ++i) {
                if (span.is_pivot(offset[r][c] + static_cast<int>(i))) continue;
                std::vector<std::vector<AlgElt>> mat(
                    y.zero.size(), std::vector<AlgElt>(x.minus1.size(), alg.zero_elt()));
                mat[r][c][pb[i]] = 1 % f.p;
                out.reps.push_back(std::move(mat));
            }
        }
    require(static_cast<int>(out.reps.size()) == out.dim, ErrorCode::Internal,
            "hom_shift1 representative count mismatch");
    return out;
}

bool is_presilting(const TwoTerm& x) { return hom_shift1(x, x).dim == 0; }

namespace {

// Inverse of an element of e_iAe_i whose scalar part is a unit: geometric
// series against the nilpotent radical part.
AlgElt local_inverse(const Algebra& alg, int vertex, const AlgElt& z) {
    const PrimeField& f = alg.field();
    int e = alg.idempotent_index(vertex);
    uint32_t u = z[e];
    require(u != 0, ErrorCode::BadArgument, "element is not locally invertible");
    uint32_t uinv = f.inv(u);
    // x = e - u^{-1} z  (pure radical part)
    AlgElt x = alg.zero_elt();
    for (size_t i = 0; i < x.size(); ++i) x[i] = f.neg(f.mul(uinv, z[i]));
    x[e] = f.add(x[e], 1 % f.p);
    AlgElt acc = alg.unit_elt(e);
    AlgElt pow = alg.unit_elt(e);
    for (int k = 1; k < alg.nilpotency_degree(); ++k) {
        pow = alg.mult(pow, x);
        for (size_t i = 0; i < acc.size(); ++i) acc[i] = f.add(acc[i], pow[i]);
    }
    for (auto& c : acc) c = f.mul(c, uinv);
    return acc;
}

}  // namespace

bool is_minimal(const TwoTerm& x) {
    const Algebra& alg = *x.alg;
    for (size_t r = 0; r < x.zero.size(); ++r)
        for (size_t c = 0; c < x.minus1.size(); ++c)
            if (x.zero[r] == x.minus1[c] && x.diff[r][c][alg.idempotent_index(x.zero[r])] != 0)
                return false;
    return true;
}

TwoTerm minimize(TwoTerm x) {
    const Algebra& alg = *x.alg;
    const PrimeField& f = alg.field();
    while (true) {
        size_t pr = x.zero.size(), pc = 0;
        for (size_t r = 0; r < x.zero.size() && pr == x.zero.size(); ++r)
            for (size_t c = 0; c < x.minus1.size(); ++c)
                if (x.zero[r] == x.minus1[c] &&
                    x.diff[r][c][alg.idempotent_index(x.zero[r])] != 0) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr == x.zero.size()) return x;
        AlgElt inv = local_inverse(alg, x.zero[pr], x.diff[pr][pc]);
        TwoTerm next = zero_complex(alg);
        for (size_t r = 0; r < x.zero.size(); ++r)
            if (r != pr) next.zero.push_back(x.zero[r]);
        for (size_t c = 0; c < x.minus1.size(); ++c)
            if (c != pc) next.minus1.push_back(x.minus1[c]);
        next.diff.assign(next.zero.size(), std::vector<AlgElt>(next.minus1.size(), alg.zero_elt()));
        size_t nr = 0;
        for (size_t r = 0; r < x.zero.size(); ++r) {
            if (r == pr) continue;
            size_t nc = 0;
            for (size_t c = 0; c < x.minus1.size(); ++c) {
                if (c == pc) continue;
                AlgElt corr = alg.mult(alg.mult(x.diff[r][pc], inv), x.diff[pr][c]);
                AlgElt val = x.diff[r][c];
                for (size_t i = 0; i < val.size(); ++i) val[i] = f.sub(val[i], corr[i]);
                next.diff[nr][nc] = std::move(val);
                ++nc;
            }
            ++nr;
        }
        x = std::move(next);
    }
}

std::vector<int> gvec_of_presentation(const Algebra& alg, const Presentation& pres) {
    std::vector<int> g(alg.vertex_count(), 0);
    for (int v : pres.p_zero) g[v]++;
    for (int v : pres.p_minus1) g[v]--;
    return g;
}

std::string gvec_key(const std::vector<std::vector<int>>& gvecs) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < gvecs.size(); ++i) {
        if (i) os << ";";
        os << "(";
        for (size_t j = 0; j < gvecs[i].size(); ++j) {
            if (j) os << ",";
            os << gvecs[i][j];
        }
        os << ")";
    }
    os << "]";
    return os.str();
}

TwoTerm pair_to_complex(const Rep& module, const std::vector<int>& support) {
    const Algebra& alg = *module.alg;
    for (int v : support)
        require(module.dims[v] == 0, ErrorCode::SupportViolation,
                "module is supported on claimed support vertex " + std::to_string(v + 1));
    Presentation pres = min_presentation(module);
    TwoTerm x = presentation_complex(pres, alg);
    std::vector<int> supp = support;
    std::sort(supp.begin(), supp.end());
    for (int v : supp) {
        x.minus1.push_back(v);
        for (auto& row : x.diff) row.push_back(alg.zero_elt());
    }
    return x;
}

namespace {

// Cokernel of the differential as a representation: quotient of the degree-0
// projective sum by the submodule generated by the column images.
Rep complex_h0(const TwoTerm& x, std::vector<int>* zero_cols) {
    const Algebra& alg = *x.alg;
    const PrimeField& f = alg.field();
    if (x.zero.empty()) {
        if (zero_cols)
            for (size_t c = 0; c < x.minus1.size(); ++c) zero_cols->push_back(static_cast<int>(c));
        return zero_rep(alg);
    }
    std::vector<Rep> projs;
    for (int v : x.zero) projs.push_back(projective_rep(alg, v));
    Rep p0 = direct_sum(projs);
    std::vector<RowSpan> image;
    for (int v = 0; v < alg.vertex_count(); ++v) image.emplace_back(f, p0.dims[v]);
    for (size_t c = 0; c < x.minus1.size(); ++c) {
        bool iszero = true;
        int q = x.minus1[c];
        // submodule generated by the column: its value on every basis path
        // b in e_q A (i.e. the generator times b).
        for (int v = 0; v < alg.vertex_count(); ++v) {
            for (int b : alg.pair_basis(q, v)) {
                std::vector<uint32_t> vec(p0.dims[v], 0);
                int off = 0;
                for (size_t r = 0; r < x.zero.size(); ++r) {
                    AlgElt prod = alg.mult(x.diff[r][c], alg.unit_elt(b));
                    for (int pb : alg.pair_basis(x.zero[r], v)) {
                        vec[off] = prod[pb];
                        ++off;
                    }
                }
                bool nz = false;
                for (uint32_t w : vec) nz = nz || w;
                if (nz) {
                    iszero = false;
                    image[v].insert(std::move(vec));
                }
            }
        }
        if (iszero && zero_cols) zero_cols->push_back(static_cast<int>(c));
    }
    std::vector<FpMat> bases;
    for (int v = 0; v < alg.vertex_count(); ++v) {
        FpMat b(f, p0.dims[v], image[v].dim());
        for (uint32_t i = 0; i < image[v].dim(); ++i)
            for (int r = 0; r < p0.dims[v]; ++r) b.at(r, i) = image[v].rows()[i][r];
        bases.push_back(std::move(b));
    }
    return quotient_rep(p0, bases).first;
}

}  // namespace

SttiltPair make_pair(const TwoTerm& x_in, uint64_t seed) {
    const Algebra& alg = *x_in.alg;
    TwoTerm x = minimize(x_in);
    std::vector<int> zero_cols;
    Rep h0 = complex_h0(x, &zero_cols);
    std::vector<int> support;
    for (int c : zero_cols) {
        int v = x.minus1[c];
        if (std::find(support.begin(), support.end(), v) == support.end()) support.push_back(v);
    }
    std::sort(support.begin(), support.end());

    SttiltPair pair;
    pair.alg = &alg;
    pair.support = support;
    // basic reduct of the module part
    Decomposition dec = decompose(h0, seed);
    std::vector<std::pair<std::vector<int>, Rep>> keyed;
    for (Rep& s : dec.summands) {
        Presentation pres = min_presentation(s);
        keyed.emplace_back(gvec_of_presentation(alg, pres), std::move(s));
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [g, s] : keyed) {
        pair.summand_gvecs.push_back(g);
        pair.summands.push_back(std::move(s));
    }
    pair.module = pair.summands.empty() ? zero_rep(alg) : direct_sum(pair.summands);
    pair.gvecs = pair.summand_gvecs;
    for (int v : pair.support) {
        std::vector<int> g(alg.vertex_count(), 0);
        g[v] = -1;
        pair.gvecs.push_back(std::move(g));
    }
    std::sort(pair.gvecs.begin(), pair.gvecs.end());
    pair.key = gvec_key(pair.gvecs);
    pair.complex = pair_to_complex(pair.module, pair.support);
    return pair;
}

SttiltPair complex_to_pair(const TwoTerm& x, uint64_t seed) {
    require(is_minimal(x), ErrorCode::NotMinimal, "complex_to_pair requires a minimal complex");
    return make_pair(x, seed);
}

std::vector<std::vector<int>> g_vectors(const TwoTerm& x, uint64_t seed) {
    require(is_minimal(x), ErrorCode::NotMinimal, "g_vectors requires a minimal complex");
    return make_pair(x, seed).gvecs;
}

TwoTerm bongartz(const TwoTerm& u, uint64_t seed) {
    const Algebra& alg = *u.alg;
    require(is_presilting(u), ErrorCode::NotPresilting, "bongartz requires a presilting complex");
    TwoTerm s = stalk_a(alg);
    HomShift1 h = hom_shift1(u, s);
    // X = cocone of the universal map U^{d} -> S[1]:
    //   X^{-1} = d copies of U^{-1};  X^0 = d copies of U^0, plus A.
    std::vector<TwoTerm> parts;
    TwoTerm x = zero_complex(alg);
    for (int t = 0; t < h.dim; ++t) {
        x.minus1.insert(x.minus1.end(), u.minus1.begin(), u.minus1.end());
        x.zero.insert(x.zero.end(), u.zero.begin(), u.zero.end());
    }
    for (int v = 0; v < alg.vertex_count(); ++v) x.zero.push_back(v);
    x.diff.assign(x.zero.size(), std::vector<AlgElt>(x.minus1.size(), alg.zero_elt()));
    for (int t = 0; t < h.dim; ++t) {
        size_t roff = t * u.zero.size();
        size_t coff = t * u.minus1.size();
        for (size_t r = 0; r < u.zero.size(); ++r)
            for (size_t c = 0; c < u.minus1.size(); ++c) x.diff[roff + r][coff + c] = u.diff[r][c];
        size_t aoff = h.dim * u.zero.size();
        for (int v = 0; v < alg.vertex_count(); ++v)
            for (size_t c = 0; c < u.minus1.size(); ++c) x.diff[aoff + v][coff + c] = h.reps[t][v][c];
    }
    TwoTerm total = u.empty() ? x : complex_direct_sum({x, u});
    SttiltPair pair = make_pair(total, seed);
    require(pair.is_silting() && is_presilting(pair.complex), ErrorCode::MutationInvariantViolation,
            "Bongartz completion is not silting");
    return pair.complex;
}

TwoTerm co_bongartz(const TwoTerm& u, uint64_t seed) {
    const Algebra& alg = *u.alg;
    require(is_presilting(u), ErrorCode::NotPresilting, "co_bongartz requires a presilting complex");
    const PrimeField& f = alg.field();
    // Basis of Hom_K(A-stalk, U): chain maps A -> U^0 modulo d_U * Hom(A, U^{-1}).
    // Coordinates: (row r over u.zero, vertex v, basis path in e_{u.zero[r]} A e_v).
    std::vector<std::vector<int>> offset(u.zero.size(), std::vector<int>(alg.vertex_count(), 0));
    int width = 0;
    for (size_t r = 0; r < u.zero.size(); ++r)
        for (int v = 0; v < alg.vertex_count(); ++v) {
            offset[r][v] = width;
            width += static_cast<int>(alg.pair_basis(u.zero[r], v).size());
        }
    RowSpan span(f, std::max(width, 1));
    if (width > 0)
        for (size_t rp = 0; rp < u.minus1.size(); ++rp)
            for (int v = 0; v < alg.vertex_count(); ++v)
                for (int beta : alg.pair_basis(u.minus1[rp], v)) {
                    std::vector<uint32_t> vec(width, 0);
                    for (size_t r = 0; r < u.zero.size(); ++r) {
                        AlgElt e = alg.mult(u.diff[r][rp], alg.unit_elt(beta));
                        const auto& pb = alg.pair_basis(u.zero[r], v);
                        for (size_t i = 0; i < pb.size(); ++i)
                            vec[offset[r][v] + i] = f.add(vec[offset[r][v] + i], e[pb[i]]);
                    }
                    span.insert(std::move(vec));
                }
    // representatives g_t: matrices rows = u.zero, cols = vertices
    std::vector<std::vector<std::vector<AlgElt>>> reps;
    for (size_t r = 0; r < u.zero.size(); ++r)
        for (int v = 0; v < alg.vertex_count(); ++v) {
            const auto& pb = alg.pair_basis(u.zero[r], v);
            for (size_t i = 0; i < pb.size(); ++i) {
                if (span.is_pivot(offset[r][v] + static_cast<int>(i))) continue;
                std::vector<std::vector<AlgElt>> mat(
                    u.zero.size(), std::vector<AlgElt>(alg.vertex_count(), alg.zero_elt()));
                mat[r][v][pb[i]] = 1 % f.p;
                reps.push_back(std::move(mat));
            }
        }
    int d = static_cast<int>(reps.size());
    // Y = cone(universal map A -> U^{d}):
    //   Y^{-1} = A plus d copies of U^{-1};  Y^0 = d copies of U^0.
    TwoTerm y = zero_complex(alg);
    for (int v = 0; v < alg.vertex_count(); ++v) y.minus1.push_back(v);
    for (int t = 0; t < d; ++t) {
        y.minus1.insert(y.minus1.end(), u.minus1.begin(), u.minus1.end());
        y.zero.insert(y.zero.end(), u.zero.begin(), u.zero.end());
    }
    y.diff.assign(y.zero.size(), std::vector<AlgElt>(y.minus1.size(), alg.zero_elt()));
    for (int t = 0; t < d; ++t) {
        size_t roff = t * u.zero.size();
        size_t coff = alg.vertex_count() + t * u.minus1.size();
        for (size_t r = 0; r < u.zero.size(); ++r) {
            for (int v = 0; v < alg.vertex_count(); ++v) y.diff[roff + r][v] = reps[t][r][v];
            for (size_t c = 0; c < u.minus1.size(); ++c) y.diff[roff + r][coff + c] = u.diff[r][c];
        }
    }
    TwoTerm total = u.empty() ? y : complex_direct_sum({u, y});
    SttiltPair pair = make_pair(total, seed);
    require(pair.is_silting() && is_presilting(pair.complex), ErrorCode::MutationInvariantViolation,
            "co-Bongartz completion is not silting");
    return pair.complex;
}

TwoTerm remove_summand(const SttiltPair& x, int k) {
    const Algebra& alg = *x.alg;
    require(k >= 0 && k < x.part_count(), ErrorCode::BadArgument, "summand index out of range");
    std::vector<TwoTerm> parts;
    for (size_t i = 0; i < x.summands.size(); ++i) {
        if (static_cast<int>(i) == k) continue;
        parts.push_back(presentation_complex(min_presentation(x.summands[i]), alg));
    }
    for (size_t j = 0; j < x.support.size(); ++j) {
        if (static_cast<int>(x.summands.size() + j) == k) continue;
        parts.push_back(shifted_stalk_complex(alg, x.support[j]));
    }
    return parts.empty() ? zero_complex(alg) : complex_direct_sum(parts);
}

SttiltPair mutate(const SttiltPair& x, int k, uint64_t seed) {
    require(x.is_silting(), ErrorCode::BadArgument, "mutate requires a silting pair");
    TwoTerm u = remove_summand(x, k);
    SttiltPair cand1 = make_pair(bongartz(u, seed), seed);
    SttiltPair cand2 = make_pair(co_bongartz(u, seed), seed);
    bool eq1 = cand1.key == x.key, eq2 = cand2.key == x.key;
    require(eq1 != eq2 && cand1.key != cand2.key, ErrorCode::MutationInvariantViolation,
            "mutation did not produce exactly one new completion");
    return eq1 ? cand2 : cand1;
}

bool order_leq(const TwoTerm& x, const TwoTerm& y) {
    check_same_algebra(x, y);
    return hom_shift1(y, x).dim == 0;
}

}  // namespace ttr
