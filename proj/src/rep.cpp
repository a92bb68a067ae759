#include "rep.hpp"

#include <algorithm>
#include <numeric>

namespace ttr {

namespace {

int pos_in(const std::vector<int>& v, int x) {
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] == x) return static_cast<int>(i);
    return -1;
}

}  // namespace

int Rep::total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

bool Rep::is_sincere() const {
    for (int d : dims)
        if (d == 0) return false;
    return true;
}

Rep zero_rep(const Algebra& alg) {
    Rep m;
    m.alg = &alg;
    m.dims.assign(alg.vertex_count(), 0);
    for (const Arrow& a : alg.quiver().arrows) m.arrow_maps.emplace_back(alg.field(), 0, 0);
    return m;
}

Rep simple_rep(const Algebra& alg, int vertex) {
    Rep m = zero_rep(alg);
    m.dims[vertex] = 1;
    for (size_t a = 0; a < alg.quiver().arrows.size(); ++a) {
        const Arrow& ar = alg.quiver().arrows[a];
        m.arrow_maps[a] = FpMat(alg.field(), m.dims[ar.tgt], m.dims[ar.src]);
    }
    return m;
}

Rep projective_rep(const Algebra& alg, int vertex) {
    Rep m = zero_rep(alg);
    int n = alg.vertex_count();
    for (int v = 0; v < n; ++v) m.dims[v] = static_cast<int>(alg.pair_basis(vertex, v).size());
    for (size_t a = 0; a < alg.quiver().arrows.size(); ++a) {
        const Arrow& ar = alg.quiver().arrows[a];
        const auto& src_b = alg.pair_basis(vertex, ar.src);
        const auto& tgt_b = alg.pair_basis(vertex, ar.tgt);
        FpMat mat(alg.field(), m.dims[ar.tgt], m.dims[ar.src]);
        int ab = alg.arrow_basis_index(static_cast<int>(a));
        if (ab >= 0) {
            for (size_t c = 0; c < src_b.size(); ++c)
                for (const auto& [k, coeff] : alg.mult_basis(src_b[c], ab)) {
                    int r = pos_in(tgt_b, k);
                    require(r >= 0, ErrorCode::Internal, "projective action left e_iA");
                    mat.at(r, static_cast<uint32_t>(c)) = coeff;
                }
        }
        m.arrow_maps[a] = std::move(mat);
    }
    return m;
}

Rep injective_rep(const Algebra& alg, int vertex) {
    Rep m = zero_rep(alg);
    int n = alg.vertex_count();
    for (int v = 0; v < n; ++v) m.dims[v] = static_cast<int>(alg.pair_basis(v, vertex).size());
    for (size_t a = 0; a < alg.quiver().arrows.size(); ++a) {
        const Arrow& ar = alg.quiver().arrows[a];
        // dual of left multiplication  e_{tgt}Ae_i -> e_{src}Ae_i
        const auto& from_b = alg.pair_basis(ar.tgt, vertex);
        const auto& to_b = alg.pair_basis(ar.src, vertex);
        FpMat mat(alg.field(), m.dims[ar.tgt], m.dims[ar.src]);
        int ab = alg.arrow_basis_index(static_cast<int>(a));
        if (ab >= 0) {
            for (size_t c = 0; c < from_b.size(); ++c)
                for (const auto& [k, coeff] : alg.mult_basis(ab, from_b[c])) {
                    int r = pos_in(to_b, k);
                    require(r >= 0, ErrorCode::Internal, "injective action left Ae_i");
                    // lambda[r, c] transposed
                    mat.at(static_cast<uint32_t>(c), r) = coeff;
                }
        }
        m.arrow_maps[a] = std::move(mat);
    }
    return m;
}

Rep direct_sum(const std::vector<Rep>& parts) {
    require(!parts.empty(), ErrorCode::BadArgument, "direct_sum of nothing");
    const Algebra& alg = *parts[0].alg;
    Rep m = zero_rep(alg);
    for (const Rep& p : parts) {
        require(p.alg == &alg, ErrorCode::AlgebraMismatch, "direct_sum over mixed algebras");
        for (int v = 0; v < alg.vertex_count(); ++v) m.dims[v] += p.dims[v];
    }
    for (size_t a = 0; a < alg.quiver().arrows.size(); ++a) {
        const Arrow& ar = alg.quiver().arrows[a];
        FpMat mat(alg.field(), m.dims[ar.tgt], m.dims[ar.src]);
        int roff = 0, coff = 0;
        for (const Rep& p : parts) {
            for (uint32_t r = 0; r < p.arrow_maps[a].rows(); ++r)
                for (uint32_t c = 0; c < p.arrow_maps[a].cols(); ++c)
                    mat.at(roff + r, coff + c) = p.arrow_maps[a].at(r, c);
            roff += p.dims[ar.tgt];
            coff += p.dims[ar.src];
        }
        m.arrow_maps[a] = std::move(mat);
    }
    return m;
}

FpMat path_action(const Rep& m, int src, const std::vector<int>& word) {
    const Algebra& alg = *m.alg;
    FpMat act = FpMat::identity(alg.field(), m.dims[src]);
    int at = src;
    for (int a : word) {
        require(alg.quiver().arrows[a].src == at, ErrorCode::BadArgument, "path not composable");
        act = m.arrow_maps[a] * act;
        at = alg.quiver().arrows[a].tgt;
    }
    return act;
}

void validate_rep(const Rep& m) {
    const Algebra& alg = *m.alg;
    require(static_cast<int>(m.dims.size()) == alg.vertex_count(), ErrorCode::BadArgument,
            "dims length mismatch");
    for (size_t a = 0; a < alg.quiver().arrows.size(); ++a) {
        const Arrow& ar = alg.quiver().arrows[a];
        require(static_cast<int>(m.arrow_maps[a].rows()) == m.dims[ar.tgt] &&
                    static_cast<int>(m.arrow_maps[a].cols()) == m.dims[ar.src],
                ErrorCode::BadArgument, "arrow map shape mismatch for " + ar.label);
    }
    for (const Relation& rel : alg.relations()) {
        int src = alg.quiver().arrows[rel.terms[0].word.front()].src;
        int tgt = alg.quiver().arrows[rel.terms[0].word.back()].tgt;
        FpMat total(alg.field(), m.dims[tgt], m.dims[src]);
        for (const RelTerm& t : rel.terms)
            total = total + path_action(m, src, t.word).scaled(alg.field().reduce(t.coeff));
        require(total.is_zero(), ErrorCode::BadArgument,
                "representation violates a defining relation");
    }
}

std::vector<Morphism> hom_basis(const Rep& m, const Rep& n) {
    require(m.alg == n.alg, ErrorCode::AlgebraMismatch, "hom_basis over different algebras");
    const Algebra& alg = *m.alg;
    const PrimeField& f = alg.field();
    int nv = alg.vertex_count();
    std::vector<int> offset(nv + 1, 0);
    for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
    int unknowns = offset[nv];
    int rows = 0;
    for (size_t a = 0; a < alg.quiver().arrows.size(); ++a)
        rows += n.dims[alg.quiver().arrows[a].tgt] * m.dims[alg.quiver().arrows[a].src];
    FpMat sys(f, rows, unknowns);
    int row = 0;
    for (size_t a = 0; a < alg.quiver().arrows.size(); ++a) {
        const Arrow& ar = alg.quiver().arrows[a];
        const FpMat& ma = m.arrow_maps[a];
        const FpMat& na = n.arrow_maps[a];
        for (int r = 0; r < n.dims[ar.tgt]; ++r)
            for (int c = 0; c < m.dims[ar.src]; ++c) {
                // sum_k f_tgt[r,k] ma[k,c] - sum_k na[r,k] f_src[k,c] = 0
                for (int k = 0; k < m.dims[ar.tgt]; ++k)
                    sys.at(row, offset[ar.tgt] + r * m.dims[ar.tgt] + k) =
                        f.add(sys.at(row, offset[ar.tgt] + r * m.dims[ar.tgt] + k), ma.at(k, c));
                for (int k = 0; k < n.dims[ar.src]; ++k)
                    sys.at(row, offset[ar.src] + k * m.dims[ar.src] + c) =
                        f.sub(sys.at(row, offset[ar.src] + k * m.dims[ar.src] + c), na.at(r, k));
                ++row;
            }
    }
    std::vector<Morphism> basis;
    for (const auto& vec : nullspace(sys)) {
        Morphism mor;
        for (int v = 0; v < nv; ++v) {
            FpMat fm(f, n.dims[v], m.dims[v]);
            for (int r = 0; r < n.dims[v]; ++r)
                for (int c = 0; c < m.dims[v]; ++c)
                    fm.at(r, c) = vec[offset[v] + r * m.dims[v] + c];
            mor.maps.push_back(std::move(fm));
        }
        basis.push_back(std::move(mor));
    }
    return basis;
}

int hom_dim(const Rep& m, const Rep& n) { return static_cast<int>(hom_basis(m, n).size()); }

namespace {

Morphism combine(const Rep& m, const Rep& n, const std::vector<Morphism>& basis,
                 const std::vector<uint32_t>& coeffs) {
    const PrimeField& f = m.alg->field();
    Morphism out;
    for (int v = 0; v < m.alg->vertex_count(); ++v) {
        FpMat fm(f, n.dims[v], m.dims[v]);
        for (size_t b = 0; b < basis.size(); ++b)
            if (coeffs[b]) fm = fm + basis[b].maps[v].scaled(coeffs[b]);
        out.maps.push_back(std::move(fm));
    }
    return out;
}

bool invertible_everywhere(const Morphism& mor) {
    for (const FpMat& m : mor.maps) {
        if (m.rows() != m.cols()) return false;
        if (m.rows() && rank(m) < m.rows()) return false;
    }
    return true;
}

}  // namespace

bool is_isomorphic(const Rep& m, const Rep& n, uint64_t seed) {
    require(m.alg == n.alg, ErrorCode::AlgebraMismatch, "is_isomorphic over different algebras");
    if (m.dims != n.dims) return false;
    if (m.total_dim() == 0) return true;
    std::vector<Morphism> basis = hom_basis(m, n);
    if (basis.empty()) return false;
    Rng rng(seed * 0x9e3779b97f4a7c15ull + 17);
    const uint32_t p = m.alg->field().p;
    for (int t = 0; t < 200; ++t) {
        std::vector<uint32_t> coeffs(basis.size());
        if (t < static_cast<int>(basis.size())) {
            coeffs[t] = 1 % p;  // deterministic first pass over pure basis maps
        } else {
            for (auto& c : coeffs) c = rng.below(p);
        }
        if (invertible_everywhere(combine(m, n, basis, coeffs))) return true;
    }
    // Exhaustive scan for tiny Hom spaces.
    double total = 1;
    for (size_t i = 0; i < basis.size(); ++i) total *= p;
    if (basis.size() <= 4 && total <= (1 << 20)) {
        std::vector<uint32_t> coeffs(basis.size(), 0);
        while (true) {
            if (invertible_everywhere(combine(m, n, basis, coeffs))) return true;
            size_t i = 0;
            while (i < coeffs.size() && ++coeffs[i] == p) coeffs[i++] = 0;
            if (i == coeffs.size()) break;
        }
        return false;
    }
    return false;
}

FpMat solve_matrix(const FpMat& a, const FpMat& b) {
    require(a.rows() == b.rows(), ErrorCode::BadArgument, "solve_matrix shape mismatch");
    RrefResult r = rref(FpMat::hcat(a, b));
    FpMat x(a.field(), a.cols(), b.cols());
    for (uint32_t i = 0; i < r.pivots.size(); ++i) {
        require(r.pivots[i] < a.cols(), ErrorCode::Internal, "inconsistent linear system");
        for (uint32_t c = 0; c < b.cols(); ++c) x.at(r.pivots[i], c) = r.mat.at(i, a.cols() + c);
    }
    return x;
}

Rep sub_rep(const Rep& m, const std::vector<FpMat>& bases) {
    const Algebra& alg = *m.alg;
    Rep s = zero_rep(alg);
    for (int v = 0; v < alg.vertex_count(); ++v) s.dims[v] = bases[v].cols();
    for (size_t a = 0; a < alg.quiver().arrows.size(); ++a) {
        const Arrow& ar = alg.quiver().arrows[a];
        s.arrow_maps[a] = solve_matrix(bases[ar.tgt], m.arrow_maps[a] * bases[ar.src]);
    }
    return s;
}

std::pair<Rep, Morphism> quotient_rep(const Rep& m, const std::vector<FpMat>& sub_bases) {
    const Algebra& alg = *m.alg;
    const PrimeField& f = alg.field();
    int nv = alg.vertex_count();
    std::vector<FpMat> proj(nv, FpMat());
    Rep q = zero_rep(alg);
    std::vector<std::vector<uint32_t>> free_cols(nv);
    for (int v = 0; v < nv; ++v) {
        RowSpan span(f, m.dims[v]);
        for (uint32_t c = 0; c < sub_bases[v].cols(); ++c) {
            std::vector<uint32_t> row(m.dims[v]);
            for (int r = 0; r < m.dims[v]; ++r) row[r] = sub_bases[v].at(r, c);
            span.insert(std::move(row));
        }
        for (int c = 0; c < m.dims[v]; ++c)
            if (!span.is_pivot(c)) free_cols[v].push_back(c);
        q.dims[v] = static_cast<int>(free_cols[v].size());
        // projection: reduce a vector modulo the span, read off free coords
        FpMat pm(f, q.dims[v], m.dims[v]);
        for (int c = 0; c < m.dims[v]; ++c) {
            std::vector<uint32_t> unit(m.dims[v], 0);
            unit[c] = 1 % f.p;
            auto red = span.reduce(std::move(unit));
            for (int r = 0; r < q.dims[v]; ++r) pm.at(r, c) = red[free_cols[v][r]];
        }
        proj[v] = std::move(pm);
    }
    for (size_t a = 0; a < alg.quiver().arrows.size(); ++a) {
        const Arrow& ar = alg.quiver().arrows[a];
        // induced map: lift a free coord (unit vector), push, project
        FpMat lift(f, m.dims[ar.src], q.dims[ar.src]);
        for (int c = 0; c < q.dims[ar.src]; ++c) lift.at(free_cols[ar.src][c], c) = 1 % f.p;
        q.arrow_maps[a] = proj[ar.tgt] * (m.arrow_maps[a] * lift);
    }
    Morphism pr;
    pr.maps = std::move(proj);
    return {std::move(q), std::move(pr)};
}

namespace {

// Per-vertex basis of the radical: the span of all incoming arrow images.
std::vector<RowSpan> radical_spans(const Rep& m) {
    const Algebra& alg = *m.alg;
    std::vector<RowSpan> spans;
    for (int v = 0; v < alg.vertex_count(); ++v) spans.emplace_back(alg.field(), m.dims[v]);
    for (size_t a = 0; a < alg.quiver().arrows.size(); ++a) {
        const Arrow& ar = alg.quiver().arrows[a];
        const FpMat& ma = m.arrow_maps[a];
        for (uint32_t c = 0; c < ma.cols(); ++c) {
            std::vector<uint32_t> col(ma.rows());
            for (uint32_t r = 0; r < ma.rows(); ++r) col[r] = ma.at(r, c);
            spans[ar.tgt].insert(std::move(col));
        }
    }
    return spans;
}

struct Cover {
    std::vector<int> gens;          // projective vertex per generator
    Rep p0;                         // direct sum of those projectives
    std::vector<FpMat> cover_maps;  // per vertex: M_v x (P0)_v
};

// Projective cover P0 -> M with deterministic generator choice: complement of
// the radical by unit vectors at non-pivot coordinates.
Cover projective_cover(const Rep& m) {
    const Algebra& alg = *m.alg;
    const PrimeField& f = alg.field();
    int nv = alg.vertex_count();
    auto rad = radical_spans(m);
    Cover cov;
    std::vector<std::pair<int, int>> lifts;  // (vertex, coordinate)
    for (int v = 0; v < nv; ++v)
        for (int c = 0; c < m.dims[v]; ++c)
            if (!rad[v].is_pivot(c)) {
                cov.gens.push_back(v);
                lifts.emplace_back(v, c);
            }
    std::vector<Rep> projs;
    for (int g : cov.gens) projs.push_back(projective_rep(alg, g));
    cov.p0 = cov.gens.empty() ? zero_rep(alg) : direct_sum(projs);
    for (int v = 0; v < nv; ++v) {
        FpMat mat(f, m.dims[v], cov.p0.dims[v]);
        int col = 0;
        for (size_t g = 0; g < cov.gens.size(); ++g) {
            auto [gv, gc] = lifts[g];
            for (int b : alg.pair_basis(gv, v)) {
                FpMat act = path_action(m, gv, alg.basis()[b].word);
                for (int r = 0; r < m.dims[v]; ++r) mat.at(r, col) = act.at(r, gc);
                ++col;
            }
        }
        require(col == cov.p0.dims[v], ErrorCode::Internal, "cover column bookkeeping");
        cov.cover_maps.push_back(std::move(mat));
    }
    // surjectivity (graded Nakayama)
    for (int v = 0; v < nv; ++v)
        require(static_cast<int>(rank(cov.cover_maps[v])) == m.dims[v], ErrorCode::Internal,
                "projective cover is not surjective");
    return cov;
}

// Kernel of the cover as per-vertex column bases inside P0.
std::vector<FpMat> cover_kernel(const Cover& cov) {
    const Algebra& alg = *cov.p0.alg;
    const PrimeField& f = alg.field();
    std::vector<FpMat> kb;
    for (int v = 0; v < alg.vertex_count(); ++v) {
        auto ns = nullspace(cov.cover_maps[v]);
        FpMat basis(f, cov.p0.dims[v], static_cast<uint32_t>(ns.size()));
        for (size_t c = 0; c < ns.size(); ++c)
            for (int r = 0; r < cov.p0.dims[v]; ++r) basis.at(r, c) = ns[c][r];
        kb.push_back(std::move(basis));
    }
    return kb;
}

}  // namespace

Presentation min_presentation(const Rep& m) {
    const Algebra& alg = *m.alg;
    Presentation pres;
    Cover cov0 = projective_cover(m);
    pres.p_zero = cov0.gens;
    pres.p0_rep = cov0.p0;
    pres.cover = cov0.cover_maps;
    std::vector<FpMat> kb = cover_kernel(cov0);
    Rep k = sub_rep(cov0.p0, kb);
    Cover cov1 = projective_cover(k);
    pres.p_minus1 = cov1.gens;
    // Differential entries: generator images inside P0, read off as algebra
    // elements over the projective-path coordinates of each P0 block.
    pres.diff.assign(pres.p_zero.size(), std::vector<AlgElt>(pres.p_minus1.size()));
    for (size_t r = 0; r < pres.p_zero.size(); ++r)
        for (size_t c = 0; c < pres.p_minus1.size(); ++c) pres.diff[r][c] = alg.zero_elt();
    for (size_t c = 0; c < pres.p_minus1.size(); ++c) {
        int q = pres.p_minus1[c];
        // generator c of P1 corresponds to column c of cov1.cover_maps at the
        // identity coordinate; its image in K coords is the unit at the
        // generator lift, i.e. column of cov1.cover at the e_q basis position.
        int idem_pos = pos_in(alg.pair_basis(q, q), alg.idempotent_index(q));
        require(idem_pos >= 0, ErrorCode::Internal, "missing idempotent coordinate");
        // locate column offset of generator c's e_q coordinate within P1 at q:
        int col = 0;
        for (size_t g = 0; g < c; ++g) col += static_cast<int>(alg.pair_basis(pres.p_minus1[g], q).size());
        col += idem_pos;
        // image in K coordinates:
        std::vector<uint32_t> k_coords(k.dims[q]);
        for (int r = 0; r < k.dims[q]; ++r) k_coords[r] = cov1.cover_maps[q].at(r, col);
        // back to P0 coordinates at vertex q:
        std::vector<uint32_t> p0_coords = kb[q].apply(k_coords);
        // split by P0 blocks; each block coordinate indexes a basis path
        int off = 0;
        for (size_t r = 0; r < pres.p_zero.size(); ++r) {
            for (int b : alg.pair_basis(pres.p_zero[r], q)) {
                if (p0_coords[off]) pres.diff[r][c][b] = p0_coords[off];
                ++off;
            }
        }
        require(off == static_cast<int>(p0_coords.size()), ErrorCode::Internal,
                "differential bookkeeping");
    }
    return pres;
}

Rep tau(const Rep& m) {
    const Algebra& alg = *m.alg;
    const PrimeField& f = alg.field();
    Presentation pres = min_presentation(m);
    if (pres.p_minus1.empty()) return zero_rep(alg);
    std::vector<Rep> inj1;
    for (int q : pres.p_minus1) inj1.push_back(injective_rep(alg, q));
    Rep nu1 = direct_sum(inj1);
    // nu(d): per vertex v, block (r, c) = transpose of right-multiplication
    //   e_v A e_{z_r} -> e_v A e_{q_c},  b -> b * x_{r,c}.
    std::vector<FpMat> kernel_bases;
    for (int v = 0; v < alg.vertex_count(); ++v) {
        int rows_total = 0;
        for (int z : pres.p_zero) rows_total += static_cast<int>(alg.pair_basis(v, z).size());
        FpMat block(f, rows_total, nu1.dims[v]);
        int coff = 0;
        for (size_t c = 0; c < pres.p_minus1.size(); ++c) {
            const auto& src_b = alg.pair_basis(v, pres.p_minus1[c]);  // coords of I(q_c) at v
            int roff = 0;
            for (size_t r = 0; r < pres.p_zero.size(); ++r) {
                const auto& dom_b = alg.pair_basis(v, pres.p_zero[r]);  // coords of I(z_r) at v
                const AlgElt& x = pres.diff[r][c];
                // right multiplication rho_x: e_vAe_{z_r} -> e_vAe_{q_c}
                for (size_t j = 0; j < dom_b.size(); ++j) {
                    AlgElt prod = alg.mult(alg.unit_elt(dom_b[j]), x);
                    for (size_t i = 0; i < src_b.size(); ++i) {
                        // transpose: block[roff + j][coff + i] = rho[i][j]
                        block.at(roff + static_cast<int>(j), coff + static_cast<int>(i)) =
                            prod[src_b[i]];
                    }
                }
                roff += static_cast<int>(dom_b.size());
            }
            coff += static_cast<int>(src_b.size());
        }
        auto ns = nullspace(block);
        FpMat basis(f, nu1.dims[v], static_cast<uint32_t>(ns.size()));
        for (size_t c = 0; c < ns.size(); ++c)
            for (int r = 0; r < nu1.dims[v]; ++r) basis.at(r, c) = ns[c][r];
        kernel_bases.push_back(std::move(basis));
    }
    return sub_rep(nu1, kernel_bases);
}

int ext1_dim(const Rep& m, const Rep& n) {
    const Algebra& alg = *m.alg;
    require(m.alg == n.alg, ErrorCode::AlgebraMismatch, "ext1_dim over different algebras");
    Cover cov = projective_cover(m);
    if (cov.gens.empty()) return 0;
    std::vector<FpMat> kb = cover_kernel(cov);
    Rep k = sub_rep(cov.p0, kb);
    int hom_kn = hom_dim(k, n);
    if (hom_kn == 0) return 0;
    // rank of the restriction map Hom(P0, N) -> Hom(K, N)
    int width = 0;
    for (int v = 0; v < alg.vertex_count(); ++v) width += n.dims[v] * k.dims[v];
    RowSpan image(alg.field(), width);
    for (const Morphism& phi : hom_basis(cov.p0, n)) {
        std::vector<uint32_t> flat;
        flat.reserve(width);
        for (int v = 0; v < alg.vertex_count(); ++v) {
            FpMat restricted = phi.maps[v] * kb[v];
            for (uint32_t r = 0; r < restricted.rows(); ++r)
                for (uint32_t c = 0; c < restricted.cols(); ++c)
                    flat.push_back(restricted.at(r, c));
        }
        image.insert(std::move(flat));
    }
    return hom_kn - static_cast<int>(image.dim());
}

std::vector<AlgElt> annihilator(const Rep& m) {
    const Algebra& alg = *m.alg;
    const PrimeField& f = alg.field();
    int dim = alg.dim();
    int rows = 0;
    std::vector<FpMat> acts(dim, FpMat());
    for (int b = 0; b < dim; ++b) {
        const auto& bp = alg.basis()[b];
        acts[b] = path_action(m, bp.src, bp.word);
    }
    for (int b = 0; b < dim; ++b) rows = std::max(rows, 0);
    // rows: for each (u, v) pair of vertices, all entries of the action of a
    // general element restricted to M_u -> M_v.
    int total_rows = 0;
    for (int u = 0; u < alg.vertex_count(); ++u)
        for (int v = 0; v < alg.vertex_count(); ++v) total_rows += m.dims[v] * m.dims[u];
    FpMat sys(f, total_rows, dim);
    int roff = 0;
    for (int u = 0; u < alg.vertex_count(); ++u)
        for (int v = 0; v < alg.vertex_count(); ++v) {
            for (int b = 0; b < dim; ++b) {
                const auto& bp = alg.basis()[b];
                if (bp.src != u || bp.tgt != v) continue;
                const FpMat& act = acts[b];
                for (int r = 0; r < m.dims[v]; ++r)
                    for (int c = 0; c < m.dims[u]; ++c)
                        sys.at(roff + r * m.dims[u] + c, b) = act.at(r, c);
            }
            roff += m.dims[v] * m.dims[u];
        }
    std::vector<AlgElt> out;
    for (auto& vec : nullspace(sys)) out.push_back(std::move(vec));
    return out;
}

TorsionParts torsion_parts(const Rep& u, const Rep& m) {
    require(u.alg == m.alg, ErrorCode::AlgebraMismatch, "torsion_parts over different algebras");
    const Algebra& alg = *m.alg;
    const PrimeField& f = alg.field();
    int nv = alg.vertex_count();
    std::vector<RowSpan> trace;
    for (int v = 0; v < nv; ++v) trace.emplace_back(f, m.dims[v]);
    for (const Morphism& phi : hom_basis(u, m))
        for (int v = 0; v < nv; ++v)
            for (uint32_t c = 0; c < phi.maps[v].cols(); ++c) {
                std::vector<uint32_t> col(m.dims[v]);
                for (int r = 0; r < m.dims[v]; ++r) col[r] = phi.maps[v].at(r, c);
                trace[v].insert(std::move(col));
            }
    std::vector<FpMat> bases;
    for (int v = 0; v < nv; ++v) {
        FpMat b(f, m.dims[v], trace[v].dim());
        for (uint32_t i = 0; i < trace[v].dim(); ++i)
            for (int r = 0; r < m.dims[v]; ++r) b.at(r, i) = trace[v].rows()[i][r];
        bases.push_back(std::move(b));
    }
    TorsionParts parts;
    parts.t_part = sub_rep(m, bases);
    auto [q, proj] = quotient_rep(m, bases);
    parts.f_part = std::move(q);
    parts.projection = std::move(proj);
    Morphism incl;
    for (int v = 0; v < nv; ++v) incl.maps.push_back(bases[v]);
    parts.inclusion = std::move(incl);
    return parts;
}

namespace {

// Minimal polynomial of the block-diagonal endomorphism phi (per-vertex
// matrices), via Krylov iteration in flattened coordinates.
Poly min_poly(const Rep& m, const Morphism& phi) {
    const PrimeField& f = m.alg->field();
    int nv = m.alg->vertex_count();
    int width = 0;
    for (int v = 0; v < nv; ++v) width += m.dims[v] * m.dims[v];
    std::vector<Morphism> powers;
    Morphism cur;
    for (int v = 0; v < nv; ++v) cur.maps.push_back(FpMat::identity(f, m.dims[v]));
    FpMat krylov(f, 0, width);
    while (true) {
        std::vector<uint32_t> flat;
        flat.reserve(width);
        for (int v = 0; v < nv; ++v)
            for (uint32_t r = 0; r < cur.maps[v].rows(); ++r)
                for (uint32_t c = 0; c < cur.maps[v].cols(); ++c) flat.push_back(cur.maps[v].at(r, c));
        FpMat row(f, 1, width);
        for (int i = 0; i < width; ++i) row.at(0, i) = flat[i];
        FpMat bigger = krylov.rows() ? FpMat::vcat(krylov, row) : row;
        if (rank(bigger) == krylov.rows()) {
            // current power depends on earlier ones: solve for coefficients
            auto sol = solve(krylov.transpose(), flat);
            require(sol.has_value(), ErrorCode::Internal, "Krylov dependency unsolvable");
            Poly p(powers.size() + 1, 0);
            for (size_t i = 0; i < powers.size(); ++i) p[i] = f.neg((*sol)[i]);
            p[powers.size()] = 1 % f.p;
            return p;
        }
        krylov = std::move(bigger);
        powers.push_back(cur);
        Morphism next;
        for (int v = 0; v < nv; ++v) next.maps.push_back(phi.maps[v] * cur.maps[v]);
        cur = std::move(next);
    }
}

Morphism eval_poly(const Rep& m, const Morphism& phi, const Poly& p) {
    const PrimeField& f = m.alg->field();
    int nv = m.alg->vertex_count();
    Morphism out;
    for (int v = 0; v < nv; ++v) {
        FpMat acc(f, m.dims[v], m.dims[v]);
        // Horner
        for (size_t i = p.size(); i-- > 0;) {
            acc = acc * phi.maps[v];
            for (int d = 0; d < m.dims[v]; ++d) acc.at(d, d) = f.add(acc.at(d, d), p[i]);
        }
        out.maps.push_back(std::move(acc));
    }
    return out;
}

std::vector<FpMat> kernel_bases_of(const Rep& m, const Morphism& phi) {
    const PrimeField& f = m.alg->field();
    std::vector<FpMat> bases;
    for (int v = 0; v < m.alg->vertex_count(); ++v) {
        auto ns = nullspace(phi.maps[v]);
        FpMat b(f, m.dims[v], static_cast<uint32_t>(ns.size()));
        for (size_t c = 0; c < ns.size(); ++c)
            for (int r = 0; r < m.dims[v]; ++r) b.at(r, c) = ns[c][r];
        bases.push_back(std::move(b));
    }
    return bases;
}

void decompose_into(const Rep& m, uint64_t seed, std::vector<Rep>& out, int depth) {
    require(depth < 64, ErrorCode::DecompositionFailure, "decomposition recursion too deep");
    if (m.total_dim() == 0) return;
    std::vector<Morphism> endo = hom_basis(m, m);
    if (endo.size() == 1) {
        out.push_back(m);
        return;
    }
    const uint32_t p = m.alg->field().p;
    Rng rng(seed ^ (0xabcdull + m.total_dim() * 1315423911ull));
    for (int attempt = 0; attempt < 32 + static_cast<int>(endo.size()); ++attempt) {
        std::vector<uint32_t> coeffs(endo.size(), 0);
        if (attempt < static_cast<int>(endo.size())) {
            coeffs[attempt] = 1 % p;
        } else {
            for (auto& c : coeffs) c = rng.below(p);
        }
        Morphism phi = combine(m, m, endo, coeffs);
        Poly mp = min_poly(m, phi);
        Rng prng(rng.next());
        auto split = coprime_split(m.alg->field(), mp, prng);
        if (!split) continue;
        Morphism f_phi = eval_poly(m, phi, split->first);
        Morphism g_phi = eval_poly(m, phi, split->second);
        Rep k1 = sub_rep(m, kernel_bases_of(m, f_phi));
        Rep k2 = sub_rep(m, kernel_bases_of(m, g_phi));
        require(k1.total_dim() + k2.total_dim() == m.total_dim(), ErrorCode::Internal,
                "coprime splitting dimensions do not add up");
        if (k1.total_dim() == 0 || k2.total_dim() == 0) continue;
        decompose_into(k1, seed, out, depth + 1);
        decompose_into(k2, seed, out, depth + 1);
        return;
    }
    // No splitting found within the budget: indecomposable.
    out.push_back(m);
}

}  // namespace

std::vector<Rep> decompose_list(const Rep& m, uint64_t seed) {
    std::vector<Rep> out;
    decompose_into(m, seed, out, 0);
    int total = 0;
    for (const Rep& r : out) total += r.total_dim();
    require(total == m.total_dim(), ErrorCode::DecompositionFailure,
            "decomposition does not add up to the input dimension");
    // deterministic order: by dims vector, then by matrix content footprint
    std::stable_sort(out.begin(), out.end(), [](const Rep& a, const Rep& b) {
        if (a.dims != b.dims) return a.dims < b.dims;
        return false;
    });
    return out;
}

Decomposition decompose(const Rep& m, uint64_t seed) {
    Decomposition d;
    for (Rep& piece : decompose_list(m, seed)) {
        bool merged = false;
        for (size_t i = 0; i < d.summands.size() && !merged; ++i)
            if (is_isomorphic(d.summands[i], piece, seed)) {
                d.multiplicities[i]++;
                merged = true;
            }
        if (!merged) {
            d.summands.push_back(std::move(piece));
            d.multiplicities.push_back(1);
        }
    }
    return d;
}

}  // namespace ttr
