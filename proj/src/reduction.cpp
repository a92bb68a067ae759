#include "reduction.hpp"

namespace ttr {

bool tau_perp_member(const Rep& u, const Rep& m) {
    require(u.alg == m.alg, ErrorCode::AlgebraMismatch, "modules live over different algebras");
    if (m.is_zero()) return true;
    if (u.is_zero()) return true;
    Rep tu = tau(u);
    return hom_dim(m, tu) == 0 && hom_dim(u, m) == 0;
}

namespace {

// Flatten a morphism into a single coefficient vector for span computations.
std::vector<uint32_t> flatten(const Morphism& f) {
    std::vector<uint32_t> row;
    for (const FpMat& m : f.maps)
        for (uint32_t r = 0; r < m.rows(); ++r)
            for (uint32_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
    return row;
}

Morphism compose(const Morphism& f, const Morphism& g) {
    // g after f, vertexwise
    Morphism h;
    for (size_t v = 0; v < f.maps.size(); ++v) h.maps.push_back(g.maps[v] * f.maps[v]);
    return h;
}

struct BarData {
    Rep t_bar;  // module part of the Bongartz completion of u
    Rep u_bar;  // module part (H^0) of u itself
};

BarData bar_data(const Algebra& alg, const TwoTerm& u, uint64_t seed) {
    require(is_presilting(u), ErrorCode::NotPresilting, "U must be presilting");
    BarData d;
    d.t_bar = make_pair(bongartz(u, seed), seed).module;
    d.u_bar = make_pair(u, seed).module;
    (void)alg;
    return d;
}

}  // namespace

int dim_c_endo(const Algebra& alg, const TwoTerm& u, uint64_t seed) {
    BarData d = bar_data(alg, u, seed);
    std::vector<Morphism> endo = hom_basis(d.t_bar, d.t_bar);
    if (d.u_bar.is_zero()) return static_cast<int>(endo.size());
    std::vector<Morphism> to_u = hom_basis(d.t_bar, d.u_bar);
    std::vector<Morphism> from_u = hom_basis(d.u_bar, d.t_bar);
    uint32_t width = endo.empty() ? 0 : static_cast<uint32_t>(flatten(endo[0]).size());
    RowSpan ideal(alg.field(), width);
    for (const Morphism& f : to_u)
        for (const Morphism& g : from_u) ideal.insert(flatten(compose(f, g)));
    return static_cast<int>(endo.size()) - static_cast<int>(ideal.dim());
}

int dim_c_torsionfree(const Algebra& alg, const TwoTerm& u, uint64_t seed) {
    BarData d = bar_data(alg, u, seed);
    Rep f_t = torsion_parts(d.u_bar, d.t_bar).f_part;
    return hom_dim(d.t_bar, f_t);
}

ReductionReport reduce(const Algebra& alg, const TwoTerm& u, int cap, uint64_t seed) {
    require(is_presilting(u), ErrorCode::NotPresilting, "U must be presilting");
    ReductionReport rep;
    rep.alg = &alg;
    rep.u_pair = make_pair(u, seed);
    rep.interval = freeze_enumerate(alg, u, cap, seed);
    require(rep.interval.complete, ErrorCode::IncompleteInterval,
            "node cap reached while enumerating the interval");
    rep.bongartz_key = make_pair(bongartz(u, seed), seed).key;
    rep.cobongartz_key = make_pair(co_bongartz(u, seed), seed).key;
    require(rep.interval.max_key() == rep.bongartz_key, ErrorCode::Internal,
            "interval maximum differs from the Bongartz completion");
    require(rep.interval.min_key() == rep.cobongartz_key, ErrorCode::Internal,
            "interval minimum differs from the co-Bongartz completion");
    rep.dim_c_via_endo = dim_c_endo(alg, u, seed);
    rep.dim_c_via_torsionfree = dim_c_torsionfree(alg, u, seed);
    require(rep.dim_c_via_endo == rep.dim_c_via_torsionfree, ErrorCode::DimCMismatch,
            "endomorphism-quotient and torsion-free dim C computations disagree");
    rep.dim_c = rep.dim_c_via_endo;
    rep.poset = hasse(rep.interval);
    BarData d = bar_data(alg, u, seed);
    for (const auto& [key, node] : rep.interval.nodes) {
        Rep f_m = d.u_bar.is_zero() ? node.pair.module
                                    : torsion_parts(d.u_bar, node.pair.module).f_part;
        rep.reduced_dims[key] = hom_dim(d.t_bar, f_m);
    }
    return rep;
}

Verdict verify_against(const ReductionReport& report, const Algebra& c, int cap,
                       uint64_t seed) {
    MutationGraph gc = enumerate(c, cap, seed);
    require(gc.complete, ErrorCode::IncompleteGraph,
            "candidate algebra exceeded the node cap");
    Verdict v;
    v.count_match = gc.node_count() == report.interval.node_count();
    v.dim_match = c.dim() == report.dim_c;
    if (v.count_match)
        v.poset_iso = poset_isomorphic(report.poset, hasse(gc)).has_value();
    return v;
}

}  // namespace ttr
