#include "check.hpp"

#include <algorithm>

namespace ttr {

bool module_order_leq(const SttiltPair& x, const SttiltPair& y) {
    // support of x must absorb the support of y (killed vertices grow downward)
    if (!std::includes(x.support.begin(), x.support.end(), y.support.begin(), y.support.end()))
        return false;
    if (x.module.is_zero()) return true;
    Rep t = torsion_parts(y.module, x.module).t_part;
    return t.total_dim() == x.module.total_dim();
}

namespace {

bool check_regular(const Algebra& alg, const MutationGraph& g) {
    for (const auto& [key, node] : g.nodes) {
        if (node.pair.part_count() != alg.vertex_count()) return false;
        if (static_cast<int>(node.neighbors.size()) != alg.vertex_count()) return false;
    }
    return true;
}

bool check_extrema(const Algebra& alg, const MutationGraph& g, uint64_t seed) {
    std::set<std::string> has_in, has_out;
    for (const auto& [a, b] : g.arrows) {
        has_out.insert(a);
        has_in.insert(b);
    }
    int sources = 0, sinks = 0;
    for (const auto& [key, node] : g.nodes) {
        if (!has_in.count(key)) ++sources;
        if (!has_out.count(key)) ++sinks;
    }
    if (sources != 1 || sinks != 1) return false;
    return g.max_key() == make_pair(stalk_a(alg), seed).key &&
           g.min_key() == make_pair(shifted_a(alg), seed).key;
}

bool check_involution(const MutationGraph& g, uint64_t seed) {
    for (const auto& [key, node] : g.nodes) {
        for (int k = 0; k < node.pair.part_count(); ++k) {
            SttiltPair y = mutate(node.pair, k, seed);
            bool back = false;
            for (int j = 0; j < y.part_count() && !back; ++j)
                back = mutate(y, j, seed).key == key;
            if (!back) return false;
        }
    }
    return true;
}

bool check_rigidity(const Algebra& alg, const MutationGraph& g) {
    for (const auto& [key, node] : g.nodes) {
        const Rep& m = node.pair.module;
        bool module_level = true;
        if (!m.is_zero()) {
            Rep tm = tau(m);
            module_level = hom_dim(m, tm) == 0;
        }
        for (int v : node.pair.support)
            if (m.dims[v] != 0) module_level = false;  // Hom(P_v, M) = M_v
        if (!module_level) return false;
        if (!is_presilting(node.pair.complex)) return false;
        if (!m.is_zero() && ext1_dim(m, m) != 0) return false;
    }
    return true;
}

bool check_sincere(const MutationGraph& g) {
    for (const auto& [key, node] : g.nodes) {
        bool sincere = !node.pair.module.is_zero() && node.pair.module.is_sincere();
        if (sincere != node.pair.support.empty()) return false;
    }
    return true;
}

TwoTerm summand_complex(const Algebra& alg, const SttiltPair& pair, int k) {
    if (k < static_cast<int>(pair.summands.size())) {
        Presentation pres = min_presentation(pair.summands[k]);
        return presentation_complex(pres, alg);
    }
    return shifted_stalk_complex(alg, pair.support[k - pair.summands.size()]);
}

bool check_intervals(const Algebra& alg, const MutationGraph& g, uint64_t seed) {
    // one frozen interval per distinct indecomposable part
    std::set<std::vector<int>> done;
    for (const auto& [key, node] : g.nodes) {
        for (int k = 0; k < node.pair.part_count(); ++k) {
            std::vector<int> gv;
            if (k < static_cast<int>(node.pair.summand_gvecs.size())) {
                gv = node.pair.summand_gvecs[k];
            } else {
                gv.assign(alg.vertex_count(), 0);
                gv[node.pair.support[k - node.pair.summand_gvecs.size()]] = -1;
            }
            if (!done.insert(gv).second) continue;
            TwoTerm u = summand_complex(alg, node.pair, k);
            MutationGraph frozen =
                freeze_enumerate(alg, u, g.node_count() + 1, seed);
            if (!frozen.complete) return false;
            TwoTerm top = bongartz(u, seed), bottom = co_bongartz(u, seed);
            std::set<std::string> expected;
            for (const auto& [mk, mn] : g.nodes)
                if (order_leq(mn.pair.complex, top) && order_leq(bottom, mn.pair.complex))
                    expected.insert(mk);
            std::set<std::string> got;
            for (const auto& [fk, fn] : frozen.nodes) got.insert(fk);
            if (got != expected) return false;
        }
    }
    return true;
}

}  // namespace

CheckReport run_checks(const Algebra& alg, const MutationGraph& g, uint64_t seed) {
    require(g.complete, ErrorCode::IncompleteGraph, "checks require a complete graph");
    CheckReport r;
    r.items.emplace_back("regular", check_regular(alg, g));
    r.items.emplace_back("extrema", check_extrema(alg, g, seed));
    r.items.emplace_back("involution", check_involution(g, seed));
    r.items.emplace_back("rigidity", check_rigidity(alg, g));
    r.items.emplace_back("sincere", check_sincere(g));
    r.items.emplace_back("intervals", check_intervals(alg, g, seed));
    return r;
}

}  // namespace ttr
