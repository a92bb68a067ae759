#include "enumerate.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace ttr {

std::string MutationGraph::max_key() const {
    for (const auto& [k, n] : nodes) {
        bool has_incoming = false;
        for (const auto& a : arrows) has_incoming = has_incoming || a.second == k;
        if (!has_incoming) return k;
    }
    fail(ErrorCode::Internal, "graph has no source");
}

std::string MutationGraph::min_key() const {
    for (const auto& [k, n] : nodes) {
        bool has_outgoing = false;
        for (const auto& a : arrows) has_outgoing = has_outgoing || a.first == k;
        if (!has_outgoing) return k;
    }
    fail(ErrorCode::Internal, "graph has no sink");
}

namespace {

void orient_and_record(MutationGraph& g, const SttiltPair& a, const SttiltPair& b) {
    bool b_leq_a = order_leq(b.complex, a.complex);
    bool a_leq_b = order_leq(a.complex, b.complex);
    require(b_leq_a != a_leq_b, ErrorCode::Internal,
            "mutation pair is not strictly comparable");
    if (b_leq_a)
        g.arrows.insert({a.key, b.key});
    else
        g.arrows.insert({b.key, a.key});
    g.nodes[a.key].neighbors.insert(b.key);
    g.nodes[b.key].neighbors.insert(a.key);
}

// Shared BFS: mutate each node at the summands selected by `movable`.
MutationGraph bfs(const Algebra& alg, SttiltPair start, int cap, uint64_t seed,
                  const std::function<bool(const SttiltPair&, int)>& movable) {
    require(cap >= 2, ErrorCode::CapZero, "node cap must be at least 2");
    MutationGraph g;
    g.alg = &alg;
    g.complete = true;
    std::string start_key = start.key;
    g.nodes[start_key] = GraphNode{std::move(start), {}};
    // Frontier kept sorted by key for deterministic, worker-independent order.
    std::deque<std::string> queue{start_key};
    std::set<std::string> queued{start_key};
    while (!queue.empty()) {
        std::string key = queue.front();
        queue.pop_front();
        SttiltPair cur = g.nodes[key].pair;  // copy: map may rehash on insert
        std::vector<SttiltPair> found;
        for (int k = 0; k < cur.part_count(); ++k) {
            if (!movable(cur, k)) continue;
            found.push_back(mutate(cur, k, seed));
        }
        // deterministic neighbor ordering
        std::sort(found.begin(), found.end(),
                  [](const SttiltPair& a, const SttiltPair& b) { return a.key < b.key; });
        for (SttiltPair& nb : found) {
            auto it = g.nodes.find(nb.key);
            if (it == g.nodes.end()) {
                if (g.node_count() >= cap) {
                    g.complete = false;
                    continue;  // arrow target not in graph; drop
                }
                std::string nb_key = nb.key;
                g.nodes[nb_key] = GraphNode{std::move(nb), {}};
                if (!queued.count(nb_key)) {
                    queue.push_back(nb_key);
                    queued.insert(nb_key);
                }
                orient_and_record(g, cur, g.nodes[nb_key].pair);
            } else {
                orient_and_record(g, cur, it->second.pair);
            }
        }
    }
    return g;
}

}  // namespace

MutationGraph enumerate(const Algebra& alg, int cap, uint64_t seed) {
    SttiltPair start = make_pair(stalk_a(alg), seed);
    return bfs(alg, std::move(start), cap, seed, [](const SttiltPair&, int) { return true; });
}

MutationGraph freeze_enumerate(const Algebra& alg, const TwoTerm& u, int cap, uint64_t seed) {
    require(is_presilting(u), ErrorCode::NotPresilting, "freeze_enumerate requires presilting U");
    SttiltPair u_pair = make_pair(u, seed);
    std::set<std::vector<int>> frozen(u_pair.gvecs.begin(), u_pair.gvecs.end());
    SttiltPair start = make_pair(bongartz(u, seed), seed);
    auto movable = [frozen](const SttiltPair& node, int k) {
        std::vector<int> g;
        if (k < static_cast<int>(node.summand_gvecs.size())) {
            g = node.summand_gvecs[k];
        } else {
            g.assign(node.alg->vertex_count(), 0);
            g[node.support[k - node.summand_gvecs.size()]] = -1;
        }
        return frozen.find(g) == frozen.end();
    };
    MutationGraph g = bfs(alg, std::move(start), cap, seed, movable);
    // every node must contain U
    for (const auto& [key, node] : g.nodes) {
        std::multiset<std::vector<int>> have(node.pair.gvecs.begin(), node.pair.gvecs.end());
        for (const auto& fg : frozen)
            require(have.count(fg) > 0, ErrorCode::Internal,
                    "frozen enumeration produced a node not containing U");
    }
    return g;
}

Poset hasse(const MutationGraph& g) {
    require(g.complete, ErrorCode::IncompleteGraph, "hasse requires a complete graph");
    Poset p;
    for (const auto& [k, n] : g.nodes) p.elements.push_back(k);
    p.covers = g.arrows;
    // transitive reduction check: no arrow may be implied by a longer path
    std::map<std::string, std::vector<std::string>> out;
    for (const auto& [a, b] : g.arrows) out[a].push_back(b);
    for (const auto& [a, b] : g.arrows) {
        // DFS from a to b avoiding the direct edge
        std::vector<std::string> stack;
        std::set<std::string> seen;
        for (const std::string& nxt : out[a])
            if (nxt != b) stack.push_back(nxt);
        bool reachable = false;
        while (!stack.empty() && !reachable) {
            std::string cur = stack.back();
            stack.pop_back();
            if (cur == b) {
                reachable = true;
                break;
            }
            if (!seen.insert(cur).second) continue;
            for (const std::string& nxt : out[cur]) stack.push_back(nxt);
        }
        require(!reachable, ErrorCode::Internal,
                "Hasse arrows are not transitively reduced");
    }
    return p;
}

namespace {

struct PosetView {
    std::vector<std::string> elems;
    std::map<std::string, int> index;
    std::vector<std::set<int>> down, up;  // cover neighbors
    std::vector<uint64_t> label;          // refined invariant
};

PosetView view_of(const Poset& p) {
    PosetView v;
    v.elems = p.elements;
    std::sort(v.elems.begin(), v.elems.end());
    for (size_t i = 0; i < v.elems.size(); ++i) v.index[v.elems[i]] = static_cast<int>(i);
    v.down.assign(v.elems.size(), {});
    v.up.assign(v.elems.size(), {});
    for (const auto& [a, b] : p.covers) {
        v.down[v.index.at(a)].insert(v.index.at(b));
        v.up[v.index.at(b)].insert(v.index.at(a));
    }
    // Weisfeiler-Leman style refinement on (outdeg, indeg) labels.
    v.label.assign(v.elems.size(), 0);
    for (size_t i = 0; i < v.elems.size(); ++i)
        v.label[i] = (v.down[i].size() << 16) | v.up[i].size();
    for (int round = 0; round < 4; ++round) {
        std::vector<uint64_t> next(v.elems.size());
        for (size_t i = 0; i < v.elems.size(); ++i) {
            uint64_t h = v.label[i] * 0x100000001b3ull;
            std::vector<uint64_t> nb;
            for (int j : v.down[i]) nb.push_back(v.label[j] * 3);
            for (int j : v.up[i]) nb.push_back(v.label[j] * 5 + 1);
            std::sort(nb.begin(), nb.end());
            for (uint64_t x : nb) h = (h ^ x) * 0x100000001b3ull;
            next[i] = h;
        }
        v.label = std::move(next);
    }
    return v;
}

bool backtrack(const PosetView& p, const PosetView& q, std::vector<int>& map_pq,
               std::vector<bool>& used, size_t at, const std::vector<int>& order) {
    if (at == order.size()) return true;
    int i = order[at];
    for (size_t j = 0; j < q.elems.size(); ++j) {
        if (used[j] || p.label[i] != q.label[j]) continue;
        if (p.down[i].size() != q.down[j].size() || p.up[i].size() != q.up[j].size()) continue;
        bool ok = true;
        for (int nb : p.down[i]) {
            if (map_pq[nb] < 0) continue;
            if (!q.down[static_cast<size_t>(j)].count(map_pq[nb])) ok = false;
        }
        for (int nb : p.up[i]) {
            if (map_pq[nb] < 0) continue;
            if (!q.up[static_cast<size_t>(j)].count(map_pq[nb])) ok = false;
        }
        if (!ok) continue;
        map_pq[i] = static_cast<int>(j);
        used[j] = true;
        if (backtrack(p, q, map_pq, used, at + 1, order)) return true;
        map_pq[i] = -1;
        used[j] = false;
    }
    return false;
}

}  // namespace

std::optional<std::map<std::string, std::string>> poset_isomorphic(const Poset& p,
                                                                   const Poset& q) {
    if (p.elements.size() != q.elements.size() || p.covers.size() != q.covers.size())
        return std::nullopt;
    PosetView vp = view_of(p), vq = view_of(q);
    {
        auto a = vp.label, b = vq.label;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }
    std::vector<int> order(vp.elems.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    // match rare labels first
    std::map<uint64_t, int> freq;
    for (uint64_t l : vp.label) freq[l]++;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (freq[vp.label[a]] != freq[vp.label[b]]) return freq[vp.label[a]] < freq[vp.label[b]];
        return a < b;
    });
    std::vector<int> map_pq(vp.elems.size(), -1);
    std::vector<bool> used(vq.elems.size(), false);
    if (!backtrack(vp, vq, map_pq, used, 0, order)) return std::nullopt;
    std::map<std::string, std::string> out;
    for (size_t i = 0; i < vp.elems.size(); ++i) out[vp.elems[i]] = vq.elems[map_pq[i]];
    return out;
}

}  // namespace ttr
