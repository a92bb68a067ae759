#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "twoterm.hpp"

namespace ttr {

struct GraphNode {
    SttiltPair pair;
    std::set<std::string> neighbors;
};

struct MutationGraph {
    const Algebra* alg = nullptr;
    std::map<std::string, GraphNode> nodes;  // canonical g-vector key -> node
    std::set<std::pair<std::string, std::string>> arrows;  // larger -> smaller
    bool complete = false;

    int node_count() const { return static_cast<int>(nodes.size()); }
    int arrow_count() const { return static_cast<int>(arrows.size()); }
    std::string max_key() const;  // unique source, when complete
    std::string min_key() const;  // unique sink, when complete
};

MutationGraph enumerate(const Algebra& alg, int cap = 10000, uint64_t seed = 0);

// BFS restricted to nodes containing the presilting complex u as a summand:
// start from bongartz(u), mutate only at non-u summands.
MutationGraph freeze_enumerate(const Algebra& alg, const TwoTerm& u, int cap = 10000,
                               uint64_t seed = 0);

struct Poset {
    std::vector<std::string> elements;                      // sorted
    std::set<std::pair<std::string, std::string>> covers;   // larger -> smaller
};

// Extract the poset of a complete graph; verifies the arrows are a transitive
// reduction (throws Internal otherwise).
Poset hasse(const MutationGraph& g);

std::optional<std::map<std::string, std::string>> poset_isomorphic(const Poset& p, const Poset& q);

}  // namespace ttr
