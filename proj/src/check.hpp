#pragma once

#include <string>
#include <utility>
#include <vector>

#include "enumerate.hpp"

namespace ttr {

struct CheckReport {
    std::vector<std::pair<std::string, bool>> items;

    bool all() const {
        for (const auto& [name, ok] : items)
            if (!ok) return false;
        return true;
    }
};

// Invariant suite over a complete exchange graph: n-regularity, unique
// max/min, mutation involution, module-level rigidity matching the
// complex-level test, sincere iff empty support, and frozen intervals
// matching the order-theoretic ones.
CheckReport run_checks(const Algebra& alg, const MutationGraph& g, uint64_t seed = 0);

// Module-level order test: Fac(M of x) contained in Fac(M of y), as trace
// equality plus support containment.
bool module_order_leq(const SttiltPair& x, const SttiltPair& y);

}  // namespace ttr
