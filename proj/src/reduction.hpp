#pragma once

#include <map>
#include <string>

#include "enumerate.hpp"

namespace ttr {

// Membership in the perpendicular category of U: Hom(M, tau U) = 0 and
// Hom(U, M) = 0.
bool tau_perp_member(const Rep& u, const Rep& m);

// dim End(T-bar) / [U-bar], where T-bar is the module part of the Bongartz
// completion of u and [U-bar] is the ideal of maps factoring through add U-bar.
int dim_c_endo(const Algebra& alg, const TwoTerm& u, uint64_t seed = 0);

// dim Hom(T-bar, f T-bar), the torsion-free part taken with respect to Fac U-bar.
int dim_c_torsionfree(const Algebra& alg, const TwoTerm& u, uint64_t seed = 0);

struct ReductionReport {
    const Algebra* alg = nullptr;
    SttiltPair u_pair;             // canonicalized presilting datum
    std::string bongartz_key;      // interval maximum
    std::string cobongartz_key;    // interval minimum
    MutationGraph interval;        // frozen enumeration
    int dim_c = 0;                 // the agreeing value of both computations
    int dim_c_via_endo = 0;
    int dim_c_via_torsionfree = 0;
    Poset poset;
    std::map<std::string, int> reduced_dims;  // node key -> dim_k of reduced module

    int interval_size() const { return interval.node_count(); }
};

ReductionReport reduce(const Algebra& alg, const TwoTerm& u, int cap = 10000,
                       uint64_t seed = 0);

struct Verdict {
    bool poset_iso = false;
    bool count_match = false;
    bool dim_match = false;

    bool all() const { return poset_iso && count_match && dim_match; }
};

// Compare the interval against a candidate algebra C: enumerate sttilt C fully,
// match cardinality, poset shape, and dim C.
Verdict verify_against(const ReductionReport& report, const Algebra& c, int cap = 10000,
                       uint64_t seed = 0);

}  // namespace ttr
