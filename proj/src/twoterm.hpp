#pragma once

#include <string>
#include <vector>

#include "rep.hpp"

namespace ttr {

// A complex of projectives concentrated in degrees -1 and 0. The differential
// entry diff[r][c] is an element of e_{zero[r]} A e_{minus1[c]}, acting on
// e_{minus1[c]}A by left multiplication.
struct TwoTerm {
    const Algebra* alg = nullptr;
    std::vector<int> minus1;  // projective vertex per degree -1 summand
    std::vector<int> zero;    // projective vertex per degree 0 summand
    std::vector<std::vector<AlgElt>> diff;  // [row over zero][col over minus1]

    bool empty() const { return minus1.empty() && zero.empty(); }
};

TwoTerm zero_complex(const Algebra& alg);
TwoTerm stalk_complex(const Algebra& alg, int vertex);          // P_i in degree 0
TwoTerm shifted_stalk_complex(const Algebra& alg, int vertex);  // P_i in degree -1
TwoTerm stalk_a(const Algebra& alg);                            // A in degree 0
TwoTerm shifted_a(const Algebra& alg);                          // A[1]
TwoTerm complex_direct_sum(const std::vector<TwoTerm>& parts);
TwoTerm presentation_complex(const Presentation& pres, const Algebra& alg);

struct HomShift1 {
    int dim = 0;
    // coset representatives: matrices over A, rows = Y.zero, cols = X.minus1
    std::vector<std::vector<std::vector<AlgElt>>> reps;
};

// Hom_{K^b(proj A)}(X, Y[1]).
HomShift1 hom_shift1(const TwoTerm& x, const TwoTerm& y);

bool is_presilting(const TwoTerm& x);

// Remove contractible (P -> P identity-like) summands by Gaussian cancellation
// of differential entries with invertible scalar part.
TwoTerm minimize(TwoTerm x);
bool is_minimal(const TwoTerm& x);

// Support-tau-tilting (or presilting) pair data attached to a complex.
struct SttiltPair {
    const Algebra* alg = nullptr;
    Rep module;                       // module part (direct sum of summands)
    std::vector<Rep> summands;        // indecomposable, sorted by g-vector
    std::vector<std::vector<int>> summand_gvecs;  // parallel to summands
    std::vector<int> support;         // sorted support vertices (0-based)
    TwoTerm complex;                  // canonical minimal complex
    std::vector<std::vector<int>> gvecs;  // sorted: summand + support g-vectors
    std::string key;

    int part_count() const { return static_cast<int>(summands.size() + support.size()); }
    bool is_silting() const { return part_count() == alg->vertex_count(); }
};

std::vector<int> gvec_of_presentation(const Algebra& alg, const Presentation& pres);
std::string gvec_key(const std::vector<std::vector<int>>& gvecs);

TwoTerm pair_to_complex(const Rep& module, const std::vector<int>& support);

// Canonicalize an arbitrary presilting complex: minimize, take H^0, decompose,
// drop duplicate summands (basic reduct), rebuild the canonical complex.
SttiltPair make_pair(const TwoTerm& x, uint64_t seed = 0);

// Strict variant: requires x minimal (NotMinimal otherwise).
SttiltPair complex_to_pair(const TwoTerm& x, uint64_t seed = 0);

std::vector<std::vector<int>> g_vectors(const TwoTerm& x, uint64_t seed = 0);

TwoTerm bongartz(const TwoTerm& u, uint64_t seed = 0);
TwoTerm co_bongartz(const TwoTerm& u, uint64_t seed = 0);

// Mutation of a silting pair at summand k; indices 0..|summands|-1 are module
// summands, then support stalks in sorted order.
SttiltPair mutate(const SttiltPair& x, int k, uint64_t seed = 0);

// Silting order: X <= Y iff Hom(Y, X[1]) = 0.
bool order_leq(const TwoTerm& x, const TwoTerm& y);

// Complex built from a pair with summand k removed.
TwoTerm remove_summand(const SttiltPair& x, int k);

}  // namespace ttr
