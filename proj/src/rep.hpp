#pragma once

#include <optional>
#include <vector>

#include "algebra.hpp"
#include "fppoly.hpp"

namespace ttr {

// A right A-module presented as a covariant representation of the quiver:
// arrow a: i -> j carries a (dims[j] x dims[i]) matrix.
struct Rep {
    const Algebra* alg = nullptr;
    std::vector<int> dims;
    std::vector<FpMat> arrow_maps;

    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    bool is_sincere() const;
};

struct Morphism {
    std::vector<FpMat> maps;  // per vertex: target-dims x source-dims
};

Rep zero_rep(const Algebra& alg);
Rep simple_rep(const Algebra& alg, int vertex);      // 0-based vertex
Rep projective_rep(const Algebra& alg, int vertex);  // e_i A
Rep injective_rep(const Algebra& alg, int vertex);   // D(A e_i)
Rep direct_sum(const std::vector<Rep>& parts);

// Throws when a relation does not act by zero or shapes are inconsistent.
void validate_rep(const Rep& m);

// Matrix of the right action of the path `word` starting at `src`.
FpMat path_action(const Rep& m, int src, const std::vector<int>& word);

std::vector<Morphism> hom_basis(const Rep& m, const Rep& n);
int hom_dim(const Rep& m, const Rep& n);

bool is_isomorphic(const Rep& m, const Rep& n, uint64_t seed = 0);

struct Decomposition {
    std::vector<Rep> summands;       // pairwise non-isomorphic
    std::vector<int> multiplicities;
};

// Indecomposable pieces, with repetition, in a deterministic order.
std::vector<Rep> decompose_list(const Rep& m, uint64_t seed = 0);
Decomposition decompose(const Rep& m, uint64_t seed = 0);

struct Presentation {
    std::vector<int> p_zero;   // projective vertex per P^0 generator
    std::vector<int> p_minus1; // projective vertex per P^1 generator
    // diff[r][c] in e_{p_zero[r]} A e_{p_minus1[c]}
    std::vector<std::vector<AlgElt>> diff;
    Rep p0_rep;                        // direct sum of projectives, fixed coords
    std::vector<FpMat> cover;          // per vertex: M_v x (P0)_v
};

Presentation min_presentation(const Rep& m);

Rep tau(const Rep& m);

int ext1_dim(const Rep& m, const Rep& n);

std::vector<AlgElt> annihilator(const Rep& m);

struct TorsionParts {
    Rep t_part;  // trace of U in M
    Rep f_part;  // M / tM
    Morphism inclusion;   // tM -> M
    Morphism projection;  // M -> fM
};

TorsionParts torsion_parts(const Rep& u, const Rep& m);

// Subrepresentation on the given per-vertex column spans (full column rank).
Rep sub_rep(const Rep& m, const std::vector<FpMat>& bases);

// Quotient by the subrepresentation spanned per vertex; also returns the
// projection maps.
std::pair<Rep, Morphism> quotient_rep(const Rep& m, const std::vector<FpMat>& sub_bases);

// Solve a x = b columnwise; throws on inconsistency.
FpMat solve_matrix(const FpMat& a, const FpMat& b);

}  // namespace ttr
