#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fp.hpp"

namespace ttr {

struct Arrow {
    std::string label;
    int src = 0, tgt = 0;  // 0-based internally; 1-based in all I/O
};

struct Quiver {
    int n = 0;
    std::vector<Arrow> arrows;
    int arrow_index(const std::string& label) const;  // -1 when absent
};

struct RelTerm {
    int64_t coeff = 1;
    std::vector<int> word;  // arrow indices, composed left-to-right (word[0] first)
};

struct Relation {
    std::vector<RelTerm> terms;
};

// An element of A in coordinates over the path basis.
using AlgElt = std::vector<uint32_t>;

// A = kQ/I with an explicit basis of path classes. Immutable after build.
class Algebra {
  public:
    struct BasisPath {
        int src = 0, tgt = 0;
        std::vector<int> word;  // arrow indices; empty for the idempotent e_src
        int length() const { return static_cast<int>(word.size()); }
    };

    static Algebra build(const Quiver& q, const std::vector<Relation>& rels, PrimeField fld,
                         int length_bound = 64);

    const PrimeField& field() const { return fld_; }
    const Quiver& quiver() const { return quiver_; }
    const std::vector<Relation>& relations() const { return relations_; }
    int vertex_count() const { return quiver_.n; }
    int dim() const { return static_cast<int>(basis_.size()); }
    int nilpotency_degree() const { return nilpotency_; }

    const std::vector<BasisPath>& basis() const { return basis_; }
    int idempotent_index(int vertex) const { return idem_[vertex]; }
    int arrow_basis_index(int arrow) const { return arrow_basis_[arrow]; }
    // basis indices of e_i A e_j (paths i -> j), in global basis order
    const std::vector<int>& pair_basis(int i, int j) const { return pair_basis_[i * quiver_.n + j]; }

    AlgElt zero_elt() const { return AlgElt(basis_.size(), 0); }
    AlgElt unit_elt(int basis_index) const;
    AlgElt mult(const AlgElt& a, const AlgElt& b) const;
    // product of two basis elements, as sparse (index, coeff) pairs
    const std::vector<std::pair<int, uint32_t>>& mult_basis(int a, int b) const {
        return table_[a * basis_.size() + b];
    }

    std::vector<std::vector<int>> cartan_matrix() const;  // C[i][j] = dim e_iAe_j

  private:
    PrimeField fld_;
    Quiver quiver_;
    std::vector<Relation> relations_;
    std::vector<BasisPath> basis_;
    std::vector<int> idem_;         // per vertex
    std::vector<int> arrow_basis_;  // per arrow
    std::vector<std::vector<int>> pair_basis_;
    std::vector<std::vector<std::pair<int, uint32_t>>> table_;
    int nilpotency_ = 0;
};

struct AlgebraSpec {
    PrimeField fld{101};
    bool field_given = false;
    Quiver quiver;
    std::vector<Relation> relations;
};

AlgebraSpec parse_algebra_spec(const std::string& text);

inline Algebra build_algebra(const std::string& text, int length_bound = 64) {
    AlgebraSpec s = parse_algebra_spec(text);
    return Algebra::build(s.quiver, s.relations, s.fld, length_bound);
}

std::string format_elt(const Algebra& a, const AlgElt& x);

}  // namespace ttr
