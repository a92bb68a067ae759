#include <doctest.h>

#include "helpers.hpp"

using namespace ttr;
using ttr_test::load_algebra;

TEST_CASE("dimensions of the fixture algebras") {
    CHECK(load_algebra("a2.alg").dim() == 3);
    CHECK(load_algebra("twocycle.alg").dim() == 5);
    CHECK(load_algebra("nak3.alg").dim() == 6);
    CHECK(load_algebra("a3r2.alg").dim() == 5);
    CHECK(load_algebra("preproj_a3.alg").dim() == 10);
    CHECK(load_algebra("cycle3double.alg").dim() == 9);
    CHECK(load_algebra("kronecker.alg").dim() == 4);
    CHECK(load_algebra("kk.alg").dim() == 2);
}

TEST_CASE("Cartan matrices") {
    CHECK(load_algebra("a2.alg").cartan_matrix() ==
          std::vector<std::vector<int>>{{1, 1}, {0, 1}});
    CHECK(load_algebra("twocycle.alg").cartan_matrix() ==
          std::vector<std::vector<int>>{{2, 1}, {1, 1}});
    CHECK(load_algebra("nak3.alg").cartan_matrix() ==
          std::vector<std::vector<int>>{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(load_algebra("kronecker.alg").cartan_matrix() ==
          std::vector<std::vector<int>>{{1, 2}, {0, 1}});
}

TEST_CASE("multiplication respects relations and associativity") {
    Algebra a = load_algebra("twocycle.alg");
    int x = a.arrow_basis_index(a.quiver().arrow_index("x"));
    int y = a.arrow_basis_index(a.quiver().arrow_index("y"));
    AlgElt ex = a.unit_elt(x), ey = a.unit_elt(y);
    // y then x vanishes; x then y does not
    CHECK(a.mult(ey, ex) == a.zero_elt());
    CHECK(a.mult(ex, ey) != a.zero_elt());
    AlgElt e1 = a.unit_elt(a.idempotent_index(0));
    CHECK(a.mult(e1, ex) == ex);
    CHECK(a.mult(ex, e1) == a.zero_elt());
    // unit of the algebra
    AlgElt one = a.zero_elt();
    for (int v = 0; v < a.vertex_count(); ++v) {
        AlgElt e = a.unit_elt(a.idempotent_index(v));
        for (size_t i = 0; i < one.size(); ++i) one[i] = a.field().add(one[i], e[i]);
    }
    CHECK(a.mult(one, ex) == ex);
    CHECK(a.mult(ex, one) == ex);
}

TEST_CASE("nilpotency degrees") {
    CHECK(load_algebra("a2.alg").nilpotency_degree() == 2);
    CHECK(load_algebra("nak3.alg").nilpotency_degree() == 2);
    CHECK(load_algebra("twocycle.alg").nilpotency_degree() == 3);
    CHECK(load_algebra("preproj_a3.alg").nilpotency_degree() == 3);
}

TEST_CASE("parser rejects bad input") {
    CHECK_THROWS_AS(build_algebra("arrow a 1 2"), Error);          // no vertices
    CHECK_THROWS_AS(build_algebra("vertices 2\narrow a 1 3"), Error);
    CHECK_THROWS_AS(build_algebra("vertices 1\narrow a 1 1\nrelation 1*a"), Error);
    // a loop with no relations is infinite dimensional
    CHECK_THROWS_AS(build_algebra("vertices 1\narrow a 1 1"), Error);
    CHECK(build_algebra("vertices 1\narrow a 1 1\nrelation 1*a*a").dim() == 2);
}

TEST_CASE("field line selects the prime") {
    Algebra a = build_algebra("field 7\nvertices 1");
    CHECK(a.field().p == 7);
    CHECK(load_algebra("a2.alg").field().p == 101);  // default
}
