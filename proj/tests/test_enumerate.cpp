#include <doctest.h>

#include "enumerate.hpp"
#include "helpers.hpp"

using namespace ttr;
using ttr_test::load_algebra;

namespace {

Poset pentagon() {
    // max > a > min and max > b > c > min
    Poset p;
    p.elements = {"max", "a", "b", "c", "min"};
    p.covers = {{"max", "a"}, {"a", "min"}, {"max", "b"}, {"b", "c"}, {"c", "min"}};
    return p;
}

}  // namespace

TEST_CASE("node counts of the finite fixtures") {
    Algebra a2 = load_algebra("a2.alg");
    MutationGraph g = enumerate(a2);
    CHECK(g.node_count() == 5);
    CHECK(g.arrow_count() == 5);
    CHECK(g.complete);

    CHECK(enumerate(load_algebra("twocycle.alg")).node_count() == 6);
    CHECK(enumerate(load_algebra("nak3.alg")).node_count() == 14);
    CHECK(enumerate(load_algebra("a3r2.alg")).node_count() == 12);
    CHECK(enumerate(load_algebra("preproj_a3.alg")).node_count() == 24);
    CHECK(enumerate(load_algebra("kk.alg")).node_count() == 4);
}

TEST_CASE("extremes of the exchange graph") {
    Algebra a2 = load_algebra("a2.alg");
    MutationGraph g = enumerate(a2);
    CHECK(g.max_key() == make_pair(stalk_a(a2)).key);
    CHECK(g.min_key() == make_pair(shifted_a(a2)).key);
}

TEST_CASE("cap semantics on an infinite exchange graph") {
    Algebra k = load_algebra("kronecker.alg");
    MutationGraph g = enumerate(k, 8);
    CHECK(g.node_count() == 8);
    CHECK_FALSE(g.complete);
    CHECK_THROWS_AS(hasse(g), Error);
}

TEST_CASE("hasse poset of the pentagon") {
    Algebra a2 = load_algebra("a2.alg");
    Poset p = hasse(enumerate(a2));
    CHECK(p.elements.size() == 5);
    CHECK(p.covers.size() == 5);
    CHECK(poset_isomorphic(p, pentagon()).has_value());
    // and the isomorphism preserves covers
    auto iso = poset_isomorphic(pentagon(), p);
    REQUIRE(iso.has_value());
    Poset q = pentagon();
    for (const auto& [x, y] : q.covers) CHECK(p.covers.count({iso->at(x), iso->at(y)}) == 1);
}

TEST_CASE("poset isomorphism rejects different shapes") {
    Poset chain;
    chain.elements = {"1", "2", "3", "4", "5"};
    chain.covers = {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}};
    CHECK_FALSE(poset_isomorphic(chain, pentagon()).has_value());

    // same size and cover count, different shape
    Poset diamondish;
    diamondish.elements = {"t", "x", "y", "z", "b"};
    diamondish.covers = {{"t", "x"}, {"t", "y"}, {"x", "b"}, {"y", "b"}, {"t", "z"}};
    CHECK_FALSE(poset_isomorphic(diamondish, pentagon()).has_value());
}

TEST_CASE("frozen enumeration stays inside the interval") {
    Algebra a2 = load_algebra("a2.alg");
    TwoTerm u = stalk_complex(a2, 1);  // P2
    MutationGraph g = freeze_enumerate(a2, u);
    CHECK(g.complete);
    CHECK(g.node_count() == 2);  // almost-complete: exactly two completions
    CHECK(g.max_key() == make_pair(bongartz(u)).key);
    CHECK(g.min_key() == make_pair(co_bongartz(u)).key);

    // freezing at nothing reproduces the full graph
    MutationGraph full = freeze_enumerate(a2, zero_complex(a2));
    CHECK(full.node_count() == 5);
}

TEST_CASE("determinism across seeds") {
    Algebra a3 = load_algebra("a3r2.alg");
    MutationGraph g1 = enumerate(a3, 10000, 0);
    MutationGraph g2 = enumerate(a3, 10000, 12345);
    std::set<std::string> k1, k2;
    for (const auto& [k, n] : g1.nodes) k1.insert(k);
    for (const auto& [k, n] : g2.nodes) k2.insert(k);
    CHECK(k1 == k2);
    CHECK(g1.arrows == g2.arrows);
}
