#include <doctest.h>

#include "formats.hpp"
#include "helpers.hpp"
#include "rep.hpp"

using namespace ttr;
using ttr_test::load_algebra;

namespace {

Rep regular_module(const Algebra& a) {
    std::vector<Rep> parts;
    for (int v = 0; v < a.vertex_count(); ++v) parts.push_back(projective_rep(a, v));
    return direct_sum(parts);
}

}  // namespace

TEST_CASE("projective and injective dimension vectors") {
    Algebra a2 = load_algebra("a2.alg");
    CHECK(projective_rep(a2, 0).dims == std::vector<int>{1, 1});
    CHECK(projective_rep(a2, 1).dims == std::vector<int>{0, 1});
    CHECK(injective_rep(a2, 0).dims == std::vector<int>{1, 0});
    CHECK(injective_rep(a2, 1).dims == std::vector<int>{1, 1});

    Algebra a3 = load_algebra("a3r2.alg");
    CHECK(projective_rep(a3, 0).dims == std::vector<int>{1, 1, 0});
    CHECK(projective_rep(a3, 1).dims == std::vector<int>{0, 1, 1});
    CHECK(projective_rep(a3, 2).dims == std::vector<int>{0, 0, 1});

    Algebra tc = load_algebra("twocycle.alg");
    CHECK(projective_rep(tc, 0).dims == std::vector<int>{2, 1});
    CHECK(projective_rep(tc, 1).dims == std::vector<int>{1, 1});

    Algebra nak = load_algebra("nak3.alg");
    for (int v = 0; v < 3; ++v) CHECK(injective_rep(nak, v).total_dim() == 2);
}

TEST_CASE("Yoneda: hom from a projective is the dimension at its vertex") {
    for (const char* name : {"a2.alg", "twocycle.alg", "a3r2.alg", "preproj_a3.alg"}) {
        Algebra a = load_algebra(name);
        std::vector<Rep> samples = {regular_module(a), simple_rep(a, 0),
                                    injective_rep(a, a.vertex_count() - 1)};
        for (const Rep& m : samples)
            for (int v = 0; v < a.vertex_count(); ++v)
                CHECK(hom_dim(projective_rep(a, v), m) == m.dims[v]);
    }
}

TEST_CASE("isomorphism testing") {
    Algebra a2 = load_algebra("a2.alg");
    CHECK(is_isomorphic(projective_rep(a2, 0), projective_rep(a2, 0)));
    CHECK(is_isomorphic(projective_rep(a2, 0), injective_rep(a2, 1)));  // P1 = I2 here
    CHECK_FALSE(is_isomorphic(simple_rep(a2, 0), simple_rep(a2, 1)));
    // same dims, non-isomorphic: P1 vs S1 + S2
    Rep split = direct_sum({simple_rep(a2, 0), simple_rep(a2, 1)});
    CHECK_FALSE(is_isomorphic(projective_rep(a2, 0), split));
}

TEST_CASE("decomposition of the regular module") {
    for (const char* name : {"a2.alg", "twocycle.alg", "nak3.alg", "a3r2.alg"}) {
        Algebra a = load_algebra(name);
        Decomposition d = decompose(regular_module(a));
        CHECK(static_cast<int>(d.summands.size()) == a.vertex_count());
        for (size_t i = 0; i < d.summands.size(); ++i) {
            CHECK(d.multiplicities[i] == 1);
            bool matches_projective = false;
            for (int v = 0; v < a.vertex_count(); ++v)
                matches_projective =
                    matches_projective || is_isomorphic(d.summands[i], projective_rep(a, v));
            CHECK(matches_projective);
        }
    }
}

TEST_CASE("decomposition with multiplicities") {
    Algebra a2 = load_algebra("a2.alg");
    Rep m = direct_sum({simple_rep(a2, 0), projective_rep(a2, 0), simple_rep(a2, 0)});
    Decomposition d = decompose(m);
    REQUIRE(d.summands.size() == 2);
    int total = 0;
    for (size_t i = 0; i < d.summands.size(); ++i)
        total += d.multiplicities[i] * d.summands[i].total_dim();
    CHECK(total == m.total_dim());
}

TEST_CASE("minimal presentations") {
    Algebra tc = load_algebra("twocycle.alg");
    Presentation p = min_presentation(simple_rep(tc, 1));
    CHECK(p.p_zero == std::vector<int>{1});
    CHECK(p.p_minus1 == std::vector<int>{0});

    Algebra a2 = load_algebra("a2.alg");
    Presentation q = min_presentation(projective_rep(a2, 0));
    CHECK(q.p_zero == std::vector<int>{0});
    CHECK(q.p_minus1.empty());
}

TEST_CASE("Auslander-Reiten translate") {
    Algebra a2 = load_algebra("a2.alg");
    CHECK(is_isomorphic(tau(simple_rep(a2, 0)), simple_rep(a2, 1)));
    CHECK(tau(projective_rep(a2, 1)).is_zero());  // projectives die

    Algebra pp = load_algebra("preproj_a3.alg");
    Rep u = load_rep(pp, ttr_test::data_path("u_preproj_21.rep"));
    CHECK(is_isomorphic(tau(u), simple_rep(pp, 2)));
}

TEST_CASE("ext groups and annihilators") {
    Algebra a2 = load_algebra("a2.alg");
    CHECK(ext1_dim(simple_rep(a2, 0), simple_rep(a2, 1)) == 1);
    CHECK(ext1_dim(simple_rep(a2, 1), simple_rep(a2, 0)) == 0);
    CHECK(ext1_dim(projective_rep(a2, 0), projective_rep(a2, 0)) == 0);

    CHECK(annihilator(simple_rep(a2, 1)).size() == 2);  // e1 and the arrow
    CHECK(annihilator(regular_module(a2)).empty());     // faithful
}

TEST_CASE("torsion parts") {
    Algebra a2 = load_algebra("a2.alg");
    TorsionParts tp = torsion_parts(simple_rep(a2, 1), projective_rep(a2, 0));
    CHECK(tp.t_part.dims == std::vector<int>{0, 1});
    CHECK(is_isomorphic(tp.f_part, simple_rep(a2, 0)));

    Algebra a3 = load_algebra("a3r2.alg");
    TorsionParts tq = torsion_parts(simple_rep(a3, 2), regular_module(a3));
    CHECK(tq.f_part.total_dim() == 3);  // P1 + S2

    // the torsion part of M in Fac M is all of M
    Rep m = projective_rep(a2, 0);
    CHECK(torsion_parts(m, m).t_part.total_dim() == m.total_dim());
}

TEST_CASE("module file parsing validates relations") {
    Algebra tc = load_algebra("twocycle.alg");
    CHECK_THROWS_AS(parse_rep(tc, "dims 1 1\nmap x\n1\nmap y\n1\n"), Error);
    Rep ok = parse_rep(tc, "dims 1 1\nmap x\n1\n");
    CHECK(ok.total_dim() == 2);
}
