// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.
#include <sys/wait.h>

#include <cstdlib>
#include <iostream>
#include <string>

#include "check.hpp"
#include "formats.hpp"
#include "helpers.hpp"

using namespace ttr;
using ttr_test::data_path;
using ttr_test::load_algebra;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::cout << "criterion " << criterion << ": " << (ok ? "PASS" : "FAIL") << " — " << detail
              << "\n";
    if (!ok) ++g_failures;
}

template <typename F>
void guarded(int criterion, const std::string& what, F&& f) {
    try {
        f();
    } catch (const std::exception& e) {
        report(criterion, false, what + " (exception: " + e.what() + ")");
    }
}

Poset pentagon() {
    Poset p;
    p.elements = {"max", "a", "b", "c", "min"};
    p.covers = {{"max", "a"}, {"a", "min"}, {"max", "b"}, {"b", "c"}, {"c", "min"}};
    return p;
}

TwoTerm complex_of(const Algebra& a, const Rep& m) {
    return presentation_complex(min_presentation(m), a);
}

void criterion1() {
    Algebra a2 = load_algebra("a2.alg");
    MutationGraph g = enumerate(a2);
    int sincere_no_support = 0;
    for (const auto& [key, node] : g.nodes)
        if (node.pair.support.empty() && node.pair.module.is_sincere()) ++sincere_no_support;
    bool ok = g.node_count() == 5 && g.arrow_count() == 5 &&
              poset_isomorphic(hasse(g), pentagon()).has_value() && sincere_no_support == 2;
    report(1, ok,
           "A2: nodes=" + std::to_string(g.node_count()) +
               " arrows=" + std::to_string(g.arrow_count()) +
               " pentagon, sincere tilting nodes=" + std::to_string(sincere_no_support));
}

void criterion2() {
    Algebra tc = load_algebra("twocycle.alg");
    MutationGraph g = enumerate(tc);
    bool ok = g.node_count() == 6 && tc.dim() == 5;
    report(2, ok,
           "two-cycle: nodes=" + std::to_string(g.node_count()) +
               " dimA=" + std::to_string(tc.dim()));
}

void criterion3() {
    Algebra nak = load_algebra("nak3.alg");
    MutationGraph g = enumerate(nak);
    std::string faithful_key;
    int faithful_count = 0;
    for (const auto& [key, node] : g.nodes) {
        if (!node.pair.support.empty()) continue;
        if (annihilator(node.pair.module).empty()) {
            ++faithful_count;
            faithful_key = key;
        }
    }
    bool ok = g.node_count() == 14 && faithful_count == 1 &&
              faithful_key == make_pair(stalk_a(nak)).key;
    report(3, ok,
           "Nakayama 3-cycle: nodes=" + std::to_string(g.node_count()) +
               " faithful-support-free nodes=" + std::to_string(faithful_count));
}

void criterion4() {
    Algebra pp = load_algebra("preproj_a3.alg");
    MutationGraph g = enumerate(pp);
    Rep u = load_rep(pp, data_path("u_preproj_21.rep"));
    bool tau_ok = is_isomorphic(tau(u), simple_rep(pp, 2));
    bool ok = g.node_count() == 24 && tau_ok;
    report(4, ok,
           "preprojective A3: nodes=" + std::to_string(g.node_count()) +
               std::string(tau_ok ? " tau(U)=S3" : " tau(U)!=S3"));
}

void criterion5() {
    Algebra a3 = load_algebra("a3r2.alg");
    MutationGraph g = enumerate(a3);
    ReductionReport r = reduce(a3, stalk_complex(a3, 2));
    bool bongartz_is_a = r.bongartz_key == make_pair(stalk_a(a3)).key;
    bool pentagon_ok = poset_isomorphic(r.poset, pentagon()).has_value();
    bool ok = g.node_count() == 12 && r.interval_size() == 5 && r.dim_c_via_endo == 3 &&
              r.dim_c_via_torsionfree == 3 && pentagon_ok && bongartz_is_a;
    report(5, ok,
           "bound A3: nodes=" + std::to_string(g.node_count()) +
               " interval=" + std::to_string(r.interval_size()) +
               " dimC=" + std::to_string(r.dim_c) + (pentagon_ok ? " pentagon" : " not-pentagon") +
               (bongartz_is_a ? " completion=A" : " completion!=A"));
}

void criterion6() {
    Algebra pp = load_algebra("preproj_a3.alg");
    TwoTerm u = complex_of(pp, load_rep(pp, data_path("u_preproj_21.rep")));
    ReductionReport r = reduce(pp, u);
    Verdict v = verify_against(r, load_algebra("twocycle0.alg"));
    bool ok = r.interval_size() == 6 && r.dim_c == 4 && v.all();
    report(6, ok,
           "preprojective A3 at U: interval=" + std::to_string(r.interval_size()) +
               " dimC=" + std::to_string(r.dim_c) +
               (v.all() ? " reduced=two-cycle(rad^2=0)" : " verification mismatch"));
}

void criterion7() {
    Algebra cy = load_algebra("cycle3double.alg");
    TwoTerm u = complex_of(cy, load_rep(cy, data_path("u_cycle3_11222.rep")));
    ReductionReport r = reduce(cy, u);
    Verdict v = verify_against(r, load_algebra("kk.alg"));
    bool ok = r.interval_size() == 4 && v.all();
    report(7, ok,
           "doubled 3-cycle at U: interval=" + std::to_string(r.interval_size()) +
               " verify poset_iso=" + (v.poset_iso ? "true" : "false") +
               " count=" + (v.count_match ? "true" : "false") +
               " dim=" + (v.dim_match ? "true" : "false"));
}

void criterion8() {
    Algebra k = load_algebra("kronecker.alg");
    MutationGraph g = enumerate(k, 8);
    bool incomplete = !g.complete && g.node_count() == 8;
    std::string cmd = std::string(TTR_CLI_PATH) + " enumerate " + data_path("kronecker.alg") +
                      " --cap 8 > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    int exit_code = (rc >= 0 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
    TwoTerm u = complex_of(k, load_rep(k, data_path("u_kron_122.rep")));
    ReductionReport r = reduce(k, u, 100);
    bool ok = incomplete && exit_code == 2 && r.interval_size() == 2;
    report(8, ok,
           "Kronecker: cap-8 incomplete=" + std::string(incomplete ? "true" : "false") +
               " cli-exit=" + std::to_string(exit_code) +
               " interval=" + std::to_string(r.interval_size()));
}

void criterion9() {
    bool all_ok = true;
    std::string detail = "invariant suite:";
    for (const char* name :
         {"a2.alg", "twocycle.alg", "nak3.alg", "a3r2.alg", "preproj_a3.alg"}) {
        Algebra a = load_algebra(name);
        CheckReport r = run_checks(a, enumerate(a));
        all_ok = all_ok && r.all();
        detail += std::string(" ") + name + "=" + (r.all() ? "ok" : "violation");
    }
    report(9, all_ok, detail);
}

void criterion10() {
    bool all_ok = true;
    std::string detail = "order oracle:";
    for (const char* name : {"a2.alg", "twocycle.alg", "nak3.alg"}) {
        Algebra a = load_algebra(name);
        MutationGraph g = enumerate(a);
        bool agree = true;
        for (const auto& [kx, nx] : g.nodes)
            for (const auto& [ky, ny] : g.nodes) {
                bool complex_level = order_leq(nx.pair.complex, ny.pair.complex);
                bool module_level = module_order_leq(nx.pair, ny.pair);
                agree = agree && complex_level == module_level;
            }
        all_ok = all_ok && agree;
        detail += std::string(" ") + name + "=" + (agree ? "agree" : "disagree");
    }
    report(10, all_ok, detail);
}

}  // namespace

int main() {
    guarded(1, "A2 enumeration", criterion1);
    guarded(2, "two-cycle enumeration", criterion2);
    guarded(3, "Nakayama enumeration", criterion3);
    guarded(4, "preprojective enumeration", criterion4);
    guarded(5, "bound A3 reduction", criterion5);
    guarded(6, "preprojective reduction", criterion6);
    guarded(7, "doubled 3-cycle reduction", criterion7);
    guarded(8, "Kronecker cap and reduction", criterion8);
    guarded(9, "invariant suite", criterion9);
    guarded(10, "order oracle equivalence", criterion10);
    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
