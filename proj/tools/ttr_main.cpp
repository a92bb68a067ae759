// ttr: exchange-graph enumeration and reduction for bound quiver algebras.
#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "ttr.h"

namespace {

int fail_with(ttr_status st) {
    std::cerr << "error: " << ttr_last_error() << "\n";
    return static_cast<int>(st);
}

std::string take(char* s) {
    std::string out = s ? s : "";
    ttr_string_free(s);
    return out;
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path);
    if (!in) return false;
    std::stringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) return false;
    out << text;
    return static_cast<bool>(out);
}

struct Options {
    std::string alg_path;
    std::string module;
    std::string against;
    std::string dot_path;
    std::string records_path;
    std::string cache_dir;
    int cap = 10000;
    uint32_t field = 0;  // 0: keep the prime from the algebra file (default 101)
    uint64_t seed = 0;
};

int export_graph(ttr_graph* g, const Options& opt) {
    if (!opt.dot_path.empty()) {
        char* s = nullptr;
        if (ttr_status st = ttr_graph_dot(g, &s)) return fail_with(st);
        if (!write_file(opt.dot_path, take(s))) {
            std::cerr << "error: cannot write " << opt.dot_path << "\n";
            return 1;
        }
    }
    if (!opt.records_path.empty()) {
        char* s = nullptr;
        if (ttr_status st = ttr_graph_records(g, &s)) return fail_with(st);
        if (!write_file(opt.records_path, take(s))) {
            std::cerr << "error: cannot write " << opt.records_path << "\n";
            return 1;
        }
    }
    return 0;
}

int print_graph_summary(ttr_graph* g) {
    if (ttr_graph_complete(g)) {
        std::cout << "nodes=" << ttr_graph_node_count(g)
                  << " arrows=" << ttr_graph_arrow_count(g) << " complete=true\n";
        return 0;
    }
    std::cout << "nodes=" << ttr_graph_node_count(g) << " complete=false\n";
    return 2;
}

int run_enumerate(ttr_algebra* alg, const std::string& alg_text, const Options& opt,
                  bool frozen) {
    ttr_graph* g = nullptr;
    std::string cache_path;
    if (!frozen && !opt.cache_dir.empty()) {
        char* name = nullptr;
        if (ttr_status st = ttr_cache_name(alg_text.c_str(), ttr_algebra_prime(alg), &name))
            return fail_with(st);
        cache_path = (std::filesystem::path(opt.cache_dir) / take(name)).string();
        std::string cached;
        if (read_file(cache_path, cached)) {
            if (ttr_status st = ttr_graph_deserialize(alg, cached.c_str(), opt.seed, &g))
                return fail_with(st);
        }
    }
    if (!g) {
        ttr_status st = frozen ? ttr_freeze(alg, opt.module.c_str(), opt.cap, opt.seed, &g)
                               : ttr_enumerate(alg, opt.cap, opt.seed, &g);
        if (st) return fail_with(st);
        if (!cache_path.empty()) {
            std::filesystem::create_directories(opt.cache_dir);
            char* s = nullptr;
            if (ttr_status wst = ttr_graph_serialize(g, &s)) return fail_with(wst);
            if (!write_file(cache_path, take(s))) {
                std::cerr << "error: cannot write cache " << cache_path << "\n";
                ttr_graph_free(g);
                return 1;
            }
        }
    }
    int rc = export_graph(g, opt);
    if (rc == 0) rc = print_graph_summary(g);
    ttr_graph_free(g);
    return rc;
}

int run_reduce(ttr_algebra* alg, const Options& opt) {
    ttr_reduction* r = nullptr;
    if (ttr_status st = ttr_reduce(alg, opt.module.c_str(), opt.cap, opt.seed, &r))
        return fail_with(st);
    int rc = 0;
    if (!opt.dot_path.empty()) {
        char* s = nullptr;
        if (ttr_status st = ttr_reduction_dot(r, &s)) rc = fail_with(st);
        if (rc == 0 && !write_file(opt.dot_path, take(s))) {
            std::cerr << "error: cannot write " << opt.dot_path << "\n";
            rc = 1;
        }
    }
    if (rc == 0 && !opt.records_path.empty()) {
        char* s = nullptr;
        if (ttr_status st = ttr_reduction_records(r, &s)) rc = fail_with(st);
        if (rc == 0 && !write_file(opt.records_path, take(s))) {
            std::cerr << "error: cannot write " << opt.records_path << "\n";
            rc = 1;
        }
    }
    if (rc == 0) {
        std::cout << "interval=" << ttr_reduction_interval_size(r)
                  << " dimC=" << ttr_reduction_dim_c(r);
        if (!opt.against.empty()) {
            std::string c_text;
            if (!read_file(opt.against, c_text)) {
                std::cerr << "\nerror: cannot read " << opt.against << "\n";
                ttr_reduction_free(r);
                return 1;
            }
            int iso = 0, cnt = 0, dim = 0;
            if (ttr_status st = ttr_reduction_verify(r, c_text.c_str(), opt.cap, opt.seed,
                                                     &iso, &cnt, &dim)) {
                std::cout << "\n";
                ttr_reduction_free(r);
                return fail_with(st);
            }
            std::cout << " poset_iso=" << (iso ? "true" : "false")
                      << " count_match=" << (cnt ? "true" : "false")
                      << " dim_match=" << (dim ? "true" : "false");
        }
        std::cout << "\n";
    }
    ttr_reduction_free(r);
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tau-tilting engine: exchange graphs and reduction for bound quiver algebras"};
    app.require_subcommand(1);

    Options opt;
    std::string verb;
    for (const char* name : {"info", "tau", "enumerate", "freeze", "reduce", "check"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("algebra", opt.alg_path, "algebra description file")->required();
        sub->add_option("--cap", opt.cap, "node cap for enumeration");
        sub->add_option("--field", opt.field, "prime field override");
        sub->add_option("--seed", opt.seed, "seed for randomized splitting");
        sub->add_option("--dot", opt.dot_path, "write DOT graph to file");
        sub->add_option("--records", opt.records_path, "write node records to file");
        sub->add_option("--against", opt.against, "candidate algebra file to verify against");
        sub->add_option("--module", opt.module, "module: shorthand, .rep file, or g-vector");
        sub->add_option("--cache", opt.cache_dir, "enumeration cache directory");
        sub->callback([&verb, name] { verb = name; });
    }

    CLI11_PARSE(app, argc, argv);

    std::string alg_text;
    if (!read_file(opt.alg_path, alg_text)) {
        std::cerr << "error: cannot read " << opt.alg_path << "\n";
        return 1;
    }
    ttr_algebra* alg = nullptr;
    if (ttr_status st = ttr_algebra_create(alg_text.c_str(), opt.field, &alg))
        return fail_with(st);

    int rc = 0;
    if (verb == "info") {
        char* s = nullptr;
        if (ttr_status st = ttr_algebra_info(alg, &s))
            rc = fail_with(st);
        else
            std::cout << take(s);
    } else if (verb == "tau") {
        if (opt.module.empty()) {
            std::cerr << "error: tau requires --module\n";
            rc = 1;
        } else {
            char* s = nullptr;
            if (ttr_status st = ttr_tau_text(alg, opt.module.c_str(), opt.cap, opt.seed, &s))
                rc = fail_with(st);
            else
                std::cout << take(s);
        }
    } else if (verb == "enumerate") {
        rc = run_enumerate(alg, alg_text, opt, false);
    } else if (verb == "freeze") {
        if (opt.module.empty()) {
            std::cerr << "error: freeze requires --module\n";
            rc = 1;
        } else {
            rc = run_enumerate(alg, alg_text, opt, true);
        }
    } else if (verb == "reduce") {
        if (opt.module.empty()) {
            std::cerr << "error: reduce requires --module\n";
            rc = 1;
        } else {
            rc = run_reduce(alg, opt);
        }
    } else if (verb == "check") {
        char* s = nullptr;
        int all_ok = 0;
        if (ttr_status st = ttr_check(alg, opt.cap, opt.seed, &s, &all_ok)) {
            rc = fail_with(st);
        } else {
            std::cout << take(s);
            rc = all_ok ? 0 : 3;
        }
    }
    ttr_algebra_free(alg);
    return rc;
}
