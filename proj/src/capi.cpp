#include "ttr.h"

#include <cstring>
#include <sstream>
#include <string>

#include "check.hpp"
#include "formats.hpp"

namespace {

thread_local std::string g_last_error;

char* alloc_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ttr_status status_of(ttr::ErrorCode code) {
    using ttr::ErrorCode;
    switch (code) {
        case ErrorCode::Parse:
        case ErrorCode::NotFiniteDimensional:
        case ErrorCode::NonAdmissible:
        case ErrorCode::BadArgument:
        case ErrorCode::AlgebraMismatch:
        case ErrorCode::NotPresilting:
        case ErrorCode::NotMinimal:
        case ErrorCode::SupportViolation:
        case ErrorCode::CapZero:
            return TTR_ERR_INPUT;
        case ErrorCode::IncompleteInterval:
        case ErrorCode::IncompleteGraph:
            return TTR_ERR_CAP;
        default:
            return TTR_ERR_INTERNAL;
    }
}

template <typename F>
ttr_status guarded(F&& f) {
    try {
        f();
        return TTR_OK;
    } catch (const ttr::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return TTR_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return TTR_ERR_INTERNAL;
    }
}

}  // namespace

struct ttr_algebra {
    ttr::Algebra alg;
};

struct ttr_graph {
    ttr::MutationGraph graph;
};

struct ttr_reduction {
    ttr::ReductionReport report;
};

extern "C" {

const char* ttr_last_error(void) { return g_last_error.c_str(); }

void ttr_string_free(char* s) { delete[] s; }

ttr_status ttr_algebra_create(const char* text, uint32_t field_override, ttr_algebra** out) {
    return guarded([&] {
        ttr::require(text && out, ttr::ErrorCode::BadArgument, "null argument");
        ttr::AlgebraSpec spec = ttr::parse_algebra_spec(text);
        if (field_override != 0) spec.fld = ttr::PrimeField(field_override);
        *out = new ttr_algebra{
            ttr::Algebra::build(spec.quiver, spec.relations, spec.fld)};
    });
}

void ttr_algebra_free(ttr_algebra* a) { delete a; }

ttr_status ttr_algebra_info(const ttr_algebra* a, char** out) {
    return guarded([&] {
        ttr::require(a && out, ttr::ErrorCode::BadArgument, "null argument");
        const ttr::Algebra& alg = a->alg;
        std::ostringstream s;
        s << "p=" << alg.field().p << "\n";
        s << "dim=" << alg.dim() << "\n";
        s << "vertices=" << alg.vertex_count() << "\n";
        auto cartan = alg.cartan_matrix();
        s << "cartan=";
        for (int i = 0; i < alg.vertex_count(); ++i) {
            if (i) s << ";";
            for (int j = 0; j < alg.vertex_count(); ++j) {
                if (j) s << ",";
                s << cartan[i][j];
            }
        }
        s << "\n";
        for (int v = 0; v < alg.vertex_count(); ++v) {
            ttr::Rep p = ttr::projective_rep(alg, v);
            s << "projective " << (v + 1) << " dims=";
            for (int i = 0; i < alg.vertex_count(); ++i) {
                if (i) s << ",";
                s << p.dims[i];
            }
            s << "\n";
        }
        for (int v = 0; v < alg.vertex_count(); ++v) {
            ttr::Rep inj = ttr::injective_rep(alg, v);
            s << "injective " << (v + 1) << " dims=";
            for (int i = 0; i < alg.vertex_count(); ++i) {
                if (i) s << ",";
                s << inj.dims[i];
            }
            s << "\n";
        }
        *out = alloc_string(s.str());
    });
}

uint32_t ttr_algebra_prime(const ttr_algebra* a) { return a ? a->alg.field().p : 0; }

ttr_status ttr_tau_text(const ttr_algebra* a, const char* module, int cap, uint64_t seed,
                        char** out) {
    return guarded([&] {
        ttr::require(a && module && out, ttr::ErrorCode::BadArgument, "null argument");
        ttr::Rep m = ttr::resolve_module(a->alg, module, cap, seed);
        ttr::Rep t = ttr::tau(m);
        std::ostringstream s;
        s << "dims=";
        for (int i = 0; i < a->alg.vertex_count(); ++i) {
            if (i) s << ",";
            s << t.dims[i];
        }
        s << "\n";
        for (size_t i = 0; i < a->alg.quiver().arrows.size(); ++i) {
            const ttr::Arrow& arr = a->alg.quiver().arrows[i];
            if (t.dims[arr.src] == 0 || t.dims[arr.tgt] == 0) continue;
            s << "map " << arr.label << "\n";
            const ttr::FpMat& mat = t.arrow_maps[i];
            for (uint32_t r = 0; r < mat.rows(); ++r) {
                for (uint32_t c = 0; c < mat.cols(); ++c) {
                    if (c) s << " ";
                    s << mat.at(r, c);
                }
                s << "\n";
            }
        }
        *out = alloc_string(s.str());
    });
}

ttr_status ttr_enumerate(const ttr_algebra* a, int cap, uint64_t seed, ttr_graph** out) {
    return guarded([&] {
        ttr::require(a && out, ttr::ErrorCode::BadArgument, "null argument");
        *out = new ttr_graph{ttr::enumerate(a->alg, cap, seed)};
    });
}

ttr_status ttr_freeze(const ttr_algebra* a, const char* module, int cap, uint64_t seed,
                      ttr_graph** out) {
    return guarded([&] {
        ttr::require(a && module && out, ttr::ErrorCode::BadArgument, "null argument");
        ttr::Rep m = ttr::resolve_module(a->alg, module, cap, seed);
        ttr::TwoTerm u = ttr::presentation_complex(ttr::min_presentation(m), a->alg);
        *out = new ttr_graph{ttr::freeze_enumerate(a->alg, u, cap, seed)};
    });
}

void ttr_graph_free(ttr_graph* g) { delete g; }

int ttr_graph_node_count(const ttr_graph* g) { return g ? g->graph.node_count() : 0; }
int ttr_graph_arrow_count(const ttr_graph* g) { return g ? g->graph.arrow_count() : 0; }
int ttr_graph_complete(const ttr_graph* g) { return g && g->graph.complete ? 1 : 0; }

ttr_status ttr_graph_records(const ttr_graph* g, char** out) {
    return guarded([&] {
        ttr::require(g && out, ttr::ErrorCode::BadArgument, "null argument");
        *out = alloc_string(ttr::records_text(g->graph));
    });
}

ttr_status ttr_graph_dot(const ttr_graph* g, char** out) {
    return guarded([&] {
        ttr::require(g && out, ttr::ErrorCode::BadArgument, "null argument");
        *out = alloc_string(ttr::dot_text(g->graph));
    });
}

ttr_status ttr_graph_serialize(const ttr_graph* g, char** out) {
    return guarded([&] {
        ttr::require(g && out, ttr::ErrorCode::BadArgument, "null argument");
        *out = alloc_string(ttr::serialize_graph(g->graph));
    });
}

ttr_status ttr_graph_deserialize(const ttr_algebra* a, const char* text, uint64_t seed,
                                 ttr_graph** out) {
    return guarded([&] {
        ttr::require(a && text && out, ttr::ErrorCode::BadArgument, "null argument");
        *out = new ttr_graph{ttr::deserialize_graph(a->alg, text, seed)};
    });
}

ttr_status ttr_cache_name(const char* alg_text, uint32_t p, char** out) {
    return guarded([&] {
        ttr::require(alg_text && out, ttr::ErrorCode::BadArgument, "null argument");
        *out = alloc_string(ttr::cache_file_name(alg_text, p));
    });
}

ttr_status ttr_reduce(const ttr_algebra* a, const char* module, int cap, uint64_t seed,
                      ttr_reduction** out) {
    return guarded([&] {
        ttr::require(a && module && out, ttr::ErrorCode::BadArgument, "null argument");
        ttr::Rep m = ttr::resolve_module(a->alg, module, cap, seed);
        ttr::TwoTerm u = ttr::presentation_complex(ttr::min_presentation(m), a->alg);
        *out = new ttr_reduction{ttr::reduce(a->alg, u, cap, seed)};
    });
}

void ttr_reduction_free(ttr_reduction* r) { delete r; }

int ttr_reduction_interval_size(const ttr_reduction* r) {
    return r ? r->report.interval_size() : 0;
}

int ttr_reduction_dim_c(const ttr_reduction* r) { return r ? r->report.dim_c : 0; }

ttr_status ttr_reduction_records(const ttr_reduction* r, char** out) {
    return guarded([&] {
        ttr::require(r && out, ttr::ErrorCode::BadArgument, "null argument");
        *out = alloc_string(ttr::records_text(r->report.interval, &r->report.reduced_dims));
    });
}

ttr_status ttr_reduction_dot(const ttr_reduction* r, char** out) {
    return guarded([&] {
        ttr::require(r && out, ttr::ErrorCode::BadArgument, "null argument");
        *out = alloc_string(ttr::dot_text(r->report.interval));
    });
}

ttr_status ttr_reduction_verify(const ttr_reduction* r, const char* c_text, int cap,
                                uint64_t seed, int* poset_iso, int* count_match,
                                int* dim_match) {
    return guarded([&] {
        ttr::require(r && c_text, ttr::ErrorCode::BadArgument, "null argument");
        ttr::Algebra c = ttr::build_algebra(c_text);
        ttr::Verdict v = ttr::verify_against(r->report, c, cap, seed);
        if (poset_iso) *poset_iso = v.poset_iso ? 1 : 0;
        if (count_match) *count_match = v.count_match ? 1 : 0;
        if (dim_match) *dim_match = v.dim_match ? 1 : 0;
    });
}

ttr_status ttr_check(const ttr_algebra* a, int cap, uint64_t seed, char** out, int* all_ok) {
    return guarded([&] {
        ttr::require(a && out, ttr::ErrorCode::BadArgument, "null argument");
        ttr::MutationGraph g = ttr::enumerate(a->alg, cap, seed);
        ttr::CheckReport r = ttr::run_checks(a->alg, g, seed);
        std::ostringstream s;
        for (const auto& [name, ok] : r.items)
            s << name << "=" << (ok ? "true" : "false") << "\n";
        *out = alloc_string(s.str());
        if (all_ok) *all_ok = r.all() ? 1 : 0;
    });
}

}  // extern "C"
