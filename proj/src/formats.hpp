#pragma once

#include <map>
#include <string>

#include "enumerate.hpp"
#include "reduction.hpp"

namespace ttr {

// .rep text format: a `dims d1 ... dn` line, then per arrow a `map <label>`
// line followed by a (d_tgt x d_src) integer matrix, one row per line.
// Arrows without a `map` block act by zero.
Rep parse_rep(const Algebra& alg, const std::string& text);
Rep load_rep(const Algebra& alg, const std::string& path);

// Module designator: shorthand (P<i>, S<i>, I<i>, '+'-joined sums), a .rep
// file path, or a single g-vector "(g1,...,gn)" naming a summand of some
// enumerated node (resolved by enumerating up to `cap`).
Rep resolve_module(const Algebra& alg, const std::string& designator, int cap = 10000,
                   uint64_t seed = 0);

// One record per node, sorted by key, stable field order. When `fdims` is
// given, a reduced-module dimension field is appended per node.
std::string records_text(const MutationGraph& g,
                         const std::map<std::string, int>* fdims = nullptr);

// DOT digraph: nodes labeled "dims|support", arrows larger -> smaller.
std::string dot_text(const MutationGraph& g);

uint64_t fnv1a(const std::string& s);

// Cache file name for a graph keyed by (algebra text hash, field prime).
std::string cache_file_name(const std::string& alg_text, uint32_t p);

std::string serialize_graph(const MutationGraph& g);
MutationGraph deserialize_graph(const Algebra& alg, const std::string& text,
                                uint64_t seed = 0);

}  // namespace ttr
