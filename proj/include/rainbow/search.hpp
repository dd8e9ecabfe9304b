#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rainbow/colouring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/types.hpp"

namespace rainbow {

enum class SearchStatus { Found, None, Inconclusive };

const char* to_string(SearchStatus s);

struct SearchResult {
    SearchStatus status = SearchStatus::None;
    std::optional<Embedding> witness;
    std::uint64_t nodes = 0;
};

/// Lexicographically least (u < v < w) whose three edges carry distinct colours.
/// OpenMP kernel; rows are sharded across threads and the least row wins.
std::optional<Embedding> find_rainbow_triangle(const Colouring& col);
/// Single-threaded reference kernel with the same contract.
std::optional<Embedding> find_rainbow_triangle_serial(const Colouring& col);

/// Backtracking over injective maps V(H) -> [n] in target-vertex order with
/// colour-distinctness pruning. The first hit is the lexicographically least
/// image tuple. Exceeding `node_budget` yields Inconclusive.
SearchResult find_rainbow_subgraph(const Colouring& col, const TargetGraph& h, std::uint64_t node_budget = kUnlimited);

/// Rainbow cycle of length 3..max_len, reported as its vertex sequence starting
/// at the smallest vertex with image[1] < image.back(). Exhaustive; meant for n <= 12.
std::optional<Embedding> find_rainbow_cycle(const Colouring& col, int max_len);

/// Number of distinct colours on edges at v.
int colour_degree(const Colouring& col, Vertex v);
std::vector<int> colour_degrees(const Colouring& col);

struct TreeSearchResult {
    SearchStatus status = SearchStatus::None;
    std::optional<Embedding> witness;
    bool greedy = false;  // true when the leaf-peeling embedder succeeded without fallback
};

/// Leaf-peeling embedding of a tree H: restrict to vertices of colour degree
/// >= 2m+1 (skipped when fewer than m survive), embed H minus a leaf
/// recursively, then attach the leaf through an unused colour. Falls back to
/// find_rainbow_subgraph when the greedy pass gets stuck.
/// Throws std::invalid_argument if H is not a tree.
TreeSearchResult find_rainbow_tree(const Colouring& col, const TargetGraph& h, std::uint64_t node_budget = kUnlimited);

/// True iff the embedding is injective and its image edges have pairwise distinct colours.
bool is_rainbow_embedding(const Colouring& col, const TargetGraph& h, const Embedding& emb);

/// "TRIANGLE u v w".
std::string format_triangle(const Embedding& tri);
/// "EMBEDDING x1 x2 ... xm".
std::string format_embedding(const Embedding& emb);

}  // namespace rainbow
