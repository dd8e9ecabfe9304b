#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rainbow/colouring.hpp"
#include "rainbow/types.hpp"

namespace rainbow {

/// Decomposition of K_n into >= 2 vertex-disjoint parts such that every pair
/// of parts is joined in a single colour, drawn from at most two base colours.
struct GallaiPartition {
    std::vector<Colour> base_colours;             // ascending, size 1 or 2
    std::vector<std::vector<Vertex>> parts;       // each ascending; parts ordered by smallest vertex
    std::vector<std::vector<Colour>> between;     // between[i][j] for i != j; diagonal is kNoColour
    bool every_base_colour_heavy = false;         // each base colour on >= n-1 inter-part edges
};

enum class GallaiStatus { Found, NotGallai, NotFound };

struct GallaiResult {
    GallaiStatus status = GallaiStatus::NotFound;
    std::optional<GallaiPartition> partition;
    std::optional<Embedding> triangle;  // set when status == NotGallai
};

/// Tries base sets {a} then {a, b}. For each, the vertices are grouped into
/// components of the graph of edges whose colour is outside the base set,
/// and groups joined by both base colours are merged until every pair of
/// groups is monochromatic. Partitions satisfying the heavy-base-colour
/// condition are preferred. Requires n >= 2.
GallaiResult find_gallai_partition(const Colouring& col);

/// Scans every inter-part edge and checks the structural invariants.
bool validate_partition(const Colouring& col, const GallaiPartition& p);

/// "PARTITION base=a[,b] part=v,v,... part=..."
std::string format_partition(const GallaiPartition& p);

}  // namespace rainbow
