#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace rainbow {

// Vertices and colours are 1-based throughout; colour 0 marks "uncoloured".
using Vertex = int;
using Colour = int;
using Count = std::uint64_t;

inline constexpr Colour kNoColour = 0;
inline constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

constexpr Count choose2(Count x) { return x < 2 ? 0 : x * (x - 1) / 2; }

// Image of target vertex i (1-based) is image[i - 1].
struct Embedding {
    std::vector<Vertex> image;
    friend bool operator==(const Embedding&, const Embedding&) = default;
};

}  // namespace rainbow
