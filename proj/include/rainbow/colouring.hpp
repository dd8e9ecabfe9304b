#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rainbow/types.hpp"

namespace rainbow {

/// Edge colouring of K_n stored as a dense upper-triangular array.
///
/// Edge (u, v) with u < v lives at row offset (u-1)(2n-u)/2 + (v-u-1).
/// A freshly constructed colouring has every edge uncoloured (kNoColour).
class Colouring {
public:
    Colouring(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    std::size_t edge_count() const { return colours_.size(); }

    std::size_t index(Vertex u, Vertex v) const {
        if (u > v) std::swap(u, v);
        return static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(2 * n_ - u) / 2 +
               static_cast<std::size_t>(v - u - 1);
    }
    Colour at(Vertex u, Vertex v) const { return colours_[index(u, v)]; }
    /// Throws std::out_of_range for a colour outside [0..k] or a bad vertex pair.
    void set(Vertex u, Vertex v, Colour c);

    bool complete() const;
    std::span<const std::int32_t> raw() const { return colours_; }

    /// Colouring induced on the given vertices, relabelled 1..|vertices| in order.
    Colouring induced(std::span<const Vertex> vertices) const;

    friend bool operator==(const Colouring&, const Colouring&) = default;

private:
    int n_;
    int k_;
    std::vector<std::int32_t> colours_;
};

/// Entry i-1 is the number of edges with colour i.
std::vector<Count> colour_counts(const Colouring& col);
std::vector<Count> colour_counts_serial(const Colouring& col);

}  // namespace rainbow
