#include "rainbow/colouring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include <omp.h>

namespace rainbow {

Colouring::Colouring(int n, int k) : n_(n), k_(k) {
    if (n < 1) throw std::invalid_argument("colouring needs n >= 1");
    if (k < 1) throw std::invalid_argument("colouring needs k >= 1");
    colours_.assign(choose2(static_cast<Count>(n)), kNoColour);
}

void Colouring::set(Vertex u, Vertex v, Colour c) {
    if (u == v || u < 1 || v < 1 || u > n_ || v > n_)
        throw std::out_of_range("bad edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (c < 0 || c > k_) throw std::out_of_range("colour " + std::to_string(c) + " outside [1.." + std::to_string(k_) + "]");
    colours_[index(u, v)] = c;
}

bool Colouring::complete() const {
    return std::none_of(colours_.begin(), colours_.end(), [](std::int32_t c) { return c == kNoColour; });
}

Colouring Colouring::induced(std::span<const Vertex> vertices) const {
    const int m = static_cast<int>(vertices.size());
    Colouring sub(std::max(m, 1), k_);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) sub.colours_[sub.index(i + 1, j + 1)] = at(vertices[i], vertices[j]);
    return sub;
}

std::vector<Count> colour_counts_serial(const Colouring& col) {
    std::vector<Count> counts(col.k(), 0);
    for (std::int32_t c : col.raw())
        if (c != kNoColour) ++counts[c - 1];
    return counts;
}

std::vector<Count> colour_counts(const Colouring& col) {
    const auto raw = col.raw();
    const std::int64_t size = static_cast<std::int64_t>(raw.size());
    const int k = col.k();
    // Small inputs are not worth a parallel region.
    if (size < (1 << 16)) return colour_counts_serial(col);
    std::vector<Count> counts(k, 0);
#pragma omp parallel
    {
        std::vector<Count> local(k, 0);
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < size; ++i)
            if (raw[i] != kNoColour) ++local[raw[i] - 1];
#pragma omp critical
        for (int c = 0; c < k; ++c) counts[c] += local[c];
    }
    return counts;
}

}  // namespace rainbow
