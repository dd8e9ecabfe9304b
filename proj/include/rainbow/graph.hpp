#pragma once

#include <string>
#include <vector>

#include "rainbow/types.hpp"

namespace rainbow {

/// A small simple graph H whose rainbow copies are forbidden.
///
/// Vertices are 1..m. The edge list is normalised (u < v, sorted) and the
/// degeneracy is computed once at construction; the object is immutable.
class TargetGraph {
public:
    /// Throws std::invalid_argument on loops, duplicate edges or out-of-range ends.
    TargetGraph(int m, std::vector<Edge> edges);

    int vertex_count() const { return m_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbours(Vertex v) const { return adj_[v - 1]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v - 1].size()); }
    bool adjacent(Vertex u, Vertex v) const;

    int degeneracy() const { return degeneracy_; }
    bool is_connected() const;
    bool is_forest() const { return degeneracy_ <= 1; }
    bool is_tree() const { return m_ >= 1 && is_connected() && edges_.size() + 1 == static_cast<std::size_t>(m_); }
    bool has_cycle() const { return degeneracy_ >= 2; }

    /// Vertices of the d-core (maximal subgraph of minimum degree >= d), ascending.
    std::vector<Vertex> core(int d) const;

    /// Short human label, e.g. "K3" for builtins or "H(m=5,|E|=6)".
    const std::string& name() const { return name_; }
    TargetGraph& with_name(std::string name) {
        name_ = std::move(name);
        return *this;
    }

    static TargetGraph complete(int m);
    static TargetGraph cycle(int m);
    static TargetGraph path(int m);
    static TargetGraph star(int leaves);
    static TargetGraph petersen();
    static TargetGraph empty(int m);

    /// Parses "K3", "K4", "C4", "P3", "S5" (star with 5 leaves), "Petersen".
    static TargetGraph builtin(const std::string& spec);

private:
    int m_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    int degeneracy_ = 0;
    std::string name_;
};

/// Smallest d such that every subgraph has a vertex of degree <= d (0 if edgeless).
int degeneracy(const TargetGraph& h);

}  // namespace rainbow
