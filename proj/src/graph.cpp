#include "rainbow/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace rainbow {

namespace {

// Bucket-based min-degree peeling; returns the largest degree seen at removal.
int peel_degeneracy(int m, const std::vector<std::vector<Vertex>>& adj) {
    std::vector<int> deg(m);
    int max_deg = 0;
    for (int v = 0; v < m; ++v) {
        deg[v] = static_cast<int>(adj[v].size());
        max_deg = std::max(max_deg, deg[v]);
    }
    std::vector<std::vector<int>> buckets(max_deg + 1);
    for (int v = 0; v < m; ++v) buckets[deg[v]].push_back(v);
    std::vector<char> removed(m, 0);
    int result = 0;
    int lowest = 0;
    for (int done = 0; done < m;) {
        lowest = std::max(0, lowest - 1);
        while (buckets[lowest].empty()) ++lowest;
        int v = buckets[lowest].back();
        buckets[lowest].pop_back();
        if (removed[v] || deg[v] != lowest) continue;  // stale entry
        removed[v] = 1;
        ++done;
        result = std::max(result, lowest);
        for (Vertex w1 : adj[v]) {
            int w = w1 - 1;
            if (removed[w]) continue;
            --deg[w];
            buckets[deg[w]].push_back(w);
        }
    }
    return result;
}

}  // namespace

TargetGraph::TargetGraph(int m, std::vector<Edge> edges) : m_(m), adj_(m > 0 ? m : 0) {
    if (m < 1) throw std::invalid_argument("target graph needs at least one vertex");
    for (Edge& e : edges) {
        if (e.u < 1 || e.u > m || e.v < 1 || e.v > m)
            throw std::invalid_argument("edge endpoint outside [1.." + std::to_string(m) + "]");
        if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge in target graph");
    edges_ = std::move(edges);
    for (const Edge& e : edges_) {
        adj_[e.u - 1].push_back(e.v);
        adj_[e.v - 1].push_back(e.u);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
    degeneracy_ = peel_degeneracy(m_, adj_);
    name_ = "H(m=" + std::to_string(m_) + ",|E|=" + std::to_string(edges_.size()) + ")";
}

bool TargetGraph::adjacent(Vertex u, Vertex v) const {
    const auto& row = adj_[u - 1];
    return std::binary_search(row.begin(), row.end(), v);
}

bool TargetGraph::is_connected() const {
    std::vector<char> seen(m_, 0);
    std::vector<Vertex> stack{1};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : adj_[v - 1]) {
            if (!seen[w - 1]) {
                seen[w - 1] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == m_;
}

std::vector<Vertex> TargetGraph::core(int d) const {
    std::vector<int> deg(m_);
    std::vector<char> removed(m_, 0);
    std::vector<int> queue;
    for (int v = 0; v < m_; ++v) {
        deg[v] = static_cast<int>(adj_[v].size());
        if (deg[v] < d) {
            removed[v] = 1;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        for (Vertex w1 : adj_[v]) {
            int w = w1 - 1;
            if (removed[w]) continue;
            if (--deg[w] < d) {
                removed[w] = 1;
                queue.push_back(w);
            }
        }
    }
    std::vector<Vertex> out;
    for (int v = 0; v < m_; ++v)
        if (!removed[v]) out.push_back(v + 1);
    return out;
}

TargetGraph TargetGraph::complete(int m) {
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= m; ++u)
        for (Vertex v = u + 1; v <= m; ++v) edges.push_back({u, v});
    return TargetGraph(m, std::move(edges)).with_name("K" + std::to_string(m));
}

TargetGraph TargetGraph::cycle(int m) {
    if (m < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < m; ++v) edges.push_back({v, v + 1});
    edges.push_back({1, m});
    return TargetGraph(m, std::move(edges)).with_name("C" + std::to_string(m));
}

TargetGraph TargetGraph::path(int m) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < m; ++v) edges.push_back({v, v + 1});
    return TargetGraph(m, std::move(edges)).with_name("P" + std::to_string(m));
}

TargetGraph TargetGraph::star(int leaves) {
    std::vector<Edge> edges;
    for (Vertex v = 2; v <= leaves + 1; ++v) edges.push_back({1, v});
    return TargetGraph(leaves + 1, std::move(edges)).with_name("S" + std::to_string(leaves));
}

TargetGraph TargetGraph::petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i + 1, (i + 1) % 5 + 1});          // outer 5-cycle
        edges.push_back({i + 1, i + 6});                     // spokes
        edges.push_back({i + 6, (i + 2) % 5 + 6});           // inner pentagram
    }
    return TargetGraph(10, std::move(edges)).with_name("Petersen");
}

TargetGraph TargetGraph::empty(int m) {
    return TargetGraph(m, {}).with_name("E" + std::to_string(m));
}

TargetGraph TargetGraph::builtin(const std::string& spec) {
    if (spec == "Petersen" || spec == "petersen") return petersen();
    if (spec.size() < 2) throw std::invalid_argument("unknown builtin graph '" + spec + "'");
    int size = 0;
    try {
        std::size_t used = 0;
        size = std::stoi(spec.substr(1), &used);
        if (used != spec.size() - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw std::invalid_argument("unknown builtin graph '" + spec + "'");
    }
    switch (spec[0]) {
        case 'K': return complete(size);
        case 'C': return cycle(size);
        case 'P': return path(size);
        case 'S': return star(size);
        case 'E': return empty(size);
        default: throw std::invalid_argument("unknown builtin graph '" + spec + "'");
    }
}

int degeneracy(const TargetGraph& h) { return h.degeneracy(); }

}  // namespace rainbow
