#include "rainbow/gallai.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rainbow/search.hpp"

namespace rainbow {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int size) : parent(size) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

// Relabels union-find roots to dense ids 0..G-1 in order of smallest vertex.
int dense_groups(UnionFind& uf, int n, std::vector<int>& gid) {
    std::vector<int> label(n, -1);
    int groups = 0;
    gid.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        const int r = uf.find(v);
        if (label[r] < 0) label[r] = groups++;
        gid[v] = label[r];
    }
    return groups;
}

std::optional<GallaiPartition> partition_for_base(const Colouring& col, Colour a, Colour b) {
    const int n = col.n();
    auto in_base = [&](Colour c) { return c == a || c == b; };
    UnionFind uf(n);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            if (!in_base(col.at(u, v))) uf.unite(u - 1, v - 1);
    std::vector<int> gid;
    int groups = dense_groups(uf, n, gid);
    if (groups < 2) return std::nullopt;

    // Groups joined by both base colours must end up in the same part.
    while (true) {
        std::vector<std::uint8_t> mask(static_cast<std::size_t>(groups) * groups, 0);
        for (Vertex u = 1; u <= n; ++u)
            for (Vertex v = u + 1; v <= n; ++v) {
                const int gu = gid[u - 1], gv = gid[v - 1];
                if (gu == gv) continue;
                const std::uint8_t bit = col.at(u, v) == a ? 1 : 2;
                mask[gu * groups + gv] |= bit;
                mask[gv * groups + gu] |= bit;
            }
        UnionFind merge(groups);
        bool merged = false;
        for (int g = 0; g < groups; ++g)
            for (int h = g + 1; h < groups; ++h)
                if (mask[g * groups + h] == 3) merged |= merge.unite(g, h);
        if (!merged) break;
        std::vector<int> label(groups, -1);
        int next = 0;
        for (int v = 0; v < n; ++v) {
            const int r = merge.find(gid[v]);
            if (label[r] < 0) label[r] = next++;
            gid[v] = label[r];
        }
        groups = next;
        if (groups < 2) return std::nullopt;
    }

    GallaiPartition p;
    p.parts.resize(groups);
    for (Vertex v = 1; v <= n; ++v) p.parts[gid[v - 1]].push_back(v);
    p.between.assign(groups, std::vector<Colour>(groups, kNoColour));
    Count heavy_a = 0, heavy_b = 0;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) {
            const int gu = gid[u - 1], gv = gid[v - 1];
            if (gu == gv) continue;
            const Colour c = col.at(u, v);
            p.between[gu][gv] = p.between[gv][gu] = c;
            (c == a ? heavy_a : heavy_b)++;
        }
    const Count need = static_cast<Count>(n - 1);
    if (heavy_a > 0) p.base_colours.push_back(a);
    if (heavy_b > 0 && b != a) p.base_colours.push_back(b);
    std::sort(p.base_colours.begin(), p.base_colours.end());
    p.every_base_colour_heavy = (heavy_a == 0 || heavy_a >= need) && (heavy_b == 0 || b == a || heavy_b >= need);
    return p;
}

}  // namespace

GallaiResult find_gallai_partition(const Colouring& col) {
    if (col.n() < 2) throw std::invalid_argument("find_gallai_partition needs n >= 2");
    GallaiResult result;
    if (auto tri = find_rainbow_triangle(col)) {
        result.status = GallaiStatus::NotGallai;
        result.triangle = std::move(tri);
        return result;
    }
    const auto counts = colour_counts(col);
    std::vector<Colour> present;
    for (Colour c = 1; c <= col.k(); ++c)
        if (counts[c - 1] > 0) present.push_back(c);

    std::optional<GallaiPartition> fallback;
    auto consider = [&](Colour a, Colour b) -> bool {
        auto p = partition_for_base(col, a, b);
        if (!p) return false;
        if (p->every_base_colour_heavy) {
            result.status = GallaiStatus::Found;
            result.partition = std::move(p);
            return true;
        }
        if (!fallback) fallback = std::move(p);
        return false;
    };
    for (Colour a : present)
        if (consider(a, a)) return result;
    for (std::size_t i = 0; i < present.size(); ++i)
        for (std::size_t j = i + 1; j < present.size(); ++j)
            if (consider(present[i], present[j])) return result;
    if (fallback) {
        result.status = GallaiStatus::Found;
        result.partition = std::move(fallback);
    }
    return result;
}

bool validate_partition(const Colouring& col, const GallaiPartition& p) {
    const int n = col.n();
    if (p.parts.size() < 2 || p.base_colours.empty() || p.base_colours.size() > 2) return false;
    std::vector<int> owner(n + 1, -1);
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (p.parts[i].empty()) return false;
        for (Vertex v : p.parts[i]) {
            if (v < 1 || v > n || owner[v] != -1) return false;
            owner[v] = static_cast<int>(i);
        }
    }
    if (std::count(owner.begin() + 1, owner.end(), -1) != 0) return false;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) {
            const int a = owner[u], b = owner[v];
            if (a == b) continue;
            const Colour c = col.at(u, v);
            if (p.between[a][b] != c || p.between[b][a] != c) return false;
            if (std::find(p.base_colours.begin(), p.base_colours.end(), c) == p.base_colours.end()) return false;
        }
    return true;
}

std::string format_partition(const GallaiPartition& p) {
    std::string out = "PARTITION base=";
    for (std::size_t i = 0; i < p.base_colours.size(); ++i) out += (i ? "," : "") + std::to_string(p.base_colours[i]);
    for (const auto& part : p.parts) {
        out += " part=";
        for (std::size_t i = 0; i < part.size(); ++i) out += (i ? "," : "") + std::to_string(part[i]);
    }
    return out;
}

}  // namespace rainbow
