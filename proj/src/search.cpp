#include "rainbow/search.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include <omp.h>

namespace rainbow {

const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "FOUND";
        case SearchStatus::None: return "NONE";
        case SearchStatus::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

namespace {

// Row u holds colours of (u, u+1..n) contiguously; the first v > u with a
// rainbow (u, v, w) is returned through v_out/w_out.
bool triangle_in_row(const Colouring& col, Vertex u, Vertex& v_out, Vertex& w_out) {
    const int n = col.n();
    const auto raw = col.raw();
    const std::int32_t* row_u = raw.data() + col.index(u, u + 1);
    for (Vertex v = u + 1; v < n; ++v) {
        const std::int32_t cuv = row_u[v - u - 1];
        const std::int32_t* row_v = raw.data() + col.index(v, v + 1);
        for (Vertex w = v + 1; w <= n; ++w) {
            const std::int32_t a = row_u[w - u - 1];
            const std::int32_t b = row_v[w - v - 1];
            if (a != b && a != cuv && b != cuv) {
                v_out = v;
                w_out = w;
                return true;
            }
        }
    }
    return false;
}

}  // namespace

std::optional<Embedding> find_rainbow_triangle_serial(const Colouring& col) {
    for (Vertex u = 1; u + 2 <= col.n(); ++u) {
        Vertex v = 0, w = 0;
        if (triangle_in_row(col, u, v, w)) return Embedding{{u, v, w}};
    }
    return std::nullopt;
}

std::optional<Embedding> find_rainbow_triangle(const Colouring& col) {
    const int n = col.n();
    if (n < 3) return std::nullopt;
    std::atomic<int> best_u{n + 1};
    Embedding best;
#pragma omp parallel for schedule(dynamic, 1)
    for (int u = 1; u <= n - 2; ++u) {
        if (u >= best_u.load(std::memory_order_relaxed)) continue;
        Vertex v = 0, w = 0;
        if (!triangle_in_row(col, u, v, w)) continue;
#pragma omp critical(rainbow_triangle_best)
        if (u < best_u.load()) {
            best_u.store(u);
            best.image = {u, v, w};
        }
    }
    if (best_u.load() > n) return std::nullopt;
    return best;
}

namespace {

class SubgraphSearch {
public:
    SubgraphSearch(const Colouring& col, const TargetGraph& h, std::uint64_t budget)
        : col_(col), h_(h), budget_(budget), assign_(h.vertex_count() + 1, 0), used_vertex_(col.n() + 1, 0),
          used_colour_(col.k() + 1, 0) {
        // Earlier neighbours of each target vertex in assignment order 1..m.
        back_.resize(h.vertex_count() + 1);
        for (const Edge& e : h.edges()) back_[e.v].push_back(e.u);
    }

    SearchResult run() {
        SearchResult result;
        const int m = h_.vertex_count();
        if (m > col_.n() || h_.edge_count() > static_cast<std::size_t>(col_.k())) {
            result.status = SearchStatus::None;
            return result;
        }
        const bool found = extend(1);
        result.nodes = nodes_;
        if (found) {
            result.status = SearchStatus::Found;
            result.witness = Embedding{std::vector<Vertex>(assign_.begin() + 1, assign_.end())};
        } else {
            result.status = exhausted_ ? SearchStatus::Inconclusive : SearchStatus::None;
        }
        return result;
    }

private:
    bool extend(int i) {
        if (i > h_.vertex_count()) return true;
        for (Vertex x = 1; x <= col_.n(); ++x) {
            if (used_vertex_[x]) continue;
            if (++nodes_ > budget_) {
                exhausted_ = true;
                return false;
            }
            std::size_t placed = 0;
            bool ok = true;
            for (Vertex j : back_[i]) {
                const Colour c = col_.at(assign_[j], x);
                if (used_colour_[c]) {
                    ok = false;
                    break;
                }
                used_colour_[c] = 1;
                ++placed;
            }
            if (ok) {
                assign_[i] = x;
                used_vertex_[x] = 1;
                if (extend(i + 1)) return true;
                used_vertex_[x] = 0;
            }
            for (std::size_t p = 0; p < placed; ++p) used_colour_[col_.at(assign_[back_[i][p]], x)] = 0;
            if (exhausted_) return false;
        }
        return false;
    }

    const Colouring& col_;
    const TargetGraph& h_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector<std::vector<Vertex>> back_;
    std::vector<Vertex> assign_;
    std::vector<char> used_vertex_;
    std::vector<char> used_colour_;
};

}  // namespace

SearchResult find_rainbow_subgraph(const Colouring& col, const TargetGraph& h, std::uint64_t node_budget) {
    return SubgraphSearch(col, h, node_budget).run();
}

namespace {

class CycleSearch {
public:
    CycleSearch(const Colouring& col, int max_len)
        : col_(col), max_len_(max_len), on_path_(col.n() + 1, 0), used_(col.k() + 1, 0) {}

    std::optional<Embedding> run() {
        for (Vertex s = 1; s + 2 <= col_.n(); ++s) {
            start_ = s;
            path_.assign(1, s);
            on_path_[s] = 1;
            if (dfs()) return Embedding{path_};
            on_path_[s] = 0;
        }
        return std::nullopt;
    }

private:
    bool dfs() {
        const Vertex last = path_.back();
        for (Vertex x = start_ + 1; x <= col_.n(); ++x) {
            if (on_path_[x]) continue;
            const Colour c = col_.at(last, x);
            if (used_[c]) continue;
            path_.push_back(x);
            on_path_[x] = 1;
            used_[c] = 1;
            if (path_.size() >= 3 && path_[1] < x) {
                const Colour closing = col_.at(x, start_);
                if (!used_[closing]) return true;
            }
            if (static_cast<int>(path_.size()) < max_len_ && dfs()) return true;
            used_[c] = 0;
            on_path_[x] = 0;
            path_.pop_back();
        }
        return false;
    }

    const Colouring& col_;
    int max_len_;
    Vertex start_ = 1;
    std::vector<Vertex> path_;
    std::vector<char> on_path_;
    std::vector<char> used_;
};

}  // namespace

std::optional<Embedding> find_rainbow_cycle(const Colouring& col, int max_len) {
    if (max_len < 3) throw std::invalid_argument("find_rainbow_cycle needs max_len >= 3");
    return CycleSearch(col, std::min(max_len, col.n())).run();
}

int colour_degree(const Colouring& col, Vertex v) {
    std::vector<char> seen(col.k() + 1, 0);
    int distinct = 0;
    for (Vertex w = 1; w <= col.n(); ++w) {
        if (w == v) continue;
        const Colour c = col.at(v, w);
        if (!seen[c]) {
            seen[c] = 1;
            ++distinct;
        }
    }
    return distinct;
}

std::vector<int> colour_degrees(const Colouring& col) {
    std::vector<int> out(col.n());
#pragma omp parallel for schedule(static)
    for (int v = 1; v <= col.n(); ++v) out[v - 1] = colour_degree(col, v);
    return out;
}

namespace {

class TreeEmbedder {
public:
    TreeEmbedder(const Colouring& col, const TargetGraph& h)
        : col_(col), h_(h), alive_(h.vertex_count() + 1, 1), assign_(h.vertex_count() + 1, 0),
          stamp_(col.k() + 1, 0) {}

    std::optional<Embedding> run() {
        std::vector<Vertex> all(col_.n());
        for (Vertex v = 1; v <= col_.n(); ++v) all[v - 1] = v;
        if (!embed(h_.vertex_count(), all)) return std::nullopt;
        return Embedding{std::vector<Vertex>(assign_.begin() + 1, assign_.end())};
    }

private:
    int colour_degree_within(Vertex v, const std::vector<Vertex>& hosts) {
        ++epoch_;
        int distinct = 0;
        for (Vertex w : hosts) {
            if (w == v) continue;
            const Colour c = col_.at(v, w);
            if (stamp_[c] != epoch_) {
                stamp_[c] = epoch_;
                ++distinct;
            }
        }
        return distinct;
    }

    bool embed(int alive_count, const std::vector<Vertex>& hosts) {
        if (static_cast<int>(hosts.size()) < alive_count) return false;
        if (alive_count == 1) {
            for (Vertex a = 1; a <= h_.vertex_count(); ++a)
                if (alive_[a]) assign_[a] = hosts.front();
            return true;
        }
        std::vector<Vertex> filtered;
        for (Vertex v : hosts)
            if (colour_degree_within(v, hosts) >= 2 * alive_count + 1) filtered.push_back(v);
        if (static_cast<int>(filtered.size()) < alive_count) filtered = hosts;

        Vertex leaf = 0, parent = 0;
        for (Vertex a = h_.vertex_count(); a >= 1 && leaf == 0; --a) {
            if (!alive_[a]) continue;
            int live_deg = 0;
            Vertex nb = 0;
            for (Vertex b : h_.neighbours(a))
                if (alive_[b]) {
                    ++live_deg;
                    nb = b;
                }
            if (live_deg == 1) {
                leaf = a;
                parent = nb;
            }
        }
        alive_[leaf] = 0;
        const bool ok = embed(alive_count - 1, filtered);
        alive_[leaf] = 1;
        if (!ok) return false;

        ++epoch_;
        std::vector<char> taken(col_.n() + 1, 0);
        for (Vertex a = 1; a <= h_.vertex_count(); ++a)
            if (alive_[a] && a != leaf) taken[assign_[a]] = 1;
        for (const Edge& e : h_.edges())
            if (alive_[e.u] && alive_[e.v] && e.u != leaf && e.v != leaf) stamp_[col_.at(assign_[e.u], assign_[e.v])] = epoch_;
        for (Vertex x : hosts) {
            if (taken[x]) continue;
            if (stamp_[col_.at(x, assign_[parent])] == epoch_) continue;
            assign_[leaf] = x;
            return true;
        }
        return false;
    }

    const Colouring& col_;
    const TargetGraph& h_;
    std::vector<char> alive_;
    std::vector<Vertex> assign_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
};

}  // namespace

TreeSearchResult find_rainbow_tree(const Colouring& col, const TargetGraph& h, std::uint64_t node_budget) {
    if (!h.is_tree()) throw std::invalid_argument("find_rainbow_tree needs a tree target, got " + h.name());
    TreeSearchResult result;
    if (h.vertex_count() <= col.n()) {
        if (auto emb = TreeEmbedder(col, h).run(); emb && is_rainbow_embedding(col, h, *emb)) {
            result.status = SearchStatus::Found;
            result.witness = std::move(emb);
            result.greedy = true;
            return result;
        }
    }
    SearchResult fallback = find_rainbow_subgraph(col, h, node_budget);
    result.status = fallback.status;
    result.witness = std::move(fallback.witness);
    return result;
}

bool is_rainbow_embedding(const Colouring& col, const TargetGraph& h, const Embedding& emb) {
    if (static_cast<int>(emb.image.size()) != h.vertex_count()) return false;
    std::vector<Vertex> sorted = emb.image;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (!sorted.empty() && (sorted.front() < 1 || sorted.back() > col.n())) return false;
    std::vector<Colour> colours;
    for (const Edge& e : h.edges()) colours.push_back(col.at(emb.image[e.u - 1], emb.image[e.v - 1]));
    std::sort(colours.begin(), colours.end());
    return std::adjacent_find(colours.begin(), colours.end()) == colours.end();
}

std::string format_triangle(const Embedding& tri) {
    return "TRIANGLE " + std::to_string(tri.image.at(0)) + " " + std::to_string(tri.image.at(1)) + " " +
           std::to_string(tri.image.at(2));
}

std::string format_embedding(const Embedding& emb) {
    std::string out = "EMBEDDING";
    for (Vertex v : emb.image) out += " " + std::to_string(v);
    return out;
}

}  // namespace rainbow
