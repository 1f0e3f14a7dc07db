#include "edgedel/forbidden.hpp"

#include <algorithm>
#include <queue>

#include "edgedel/graph_io.hpp"
#include "json.hpp"

namespace edgedel {

ForbiddenFamily::ForbiddenFamily(std::vector<Descriptor> members) : members_(std::move(members)) {
    for (const auto& d : members_) {
        if (const auto* s = std::get_if<Star>(&d)) {
            if (s->d < 1) throw std::invalid_argument("star: d must be >= 1");
        } else if (const auto* c = std::get_if<CycleExact>(&d)) {
            if (c->length < 3) throw std::invalid_argument("cycle: length must be >= 3");
        } else if (const auto* t = std::get_if<AllTrees>(&d)) {
            if (t->t < 2) throw std::invalid_argument("all_trees: t must be >= 2");
        } else if (const auto* f = std::get_if<Flower>(&d)) {
            if (f->lengths.empty()) throw std::invalid_argument("flower: lengths must be nonempty");
            auto sorted = f->lengths;
            std::sort(sorted.begin(), sorted.end());
            if (sorted.front() < 3) throw std::invalid_argument("flower: lengths must be >= 3");
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw std::invalid_argument("flower: lengths must be distinct");
        }
    }
}

bool contains_star(const Graph& g, int d) {
    if (d < 1) throw std::invalid_argument("contains_star: d must be >= 1");
    return g.max_degree() >= d;
}

namespace {

// Exact-length cycle search from one anchor. `blocked` holds anchors already
// exhausted; every cycle through the current anchor avoiding them is reached.
class CycleSearch {
public:
    CycleSearch(const Graph& g, int length) : g_(g), length_(length), dist_(g.vertex_count()),
                                              onpath_(g.vertex_count(), 0) {}

    bool from(Vertex anchor, const std::vector<char>& blocked) {
        anchor_ = anchor;
        blocked_ = &blocked;
        bfs();
        onpath_[anchor_] = 1;
        bool found = dfs(anchor_, 0);
        onpath_[anchor_] = 0;
        return found;
    }

private:
    void bfs() {
        std::fill(dist_.begin(), dist_.end(), -1);
        std::queue<Vertex> q;
        dist_[anchor_] = 0;
        q.push(anchor_);
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop();
            if (dist_[x] >= length_) continue;
            for (Vertex y : g_.neighbors(x)) {
                if (dist_[y] != -1 || (*blocked_)[y]) continue;
                dist_[y] = dist_[x] + 1;
                q.push(y);
            }
        }
    }

    bool dfs(Vertex x, int used) {
        if (used == length_ - 1) return g_.has_edge(x, anchor_);
        for (Vertex y : g_.neighbors(x)) {
            if (y == anchor_ || (*blocked_)[y] || onpath_[y]) continue;
            // must still be able to return to the anchor
            if (dist_[y] < 0 || dist_[y] > length_ - used - 1) continue;
            onpath_[y] = 1;
            if (dfs(y, used + 1)) {
                onpath_[y] = 0;
                return true;
            }
            onpath_[y] = 0;
        }
        return false;
    }

    const Graph& g_;
    int length_;
    Vertex anchor_ = 0;
    const std::vector<char>* blocked_ = nullptr;
    std::vector<int> dist_;
    std::vector<char> onpath_;
};

}  // namespace

bool contains_cycle_exact(const Graph& g, int L) {
    if (L < 3) throw std::invalid_argument("contains_cycle_exact: L must be >= 3");
    const int n = g.vertex_count();
    if (L > n) return false;

    // A cycle either is an entire 2-regular component or passes through a
    // vertex of degree >= 3; handle the former directly and anchor the
    // search on the latter.
    for (const auto& comp : connected_components(g)) {
        bool bare_cycle = comp.size() >= 3;
        for (Vertex v : comp)
            if (g.degree(v) != 2) {
                bare_cycle = false;
                break;
            }
        if (bare_cycle && static_cast<int>(comp.size()) == L) return true;
    }

    std::vector<Vertex> anchors;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) >= 3) anchors.push_back(v);
    std::sort(anchors.begin(), anchors.end(), [&](Vertex a, Vertex b) {
        return std::pair(g.degree(a), a) < std::pair(g.degree(b), b);
    });

    std::vector<char> blocked(n, 0);
    CycleSearch search(g, L);
    for (Vertex a : anchors) {
        if (search.from(a, blocked)) return true;
        blocked[a] = 1;
    }
    return false;
}

bool contains_tree_family(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("contains_tree_family: t must be >= 1");
    for (const auto& comp : connected_components(g))
        if (static_cast<int>(comp.size()) >= t) return true;
    return false;
}

bool contains_flower(const Graph& g, const std::vector<int>& lengths) {
    if (lengths.empty()) throw std::invalid_argument("contains_flower: lengths must be nonempty");
    const auto& tag = g.flower_tag();
    if (!tag)
        throw std::invalid_argument("contains_flower: graph is not a generator-produced flower host");
    // F_A is a subgraph iff every petal named by A is intact: in the host
    // every simple cycle is exactly one petal and petals meet only at the
    // center, so each pattern petal must land on the like-length host petal.
    for (int length : lengths) {
        auto it = std::find_if(tag->petals.begin(), tag->petals.end(),
                               [&](const auto& p) { return p.first == length; });
        if (it == tag->petals.end()) return false;
        for (const Edge& e : it->second)
            if (!g.has_edge(e.u, e.v)) return false;
    }
    return true;
}

namespace detail {

bool subgraph_isomorphic_unchecked(const Graph& pattern, const Graph& host) {
    const int pn = pattern.vertex_count();
    const int hn = host.vertex_count();
    if (pn > hn || pattern.edge_count() > host.edge_count()) return false;

    // Isolated pattern vertices embed into any unused host vertex; since
    // hn >= pn they never fail, so only the non-isolated part is searched.
    std::vector<Vertex> order;
    std::vector<char> placed(pn, 0);
    for (int step = 0;; ++step) {
        Vertex best = -1;
        int best_key = -1;
        for (Vertex v = 0; v < pn; ++v) {
            if (placed[v] || pattern.degree(v) == 0) continue;
            int attached = 0;
            for (Vertex q : pattern.neighbors(v)) attached += placed[q];
            int key = (step > 0 && attached == 0) ? -1 : attached * 64 + pattern.degree(v);
            if (key > best_key) {
                best_key = key;
                best = v;
            }
        }
        if (best_key == -1) {
            // no vertex attached to the placed part remains; start a new
            // pattern component at the highest-degree unplaced vertex
            for (Vertex v = 0; v < pn; ++v) {
                if (placed[v] || pattern.degree(v) == 0) continue;
                if (best == -1 || pattern.degree(v) > pattern.degree(best)) best = v;
            }
        }
        if (best == -1) break;
        placed[best] = 1;
        order.push_back(best);
    }

    std::vector<Vertex> image(pn, -1);
    std::vector<char> used(hn, 0);

    auto candidate_ok = [&](Vertex pv, Vertex hv) {
        if (used[hv] || host.degree(hv) < pattern.degree(pv)) return false;
        for (Vertex q : pattern.neighbors(pv))
            if (image[q] != -1 && !host.has_edge(image[q], hv)) return false;
        return true;
    };

    auto backtrack = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == order.size()) return true;
        Vertex pv = order[depth];
        // iterate over the neighborhood of an already placed neighbor when
        // possible; otherwise over all host vertices
        const std::vector<Vertex>* pool = nullptr;
        for (Vertex q : pattern.neighbors(pv)) {
            if (image[q] == -1) continue;
            const auto& nb = host.neighbors(image[q]);
            if (!pool || nb.size() < pool->size()) pool = &nb;
        }
        if (pool) {
            for (Vertex hv : *pool) {
                if (!candidate_ok(pv, hv)) continue;
                image[pv] = hv;
                used[hv] = 1;
                if (self(self, depth + 1)) return true;
                image[pv] = -1;
                used[hv] = 0;
            }
        } else {
            for (Vertex hv = 0; hv < hn; ++hv) {
                if (!candidate_ok(pv, hv)) continue;
                image[pv] = hv;
                used[hv] = 1;
                if (self(self, depth + 1)) return true;
                image[pv] = -1;
                used[hv] = 0;
            }
        }
        return false;
    };
    return backtrack(backtrack, 0);
}

}  // namespace detail

bool subgraph_isomorphic(const Graph& pattern, const Graph& host) {
    if (pattern.vertex_count() > 12)
        throw GuardError("subgraph_isomorphic: pattern larger than 12 vertices");
    return detail::subgraph_isomorphic_unchecked(pattern, host);
}

bool family_free(const Graph& g, const ForbiddenFamily& fam) {
    for (const auto& d : fam.members()) {
        bool hit = std::visit(
            [&](const auto& m) -> bool {
                using T = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<T, Star>) return contains_star(g, m.d);
                else if constexpr (std::is_same_v<T, CycleExact>) return contains_cycle_exact(g, m.length);
                else if constexpr (std::is_same_v<T, AllTrees>) return contains_tree_family(g, m.t);
                else if constexpr (std::is_same_v<T, Flower>) return contains_flower(g, m.lengths);
                else return subgraph_isomorphic(m.pattern, g);
            },
            d);
        if (hit) return false;
    }
    return true;
}

ForbiddenFamily family_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("family JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("members") || !j["members"].is_array())
        throw std::invalid_argument("family JSON: expected {\"members\": [...]}");
    std::vector<Descriptor> members;
    for (const auto& m : j["members"]) {
        const std::string kind = m.value("kind", "");
        if (kind == "star") members.push_back(Star{m.at("d").get<int>()});
        else if (kind == "cycle") members.push_back(CycleExact{m.at("L").get<int>()});
        else if (kind == "all_trees") members.push_back(AllTrees{m.at("t").get<int>()});
        else if (kind == "flower") members.push_back(Flower{m.at("lengths").get<std::vector<int>>()});
        else if (kind == "explicit") members.push_back(ExplicitPattern{read_graph(m.at("graph").get<std::string>())});
        else throw std::invalid_argument("family JSON: unknown member kind \"" + kind + "\"");
    }
    return ForbiddenFamily(std::move(members));
}

std::string family_to_json(const ForbiddenFamily& fam) {
    nlohmann::ordered_json j;
    j["members"] = nlohmann::ordered_json::array();
    for (const auto& d : fam.members()) {
        nlohmann::ordered_json m;
        std::visit(
            [&](const auto& x) {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, Star>) {
                    m["kind"] = "star";
                    m["d"] = x.d;
                } else if constexpr (std::is_same_v<T, CycleExact>) {
                    m["kind"] = "cycle";
                    m["L"] = x.length;
                } else if constexpr (std::is_same_v<T, AllTrees>) {
                    m["kind"] = "all_trees";
                    m["t"] = x.t;
                } else if constexpr (std::is_same_v<T, Flower>) {
                    m["kind"] = "flower";
                    m["lengths"] = x.lengths;
                } else {
                    m["kind"] = "explicit";
                    m["graph"] = write_graph(x.pattern);
                }
            },
            d);
        j["members"].push_back(std::move(m));
    }
    return j.dump();
}

Graph star_graph(int d) {
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= d; ++i) edges.push_back({0, i});
    return Graph(d + 1, std::move(edges));
}

Graph cycle_graph(int length) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < length; ++i) edges.push_back(make_edge(i, (i + 1) % length));
    return Graph(length, std::move(edges));
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

}  // namespace edgedel
