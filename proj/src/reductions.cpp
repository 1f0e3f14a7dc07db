#include "edgedel/reductions.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace edgedel {

std::optional<Orientation> mmo_brute_force(const MmoInstance& inst) {
    if (inst.r < 3) throw std::invalid_argument("mmo: r must be >= 3");
    const auto& g = inst.wg.graph();
    const int m = g.edge_count();
    if (m > 20) throw GuardError("mmo_brute_force: more than 20 edges");
    // lexicographic over the direction vector: edge 0 is the most
    // significant choice, 0 = tail at the smaller endpoint
    std::vector<long long> out_weight(g.vertex_count());
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        std::fill(out_weight.begin(), out_weight.end(), 0);
        for (int i = 0; i < m; ++i) {
            const auto& e = g.edges()[i];
            out_weight[(mask >> (m - 1 - i)) & 1 ? e.v : e.u] += inst.wg.weight_at(i);
        }
        bool ok = true;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (out_weight[v] > inst.r) {
                ok = false;
                break;
            }
        if (ok) {
            Orientation o;
            for (int i = 0; i < m; ++i)
                o.tail.push_back((mask >> (m - 1 - i)) & 1 ? g.edges()[i].v : g.edges()[i].u);
            return o;
        }
    }
    return std::nullopt;
}

namespace {

// Pair lists driving the path runs: the aligned pairs (i, i) first, then the
// shifted pairs (i, i+1) with the final wrap-around (w-1, 0). For weight 1
// both lists name the same endpoints twice; the two runs are materialized as
// parallel internally disjoint paths.
std::vector<std::pair<int, int>> pair_list(int weight) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < weight; ++i) out.push_back({i, i});
    for (int i = 0; i + 1 < weight; ++i) out.push_back({i, i + 1});
    out.push_back({weight - 1, 0});
    return out;
}

}  // namespace

MmoReduction gen_mmo(const MmoInstance& inst) {
    if (inst.r < 3) throw std::invalid_argument("gen_mmo: r must be >= 3");
    const auto& g = inst.wg.graph();
    const int n = g.vertex_count();

    GadgetLayout layout;
    layout.input_vertex_count = n;
    layout.omega = inst.wg.total_weight();
    layout.path_unit = n + 3 * layout.omega + 1;
    layout.max_weighted_degree = inst.wg.max_weighted_degree();
    layout.star_degree = layout.max_weighted_degree + inst.r + 1;
    layout.cycle_length = 5 * layout.path_unit + 2;

    if (layout.vertex_count_closed_form() > INT_MAX)
        throw GuardError("gen_mmo: host too large");

    const long long red_len = layout.path_unit;          // edges per red run
    const long long blue_len = 4 * layout.path_unit - 2; // edges per blue run

    long long next = n;
    std::vector<Edge> edges;
    auto new_vertex = [&]() { return static_cast<Vertex>(next++); };

    for (Vertex u = 0; u < n; ++u) {
        const int count = static_cast<int>(layout.max_weighted_degree - inst.wg.weighted_degree(u));
        layout.pendants.push_back({static_cast<Vertex>(next), count});
        for (int i = 0; i < count; ++i) edges.push_back(make_edge(u, new_vertex()));
    }

    for (int ei = 0; ei < g.edge_count(); ++ei) {
        EdgeGadget gadget;
        gadget.input_edge = g.edges()[ei];
        gadget.weight = inst.wg.weight_at(ei);
        const Vertex u = gadget.input_edge.u;
        const Vertex v = gadget.input_edge.v;
        auto fan_out = [&](Vertex owner, std::vector<Vertex>& set) {
            for (int i = 0; i < gadget.weight; ++i) {
                set.push_back(new_vertex());
                edges.push_back(make_edge(owner, set.back()));
            }
        };
        fan_out(u, gadget.set_uv);
        fan_out(u, gadget.set_uv_prime);
        fan_out(v, gadget.set_vu);
        fan_out(v, gadget.set_vu_prime);
        layout.gadgets.push_back(std::move(gadget));
    }

    auto lay_path = [&](Vertex a, Vertex b, long long length) {
        PathRun run;
        run.from = a;
        run.to = b;
        run.first_internal = static_cast<Vertex>(next);
        run.internal_count = static_cast<int>(length - 1);
        Vertex prev = a;
        for (long long i = 0; i + 1 < length; ++i) {
            Vertex x = new_vertex();
            edges.push_back(make_edge(prev, x));
            prev = x;
        }
        edges.push_back(make_edge(prev, b));
        return run;
    };

    for (auto& gadget : layout.gadgets)
        for (auto [i, j] : pair_list(gadget.weight))
            gadget.red_paths.push_back(lay_path(gadget.set_uv[i], gadget.set_vu[j], red_len));
    for (auto& gadget : layout.gadgets)
        for (auto [i, j] : pair_list(gadget.weight))
            gadget.blue_paths.push_back(
                lay_path(gadget.set_uv_prime[i], gadget.set_vu_prime[j], blue_len));

    MmoReduction out;
    out.layout = std::move(layout);
    out.graph = Graph(static_cast<int>(next), std::move(edges));
    out.family = ForbiddenFamily({Star{static_cast<int>(out.layout.star_degree)},
                                  CycleExact{static_cast<int>(out.layout.cycle_length)}});
    out.budget = out.layout.omega;
    return out;
}

Solution orientation_witness(const GadgetLayout& layout, const Orientation& o) {
    if (o.tail.size() != layout.gadgets.size())
        throw std::invalid_argument("orientation_witness: one direction per input edge required");
    Solution sol;
    for (std::size_t i = 0; i < layout.gadgets.size(); ++i) {
        const auto& gadget = layout.gadgets[i];
        Vertex tail = o.tail[i];
        if (tail != gadget.input_edge.u && tail != gadget.input_edge.v)
            throw std::invalid_argument("orientation_witness: tail is not an endpoint");
        // edge directed tail -> head: cut the head's red fan-out
        const bool toward_v = tail == gadget.input_edge.u;
        const Vertex head = toward_v ? gadget.input_edge.v : gadget.input_edge.u;
        const auto& fan = toward_v ? gadget.set_vu : gadget.set_uv;
        for (Vertex x : fan) sol.deleted_edges.push_back(make_edge(head, x));
    }
    std::sort(sol.deleted_edges.begin(), sol.deleted_edges.end());
    return sol;
}

namespace {

void validate_hs(const HsInstance& inst) {
    if (inst.universe < 0) throw std::invalid_argument("hitting set: universe must be >= 0");
    if (inst.k < 0) throw std::invalid_argument("hitting set: k must be >= 0");
    for (const auto& set : inst.sets) {
        if (set.empty()) throw std::invalid_argument("hitting set: sets must be nonempty");
        for (int e : set)
            if (e < 1 || e > inst.universe)
                throw std::invalid_argument("hitting set: element out of universe");
    }
}

}  // namespace

HsReduction gen_hs(const HsInstance& inst) {
    validate_hs(inst);
    if (inst.universe > 12) throw GuardError("gen_hs: universe larger than 12");
    if (inst.sets.size() > 12) throw GuardError("gen_hs: more than 12 sets");

    HsReduction out;
    out.budget = inst.k;
    out.center = 0;

    std::vector<Edge> edges;
    auto tag = std::make_shared<FlowerHostTag>();
    tag->center = 0;
    Vertex next = 1;
    for (int i = 1; i <= inst.universe; ++i) {
        PetalRange petal;
        petal.element = i;
        petal.length = 2 * i + 2;
        petal.first_internal = next;
        petal.internal_count = 2 * i + 1;
        std::vector<Edge> petal_edges;
        Vertex prev = 0;
        for (int j = 0; j < petal.internal_count; ++j) {
            petal_edges.push_back(make_edge(prev, next));
            prev = next++;
        }
        petal_edges.push_back(make_edge(prev, 0));
        std::sort(petal_edges.begin(), petal_edges.end());
        edges.insert(edges.end(), petal_edges.begin(), petal_edges.end());
        tag->petals.push_back({petal.length, std::move(petal_edges)});
        out.petals.push_back(petal);
    }
    out.graph = Graph(next, std::move(edges));
    out.graph.set_flower_tag(std::move(tag));

    std::vector<Descriptor> members;
    for (const auto& set : inst.sets) {
        std::vector<int> lengths;
        for (int i : set) lengths.push_back(2 * i + 2);
        std::sort(lengths.begin(), lengths.end());
        lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
        members.push_back(Flower{std::move(lengths)});
    }
    out.family = ForbiddenFamily(std::move(members));
    return out;
}

std::optional<std::vector<int>> hs_brute_force(const HsInstance& inst) {
    validate_hs(inst);
    if (inst.universe > 12) throw GuardError("hs_brute_force: universe larger than 12");
    if (inst.sets.size() > 12) throw GuardError("hs_brute_force: more than 12 sets");

    auto hits_all = [&](const std::vector<int>& chosen) {
        for (const auto& set : inst.sets) {
            bool hit = false;
            for (int e : set)
                if (std::binary_search(chosen.begin(), chosen.end(), e)) {
                    hit = true;
                    break;
                }
            if (!hit) return false;
        }
        return true;
    };

    for (int size = 0; size <= std::min(inst.k, inst.universe); ++size) {
        std::vector<int> pick(size);
        std::iota(pick.begin(), pick.end(), 1);
        while (true) {
            if (hits_all(pick)) return pick;
            int i = size - 1;
            while (i >= 0 && pick[i] == inst.universe - size + i + 1) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;
}

Solution hs_witness(const HsReduction& red, const HsInstance& inst,
                    const std::vector<int>& hitting_set) {
    std::vector<int> sorted = hitting_set;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (const auto& set : inst.sets) {
        bool hit = false;
        for (int e : set)
            if (std::binary_search(sorted.begin(), sorted.end(), e)) {
                hit = true;
                break;
            }
        if (!hit) throw std::invalid_argument("hs_witness: not a hitting set");
    }
    const auto& tag = red.graph.flower_tag();
    Solution sol;
    for (int i : sorted) {
        auto it = std::find_if(tag->petals.begin(), tag->petals.end(),
                               [&](const auto& p) { return p.first == 2 * i + 2; });
        if (it == tag->petals.end())
            throw std::invalid_argument("hs_witness: element outside the generated universe");
        sol.deleted_edges.push_back(it->second.front());
    }
    std::sort(sol.deleted_edges.begin(), sol.deleted_edges.end());
    return sol;
}

}  // namespace edgedel
