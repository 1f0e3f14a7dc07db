#include "edgedel/vc_solver.hpp"

#include <algorithm>
#include <climits>

namespace edgedel {

namespace {

char rgs_char(int v) { return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10); }

CoverPartition materialize(const std::vector<Vertex>& cover, const std::vector<int>& rgs) {
    CoverPartition p;
    int blocks = rgs.empty() ? 0 : 1 + *std::max_element(rgs.begin(), rgs.end());
    p.blocks.assign(blocks, {});
    for (std::size_t i = 0; i < rgs.size(); ++i) {
        p.blocks[rgs[i]].push_back(cover[i]);
        p.rgs.push_back(rgs_char(rgs[i]));
    }
    return p;
}

}  // namespace

PartitionEnumerator::PartitionEnumerator(std::vector<Vertex> cover) : cover_(std::move(cover)) {
    std::sort(cover_.begin(), cover_.end());
    cover_.erase(std::unique(cover_.begin(), cover_.end()), cover_.end());
    if (cover_.size() > 12)
        throw GuardError("enumerate_partitions: cover larger than 12 vertices");
    rgs_.assign(cover_.size(), 0);
}

std::optional<CoverPartition> PartitionEnumerator::next() {
    if (done_) return std::nullopt;
    if (first_) {
        first_ = false;
        return materialize(cover_, rgs_);
    }
    // advance the restricted growth string in lexicographic order
    for (int i = static_cast<int>(rgs_.size()) - 1; i >= 1; --i) {
        int prefix_max = *std::max_element(rgs_.begin(), rgs_.begin() + i);
        if (rgs_[i] <= prefix_max) {
            ++rgs_[i];
            std::fill(rgs_.begin() + i + 1, rgs_.end(), 0);
            return materialize(cover_, rgs_);
        }
    }
    done_ = true;
    return std::nullopt;
}

std::vector<CoverPartition> enumerate_partitions(const std::vector<Vertex>& cover) {
    PartitionEnumerator en(cover);
    std::vector<CoverPartition> out;
    while (auto p = en.next()) out.push_back(std::move(*p));
    return out;
}

std::optional<PartitionedCoverModel> build_model(const Graph& g, const std::vector<Vertex>& cover,
                                                 const CoverPartition& p, int h) {
    if (h < 1) throw std::invalid_argument("build_model: h must be >= 1");
    if (!is_vertex_cover(g, cover))
        throw std::invalid_argument("build_model: given set is not a vertex cover");
    std::vector<Vertex> sorted_cover = cover;
    std::sort(sorted_cover.begin(), sorted_cover.end());
    sorted_cover.erase(std::unique(sorted_cover.begin(), sorted_cover.end()), sorted_cover.end());
    std::vector<Vertex> from_blocks;
    for (const auto& b : p.blocks) {
        if (b.empty()) throw std::invalid_argument("build_model: empty partition block");
        from_blocks.insert(from_blocks.end(), b.begin(), b.end());
    }
    std::sort(from_blocks.begin(), from_blocks.end());
    if (from_blocks != sorted_cover)
        throw std::invalid_argument("build_model: blocks do not partition the cover");

    for (const auto& b : p.blocks)
        if (static_cast<int>(b.size()) > h) return std::nullopt;

    PartitionedCoverModel m;
    m.partition = p;
    m.h = h;
    m.twins = twin_classes(g, sorted_cover);

    std::vector<int> block_of(g.vertex_count(), -1);
    for (std::size_t j = 0; j < p.blocks.size(); ++j)
        for (Vertex v : p.blocks[j]) block_of[v] = static_cast<int>(j);
    std::vector<char> in_cover(g.vertex_count(), 0);
    for (Vertex v : sorted_cover) in_cover[v] = 1;

    for (const auto& e : g.edges())
        if (in_cover[e.u] && in_cover[e.v] && block_of[e.u] != block_of[e.v]) ++m.cross_count;

    const int blocks = static_cast<int>(p.blocks.size());
    for (const auto& cls : m.twins.classes) {
        std::vector<int> row(blocks + 1);
        const int full = static_cast<int>(cls.signature.size());
        for (int j = 0; j < blocks; ++j) {
            int inside = 0;
            for (Vertex s : cls.signature)
                if (block_of[s] == j) ++inside;
            row[j] = full - inside;
        }
        row[blocks] = full;
        m.coefficients.push_back(std::move(row));
        m.class_sizes.push_back(static_cast<int>(cls.members.size()));
    }
    for (const auto& b : p.blocks) m.capacities.push_back(h - static_cast<int>(b.size()));
    return m;
}

namespace {

class IpSearch {
public:
    explicit IpSearch(const PartitionedCoverModel& m) : m_(m) {
        const int classes = static_cast<int>(m.coefficients.size());
        const int cols = static_cast<int>(m.capacities.size()) + 1;
        row_suffix_min_.assign(classes, std::vector<int>(cols + 1, INT_MAX));
        for (int i = 0; i < classes; ++i) {
            row_suffix_min_[i][cols] = INT_MAX;
            for (int j = cols - 1; j >= 0; --j)
                row_suffix_min_[i][j] = std::min(m.coefficients[i][j],
                                                 row_suffix_min_[i][j + 1] == INT_MAX
                                                     ? m.coefficients[i][j]
                                                     : row_suffix_min_[i][j + 1]);
        }
        class_suffix_lb_.assign(classes + 1, 0);
        for (int i = classes - 1; i >= 0; --i)
            class_suffix_lb_[i] = class_suffix_lb_[i + 1] +
                                  static_cast<long long>(m.class_sizes[i]) * row_suffix_min_[i][0];
        cap_ = m.capacities;
        cur_.assign(classes, std::vector<int>(cols, 0));
    }

    IpSolution run() {
        best_ = LLONG_MAX;
        place_class(0, 0);
        IpSolution out;
        out.assignment = best_assign_;
        out.objective = m_.cross_count + best_;
        return out;
    }

private:
    // Rows are filled class by class, each row in ascending lexicographic
    // order, and only strict improvements are kept, so the stored optimum
    // is the lexicographically smallest one.
    void place_class(int i, long long cost) {
        if (cost + class_suffix_lb_[i] >= best_) return;
        if (i == static_cast<int>(m_.coefficients.size())) {
            best_ = cost;
            best_assign_ = cur_;
            return;
        }
        place_in_block(i, 0, m_.class_sizes[i], cost);
    }

    void place_in_block(int i, int j, int remaining, long long cost) {
        const int blocks = static_cast<int>(cap_.size());
        if (cost + static_cast<long long>(remaining) * row_suffix_min_[i][j] +
                class_suffix_lb_[i + 1] >= best_)
            return;
        if (j == blocks) {
            cur_[i][j] = remaining;
            place_class(i + 1, cost + static_cast<long long>(remaining) * m_.coefficients[i][j]);
            cur_[i][j] = 0;
            return;
        }
        const int limit = std::min(remaining, cap_[j]);
        for (int v = 0; v <= limit; ++v) {
            cur_[i][j] = v;
            cap_[j] -= v;
            place_in_block(i, j + 1, remaining - v,
                           cost + static_cast<long long>(v) * m_.coefficients[i][j]);
            cap_[j] += v;
            cur_[i][j] = 0;
        }
    }

    const PartitionedCoverModel& m_;
    std::vector<std::vector<int>> row_suffix_min_;
    std::vector<long long> class_suffix_lb_;
    std::vector<int> cap_;
    std::vector<std::vector<int>> cur_;
    std::vector<std::vector<int>> best_assign_;
    long long best_ = LLONG_MAX;
};

}  // namespace

std::optional<IpSolution> solve_model(const PartitionedCoverModel& m) {
    return IpSearch(m).run();
}

Solution reconstruct(const Graph& g, const PartitionedCoverModel& m, const IpSolution& sol) {
    std::vector<int> block_of(g.vertex_count(), -1);
    for (std::size_t j = 0; j < m.partition.blocks.size(); ++j)
        for (Vertex v : m.partition.blocks[j]) block_of[v] = static_cast<int>(j);
    std::vector<char> in_cover(g.vertex_count(), 0);
    for (Vertex v : m.twins.cover) in_cover[v] = 1;

    Solution out;
    for (const auto& e : g.edges())
        if (in_cover[e.u] && in_cover[e.v] && block_of[e.u] != block_of[e.v])
            out.deleted_edges.push_back(e);

    const int blocks = static_cast<int>(m.partition.blocks.size());
    for (std::size_t i = 0; i < m.twins.classes.size(); ++i) {
        const auto& cls = m.twins.classes[i];
        std::size_t pos = 0;
        for (int j = 0; j <= blocks; ++j) {
            for (int c = 0; c < sol.assignment[i][j]; ++c) {
                Vertex v = cls.members[pos++];
                for (Vertex s : cls.signature)
                    if (j == blocks || block_of[s] != j) out.deleted_edges.push_back(make_edge(v, s));
            }
        }
    }
    std::sort(out.deleted_edges.begin(), out.deleted_edges.end());
    return out;
}

VcSolveReport solve_vc_report(const Graph& g, int h) {
    if (h < 1) throw std::invalid_argument("solve_vc: h must be >= 1");
    auto cover = min_vertex_cover(g, g.vertex_count());
    VcSolveReport report;
    report.cover_size = static_cast<int>(cover->size());

    std::optional<PartitionedCoverModel> best_model;
    std::optional<IpSolution> best_ip;
    PartitionEnumerator en(*cover);
    while (auto p = en.next()) {
        ++report.partitions_tried;
        auto model = build_model(g, *cover, *p, h);
        if (!model) continue;
        auto ip = solve_model(*model);
        if (!best_ip || ip->objective < best_ip->objective) {
            best_ip = std::move(ip);
            best_model = std::move(model);
        }
    }
    // feasible for every h >= 1: the all-singletons partition routes every
    // vertex to its own component
    report.solution = reconstruct(g, *best_model, *best_ip);
    report.objective = best_ip->objective;
    report.best_partition_rgs = best_model->partition.rgs;
    return report;
}

Solution solve_vc(const Graph& g, int h) { return solve_vc_report(g, h).solution; }

}  // namespace edgedel
