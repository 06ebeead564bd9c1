#include "tightpart/solver.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace tightpart {

namespace {

// Branch and bound over one connected component, tracked with an alive mask
// on the host graph. Branch vertex: maximum residual degree, ties to the
// smaller id. Bound: greedy clique cover of the remaining vertices.
class MisSearch {
public:
    MisSearch(const Graph& g, const VertexSet& component) : g_(g), comp_(component) {
        alive_.assign(g.num_vertices(), 0);
        for (Vertex v : comp_) alive_[v] = 1;
    }

    VertexSet run() {
        current_.clear();
        best_.clear();
        explore();
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    int residual_degree(Vertex v) const {
        int d = 0;
        for (Vertex w : g_.neighbors(v)) d += alive_[w];
        return d;
    }

    int clique_cover_bound() const {
        int cliques = 0;
        std::vector<Vertex> members;
        assigned_.assign(g_.num_vertices(), 0);
        for (Vertex v : comp_) {
            if (!alive_[v] || assigned_[v]) continue;
            ++cliques;
            assigned_[v] = 1;
            members.assign(1, v);
            for (Vertex w : g_.neighbors(v)) {
                if (!alive_[w] || assigned_[w]) continue;
                bool joins = true;
                for (Vertex u : members)
                    if (u != v && !g_.has_edge(u, w)) {
                        joins = false;
                        break;
                    }
                if (joins) {
                    assigned_[w] = 1;
                    members.push_back(w);
                }
            }
        }
        return cliques;
    }

    void remove(Vertex v, std::vector<Vertex>& trail) {
        alive_[v] = 0;
        trail.push_back(v);
    }

    void explore() {
        std::vector<Vertex> trail;
        // Vertices of residual degree <= 1 can always be taken greedily.
        size_t taken_before = current_.size();
        bool progress = true;
        while (progress) {
            progress = false;
            for (Vertex v : comp_) {
                if (!alive_[v] || residual_degree(v) > 1) continue;
                current_.push_back(v);
                remove(v, trail);
                for (Vertex w : g_.neighbors(v))
                    if (alive_[w]) remove(w, trail);
                progress = true;
            }
        }

        Vertex branch = -1;
        int branch_deg = -1;
        for (Vertex v : comp_)
            if (alive_[v]) {
                int d = residual_degree(v);
                if (d > branch_deg) {
                    branch_deg = d;
                    branch = v;
                }
            }

        if (branch < 0) {
            if (current_.size() > best_.size()) best_ = current_;
        } else if (current_.size() + clique_cover_bound() > best_.size()) {
            std::vector<Vertex> sub_trail;
            // Take the branch vertex.
            current_.push_back(branch);
            remove(branch, sub_trail);
            for (Vertex w : g_.neighbors(branch))
                if (alive_[w]) remove(w, sub_trail);
            explore();
            for (Vertex v : sub_trail) alive_[v] = 1;
            sub_trail.clear();
            current_.pop_back();
            // Leave it out.
            remove(branch, sub_trail);
            explore();
            for (Vertex v : sub_trail) alive_[v] = 1;
        }

        for (Vertex v : trail) alive_[v] = 1;
        current_.resize(taken_before);
    }

    const Graph& g_;
    const VertexSet& comp_;
    std::vector<char> alive_;
    VertexSet current_, best_;
    mutable std::vector<char> assigned_;
};

}  // namespace

MisResult max_independent_set(const Graph& g, int limit) {
    if (g.num_vertices() > limit) throw SizeLimitError(g.num_vertices());
    MisResult result;
    for (const VertexSet& comp : g.connected_components()) {
        MisSearch search(g, comp);
        VertexSet part = search.run();
        result.witness.insert(result.witness.end(), part.begin(), part.end());
    }
    std::sort(result.witness.begin(), result.witness.end());
    result.size = static_cast<int>(result.witness.size());
    return result;
}

namespace {

struct Palette {
    std::vector<int> color_of_index;          // palette index -> color value
    std::vector<std::uint64_t> vertex_masks;  // per vertex admissible set
};

Palette build_palette(const Graph& g, const ColorLists& lists) {
    Palette p;
    std::vector<int> all;
    for (const auto& list : lists) all.insert(all.end(), list.begin(), list.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    if (all.size() > 64) throw std::invalid_argument("more than 64 distinct list colors");
    p.color_of_index = all;
    p.vertex_masks.assign(g.num_vertices(), 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        for (int c : lists[v]) {
            auto it = std::lower_bound(all.begin(), all.end(), c);
            p.vertex_masks[v] |= std::uint64_t{1} << (it - all.begin());
        }
    return p;
}

class ListColorSearch {
public:
    ListColorSearch(const Graph& g, const Palette& palette, std::vector<int>& chosen_index)
        : g_(g), palette_(palette), chosen_(chosen_index) {}

    bool color_component(const VertexSet& comp) {
        comp_ = &comp;
        return assign(0);
    }

private:
    std::uint64_t available(Vertex v) const {
        std::uint64_t mask = palette_.vertex_masks[v];
        for (Vertex w : g_.neighbors(v))
            if (chosen_[w] >= 0) mask &= ~(std::uint64_t{1} << chosen_[w]);
        return mask;
    }

    bool assign(int colored) {
        if (colored == static_cast<int>(comp_->size())) return true;
        // Fewest remaining colors first; ties to the smaller id.
        Vertex pick = -1;
        int pick_count = 65;
        std::uint64_t pick_avail = 0;
        for (Vertex v : *comp_) {
            if (chosen_[v] >= 0) continue;
            std::uint64_t avail = available(v);
            int count = std::popcount(avail);
            if (count == 0) return false;
            if (count < pick_count) {
                pick_count = count;
                pick = v;
                pick_avail = avail;
            }
        }
        for (std::uint64_t bits = pick_avail; bits; bits &= bits - 1) {
            chosen_[pick] = std::countr_zero(bits);
            if (assign(colored + 1)) return true;
        }
        chosen_[pick] = -1;
        return false;
    }

    const Graph& g_;
    const Palette& palette_;
    std::vector<int>& chosen_;
    const VertexSet* comp_ = nullptr;
};

}  // namespace

ListColoringResult list_color(const Graph& g, const ColorLists& lists) {
    if (static_cast<int>(lists.size()) != g.num_vertices())
        throw std::invalid_argument("one color list per vertex required");
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (static_cast<int>(lists[v].size()) < g.degree(v))
            throw std::invalid_argument("list of vertex " + std::to_string(v) +
                                        " is smaller than its degree");
        for (int c : lists[v])
            if (c <= 0) throw std::invalid_argument("colors must be positive");
    }

    Palette palette = build_palette(g, lists);
    std::vector<int> chosen(g.num_vertices(), -1);
    ListColoringResult result;
    for (const VertexSet& comp : g.connected_components()) {
        ListColorSearch search(g, palette, chosen);
        if (!search.color_component(comp)) {
            result.ok = false;
            result.failed_component = comp;
            return result;
        }
    }
    result.ok = true;
    result.colors.resize(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        result.colors[v] = palette.color_of_index[chosen[v]];
    return result;
}

VertexSet extend_solution(const Graph& g, int delta, const Decomposition& dec,
                          std::span<const Vertex> s_residual) {
    VertexSet bcd = dec.residual();
    std::vector<char> in_res(g.num_vertices(), 0), in_s(g.num_vertices(), 0);
    for (Vertex v : bcd) in_res[v] = 1;
    for (Vertex v : s_residual) {
        if (v < 0 || v >= g.num_vertices() || !in_res[v])
            throw std::invalid_argument("residual witness vertex " + std::to_string(v) +
                                        " is not in B|C|D");
        in_s[v] = 1;
    }
    for (Vertex v : s_residual)
        for (Vertex w : g.neighbors(v))
            if (in_s[w])
                throw std::invalid_argument("residual witness is not independent: edge " +
                                            std::to_string(v) + "-" + std::to_string(w));

    VertexSet result(s_residual.begin(), s_residual.end());
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());

    VertexSet a = dec.a();
    if (!a.empty()) {
        auto [sub, map] = g.induced(a);
        ColorLists lists(sub.num_vertices());
        for (Vertex i = 0; i < sub.num_vertices(); ++i) {
            bool restricted = false;
            for (Vertex w : g.neighbors(map[i]))
                if (in_res[w]) {
                    restricted = true;
                    break;
                }
            for (int c = restricted ? 2 : 1; c <= delta; ++c) lists[i].push_back(c);
        }
        ListColoringResult coloring = list_color(sub, lists);
        if (!coloring.ok)
            throw std::logic_error("list coloring failed on a decomposition input");
        long long color1 = 0;
        for (Vertex i = 0; i < sub.num_vertices(); ++i)
            if (coloring.colors[i] == 1) {
                result.push_back(map[i]);
                ++color1;
            }
        if (color1 * delta != static_cast<long long>(a.size()))
            throw std::logic_error("color class 1 does not have size |A|/delta");
    }

    std::sort(result.begin(), result.end());
    std::vector<char> in_result(g.num_vertices(), 0);
    for (Vertex v : result) in_result[v] = 1;
    for (Vertex v : result)
        for (Vertex w : g.neighbors(v))
            if (in_result[w]) throw std::logic_error("extended set is not independent");
    return result;
}

}  // namespace tightpart
