#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "vdw/ap.hpp"
#include "vdw/hypergraph.hpp"

namespace vdw {

/// Lengths (q_1 >= q_2 >= ... >= q_r) defining which progression length is
/// forbidden monochromatic in each color.
struct ColorSpec {
    std::vector<int> lengths;

    ColorSpec() = default;
    explicit ColorSpec(std::vector<int> qs) : lengths(std::move(qs)) {
        if (lengths.empty()) throw std::invalid_argument("ColorSpec: empty length list");
        for (std::size_t i = 0; i < lengths.size(); ++i) {
            if (lengths[i] < 3) throw std::invalid_argument("ColorSpec: lengths must be >= 3");
            if (i > 0 && lengths[i] > lengths[i - 1])
                throw std::invalid_argument("ColorSpec: lengths must be nonincreasing");
        }
    }

    int colors() const { return static_cast<int>(lengths.size()); }
};

/// Vertex -> color index in {1, ..., r}.
struct Coloring {
    std::map<Vertex, int> assignment;

    int at(Vertex v) const {
        auto it = assignment.find(v);
        if (it == assignment.end()) throw std::domain_error("Coloring: vertex unassigned");
        return it->second;
    }
};

enum class Outcome { Colorable, NotColorable, Indeterminate };

inline const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::Colorable: return "colorable";
        case Outcome::NotColorable: return "not_colorable";
        default: return "indeterminate";
    }
}

struct DecisionResult {
    Outcome outcome = Outcome::Indeterminate;
    std::optional<Coloring> coloring;
    std::uint64_t nodes_used = 0;
};

/// Raised when a search budget runs out somewhere no Indeterminate result can
/// be surfaced (e.g. inside critical-core shrinking).
struct budget_exhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FindOptions {
    bool preprocess = true;  // fix q1-AP-free elements to color 1
};

/// Per-color counts of monochromatic q_i-APs inside the ground set.
inline std::vector<std::int64_t> count_monochromatic_aps(const GroundSubset& ground,
                                                         const Coloring& coloring,
                                                         const ColorSpec& spec) {
    for (Vertex v : ground.elements)
        if (!coloring.assignment.count(v))
            throw std::domain_error("count_monochromatic_aps: coloring not total on ground set");

    std::map<int, std::vector<ArithmeticProgression>> by_length;
    for (int q : spec.lengths)
        if (!by_length.count(q)) by_length[q] = aps_in_subset(ground, q);

    std::vector<std::int64_t> counts(static_cast<std::size_t>(spec.colors()), 0);
    for (int i = 0; i < spec.colors(); ++i) {
        const int color = i + 1;
        for (const auto& ap : by_length[spec.lengths[static_cast<std::size_t>(i)]]) {
            bool mono = true;
            for (Vertex v : ap.elements()) {
                if (coloring.at(v) != color) {
                    mono = false;
                    break;
                }
            }
            if (mono) ++counts[static_cast<std::size_t>(i)];
        }
    }
    return counts;
}

namespace detail {

/// One constraint: the listed vertices must not all take `color`.
struct ConstraintEdge {
    std::vector<std::int32_t> verts;
    std::int32_t color;
};

/// Exhaustive backtracking search with unit propagation over not-all-equal
/// constraints. Branches on the undecided vertex of maximal edge degree (ties
/// to the smallest id), colors tried in ascending order. The budget counts
/// decision-node expansions; when it runs out the answer is Indeterminate.
class ColorSearch {
public:
    ColorSearch(std::int32_t num_vertices, std::int32_t num_colors,
                std::vector<ConstraintEdge> edges)
        : nv_(num_vertices), nc_(num_colors), edges_(std::move(edges)) {
        incidence_.assign(static_cast<std::size_t>(nv_), {});
        for (std::size_t e = 0; e < edges_.size(); ++e)
            for (auto v : edges_[e].verts)
                incidence_[static_cast<std::size_t>(v)].push_back(static_cast<std::int32_t>(e));
        degree_.assign(static_cast<std::size_t>(nv_), 0);
        for (std::size_t v = 0; v < degree_.size(); ++v)
            degree_[v] = static_cast<std::int32_t>(incidence_[v].size());
    }

    /// fixes: pre-assigned (vertex, color) pairs, applied before the search.
    Outcome run(const std::vector<std::pair<std::int32_t, std::int32_t>>& fixes,
                std::uint64_t budget, std::uint64_t& nodes_used, std::vector<std::int32_t>& out) {
        const std::uint32_t full = nc_ >= 32 ? ~0u : ((1u << nc_) - 1);
        mask_.assign(static_cast<std::size_t>(nv_), full);
        color_.assign(static_cast<std::size_t>(nv_), 0);
        cnt_same_.assign(edges_.size(), 0);
        cnt_other_.assign(edges_.size(), 0);
        cnt_un_.clear();
        for (const auto& e : edges_) cnt_un_.push_back(static_cast<std::int32_t>(e.verts.size()));
        trail_.clear();
        budget_ = budget;
        nodes_ = 0;

        bool ok = true;
        for (const auto& [v, c] : fixes) {
            if (!propagate(v, c)) {
                ok = false;
                break;
            }
        }
        Outcome res = ok ? dfs() : Outcome::NotColorable;
        nodes_used = nodes_;
        if (res == Outcome::Colorable) {
            out.resize(static_cast<std::size_t>(nv_));
            for (std::int32_t v = 0; v < nv_; ++v)
                out[static_cast<std::size_t>(v)] = color_[static_cast<std::size_t>(v)] == 0
                                                       ? 1
                                                       : color_[static_cast<std::size_t>(v)];
        }
        return res;
    }

private:
    enum class Ev : std::uint8_t { Assign, Mask };
    struct Event {
        Ev kind;
        std::int32_t v;
        std::uint32_t old_mask;
    };

    bool forbid(std::int32_t v, std::int32_t color) {
        const std::uint32_t bit = 1u << (color - 1);
        if (!(mask_[static_cast<std::size_t>(v)] & bit)) return true;
        trail_.push_back({Ev::Mask, v, mask_[static_cast<std::size_t>(v)]});
        mask_[static_cast<std::size_t>(v)] &= ~bit;
        const std::uint32_t m = mask_[static_cast<std::size_t>(v)];
        if (m == 0) return false;
        if (color_[static_cast<std::size_t>(v)] == 0 && std::popcount(m) == 1)
            queue_.push_back({v, static_cast<std::int32_t>(std::countr_zero(m)) + 1});
        return true;
    }

    // The counter loop always runs to completion so that undo_to can reverse
    // every incident edge unconditionally.
    bool assign(std::int32_t v, std::int32_t c) {
        if (color_[static_cast<std::size_t>(v)] != 0)
            return color_[static_cast<std::size_t>(v)] == c;
        if (!(mask_[static_cast<std::size_t>(v)] & (1u << (c - 1)))) return false;
        color_[static_cast<std::size_t>(v)] = c;
        trail_.push_back({Ev::Assign, v, 0});
        bool ok = true;
        for (std::int32_t eid : incidence_[static_cast<std::size_t>(v)]) {
            auto& e = edges_[static_cast<std::size_t>(eid)];
            --cnt_un_[static_cast<std::size_t>(eid)];
            if (e.color == c) {
                ++cnt_same_[static_cast<std::size_t>(eid)];
                if (ok && cnt_other_[static_cast<std::size_t>(eid)] == 0) {
                    if (cnt_un_[static_cast<std::size_t>(eid)] == 0) {
                        ok = false;
                    } else if (cnt_un_[static_cast<std::size_t>(eid)] == 1) {
                        for (std::int32_t u : e.verts) {
                            if (color_[static_cast<std::size_t>(u)] == 0) {
                                if (!forbid(u, e.color)) ok = false;
                                break;
                            }
                        }
                    }
                }
            } else {
                ++cnt_other_[static_cast<std::size_t>(eid)];
            }
        }
        return ok;
    }

    bool propagate(std::int32_t v, std::int32_t c) {
        queue_.clear();
        queue_.push_back({v, c});
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            auto [qv, qc] = queue_[head];
            if (!assign(qv, qc)) return false;
        }
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            const Event ev = trail_.back();
            trail_.pop_back();
            if (ev.kind == Ev::Mask) {
                mask_[static_cast<std::size_t>(ev.v)] = ev.old_mask;
            } else {
                const std::int32_t c = color_[static_cast<std::size_t>(ev.v)];
                for (std::int32_t eid : incidence_[static_cast<std::size_t>(ev.v)]) {
                    auto& e = edges_[static_cast<std::size_t>(eid)];
                    ++cnt_un_[static_cast<std::size_t>(eid)];
                    if (e.color == c)
                        --cnt_same_[static_cast<std::size_t>(eid)];
                    else
                        --cnt_other_[static_cast<std::size_t>(eid)];
                }
                color_[static_cast<std::size_t>(ev.v)] = 0;
            }
        }
    }

    std::int32_t pick_vertex() const {
        std::int32_t best = -1;
        for (std::int32_t v = 0; v < nv_; ++v) {
            if (color_[static_cast<std::size_t>(v)] != 0) continue;
            if (best < 0 || degree_[static_cast<std::size_t>(v)] > degree_[static_cast<std::size_t>(best)])
                best = v;
        }
        return best;
    }

    Outcome dfs() {
        const std::int32_t v = pick_vertex();
        if (v < 0) return Outcome::Colorable;
        if (nodes_ >= budget_) return Outcome::Indeterminate;
        ++nodes_;
        const std::uint32_t m = mask_[static_cast<std::size_t>(v)];
        for (std::int32_t c = 1; c <= nc_; ++c) {
            if (!(m & (1u << (c - 1)))) continue;
            const std::size_t mark = trail_.size();
            if (propagate(v, c)) {
                const Outcome r = dfs();
                if (r == Outcome::Colorable) return r;
                undo_to(mark);
                if (r == Outcome::Indeterminate) return r;
            } else {
                undo_to(mark);
            }
        }
        return Outcome::NotColorable;
    }

    std::int32_t nv_, nc_;
    std::vector<ConstraintEdge> edges_;
    std::vector<std::vector<std::int32_t>> incidence_;
    std::vector<std::int32_t> degree_;
    std::vector<std::uint32_t> mask_;
    std::vector<std::int32_t> color_;
    std::vector<std::int32_t> cnt_same_, cnt_other_, cnt_un_;
    std::vector<Event> trail_;
    std::vector<std::pair<std::int32_t, std::int32_t>> queue_;
    std::uint64_t budget_ = 0, nodes_ = 0;
};

/// Instance over concrete vertices: constraint edges on Vertex ids plus
/// pre-fixed assignments. Solved component by component.
struct Instance {
    std::vector<Vertex> vertices;                               // sorted ascending
    std::vector<std::pair<std::vector<Vertex>, int>> edges;     // (members, forbidden color)
    std::vector<std::pair<Vertex, int>> fixes;
    int colors = 2;
};

inline DecisionResult solve_instance(const Instance& inst, std::uint64_t budget) {
    if (budget == 0) throw std::domain_error("solve_instance: budget must be positive");

    std::map<Vertex, std::int32_t> id;
    for (std::size_t i = 0; i < inst.vertices.size(); ++i)
        id[inst.vertices[i]] = static_cast<std::int32_t>(i);
    const std::int32_t nv = static_cast<std::int32_t>(inst.vertices.size());

    // Connected components over constraint edges.
    std::vector<std::int32_t> parent(static_cast<std::size_t>(nv));
    for (std::int32_t v = 0; v < nv; ++v) parent[static_cast<std::size_t>(v)] = v;
    std::function<std::int32_t(std::int32_t)> find = [&](std::int32_t v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (const auto& [members, color] : inst.edges)
        for (std::size_t i = 1; i < members.size(); ++i) {
            auto a = find(id.at(members[0])), b = find(id.at(members[i]));
            if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }

    std::map<std::int32_t, std::vector<std::int32_t>> comp_verts;
    for (std::int32_t v = 0; v < nv; ++v) comp_verts[find(v)].push_back(v);
    std::map<std::int32_t, std::vector<std::size_t>> comp_edges;
    for (std::size_t e = 0; e < inst.edges.size(); ++e)
        comp_edges[find(id.at(inst.edges[e].first[0]))].push_back(e);
    std::map<std::int32_t, std::vector<std::pair<std::int32_t, std::int32_t>>> comp_fixes;
    for (const auto& [v, c] : inst.fixes) comp_fixes[find(id.at(v))].push_back({id.at(v), c});

    DecisionResult result;
    result.outcome = Outcome::Colorable;
    Coloring coloring;
    std::uint64_t used_total = 0;

    for (auto& [root, verts] : comp_verts) {
        std::map<std::int32_t, std::int32_t> local;
        for (std::size_t i = 0; i < verts.size(); ++i)
            local[verts[i]] = static_cast<std::int32_t>(i);

        std::vector<ConstraintEdge> ledges;
        for (std::size_t e : comp_edges[root]) {
            ConstraintEdge ce;
            ce.color = inst.edges[e].second;
            for (Vertex v : inst.edges[e].first) ce.verts.push_back(local.at(id.at(v)));
            ledges.push_back(std::move(ce));
        }
        std::vector<std::pair<std::int32_t, std::int32_t>> lfixes;
        for (auto [v, c] : comp_fixes[root]) lfixes.push_back({local.at(v), c});

        ColorSearch search(static_cast<std::int32_t>(verts.size()),
                           static_cast<std::int32_t>(inst.colors), std::move(ledges));
        std::uint64_t used = 0;
        std::vector<std::int32_t> colors;
        const std::uint64_t remaining = budget > used_total ? budget - used_total : 1;
        const Outcome o = search.run(lfixes, remaining, used, colors);
        used_total += used;
        if (o == Outcome::NotColorable) {
            result.outcome = Outcome::NotColorable;
            result.coloring.reset();
            result.nodes_used = used_total;
            return result;
        }
        if (o == Outcome::Indeterminate) {
            result.outcome = Outcome::Indeterminate;
            continue;
        }
        if (result.outcome == Outcome::Colorable)
            for (std::size_t i = 0; i < verts.size(); ++i)
                coloring.assignment[inst.vertices[static_cast<std::size_t>(verts[i])]] =
                    colors[i];
    }
    result.nodes_used = used_total;
    if (result.outcome == Outcome::Colorable) result.coloring = std::move(coloring);
    return result;
}

}  // namespace detail

/// Decide proper colorability of an explicit hypergraph: for each color i,
/// no edge of length spec.lengths[i] may be monochromatic in color i. The
/// coloring domain is the set of incident vertices. The q1-free preprocessing
/// rule (vertices in no length-q1 edge are pinned to color 1) is sound here
/// because color 1 is constrained only on q1-edges.
inline DecisionResult decide_hypergraph(const APHypergraph& h, const ColorSpec& spec,
                                        std::uint64_t budget, FindOptions opts = {}) {
    if (budget == 0) throw std::domain_error("decide_hypergraph: budget must be positive");
    detail::Instance inst;
    inst.colors = spec.colors();
    inst.vertices = h.incident_vertices();

    auto edges_of_length = [&](int q) {
        std::vector<const ArithmeticProgression*> out;
        if (q == h.q_long())
            for (const auto& e : h.long_edges()) out.push_back(&e);
        if (q == h.q_short())
            for (const auto& e : h.short_edges()) out.push_back(&e);
        return out;
    };

    for (int i = 0; i < spec.colors(); ++i)
        for (const auto* e : edges_of_length(spec.lengths[static_cast<std::size_t>(i)]))
            inst.edges.push_back({e->elements(), i + 1});

    if (opts.preprocess) {
        const int q1 = spec.lengths[0];
        std::set<Vertex> in_q1;
        for (const auto* e : edges_of_length(q1))
            for (Vertex v : e->elements()) in_q1.insert(v);
        for (Vertex v : inst.vertices)
            if (!in_q1.count(v)) inst.fixes.push_back({v, 1});
    }

    DecisionResult res = detail::solve_instance(inst, budget);
    if (res.outcome == Outcome::Colorable) {
        for (const auto& [members, color] : inst.edges) {
            bool mono = true;
            for (Vertex v : members)
                if (res.coloring->at(v) != color) { mono = false; break; }
            if (mono) throw std::logic_error("decide_hypergraph: unsound witness");
        }
    }
    return res;
}

/// Exact decision of [subset] -> (q_1, ..., q_r): is there a coloring with no
/// q_i-AP monochromatic in color i? Elements in no q_1-AP of the subset are
/// fixed to color 1 before the search. NotColorable is returned only after
/// exhaustive refutation; a drained budget yields Indeterminate.
inline DecisionResult find_proper_coloring(const GroundSubset& subset, const ColorSpec& spec,
                                           std::uint64_t budget, FindOptions opts = {}) {
    if (budget == 0) throw std::domain_error("find_proper_coloring: budget must be positive");
    detail::Instance inst;
    inst.colors = spec.colors();
    inst.vertices = subset.elements;

    std::map<int, std::vector<ArithmeticProgression>> by_length;
    for (int q : spec.lengths)
        if (!by_length.count(q)) by_length[q] = aps_in_subset(subset, q);

    for (int i = 0; i < spec.colors(); ++i)
        for (const auto& ap : by_length[spec.lengths[static_cast<std::size_t>(i)]])
            inst.edges.push_back({ap.elements(), i + 1});

    if (opts.preprocess) {
        std::set<Vertex> in_q1;
        for (const auto& ap : by_length[spec.lengths[0]])
            for (Vertex v : ap.elements()) in_q1.insert(v);
        for (Vertex v : inst.vertices)
            if (!in_q1.count(v)) inst.fixes.push_back({v, 1});
    }

    DecisionResult res = detail::solve_instance(inst, budget);
    if (res.outcome == Outcome::Colorable) {
        const auto counts = count_monochromatic_aps(subset, *res.coloring, spec);
        for (auto c : counts)
            if (c != 0) throw std::logic_error("find_proper_coloring: unsound witness");
    }
    return res;
}

/// Red/blue decision for a two-length hypergraph: no long edge all red, no
/// short edge all blue. Color 1 is red, color 2 is blue.
inline DecisionResult asym_2_colorable(const APHypergraph& h, std::uint64_t budget) {
    if (!h.two_length())
        throw std::invalid_argument("asym_2_colorable: hypergraph must declare two length classes");
    return decide_hypergraph(h, ColorSpec({h.q_long(), h.q_short()}), budget);
}

/// Shrink a non-colorable hypergraph to an edge-critical core: still not
/// colorable, but dropping any single edge makes it colorable. Edges are tried
/// in removal order (long edges first, lexicographic), restarting after every
/// successful removal; both criticality facts are re-verified before return.
inline APHypergraph extract_edge_critical(const APHypergraph& h, const ColorSpec& spec,
                                          std::uint64_t budget) {
    auto decide = [&](const APHypergraph& g) {
        const DecisionResult r = decide_hypergraph(g, spec, budget);
        if (r.outcome == Outcome::Indeterminate)
            throw budget_exhausted("extract_edge_critical: budget exhausted while shrinking");
        return r.outcome;
    };

    if (decide(h) == Outcome::Colorable)
        throw std::logic_error("extract_edge_critical: input is colorable");

    APHypergraph core = h;
    bool removed = true;
    while (removed) {
        removed = false;
        std::vector<EdgeRef> order;
        for (std::size_t i = 0; i < core.long_edges().size(); ++i)
            order.push_back({EdgeClass::Long, static_cast<std::int32_t>(i)});
        for (std::size_t i = 0; i < core.short_edges().size(); ++i)
            order.push_back({EdgeClass::Short, static_cast<std::int32_t>(i)});
        for (EdgeRef r : order) {
            APHypergraph test = core.without_edges({r});
            if (decide(test) == Outcome::NotColorable) {
                core = std::move(test);
                removed = true;
                break;
            }
        }
    }

    if (decide(core) != Outcome::NotColorable)
        throw std::logic_error("extract_edge_critical: core lost non-colorability");
    for (std::size_t i = 0; i < core.long_edges().size(); ++i)
        if (decide(core.without_edges({{EdgeClass::Long, static_cast<std::int32_t>(i)}})) !=
            Outcome::Colorable)
            throw std::logic_error("extract_edge_critical: core not edge-critical");
    for (std::size_t i = 0; i < core.short_edges().size(); ++i)
        if (decide(core.without_edges({{EdgeClass::Short, static_cast<std::int32_t>(i)}})) !=
            Outcome::Colorable)
            throw std::logic_error("extract_edge_critical: core not edge-critical");
    return core;
}

/// Minimum over all r-colorings of [n] of the total monochromatic q-AP count.
/// Guarded by an explicit enumeration cap on r^n.
inline std::int64_t min_mono_count_over_colorings(Vertex n, int r, int q) {
    detail::check_ap_args(n, q);
    if (r < 1) throw std::invalid_argument("min_mono_count_over_colorings: r must be >= 1");
    constexpr std::uint64_t kCap = 1ull << 24;
    std::uint64_t total = 1;
    for (Vertex i = 0; i < n; ++i) {
        total *= static_cast<std::uint64_t>(r);
        if (total > kCap)
            throw std::domain_error("min_mono_count_over_colorings: enumeration cap exceeded");
    }

    const auto aps = enumerate_aps(n, q);
    std::vector<int> color(static_cast<std::size_t>(n), 0);  // 0-based colors here
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::uint64_t it = 0; it < total; ++it) {
        std::int64_t mono = 0;
        for (const auto& ap : aps) {
            const int c0 = color[static_cast<std::size_t>(ap.first - 1)];
            bool same = true;
            for (int i = 1; i < ap.length; ++i) {
                if (color[static_cast<std::size_t>(ap.element(i) - 1)] != c0) {
                    same = false;
                    break;
                }
            }
            if (same) ++mono;
        }
        best = std::min(best, mono);
        if (best == 0) return 0;
        for (std::size_t d = 0; d < color.size(); ++d) {
            if (++color[d] < r) break;
            color[d] = 0;
        }
    }
    return best;
}

}  // namespace vdw
