#pragma once

// Symmetric 2-blocking structures: the witness family certifying that a
// q-uniform AP hypergraph is not 2-colorable, plus detection, censuses, and
// constructive extraction from non-colorable hypergraphs.

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <variant>
#include <vector>

#include "vdw/ap.hpp"
#include "vdw/colorability.hpp"
#include "vdw/hypergraph.hpp"

namespace vdw {

/// Edges E_1,...,E_l with |E_i ∩ E_j| = 1 exactly when |i-j| = 1 and 0
/// otherwise.
struct SimplePathSym {
    std::vector<EdgeRef> edges;
};

/// A simple path of length >= 2 closed by an edge meeting E_1 in one vertex,
/// the interior in none, and E_l in s >= 1 vertices, with empty triple
/// intersection. Special when s >= 2.
struct SpecialCycleCert {
    SimplePathSym path;
    EdgeRef closing;
    int s = 0;
};

/// A simple cycle (s = 1) together with a handle edge meeting the cycle in at
/// least two but fewer than all of its vertices.
struct CycleWithHandleCert {
    SimplePathSym path;
    EdgeRef closing;
    EdgeRef handle;
};

/// A simple path together with an edge of the host lying inside V(P) without
/// being a path edge.
struct SpoiledPathCert {
    SimplePathSym path;
    EdgeRef spoiler;
};

/// Four 3-edges on six vertices, every vertex in exactly two of them.
struct ReducedFanoCert {
    std::array<EdgeRef, 4> edges;
};

using BlockingCertificateSym =
    std::variant<SpecialCycleCert, CycleWithHandleCert, SpoiledPathCert, ReducedFanoCert>;

inline const char* certificate_kind(const BlockingCertificateSym& cert) {
    switch (cert.index()) {
        case 0: return "special_cycle";
        case 1: return "cycle_with_handle";
        case 2: return "spoiled_path";
        default: return "reduced_fano";
    }
}

// ---------------------------------------------------------------------------
// Structural predicates over raw element sets (host-independent).
// ---------------------------------------------------------------------------
namespace shape {

using EdgeSet = std::vector<Vertex>;  // sorted, distinct

inline int inter_size(const EdgeSet& a, const EdgeSet& b) {
    int k = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++k; ++i; ++j; }
    }
    return k;
}

inline EdgeSet union_of(const std::vector<EdgeSet>& sets) {
    std::set<Vertex> u;
    for (const auto& s : sets) u.insert(s.begin(), s.end());
    return {u.begin(), u.end()};
}

inline bool is_simple_path(const std::vector<EdgeSet>& edges) {
    if (edges.empty()) return false;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const int want = j == i + 1 ? 1 : 0;
            if (inter_size(edges[i], edges[j]) != want) return false;
        }
    return true;
}

/// Fairly simple cycle pattern; on success *s_out holds |E_0 ∩ E_l|.
inline bool is_fairly_simple_cycle(const EdgeSet& closing, const std::vector<EdgeSet>& path,
                                   int* s_out = nullptr) {
    if (path.size() < 2 || !is_simple_path(path)) return false;
    if (inter_size(closing, path.front()) != 1) return false;
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (inter_size(closing, path[i]) != 0) return false;
    const int s = inter_size(closing, path.back());
    if (s < 1) return false;
    for (Vertex v : closing)
        if (std::binary_search(path.front().begin(), path.front().end(), v) &&
            std::binary_search(path.back().begin(), path.back().end(), v))
            return false;  // E_0 ∩ E_1 ∩ E_l must be empty
    if (s_out) *s_out = s;
    return true;
}

inline bool is_handle(const EdgeSet& handle, const EdgeSet& cycle_vertices) {
    int t = 0;
    for (Vertex v : handle)
        if (std::binary_search(cycle_vertices.begin(), cycle_vertices.end(), v)) ++t;
    return t >= 2 && t < static_cast<int>(handle.size());
}

/// 3-uniform, 2-regular, six vertices, four distinct edges.
inline bool is_reduced_fano(const std::array<EdgeSet, 4>& quad) {
    std::map<Vertex, int> deg;
    for (const auto& e : quad) {
        if (e.size() != 3) return false;
        for (Vertex v : e) ++deg[v];
    }
    if (deg.size() != 6) return false;
    for (const auto& [v, d] : deg)
        if (d != 2) return false;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (inter_size(quad[i], quad[j]) > 1) return false;
    return true;
}

}  // namespace shape

namespace detail_sym {

inline shape::EdgeSet edge_set(const APHypergraph& h, EdgeRef r) { return h.edge(r).elements(); }

inline std::vector<shape::EdgeSet> edge_sets(const APHypergraph& h,
                                             const std::vector<EdgeRef>& refs) {
    std::vector<shape::EdgeSet> out;
    out.reserve(refs.size());
    for (EdgeRef r : refs) out.push_back(edge_set(h, r));
    return out;
}

}  // namespace detail_sym

/// Full definitional check of a certificate against its host. Dangling edge
/// references raise std::domain_error.
inline bool verify_certificate_sym(const BlockingCertificateSym& cert, const APHypergraph& h) {
    using namespace detail_sym;
    if (const auto* c = std::get_if<SpecialCycleCert>(&cert)) {
        int s = 0;
        if (!shape::is_fairly_simple_cycle(edge_set(h, c->closing),
                                           edge_sets(h, c->path.edges), &s))
            return false;
        return s >= 2 && s == c->s;
    }
    if (const auto* c = std::get_if<CycleWithHandleCert>(&cert)) {
        int s = 0;
        const auto path_sets = edge_sets(h, c->path.edges);
        if (!shape::is_fairly_simple_cycle(edge_set(h, c->closing), path_sets, &s) || s != 1)
            return false;
        auto all = path_sets;
        all.push_back(edge_set(h, c->closing));
        for (EdgeRef r : c->path.edges)
            if (r == c->handle) return false;
        if (c->handle == c->closing) return false;
        return shape::is_handle(edge_set(h, c->handle), shape::union_of(all));
    }
    if (const auto* c = std::get_if<SpoiledPathCert>(&cert)) {
        const auto path_sets = edge_sets(h, c->path.edges);
        if (!shape::is_simple_path(path_sets)) return false;
        for (EdgeRef r : c->path.edges)
            if (r == c->spoiler) return false;
        const auto vp = shape::union_of(path_sets);
        for (Vertex v : edge_set(h, c->spoiler))
            if (!std::binary_search(vp.begin(), vp.end(), v)) return false;
        return true;
    }
    const auto& f = std::get<ReducedFanoCert>(cert);
    std::array<shape::EdgeSet, 4> quad;
    for (std::size_t i = 0; i < 4; ++i) quad[i] = edge_set(h, f.edges[i]);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (f.edges[i] == f.edges[j]) return false;
    return shape::is_reduced_fano(quad);
}

namespace detail_sym {

inline std::int64_t det3(const std::array<std::array<std::int64_t, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Enumerate reduced Fano copies through linear systems: fix a base edge
/// (x1,x2,x3); each remaining vertex pair forms a 3-AP with one base vertex,
/// giving 27 coefficient matrices per base-vertex permutation. Invertibility
/// (det = acf + bde != 0) pins the other three vertices. `emit` returns false
/// to stop early.
template <typename Emit>
void scan_reduced_fanos(const APHypergraph& h, Emit emit) {
    if (h.q_long() != 3) return;
    // Row forms for "v, p, q collinear in a 3-AP": v = 2p - q, v = 2q - p, 2v = p + q.
    static constexpr std::array<std::array<std::int64_t, 3>, 3> kRow = {{
        {2, -1, 1},  // coefficients of (p, q, v-multiplier)
        {-1, 2, 1},
        {1, 1, 2},
    }};
    std::set<std::array<EdgeRef, 4>> seen;
    const auto& edges = h.long_edges();
    for (std::size_t base = 0; base < edges.size(); ++base) {
        const auto be = edges[base].elements();
        std::array<int, 3> perm = {0, 1, 2};
        std::sort(perm.begin(), perm.end());
        do {
            const std::int64_t v1 = be[static_cast<std::size_t>(perm[0])];
            const std::int64_t v2 = be[static_cast<std::size_t>(perm[1])];
            const std::int64_t v3 = be[static_cast<std::size_t>(perm[2])];
            for (const auto& r1 : kRow)
                for (const auto& r2 : kRow)
                    for (const auto& r3 : kRow) {
                        // Unknowns (x4, x5, x6); rows pair (x4,x5)-v1,
                        // (x5,x6)-v2, (x4,x6)-v3.
                        const std::array<std::array<std::int64_t, 3>, 3> A = {{
                            {r1[0], r1[1], 0},
                            {0, r2[0], r2[1]},
                            {r3[0], 0, r3[1]},
                        }};
                        const std::array<std::int64_t, 3> rhs = {r1[2] * v1, r2[2] * v2,
                                                                 r3[2] * v3};
                        const std::int64_t d = det3(A);
                        if (d == 0) continue;
                        std::array<std::int64_t, 3> x{};
                        bool integral = true;
                        for (int col = 0; col < 3 && integral; ++col) {
                            auto M = A;
                            for (int row = 0; row < 3; ++row)
                                M[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
                                    rhs[static_cast<std::size_t>(row)];
                            const std::int64_t num = det3(M);
                            if (num % d != 0) { integral = false; break; }
                            x[static_cast<std::size_t>(col)] = num / d;
                        }
                        if (!integral) continue;
                        const std::int64_t x4 = x[0], x5 = x[1], x6 = x[2];
                        if (x4 < 1 || x4 > h.n() || x5 < 1 || x5 > h.n() || x6 < 1 ||
                            x6 > h.n())
                            continue;
                        std::set<Vertex> six = {v1, v2, v3, x4, x5, x6};
                        if (six.size() != 6) continue;
                        std::array<std::optional<ArithmeticProgression>, 3> aps = {
                            ap_from_elements({v1, x4, x5}),
                            ap_from_elements({v2, x5, x6}),
                            ap_from_elements({v3, x4, x6}),
                        };
                        std::array<EdgeRef, 4> quad;
                        quad[0] = {EdgeClass::Long, static_cast<std::int32_t>(base)};
                        bool ok = true;
                        for (int i = 0; i < 3 && ok; ++i) {
                            if (!aps[static_cast<std::size_t>(i)]) { ok = false; break; }
                            const auto ref = h.find_edge(*aps[static_cast<std::size_t>(i)]);
                            if (!ref) { ok = false; break; }
                            quad[static_cast<std::size_t>(i) + 1] = *ref;
                        }
                        if (!ok) continue;
                        auto sorted = quad;
                        std::sort(sorted.begin(), sorted.end());
                        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                            continue;
                        std::array<shape::EdgeSet, 4> sets;
                        for (std::size_t i = 0; i < 4; ++i) sets[i] = h.edge(sorted[i]).elements();
                        if (!shape::is_reduced_fano(sets)) continue;
                        if (!seen.insert(sorted).second) continue;
                        if (!emit(sorted)) return;
                    }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

/// DFS over simple-path edge sequences in a single-length hypergraph.
/// `visit(path_indices, path_sets)` is called for every sequence of length
/// >= 1 (all orders enumerated); returning false stops the walk.
template <typename Visit>
bool walk_simple_paths(const APHypergraph& h, int max_len, Visit visit) {
    const auto& edges = h.long_edges();
    const std::size_t m = edges.size();
    std::vector<shape::EdgeSet> sets;
    sets.reserve(m);
    for (const auto& e : edges) sets.push_back(e.elements());

    std::vector<int> path;
    std::vector<shape::EdgeSet> path_sets;
    std::vector<char> used(m, 0);

    std::function<bool(void)> dfs = [&]() -> bool {
        if (!visit(path, path_sets)) return false;
        if (static_cast<int>(path.size()) >= max_len) return true;
        for (std::size_t next = 0; next < m; ++next) {
            if (used[next]) continue;
            bool ok = shape::inter_size(sets[next], path_sets.back()) == 1;
            for (std::size_t i = 0; ok && i + 1 < path_sets.size(); ++i)
                ok = shape::inter_size(sets[next], path_sets[i]) == 0;
            if (!ok) continue;
            used[next] = 1;
            path.push_back(static_cast<int>(next));
            path_sets.push_back(sets[next]);
            const bool cont = dfs();
            path.pop_back();
            path_sets.pop_back();
            used[next] = 0;
            if (!cont) return false;
        }
        return true;
    };

    for (std::size_t start = 0; start < m && max_len >= 1; ++start) {
        used[start] = 1;
        path.assign(1, static_cast<int>(start));
        path_sets.assign(1, sets[start]);
        const bool cont = dfs();
        used[start] = 0;
        if (!cont) return false;
    }
    return true;
}

inline std::vector<EdgeRef> to_refs(const std::vector<int>& idx) {
    std::vector<EdgeRef> out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back({EdgeClass::Long, static_cast<std::int32_t>(i)});
    return out;
}

/// Rewrite a certificate's edge references from a subhypergraph into the host
/// that contains the same edges.
inline BlockingCertificateSym remap_certificate(const BlockingCertificateSym& cert,
                                                const APHypergraph& from,
                                                const APHypergraph& to) {
    auto remap = [&](EdgeRef r) {
        const auto ref = to.find_edge(from.edge(r));
        if (!ref) throw std::logic_error("remap_certificate: edge missing from host");
        return *ref;
    };
    auto remap_path = [&](const SimplePathSym& p) {
        SimplePathSym out;
        for (EdgeRef r : p.edges) out.edges.push_back(remap(r));
        return out;
    };
    if (const auto* c = std::get_if<SpecialCycleCert>(&cert))
        return SpecialCycleCert{remap_path(c->path), remap(c->closing), c->s};
    if (const auto* c = std::get_if<CycleWithHandleCert>(&cert))
        return CycleWithHandleCert{remap_path(c->path), remap(c->closing), remap(c->handle)};
    if (const auto* c = std::get_if<SpoiledPathCert>(&cert))
        return SpoiledPathCert{remap_path(c->path), remap(c->spoiler)};
    const auto& f = std::get<ReducedFanoCert>(cert);
    return ReducedFanoCert{{remap(f.edges[0]), remap(f.edges[1]), remap(f.edges[2]),
                            remap(f.edges[3])}};
}

}  // namespace detail_sym

/// Default census/search cutoff mirroring the analyzed regime: ceil(10 ln n).
inline int default_max_path_len(Vertex n) {
    const double bound = 10.0 * std::log(static_cast<double>(std::max<Vertex>(n, 2)));
    return std::max(1, static_cast<int>(std::ceil(bound)));
}

/// Bounded-exhaustive search for any symmetric 2-blocking structure with path
/// part of length <= max_path_len. Scan order: reduced Fano copies first
/// (q = 3), then along the path DFS: spoiling edges, special cycles, simple
/// cycles with handles. The first hit is verified and returned.
inline std::optional<BlockingCertificateSym> detect_blocking_sym(const APHypergraph& h,
                                                                 int max_path_len) {
    if (h.two_length())
        throw std::invalid_argument("detect_blocking_sym: expected single-length hypergraph");
    std::optional<BlockingCertificateSym> found;

    detail_sym::scan_reduced_fanos(h, [&](const std::array<EdgeRef, 4>& quad) {
        found = ReducedFanoCert{quad};
        return false;
    });

    const auto& edges = h.long_edges();
    const std::size_t m = edges.size();
    std::vector<shape::EdgeSet> sets;
    for (const auto& e : edges) sets.push_back(e.elements());

    if (!found) {
        detail_sym::walk_simple_paths(h, max_path_len, [&](const std::vector<int>& path,
                                                           const std::vector<shape::EdgeSet>&
                                                               path_sets) {
            if (path.size() < 2) return true;
            const auto vp = shape::union_of(path_sets);
            std::vector<char> in_path(m, 0);
            for (int i : path) in_path[static_cast<std::size_t>(i)] = 1;

            // Spoiling edges: e subset of V(P), e not a path edge.
            for (std::size_t e = 0; e < m; ++e) {
                if (in_path[e]) continue;
                bool inside = true;
                for (Vertex v : sets[e])
                    if (!std::binary_search(vp.begin(), vp.end(), v)) { inside = false; break; }
                if (inside) {
                    found = SpoiledPathCert{{detail_sym::to_refs(path)},
                                            {EdgeClass::Long, static_cast<std::int32_t>(e)}};
                    return false;
                }
            }
            // Cycles closed by an off-path edge.
            for (std::size_t e = 0; e < m; ++e) {
                if (in_path[e]) continue;
                int s = 0;
                if (!shape::is_fairly_simple_cycle(sets[e], path_sets, &s)) continue;
                if (s >= 2) {
                    found = SpecialCycleCert{{detail_sym::to_refs(path)},
                                             {EdgeClass::Long, static_cast<std::int32_t>(e)},
                                             s};
                    return false;
                }
                auto all = path_sets;
                all.push_back(sets[e]);
                const auto vc = shape::union_of(all);
                for (std::size_t f = 0; f < m; ++f) {
                    if (in_path[f] || f == e) continue;
                    if (shape::is_handle(sets[f], vc)) {
                        found = CycleWithHandleCert{{detail_sym::to_refs(path)},
                                                    {EdgeClass::Long, static_cast<std::int32_t>(e)},
                                                    {EdgeClass::Long, static_cast<std::int32_t>(f)}};
                        return false;
                    }
                }
            }
            return true;
        });
    }

    if (found && !verify_certificate_sym(*found, h))
        throw std::logic_error("detect_blocking_sym: detected certificate failed verification");
    return found;
}

/// Counts of the census observables with path part bounded by max_len. Paths
/// and simple cycles are counted up to reversal; special cycles have a forced
/// orientation; spoiled paths count paths admitting at least one spoiling
/// edge, and cycles-with-handle count cycles admitting at least one handle.
struct CensusSym {
    std::map<int, std::int64_t> simple_paths_by_length;
    std::int64_t special_cycles = 0;
    std::int64_t cycles_with_handle = 0;
    std::int64_t spoiled_paths = 0;
    std::int64_t reduced_fano = 0;
};

inline CensusSym census_sym(const APHypergraph& h, int max_len) {
    if (h.two_length())
        throw std::invalid_argument("census_sym: expected single-length hypergraph");
    CensusSym out;
    detail_sym::scan_reduced_fanos(h, [&](const std::array<EdgeRef, 4>&) {
        ++out.reduced_fano;
        return true;
    });

    const auto& edges = h.long_edges();
    const std::size_t m = edges.size();
    std::vector<shape::EdgeSet> sets;
    for (const auto& e : edges) sets.push_back(e.elements());

    detail_sym::walk_simple_paths(h, max_len, [&](const std::vector<int>& path,
                                                  const std::vector<shape::EdgeSet>& path_sets) {
        const bool canonical =
            path.size() == 1 ||
            std::lexicographical_compare(path.begin(), path.end(), path.rbegin(), path.rend());
        if (canonical) {
            ++out.simple_paths_by_length[static_cast<int>(path.size())];
            if (path.size() >= 2) {
                const auto vp = shape::union_of(path_sets);
                std::vector<char> in_path(m, 0);
                for (int i : path) in_path[static_cast<std::size_t>(i)] = 1;
                for (std::size_t e = 0; e < m; ++e) {
                    if (in_path[e]) continue;
                    bool inside = true;
                    for (Vertex v : sets[e])
                        if (!std::binary_search(vp.begin(), vp.end(), v)) {
                            inside = false;
                            break;
                        }
                    if (inside) {
                        ++out.spoiled_paths;
                        break;
                    }
                }
            }
        }
        if (path.size() >= 2) {
            std::vector<char> in_path(m, 0);
            for (int i : path) in_path[static_cast<std::size_t>(i)] = 1;
            for (std::size_t e = 0; e < m; ++e) {
                if (in_path[e]) continue;
                int s = 0;
                if (!shape::is_fairly_simple_cycle(sets[e], path_sets, &s)) continue;
                if (s >= 2) {
                    ++out.special_cycles;  // orientation forced: counted once
                    continue;
                }
                // Simple cycle: count canonically (both orientations close).
                if (!std::lexicographical_compare(path.begin(), path.end(), path.rbegin(),
                                                  path.rend()))
                    continue;
                auto all = path_sets;
                all.push_back(sets[e]);
                const auto vc = shape::union_of(all);
                for (std::size_t f = 0; f < m; ++f) {
                    if (in_path[f] || f == e) continue;
                    if (shape::is_handle(sets[f], vc)) {
                        ++out.cycles_with_handle;
                        break;
                    }
                }
            }
        }
        return true;
    });
    return out;
}

namespace detail_sym {

/// Longest simple path found within a node budget; first-found among the
/// longest (DFS visits sequences in lexicographic edge order). Second member
/// reports whether the search ran to exhaustion.
inline std::pair<std::vector<int>, bool> longest_simple_path(const APHypergraph& h,
                                                             std::uint64_t node_budget,
                                                             int max_len) {
    std::vector<int> best;
    std::uint64_t nodes = 0;
    const bool completed =
        walk_simple_paths(h, max_len, [&](const std::vector<int>& path,
                                          const std::vector<shape::EdgeSet>&) {
            if (path.size() > best.size()) best = path;
            return ++nodes < node_budget;
        });
    return {best, completed};
}

inline std::optional<BlockingCertificateSym> make_special_cycle(
    const APHypergraph& h, const std::vector<int>& path_idx, int closing, int s) {
    SpecialCycleCert cert{{to_refs(path_idx)}, {EdgeClass::Long, static_cast<std::int32_t>(closing)}, s};
    BlockingCertificateSym c = cert;
    if (verify_certificate_sym(c, h)) return c;
    return std::nullopt;
}

inline std::optional<BlockingCertificateSym> make_handle_cycle(const APHypergraph& h,
                                                               const std::vector<int>& path_idx,
                                                               int closing, int handle) {
    CycleWithHandleCert cert{{to_refs(path_idx)},
                             {EdgeClass::Long, static_cast<std::int32_t>(closing)},
                             {EdgeClass::Long, static_cast<std::int32_t>(handle)}};
    BlockingCertificateSym c = cert;
    if (verify_certificate_sym(c, h)) return c;
    return std::nullopt;
}

/// Case analysis on a longest simple path of an edge-critical core. In such
/// a core every (edge, vertex) pair has a one-point partner edge, and chasing
/// the partners of two private vertices of E_1 lands in one of the blocking
/// shapes. Returns nothing when the path was not maximal or an unexpected
/// configuration appears; callers then retry or fall back to exhaustive
/// detection.
inline std::optional<BlockingCertificateSym> case_analysis_sym(const APHypergraph& core,
                                                               const std::vector<int>& path) {
    if (path.size() < 2) return std::nullopt;
    const auto& edges = core.long_edges();
    const int q = core.q_long();
    std::vector<shape::EdgeSet> sets;
    for (const auto& e : edges) sets.push_back(e.elements());
    std::vector<shape::EdgeSet> path_sets;
    for (int i : path) path_sets.push_back(sets[static_cast<std::size_t>(i)]);
    const auto vp = shape::union_of(path_sets);
    std::vector<char> in_path(edges.size(), 0);
    for (int i : path) in_path[static_cast<std::size_t>(i)] = 1;

    // Two vertices of E_1 in no other path edge, and their one-point cover
    // edges (lex-least), guaranteed by edge-criticality.
    std::vector<Vertex> only_e1;
    for (Vertex v : path_sets[0])
        if (!std::binary_search(path_sets[1].begin(), path_sets[1].end(), v))
            only_e1.push_back(v);
    if (only_e1.size() < 2) return std::nullopt;

    auto cover_edge_at = [&](Vertex v) -> int {
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (in_path[e]) continue;
            if (shape::inter_size(sets[e], path_sets[0]) == 1 &&
                std::binary_search(sets[e].begin(), sets[e].end(), v))
                return static_cast<int>(e);
        }
        return -1;
    };

    const Vertex x = only_e1[0], y = only_e1[1];
    const int ex = cover_edge_at(x), ey = cover_edge_at(y);
    if (ex < 0 || ey < 0) return std::nullopt;

    auto overlap_with_vp = [&](int e) {
        int t = 0;
        for (Vertex v : sets[static_cast<std::size_t>(e)])
            if (std::binary_search(vp.begin(), vp.end(), v)) ++t;
        return t;
    };
    const int hx = overlap_with_vp(ex), hy = overlap_with_vp(ey);
    if (hx < 2 || hy < 2) return std::nullopt;  // path was extendable

    // Overlap >= 2 with a path edge: close a special cycle on a gap of the
    // intersection index list.
    for (int e : {ex, ey}) {
        std::vector<int> hits = {0};
        for (std::size_t i = 1; i < path_sets.size(); ++i)
            if (shape::inter_size(sets[static_cast<std::size_t>(e)], path_sets[i]) > 0)
                hits.push_back(static_cast<int>(i));
        for (std::size_t k = 0; k + 1 < hits.size(); ++k) {
            const int i1 = hits[k], i2 = hits[k + 1];
            const int s1 = shape::inter_size(sets[static_cast<std::size_t>(e)], path_sets[static_cast<std::size_t>(i1)]);
            const int s2 = shape::inter_size(sets[static_cast<std::size_t>(e)], path_sets[static_cast<std::size_t>(i2)]);
            std::vector<int> seg(path.begin() + i1, path.begin() + i2 + 1);
            if (s1 == 1 && s2 >= 2) {
                if (auto c = make_special_cycle(core, seg, e, s2)) return c;
            } else if (s2 == 1 && s1 >= 2) {
                std::reverse(seg.begin(), seg.end());
                if (auto c = make_special_cycle(core, seg, e, s1)) return c;
            }
        }
    }
    if (shape::inter_size(sets[static_cast<std::size_t>(ex)], sets[static_cast<std::size_t>(ey)]) >= 2) {
        const int s = shape::inter_size(sets[static_cast<std::size_t>(ex)], sets[static_cast<std::size_t>(ey)]);
        if (auto c = make_special_cycle(core, {path[0], ex}, ey, s)) return c;
    }

    // A cover edge inside V(P) spoils the path.
    for (int e : {ex, ey}) {
        if (overlap_with_vp(e) == q) {
            SpoiledPathCert cert{{to_refs(path)}, {EdgeClass::Long, static_cast<std::int32_t>(e)}};
            BlockingCertificateSym c = cert;
            if (verify_certificate_sym(c, core)) return c;
        }
    }

    // All intersections single now; first path edge hit by each cover edge.
    auto first_hit = [&](int e) {
        for (std::size_t i = 1; i < path_sets.size(); ++i)
            if (shape::inter_size(sets[static_cast<std::size_t>(e)], path_sets[i]) > 0)
                return static_cast<int>(i);
        return -1;
    };
    int cx = ex, cy = ey;
    int ix = first_hit(cx), iy = first_hit(cy);
    if (ix < 0 || iy < 0) return std::nullopt;
    if (iy > ix) { std::swap(cx, cy); std::swap(ix, iy); }

    // Cycle through E_x; E_y is a handle unless it lies inside the cycle.
    {
        std::vector<int> seg(path.begin(), path.begin() + ix + 1);
        std::vector<shape::EdgeSet> cyc = {sets[static_cast<std::size_t>(cx)]};
        for (int i : seg) cyc.push_back(sets[static_cast<std::size_t>(i)]);
        const auto vc = shape::union_of(cyc);
        bool ey_inside = true;
        for (Vertex v : sets[static_cast<std::size_t>(cy)])
            if (!std::binary_search(vc.begin(), vc.end(), v)) { ey_inside = false; break; }
        if (!ey_inside) {
            if (auto c = make_handle_cycle(core, seg, cx, cy)) return c;
        } else if (iy < ix) {
            std::vector<int> seg2(path.begin(), path.begin() + iy + 1);
            if (auto c = make_handle_cycle(core, seg2, cy, cx)) return c;
        } else {
            // iy == ix: triangle E_x, E_y, E_i plus E_1 as handle, or the
            // reduced Fano at q = 3.
            if (auto c = make_handle_cycle(core, {path[static_cast<std::size_t>(ix)], cx}, cy,
                                           path[0]))
                return c;
            if (auto c = make_handle_cycle(core, {path[static_cast<std::size_t>(ix)], cy}, cx,
                                           path[0]))
                return c;
            if (q == 3 && ix == 1) {
                ReducedFanoCert fano{{to_refs({path[0]})[0], to_refs({path[1]})[0],
                                      to_refs({cx})[0], to_refs({cy})[0]}};
                BlockingCertificateSym c = fano;
                if (verify_certificate_sym(c, core)) return c;
            }
        }
    }
    return std::nullopt;
}

}  // namespace detail_sym

/// Certificate extraction from a non-2-colorable single-length hypergraph:
/// shrink to a 3-edge-critical core, take a longest simple path, pick
/// one-point cover edges for two private vertices of E_1, and run the case
/// analysis. Path search deepens on failure; exhaustive detection over the
/// core is the final rung.
inline BlockingCertificateSym extract_blocking_sym(const APHypergraph& h, std::uint64_t budget) {
    if (h.two_length())
        throw std::invalid_argument("extract_blocking_sym: expected single-length hypergraph");
    const ColorSpec two_colors({h.q_long(), h.q_long()});
    const auto decision = decide_hypergraph(h, two_colors, budget);
    if (decision.outcome == Outcome::Colorable)
        throw std::logic_error("extract_blocking_sym: input is 2-colorable");
    if (decision.outcome == Outcome::Indeterminate)
        throw budget_exhausted("extract_blocking_sym: decision budget exhausted");

    const APHypergraph core = extract_edge_critical(h, two_colors, budget);
    const int max_len = static_cast<int>(core.long_edges().size());

    std::uint64_t path_budget = 4096;
    for (int attempt = 0; attempt < 4; ++attempt, path_budget *= 16) {
        const auto [path, completed] =
            detail_sym::longest_simple_path(core, path_budget, max_len);
        if (auto cert = detail_sym::case_analysis_sym(core, path))
            return detail_sym::remap_certificate(*cert, core, h);
        if (completed) break;  // deeper search cannot find a longer path
    }

    if (auto cert = detect_blocking_sym(core, max_len))
        return detail_sym::remap_certificate(*cert, core, h);
    throw std::runtime_error("extract_blocking_sym: no certificate found in critical core");
}

}  // namespace vdw
