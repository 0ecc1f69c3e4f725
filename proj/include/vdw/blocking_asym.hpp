#pragma once

// Asymmetric (q1,q2)-uniform machinery: covers and their classification,
// blocks and simple paths, saws, spoiled paths and extensions, bounded
// detection, censuses, and constructive certificate extraction.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <variant>
#include <vector>

#include "vdw/ap.hpp"
#include "vdw/blocking_sym.hpp"  // shape helpers
#include "vdw/colorability.hpp"
#include "vdw/hypergraph.hpp"

namespace vdw {

/// A cover of an edge: one edge of the other cardinality per vertex,
/// covering[i] meeting the covered edge exactly in its i-th element.
struct Cover {
    EdgeRef covered;
    std::vector<EdgeRef> covering;
};

enum class CoverEdgeKind { Simple, Generic, Degenerate };

struct CoverInfo {
    Cover cover;
    std::vector<CoverEdgeKind> kinds;
    bool simple = false;
};

/// Simple path of blocks: shorts E_1..E_l, block i covered by longs[i] with
/// longs[i][0] the long shared with the previous block and longs[i].back()
/// the designated outgoing edge. A path of length zero is a single long edge
/// stored as longs = {{L}} with no shorts.
struct SimplePathAsym {
    std::vector<EdgeRef> shorts;
    std::vector<std::vector<EdgeRef>> longs;

    int length() const { return static_cast<int>(shorts.size()); }
    EdgeRef first_long() const { return longs.front().front(); }
    EdgeRef last_long() const { return longs.back().back(); }

    SimplePathAsym reversed() const {
        SimplePathAsym out;
        out.shorts.assign(shorts.rbegin(), shorts.rend());
        for (auto it = longs.rbegin(); it != longs.rend(); ++it)
            out.longs.emplace_back(it->rbegin(), it->rend());
        return out;
    }

    std::vector<EdgeRef> all_edges() const {
        std::vector<EdgeRef> out(shorts.begin(), shorts.end());
        for (const auto& block : longs)
            for (EdgeRef r : block)
                if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
        return out;
    }
};

struct NonSimpleCoverCert {
    Cover cover;
};

/// Path plus an off-path edge meeting >= 3 path vertices and the final long
/// edge in exactly one vertex outside E_l.
struct SpoiledPathAsymCert {
    SimplePathAsym path;
    EdgeRef spoiler;
};

/// Path whose first long edge has a one-point short edge through each of its
/// non-E_1 vertices, every such edge meeting V(P) in exactly two vertices.
struct SawCert {
    SimplePathAsym path;
    std::vector<EdgeRef> saw_edges;  // by anchor vertex ascending
};

/// Path extended by a short edge with a simple cover anchored at the final
/// long edge, some other cover edge meeting V(P).
struct SpoiledExtensionCert {
    SimplePathAsym path;
    EdgeRef ext_short;
    std::vector<EdgeRef> ext_cover;  // [0] = final long edge of the path
};

using BlockingCertificateAsym =
    std::variant<NonSimpleCoverCert, SpoiledPathAsymCert, SawCert, SpoiledExtensionCert>;

inline const char* certificate_kind(const BlockingCertificateAsym& cert) {
    switch (cert.index()) {
        case 0: return "non_simple_cover";
        case 1: return "spoiled_path";
        case 2: return "saw";
        default: return "spoiled_extension";
    }
}

// ---------------------------------------------------------------------------
// Covers
// ---------------------------------------------------------------------------

namespace detail_asym {

inline std::vector<std::vector<EdgeRef>> cover_candidates(const APHypergraph& h, EdgeRef target) {
    const auto& e = h.edge(target);
    const EdgeClass other = target.cls == EdgeClass::Long ? EdgeClass::Short : EdgeClass::Long;
    std::vector<std::vector<EdgeRef>> cand(static_cast<std::size_t>(e.length));
    const auto elems = e.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (EdgeRef r : h.incident(elems[i])) {
            if (r.cls != other) continue;
            if (ap_intersection(h.edge(r), e) == std::vector<Vertex>{elems[i]})
                cand[i].push_back(r);
        }
        std::sort(cand[i].begin(), cand[i].end());
    }
    return cand;
}

inline std::vector<CoverEdgeKind> classify_cover(const APHypergraph& h,
                                                 const std::vector<EdgeRef>& covering) {
    std::vector<CoverEdgeKind> kinds;
    for (std::size_t i = 0; i < covering.size(); ++i) {
        std::set<Vertex> others;
        for (std::size_t j = 0; j < covering.size(); ++j) {
            if (j == i) continue;
            for (Vertex v : h.edge(covering[j]).elements()) others.insert(v);
        }
        int overlap = 0;
        for (Vertex v : h.edge(covering[i]).elements())
            if (others.count(v)) ++overlap;
        kinds.push_back(overlap == 0 ? CoverEdgeKind::Simple
                                     : overlap == 1 ? CoverEdgeKind::Generic
                                                    : CoverEdgeKind::Degenerate);
    }
    return kinds;
}

}  // namespace detail_asym

/// A cover of the edge if one exists, preferring the lexicographically least
/// simple cover; otherwise the lexicographically least cover with per-edge
/// classification. Returns nothing when some vertex has no one-point partner.
inline std::optional<CoverInfo> find_covers(EdgeRef target, const APHypergraph& h) {
    const auto cand = detail_asym::cover_candidates(h, target);
    for (const auto& c : cand)
        if (c.empty()) return std::nullopt;

    std::vector<EdgeRef> chosen;
    std::function<bool(std::size_t)> pick_simple = [&](std::size_t i) {
        if (i == cand.size()) return true;
        for (EdgeRef r : cand[i]) {
            bool disjoint = true;
            for (EdgeRef prev : chosen)
                if (!ap_intersection(h.edge(prev), h.edge(r)).empty()) { disjoint = false; break; }
            if (!disjoint) continue;
            chosen.push_back(r);
            if (pick_simple(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    CoverInfo info;
    info.cover.covered = target;
    if (pick_simple(0)) {
        info.cover.covering = chosen;
        info.kinds.assign(cand.size(), CoverEdgeKind::Simple);
        info.simple = true;
        return info;
    }
    for (const auto& c : cand) info.cover.covering.push_back(c.front());
    info.kinds = detail_asym::classify_cover(h, info.cover.covering);
    info.simple = false;
    return info;
}

/// A witness non-simple cover of the edge, if any combination of one-point
/// partners overlaps outside it.
inline std::optional<Cover> find_nonsimple_cover(EdgeRef target, const APHypergraph& h) {
    const auto cand = detail_asym::cover_candidates(h, target);
    for (const auto& c : cand)
        if (c.empty()) return std::nullopt;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        for (std::size_t j = i + 1; j < cand.size(); ++j) {
            for (EdgeRef a : cand[i]) {
                for (EdgeRef b : cand[j]) {
                    if (ap_intersection(h.edge(a), h.edge(b)).empty()) continue;
                    Cover cover;
                    cover.covered = target;
                    for (std::size_t k = 0; k < cand.size(); ++k)
                        cover.covering.push_back(k == i ? a : k == j ? b : cand[k].front());
                    return cover;
                }
            }
        }
    }
    return std::nullopt;
}

/// True iff every edge of the hypergraph has a cover (vacuous when edgeless).
inline bool is_covered(const APHypergraph& h) {
    for (std::size_t i = 0; i < h.long_edges().size(); ++i)
        if (!find_covers({EdgeClass::Long, static_cast<std::int32_t>(i)}, h)) return false;
    for (std::size_t i = 0; i < h.short_edges().size(); ++i)
        if (!find_covers({EdgeClass::Short, static_cast<std::int32_t>(i)}, h)) return false;
    return true;
}

/// Union bound for r covering edges of a common edge: |E_1 u ... u E_r| must
/// exceed 2*q1*(1 - 1/r).
inline bool verify_minimal_cover_bound(const std::vector<ArithmeticProgression>& covering) {
    if (covering.empty()) throw std::invalid_argument("verify_minimal_cover_bound: no edges");
    const std::int64_t r = static_cast<std::int64_t>(covering.size());
    const std::int64_t q1 = covering.front().length;
    std::set<Vertex> u;
    for (const auto& e : covering) {
        if (e.length != q1)
            throw std::invalid_argument("verify_minimal_cover_bound: mixed lengths");
        for (Vertex v : e.elements()) u.insert(v);
    }
    return static_cast<std::int64_t>(u.size()) * r > 2 * q1 * (r - 1);
}

// ---------------------------------------------------------------------------
// Path validity and certificate verification
// ---------------------------------------------------------------------------

namespace detail_asym {

inline bool valid_cover_of(const APHypergraph& h, const ArithmeticProgression& covered,
                           const std::vector<EdgeRef>& covering, bool require_simple) {
    if (static_cast<int>(covering.size()) != covered.length) return false;
    std::set<Vertex> hit;
    for (EdgeRef r : covering) {
        const auto& e = h.edge(r);
        if (e.length == covered.length) return false;
        const auto inter = ap_intersection(e, covered);
        if (inter.size() != 1) return false;
        if (!hit.insert(inter[0]).second) return false;
    }
    if (require_simple) {
        for (std::size_t i = 0; i < covering.size(); ++i)
            for (std::size_t j = i + 1; j < covering.size(); ++j) {
                auto inter = ap_intersection(h.edge(covering[i]), h.edge(covering[j]));
                if (!inter.empty()) return false;
            }
    }
    return true;
}

inline std::vector<Vertex> path_vertices(const APHypergraph& h, const SimplePathAsym& p) {
    std::set<Vertex> vs;
    for (EdgeRef r : p.shorts)
        for (Vertex v : h.edge(r).elements()) vs.insert(v);
    for (const auto& block : p.longs)
        for (EdgeRef r : block)
            for (Vertex v : h.edge(r).elements()) vs.insert(v);
    return {vs.begin(), vs.end()};
}

inline bool is_simple_path_asym(const APHypergraph& h, const SimplePathAsym& p) {
    if (p.longs.empty()) return false;
    if (p.shorts.empty()) {
        if (p.longs.size() != 1 || p.longs[0].size() != 1) return false;
        if (p.longs[0][0].cls != EdgeClass::Long) return false;
        h.edge(p.longs[0][0]);  // bounds check
        return true;
    }
    if (p.longs.size() != p.shorts.size()) return false;
    const int q2 = h.q_short();

    std::vector<EdgeRef> distinct_longs;
    for (std::size_t i = 0; i < p.longs.size(); ++i) {
        if (static_cast<int>(p.longs[i].size()) != q2) return false;
        if (p.shorts[i].cls != EdgeClass::Short) return false;
        for (EdgeRef r : p.longs[i])
            if (r.cls != EdgeClass::Long) return false;
        if (i > 0 && p.longs[i][0] != p.longs[i - 1].back()) return false;
        if (!valid_cover_of(h, h.edge(p.shorts[i]), p.longs[i], false)) return false;
        for (std::size_t j = i == 0 ? 0 : 1; j < p.longs[i].size(); ++j)
            distinct_longs.push_back(p.longs[i][j]);
    }
    // All distinct edges of one cardinality pairwise disjoint (and distinct).
    std::set<EdgeRef> seen;
    for (EdgeRef r : distinct_longs)
        if (!seen.insert(r).second) return false;
    for (std::size_t i = 0; i < distinct_longs.size(); ++i)
        for (std::size_t j = i + 1; j < distinct_longs.size(); ++j)
            if (!ap_intersection(h.edge(distinct_longs[i]), h.edge(distinct_longs[j])).empty())
                return false;
    std::set<EdgeRef> sseen;
    for (EdgeRef r : p.shorts)
        if (!sseen.insert(r).second) return false;
    for (std::size_t i = 0; i < p.shorts.size(); ++i)
        for (std::size_t j = i + 1; j < p.shorts.size(); ++j)
            if (!ap_intersection(h.edge(p.shorts[i]), h.edge(p.shorts[j])).empty()) return false;
    return true;
}

}  // namespace detail_asym

/// Full definitional predicate per certificate kind. Dangling references
/// raise std::domain_error.
inline bool verify_certificate_asym(const BlockingCertificateAsym& cert, const APHypergraph& h) {
    using namespace detail_asym;
    if (const auto* c = std::get_if<NonSimpleCoverCert>(&cert)) {
        const auto& covered = h.edge(c->cover.covered);
        if (!valid_cover_of(h, covered, c->cover.covering, false)) return false;
        for (std::size_t i = 0; i < c->cover.covering.size(); ++i)
            for (std::size_t j = i + 1; j < c->cover.covering.size(); ++j)
                if (!ap_intersection(h.edge(c->cover.covering[i]),
                                     h.edge(c->cover.covering[j]))
                         .empty())
                    return true;  // an overlap makes the cover non-simple
        return false;
    }
    if (const auto* c = std::get_if<SpoiledPathAsymCert>(&cert)) {
        if (c->path.length() < 1 || !is_simple_path_asym(h, c->path)) return false;
        for (EdgeRef r : c->path.all_edges())
            if (r == c->spoiler) return false;
        const auto vp = path_vertices(h, c->path);
        const auto& sp = h.edge(c->spoiler);
        int overlap = 0;
        for (Vertex v : sp.elements())
            if (std::binary_search(vp.begin(), vp.end(), v)) ++overlap;
        if (overlap < 3) return false;
        const auto inter = ap_intersection(sp, h.edge(c->path.last_long()));
        if (inter.size() != 1) return false;
        return !h.edge(c->path.shorts.back()).contains(inter[0]);
    }
    if (const auto* c = std::get_if<SawCert>(&cert)) {
        if (c->path.length() < 1 || !is_simple_path_asym(h, c->path)) return false;
        const auto& first_long = h.edge(c->path.first_long());
        const auto& e1 = h.edge(c->path.shorts.front());
        std::vector<Vertex> anchors;
        for (Vertex v : first_long.elements())
            if (!e1.contains(v)) anchors.push_back(v);
        if (c->saw_edges.size() != anchors.size()) return false;
        const auto vp = path_vertices(h, c->path);
        for (std::size_t i = 0; i < anchors.size(); ++i) {
            const auto& s = h.edge(c->saw_edges[i]);
            if (c->saw_edges[i].cls != EdgeClass::Short) return false;
            if (ap_intersection(s, first_long) != std::vector<Vertex>{anchors[i]}) return false;
            int overlap = 0;
            for (Vertex v : s.elements())
                if (std::binary_search(vp.begin(), vp.end(), v)) ++overlap;
            if (overlap != 2) return false;
        }
        return true;
    }
    const auto& c = std::get<SpoiledExtensionCert>(cert);
    if (!is_simple_path_asym(h, c.path)) return false;
    if (c.ext_short.cls != EdgeClass::Short) return false;
    for (EdgeRef r : c.path.all_edges())
        if (r == c.ext_short) return false;
    if (c.ext_cover.empty() || c.ext_cover[0] != c.path.last_long()) return false;
    if (!valid_cover_of(h, h.edge(c.ext_short), c.ext_cover, true)) return false;
    const auto vp = path_vertices(h, c.path);
    const auto& ext = h.edge(c.ext_short);
    std::vector<Vertex> inside;
    for (Vertex v : ext.elements())
        if (std::binary_search(vp.begin(), vp.end(), v)) inside.push_back(v);
    if (inside.size() != 1) return false;
    const Vertex v = inside[0];
    if (!h.edge(c.path.last_long()).contains(v)) return false;
    if (c.path.length() >= 1 && h.edge(c.path.shorts.back()).contains(v)) return false;
    for (std::size_t i = 1; i < c.ext_cover.size(); ++i) {
        for (Vertex w : h.edge(c.ext_cover[i]).elements())
            if (std::binary_search(vp.begin(), vp.end(), w)) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Path enumeration
// ---------------------------------------------------------------------------

namespace detail_asym {

/// Canonical signature of a path's set structure (designations dropped,
/// orientation normalized) for census deduplication.
inline std::vector<std::int32_t> path_signature(const SimplePathAsym& p) {
    auto encode = [](const SimplePathAsym& q) {
        std::vector<std::int32_t> sig;
        for (std::size_t i = 0; i < q.longs.size(); ++i) {
            if (i < q.shorts.size()) sig.push_back(q.shorts[i].index);
            std::vector<std::int32_t> ids;
            for (EdgeRef r : q.longs[i]) ids.push_back(r.index);
            std::sort(ids.begin(), ids.end());
            sig.push_back(-1);  // block separator
            sig.insert(sig.end(), ids.begin(), ids.end());
        }
        return sig;
    };
    const auto fwd = encode(p), rev = encode(p.reversed());
    return std::min(fwd, rev);
}

/// DFS over all (path, designation) tuples with length <= max_len blocks.
/// `visit` sees every tuple (both orientations, every end designation) and
/// returns false to stop the walk. A node budget of 0 means unbounded.
template <typename Visit>
bool walk_asym_paths(const APHypergraph& h, int max_len, std::uint64_t node_budget, Visit visit) {
    if (!h.two_length() || h.long_edges().empty()) return true;
    const auto& longs = h.long_edges();
    const auto& shorts = h.short_edges();
    std::vector<shape::EdgeSet> lset, sset;
    for (const auto& e : longs) lset.push_back(e.elements());
    for (const auto& e : shorts) sset.push_back(e.elements());

    std::vector<char> in_vp(static_cast<std::size_t>(h.n()) + 1, 0);
    std::vector<char> in_short(static_cast<std::size_t>(h.n()) + 1, 0);
    std::vector<char> long_used(longs.size(), 0), short_used(shorts.size(), 0);
    SimplePathAsym path;
    std::uint64_t nodes = 0;
    bool keep_going = true;

    auto add_verts = [&](const shape::EdgeSet& vs) {
        std::vector<Vertex> added;
        for (Vertex v : vs)
            if (!in_vp[static_cast<std::size_t>(v)]) {
                in_vp[static_cast<std::size_t>(v)] = 1;
                added.push_back(v);
            }
        return added;
    };
    auto remove_verts = [&](const std::vector<Vertex>& vs) {
        for (Vertex v : vs) in_vp[static_cast<std::size_t>(v)] = 0;
    };

    // Candidate covers of short edge s anchored so that `anchor` covers the
    // vertex it already shares; returns lists per remaining vertex.
    auto completion_candidates = [&](std::size_t s, Vertex anchor_vertex) {
        std::vector<std::pair<Vertex, std::vector<std::int32_t>>> out;
        for (Vertex v : sset[s]) {
            if (v == anchor_vertex) continue;
            std::vector<std::int32_t> cands;
            for (EdgeRef r : h.incident(v)) {
                if (r.cls != EdgeClass::Long) continue;
                const std::size_t li = static_cast<std::size_t>(r.index);
                if (long_used[li]) continue;
                if (shape::inter_size(lset[li], sset[s]) != 1) continue;
                // Must avoid every vertex already on the path.
                bool clean = true;
                for (Vertex w : lset[li])
                    if (in_vp[static_cast<std::size_t>(w)]) { clean = false; break; }
                if (clean) cands.push_back(r.index);
            }
            out.push_back({v, cands});
        }
        return out;
    };

    std::function<void()> extend = [&]() {
        if (!keep_going) return;
        if (node_budget != 0 && ++nodes > node_budget) { keep_going = false; return; }
        if (!visit(path)) { keep_going = false; return; }
        if (path.length() >= max_len) return;

        const EdgeRef last = path.last_long();
        const shape::EdgeSet& last_set = lset[static_cast<std::size_t>(last.index)];
        for (std::size_t s = 0; s < shorts.size(); ++s) {
            if (short_used[s]) continue;
            // The new short meets the path exactly in one vertex of the last
            // long edge and in no path short edge.
            Vertex anchor = 0;
            bool ok = true;
            for (Vertex v : sset[s]) {
                if (in_vp[static_cast<std::size_t>(v)]) {
                    if (anchor != 0 || in_short[static_cast<std::size_t>(v)] ||
                        !std::binary_search(last_set.begin(), last_set.end(), v)) {
                        ok = false;
                        break;
                    }
                    anchor = v;
                }
            }
            if (!ok || anchor == 0) continue;

            auto cands = completion_candidates(s, anchor);
            // Assign a fresh pairwise-disjoint long per remaining vertex.
            std::vector<std::int32_t> chosen;
            std::function<void(std::size_t)> assign = [&](std::size_t vi) {
                if (!keep_going) return;
                if (vi == cands.size()) {
                    // Designate each chosen long as the outgoing edge. A seed
                    // path (single long, no blocks yet) is replaced by its
                    // first real block.
                    const bool from_seed = path.shorts.empty();
                    for (std::size_t d = 0; d < chosen.size(); ++d) {
                        std::vector<EdgeRef> block = {last};
                        for (std::size_t k = 0; k < chosen.size(); ++k)
                            if (k != d)
                                block.push_back({EdgeClass::Long, chosen[k]});
                        block.push_back({EdgeClass::Long, chosen[d]});

                        path.shorts.push_back({EdgeClass::Short, static_cast<std::int32_t>(s)});
                        if (from_seed) path.longs.pop_back();
                        path.longs.push_back(block);
                        short_used[s] = 1;
                        for (Vertex v : sset[s]) in_short[static_cast<std::size_t>(v)] = 1;
                        std::vector<Vertex> added = add_verts(sset[s]);
                        std::vector<std::vector<Vertex>> ladded;
                        for (std::int32_t c : chosen) {
                            long_used[static_cast<std::size_t>(c)] = 1;
                            ladded.push_back(add_verts(lset[static_cast<std::size_t>(c)]));
                        }
                        extend();
                        for (std::size_t k = 0; k < chosen.size(); ++k) {
                            long_used[static_cast<std::size_t>(chosen[k])] = 0;
                            remove_verts(ladded[k]);
                        }
                        remove_verts(added);
                        for (Vertex v : sset[s]) in_short[static_cast<std::size_t>(v)] = 0;
                        short_used[s] = 0;
                        path.shorts.pop_back();
                        path.longs.pop_back();
                        if (from_seed) path.longs.push_back({last});
                        if (!keep_going) return;
                    }
                    return;
                }
                for (std::int32_t c : cands[vi].second) {
                    bool disjoint = true;
                    for (std::int32_t prev : chosen)
                        if (shape::inter_size(lset[static_cast<std::size_t>(c)],
                                              lset[static_cast<std::size_t>(prev)]) > 0) {
                            disjoint = false;
                            break;
                        }
                    if (!disjoint) continue;
                    chosen.push_back(c);
                    assign(vi + 1);
                    chosen.pop_back();
                    if (!keep_going) return;
                }
            };
            assign(0);
            if (!keep_going) return;
        }
    };

    for (std::size_t start = 0; start < longs.size() && keep_going; ++start) {
        path.shorts.clear();
        path.longs.assign(1, {EdgeRef{EdgeClass::Long, static_cast<std::int32_t>(start)}});
        long_used[start] = 1;
        auto added = add_verts(lset[start]);
        extend();
        remove_verts(added);
        long_used[start] = 0;
    }
    return keep_going;
}

}  // namespace detail_asym

// ---------------------------------------------------------------------------
// Detection, census, extraction
// ---------------------------------------------------------------------------

namespace detail_asym {

inline std::optional<SawCert> try_saw(const APHypergraph& h, const SimplePathAsym& path,
                                      const std::vector<Vertex>& vp) {
    if (path.length() < 1) return std::nullopt;
    const auto& first_long = h.edge(path.first_long());
    const auto& e1 = h.edge(path.shorts.front());
    SawCert cert{path, {}};
    for (Vertex v : first_long.elements()) {
        if (e1.contains(v)) continue;
        bool found = false;
        for (EdgeRef r : h.incident(v)) {
            if (r.cls != EdgeClass::Short) continue;
            const auto& s = h.edge(r);
            if (ap_intersection(s, first_long) != std::vector<Vertex>{v}) continue;
            int overlap = 0;
            for (Vertex w : s.elements())
                if (std::binary_search(vp.begin(), vp.end(), w)) ++overlap;
            if (overlap == 2) {
                cert.saw_edges.push_back(r);
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    return cert;
}

inline std::optional<SpoiledPathAsymCert> try_spoiled(const APHypergraph& h,
                                                      const SimplePathAsym& path,
                                                      const std::vector<Vertex>& vp) {
    if (path.length() < 1) return std::nullopt;
    const auto path_edges = path.all_edges();
    const auto& last_long = h.edge(path.last_long());
    const auto& last_short = h.edge(path.shorts.back());
    auto try_edge = [&](EdgeRef r) -> bool {
        if (std::find(path_edges.begin(), path_edges.end(), r) != path_edges.end()) return false;
        const auto& e = h.edge(r);
        int overlap = 0;
        for (Vertex w : e.elements())
            if (std::binary_search(vp.begin(), vp.end(), w)) ++overlap;
        if (overlap < 3) return false;
        const auto inter = ap_intersection(e, last_long);
        if (inter.size() != 1 || last_short.contains(inter[0])) return false;
        return true;
    };
    for (std::size_t i = 0; i < h.long_edges().size(); ++i)
        if (try_edge({EdgeClass::Long, static_cast<std::int32_t>(i)}))
            return SpoiledPathAsymCert{path, {EdgeClass::Long, static_cast<std::int32_t>(i)}};
    for (std::size_t i = 0; i < h.short_edges().size(); ++i)
        if (try_edge({EdgeClass::Short, static_cast<std::int32_t>(i)}))
            return SpoiledPathAsymCert{path, {EdgeClass::Short, static_cast<std::int32_t>(i)}};
    return std::nullopt;
}

inline std::optional<SpoiledExtensionCert> try_extension(const APHypergraph& h,
                                                         const SimplePathAsym& path,
                                                         const std::vector<Vertex>& vp) {
    const EdgeRef last = path.last_long();
    const auto& last_long = h.edge(last);
    const ArithmeticProgression* last_short =
        path.shorts.empty() ? nullptr : &h.edge(path.shorts.back());
    const auto path_edges = path.all_edges();

    for (Vertex v : last_long.elements()) {
        if (last_short && last_short->contains(v)) continue;
        for (EdgeRef sref : h.incident(v)) {
            if (sref.cls != EdgeClass::Short) continue;
            if (std::find(path_edges.begin(), path_edges.end(), sref) != path_edges.end())
                continue;
            const auto& s = h.edge(sref);
            int overlap = 0;
            for (Vertex w : s.elements())
                if (std::binary_search(vp.begin(), vp.end(), w)) ++overlap;
            if (overlap != 1) continue;
            if (ap_intersection(s, last_long) != std::vector<Vertex>{v}) continue;

            // Simple cover anchored at the last long edge; some other cover
            // edge must meet the path.
            std::vector<std::pair<Vertex, std::vector<EdgeRef>>> cands;
            bool feasible = true;
            for (Vertex w : s.elements()) {
                if (w == v) continue;
                std::vector<EdgeRef> list;
                for (EdgeRef r : h.incident(w)) {
                    if (r.cls != EdgeClass::Long || r == last) continue;
                    const auto& e = h.edge(r);
                    if (ap_intersection(e, s) != std::vector<Vertex>{w}) continue;
                    if (!ap_intersection(e, last_long).empty()) continue;
                    list.push_back(r);
                }
                if (list.empty()) { feasible = false; break; }
                cands.push_back({w, list});
            }
            if (!feasible) continue;

            std::vector<EdgeRef> chosen;
            std::optional<SpoiledExtensionCert> result;
            std::function<void(std::size_t)> assign = [&](std::size_t i) {
                if (result) return;
                if (i == cands.size()) {
                    bool hits = false;
                    for (EdgeRef r : chosen)
                        for (Vertex w : h.edge(r).elements())
                            if (std::binary_search(vp.begin(), vp.end(), w)) { hits = true; break; }
                    if (!hits) return;
                    SpoiledExtensionCert cert{path, sref, {last}};
                    for (EdgeRef r : chosen) cert.ext_cover.push_back(r);
                    result = cert;
                    return;
                }
                for (EdgeRef r : cands[i].second) {
                    bool disjoint = true;
                    for (EdgeRef prev : chosen)
                        if (!ap_intersection(h.edge(prev), h.edge(r)).empty()) {
                            disjoint = false;
                            break;
                        }
                    if (!disjoint) continue;
                    chosen.push_back(r);
                    assign(i + 1);
                    chosen.pop_back();
                    if (result) return;
                }
            };
            assign(0);
            if (result) return result;
        }
    }
    return std::nullopt;
}

inline BlockingCertificateAsym remap_certificate(const BlockingCertificateAsym& cert,
                                                 const APHypergraph& from,
                                                 const APHypergraph& to) {
    auto remap = [&](EdgeRef r) {
        const auto ref = to.find_edge(from.edge(r));
        if (!ref) throw std::logic_error("remap_certificate: edge missing from host");
        return *ref;
    };
    auto remap_list = [&](const std::vector<EdgeRef>& v) {
        std::vector<EdgeRef> out;
        for (EdgeRef r : v) out.push_back(remap(r));
        return out;
    };
    auto remap_path = [&](const SimplePathAsym& p) {
        SimplePathAsym out;
        out.shorts = remap_list(p.shorts);
        for (const auto& b : p.longs) out.longs.push_back(remap_list(b));
        return out;
    };
    if (const auto* c = std::get_if<NonSimpleCoverCert>(&cert))
        return NonSimpleCoverCert{{remap(c->cover.covered), remap_list(c->cover.covering)}};
    if (const auto* c = std::get_if<SpoiledPathAsymCert>(&cert))
        return SpoiledPathAsymCert{remap_path(c->path), remap(c->spoiler)};
    if (const auto* c = std::get_if<SawCert>(&cert))
        return SawCert{remap_path(c->path), remap_list(c->saw_edges)};
    const auto& c = std::get<SpoiledExtensionCert>(cert);
    return SpoiledExtensionCert{remap_path(c.path), remap(c.ext_short), remap_list(c.ext_cover)};
}

}  // namespace detail_asym

/// Bounded-exhaustive search for any asymmetric 2-blocking structure with at
/// most max_path_len blocks. Non-simply-coverable short edges are checked
/// first; then every (path, designation) tuple is tested for spoiling edges,
/// saws, and spoiled extensions. Orientation conventions are covered by
/// enumerating both path directions.
inline std::optional<BlockingCertificateAsym> detect_blocking_asym(const APHypergraph& h,
                                                                   int max_path_len) {
    if (!h.two_length())
        throw std::invalid_argument("detect_blocking_asym: expected two length classes");

    for (std::size_t i = 0; i < h.short_edges().size(); ++i) {
        if (auto cover = find_nonsimple_cover({EdgeClass::Short, static_cast<std::int32_t>(i)}, h)) {
            BlockingCertificateAsym cert = NonSimpleCoverCert{*cover};
            if (!verify_certificate_asym(cert, h))
                throw std::logic_error("detect_blocking_asym: invalid non-simple cover");
            return cert;
        }
    }

    std::optional<BlockingCertificateAsym> found;
    detail_asym::walk_asym_paths(h, max_path_len, 0, [&](const SimplePathAsym& path) {
        const auto vp = detail_asym::path_vertices(h, path);
        if (auto c = detail_asym::try_spoiled(h, path, vp)) {
            found = *c;
            return false;
        }
        if (auto c = detail_asym::try_saw(h, path, vp)) {
            found = *c;
            return false;
        }
        if (auto c = detail_asym::try_extension(h, path, vp)) {
            found = *c;
            return false;
        }
        return true;
    });

    if (found && !verify_certificate_asym(*found, h))
        throw std::logic_error("detect_blocking_asym: detected certificate failed verification");
    return found;
}

/// Census of asymmetric observables; paths are counted as set structures up
/// to reversal, and a path counts as sawed/spoiled/extended when any
/// designation of it admits the witness.
struct CensusAsym {
    std::map<int, std::int64_t> simple_paths_by_length;
    std::int64_t saws = 0;
    std::int64_t spoiled_paths = 0;
    std::int64_t spoiled_extensions = 0;
    std::int64_t nonsimple_covered_shorts = 0;
};

inline CensusAsym census_asym(const APHypergraph& h, int max_len) {
    if (!h.two_length())
        throw std::invalid_argument("census_asym: expected two length classes");
    CensusAsym out;
    for (std::size_t i = 0; i < h.short_edges().size(); ++i)
        if (find_nonsimple_cover({EdgeClass::Short, static_cast<std::int32_t>(i)}, h))
            ++out.nonsimple_covered_shorts;

    std::map<std::vector<std::int32_t>, std::uint8_t> flags;  // 1 saw, 2 spoiled, 4 ext
    std::map<std::vector<std::int32_t>, int> lengths;
    detail_asym::walk_asym_paths(h, max_len, 0, [&](const SimplePathAsym& path) {
        const auto sig = detail_asym::path_signature(path);
        lengths[sig] = path.length();
        const auto vp = detail_asym::path_vertices(h, path);
        auto& f = flags[sig];
        if (!(f & 1) && detail_asym::try_saw(h, path, vp)) f |= 1;
        if (!(f & 2) && detail_asym::try_spoiled(h, path, vp)) f |= 2;
        if (!(f & 4) && detail_asym::try_extension(h, path, vp)) f |= 4;
        return true;
    });
    for (const auto& [sig, len] : lengths) {
        ++out.simple_paths_by_length[len];
        const auto f = flags[sig];
        if (f & 1) ++out.saws;
        if (f & 2) ++out.spoiled_paths;
        if (f & 4) ++out.spoiled_extensions;
    }
    return out;
}

/// Certificate extraction from a non-asymmetrically-2-colorable hypergraph:
/// shrink to an edge-critical core; if some short edge has no simple cover
/// emit that witness; otherwise take a longest simple path and case-split on
/// the short cover edges of the final long edge (extension / spoiling edge /
/// saw). Deepening retries and exhaustive detection back the case analysis.
inline BlockingCertificateAsym extract_blocking_asym(const APHypergraph& h,
                                                     std::uint64_t budget) {
    if (!h.two_length())
        throw std::invalid_argument("extract_blocking_asym: expected two length classes");
    const ColorSpec spec({h.q_long(), h.q_short()});
    const auto decision = decide_hypergraph(h, spec, budget);
    if (decision.outcome == Outcome::Colorable)
        throw std::logic_error("extract_blocking_asym: input is asymmetrically 2-colorable");
    if (decision.outcome == Outcome::Indeterminate)
        throw budget_exhausted("extract_blocking_asym: decision budget exhausted");

    const APHypergraph core = extract_edge_critical(h, spec, budget);

    // A short edge whose covers are never simple settles the first case.
    for (std::size_t i = 0; i < core.short_edges().size(); ++i) {
        const auto info = find_covers({EdgeClass::Short, static_cast<std::int32_t>(i)}, core);
        if (!info) continue;  // cores are covered; if not, detection below settles it
        if (!info->simple) {
            BlockingCertificateAsym cert = NonSimpleCoverCert{info->cover};
            if (verify_certificate_asym(cert, core))
                return detail_asym::remap_certificate(cert, core, h);
        }
    }

    const int max_len = static_cast<int>(core.short_edges().size()) + 1;
    std::uint64_t path_budget = 4096;
    for (int attempt = 0; attempt < 4; ++attempt, path_budget *= 16) {
        SimplePathAsym longest;
        int best_blocks = -1;
        const bool completed = detail_asym::walk_asym_paths(
            core, max_len, path_budget, [&](const SimplePathAsym& path) {
                if (path.length() > best_blocks) {
                    best_blocks = path.length();
                    longest = path;
                }
                return true;
            });
        if (best_blocks >= 1) {
            const auto vp = detail_asym::path_vertices(core, longest);
            // The case split anchors at the last long edge; saw anchoring
            // at the first long edge is reached through the reversed path.
            if (auto c = detail_asym::try_extension(core, longest, vp)) {
                BlockingCertificateAsym cert = *c;
                if (verify_certificate_asym(cert, core))
                    return detail_asym::remap_certificate(cert, core, h);
            }
            if (auto c = detail_asym::try_spoiled(core, longest, vp)) {
                BlockingCertificateAsym cert = *c;
                if (verify_certificate_asym(cert, core))
                    return detail_asym::remap_certificate(cert, core, h);
            }
            const auto reversed = longest.reversed();
            if (auto c = detail_asym::try_saw(core, reversed, vp)) {
                BlockingCertificateAsym cert = *c;
                if (verify_certificate_asym(cert, core))
                    return detail_asym::remap_certificate(cert, core, h);
            }
            if (auto c = detail_asym::try_saw(core, longest, vp)) {
                BlockingCertificateAsym cert = *c;
                if (verify_certificate_asym(cert, core))
                    return detail_asym::remap_certificate(cert, core, h);
            }
        }
        if (completed) break;
    }

    if (auto cert = detect_blocking_asym(core, max_len))
        return detail_asym::remap_certificate(*cert, core, h);
    throw std::runtime_error("extract_blocking_asym: no certificate found in critical core");
}

}  // namespace vdw
