#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "vdw/ap.hpp"

namespace vdw {

enum class EdgeClass : std::uint8_t { Long = 0, Short = 1 };

/// Identifier of an edge inside an APHypergraph: class plus index into the
/// class's edge list.
struct EdgeRef {
    EdgeClass cls = EdgeClass::Long;
    std::int32_t index = -1;
    friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// Hypergraph of arithmetic progressions on vertex set [n], with a long edge
/// class (length q1) and an optional short class (length q2 < q1). Symmetric
/// single-length hypergraphs leave the short class empty. Immutable after
/// construction.
class APHypergraph {
public:
    APHypergraph() = default;

    APHypergraph(Vertex n, int q_long, std::vector<ArithmeticProgression> longs)
        : APHypergraph(n, q_long, std::move(longs), 0, {}) {}

    APHypergraph(Vertex n, int q_long, std::vector<ArithmeticProgression> longs, int q_short,
                 std::vector<ArithmeticProgression> shorts)
        : n_(n), q_long_(q_long), q_short_(q_short), long_edges_(std::move(longs)),
          short_edges_(std::move(shorts)) {
        if (q_long_ < 3) throw std::invalid_argument("APHypergraph: long length must be >= 3");
        if (!short_edges_.empty() && (q_short_ < 3 || q_short_ >= q_long_))
            throw std::invalid_argument("APHypergraph: short length must satisfy 3 <= q2 < q1");
        normalize(long_edges_, q_long_);
        if (!short_edges_.empty()) normalize(short_edges_, q_short_);
        build_index();
    }

    Vertex n() const { return n_; }
    int q_long() const { return q_long_; }
    int q_short() const { return q_short_; }
    bool two_length() const { return q_short_ != 0; }

    const std::vector<ArithmeticProgression>& long_edges() const { return long_edges_; }
    const std::vector<ArithmeticProgression>& short_edges() const { return short_edges_; }
    std::size_t edge_count() const { return long_edges_.size() + short_edges_.size(); }

    const ArithmeticProgression& edge(EdgeRef ref) const {
        const auto& pool = ref.cls == EdgeClass::Long ? long_edges_ : short_edges_;
        if (ref.index < 0 || static_cast<std::size_t>(ref.index) >= pool.size())
            throw std::domain_error("APHypergraph: dangling edge reference");
        return pool[static_cast<std::size_t>(ref.index)];
    }

    /// Incident edges of v, long edges first, each class in lex edge order.
    const std::vector<EdgeRef>& incident(Vertex v) const {
        static const std::vector<EdgeRef> kNone;
        auto it = index_.find(v);
        return it == index_.end() ? kNone : it->second;
    }

    /// Vertices incident to at least one edge, ascending.
    std::vector<Vertex> incident_vertices() const {
        std::vector<Vertex> out;
        out.reserve(index_.size());
        for (const auto& [v, refs] : index_) out.push_back(v);
        return out;
    }

    std::optional<EdgeRef> find_edge(const ArithmeticProgression& ap) const {
        auto probe = [&](const std::vector<ArithmeticProgression>& pool,
                         EdgeClass cls) -> std::optional<EdgeRef> {
            auto it = std::lower_bound(pool.begin(), pool.end(), ap);
            if (it != pool.end() && *it == ap)
                return EdgeRef{cls, static_cast<std::int32_t>(it - pool.begin())};
            return std::nullopt;
        };
        if (ap.length == q_long_)
            if (auto r = probe(long_edges_, EdgeClass::Long)) return r;
        if (ap.length == q_short_)
            if (auto r = probe(short_edges_, EdgeClass::Short)) return r;
        return std::nullopt;
    }

    /// Copy with the given edges dropped (refs into *this*).
    APHypergraph without_edges(const std::vector<EdgeRef>& drop) const {
        std::vector<char> drop_long(long_edges_.size(), 0), drop_short(short_edges_.size(), 0);
        for (EdgeRef r : drop) {
            edge(r);  // bounds check
            (r.cls == EdgeClass::Long ? drop_long : drop_short)[static_cast<std::size_t>(r.index)] = 1;
        }
        std::vector<ArithmeticProgression> longs, shorts;
        for (std::size_t i = 0; i < long_edges_.size(); ++i)
            if (!drop_long[i]) longs.push_back(long_edges_[i]);
        for (std::size_t i = 0; i < short_edges_.size(); ++i)
            if (!drop_short[i]) shorts.push_back(short_edges_[i]);
        return APHypergraph(n_, q_long_, std::move(longs), q_short_, std::move(shorts));
    }

private:
    void normalize(std::vector<ArithmeticProgression>& edges, int q) {
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        for (const auto& e : edges) {
            if (e.length != q) throw std::invalid_argument("APHypergraph: edge length mismatch");
            if (!e.fits_in(n_)) throw std::invalid_argument("APHypergraph: edge outside [1, n]");
        }
    }

    void build_index() {
        index_.clear();
        for (std::size_t i = 0; i < long_edges_.size(); ++i)
            for (Vertex v : long_edges_[i].elements())
                index_[v].push_back({EdgeClass::Long, static_cast<std::int32_t>(i)});
        for (std::size_t i = 0; i < short_edges_.size(); ++i)
            for (Vertex v : short_edges_[i].elements())
                index_[v].push_back({EdgeClass::Short, static_cast<std::int32_t>(i)});
    }

    Vertex n_ = 0;
    int q_long_ = 3;
    int q_short_ = 0;
    std::vector<ArithmeticProgression> long_edges_;
    std::vector<ArithmeticProgression> short_edges_;
    std::map<Vertex, std::vector<EdgeRef>> index_;
};

/// Hypergraph induced on a subset: the edges are exactly the APs of each given
/// length fully contained in the subset. One length gives a single-class
/// hypergraph; two distinct lengths give long/short classes. Duplicate lengths
/// collapse.
inline APHypergraph induced_hypergraph(const GroundSubset& subset, std::vector<int> lengths) {
    if (lengths.empty()) throw std::invalid_argument("induced_hypergraph: no lengths given");
    for (int q : lengths)
        if (q < 3) throw std::invalid_argument("induced_hypergraph: lengths must be >= 3");
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    if (lengths.size() > 2)
        throw std::invalid_argument("induced_hypergraph: at most two distinct lengths");

    auto longs = aps_in_subset(subset, lengths[0]);
    if (lengths.size() == 1)
        return APHypergraph(subset.n, lengths[0], std::move(longs));
    auto shorts = aps_in_subset(subset, lengths[1]);
    return APHypergraph(subset.n, lengths[0], std::move(longs), lengths[1], std::move(shorts));
}

}  // namespace vdw
