#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace vdw {

using Vertex = std::int64_t;

/// A q-term arithmetic progression inside [n], stored normalized as
/// (first, diff, length) with diff >= 1. The elements are
/// first, first + diff, ..., first + (length-1)*diff.
struct ArithmeticProgression {
    Vertex first = 1;
    Vertex diff = 1;
    int length = 3;

    friend auto operator<=>(const ArithmeticProgression&, const ArithmeticProgression&) = default;

    Vertex last() const { return first + static_cast<Vertex>(length - 1) * diff; }

    Vertex element(int i) const { return first + static_cast<Vertex>(i) * diff; }

    bool contains(Vertex v) const {
        if (v < first || v > last()) return false;
        const Vertex off = v - first;
        return off % diff == 0 && off / diff < length;
    }

    std::vector<Vertex> elements() const {
        std::vector<Vertex> out;
        out.reserve(static_cast<std::size_t>(length));
        for (int i = 0; i < length; ++i) out.push_back(element(i));
        return out;
    }

    bool valid() const { return first >= 1 && diff >= 1 && length >= 3; }

    /// All elements lie in [1, n].
    bool fits_in(Vertex n) const { return valid() && last() <= n; }
};

/// A subset of [n] = {1,...,n}; elements kept strictly sorted.
struct GroundSubset {
    Vertex n = 0;
    std::vector<Vertex> elements;

    GroundSubset() = default;
    GroundSubset(Vertex n_, std::vector<Vertex> elems) : n(n_), elements(std::move(elems)) {
        std::sort(elements.begin(), elements.end());
        elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
        if (n < 0) throw std::invalid_argument("GroundSubset: n must be >= 0");
        if (!elements.empty() && (elements.front() < 1 || elements.back() > n))
            throw std::invalid_argument("GroundSubset: elements out of [1, n]");
    }

    static GroundSubset full(Vertex n) {
        std::vector<Vertex> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), Vertex{1});
        return GroundSubset(n, std::move(all));
    }

    bool contains(Vertex v) const {
        return std::binary_search(elements.begin(), elements.end(), v);
    }

    std::size_t size() const { return elements.size(); }
    bool empty() const { return elements.empty(); }
};

namespace detail {
inline void check_ap_args(Vertex n, int q) {
    if (n < 1) throw std::invalid_argument("ground set size must be >= 1");
    if (q < 3) throw std::invalid_argument("progression length must be >= 3");
}
}  // namespace detail

/// All q-APs contained in [n], in lexicographic (first, diff) order.
/// The count equals sum_{a=1}^{n-q+1} floor((n-a)/(q-1)).
inline std::vector<ArithmeticProgression> enumerate_aps(Vertex n, int q) {
    detail::check_ap_args(n, q);
    std::vector<ArithmeticProgression> out;
    for (Vertex first = 1; first + (q - 1) <= n; ++first) {
        const Vertex max_diff = (n - first) / (q - 1);
        for (Vertex d = 1; d <= max_diff; ++d) out.push_back({first, d, q});
    }
    return out;
}

inline std::int64_t count_aps(Vertex n, int q) {
    detail::check_ap_args(n, q);
    std::int64_t total = 0;
    for (Vertex a = 1; a <= n - q + 1; ++a) total += (n - a) / (q - 1);
    return total;
}

/// Number of q-APs in [n] through k, via the positional case formula
///   d(k,1) = floor((n-k)/(q-1)),  d(k,q) = floor((k-1)/(q-1)),
///   d(k,i) = min{floor((k-1)/(i-1)), floor((n-k)/(q-i))}  otherwise.
/// Always <= n.
inline std::int64_t ap_degree(Vertex k, Vertex n, int q) {
    detail::check_ap_args(n, q);
    if (k < 1 || k > n) throw std::domain_error("ap_degree: vertex out of [1, n]");
    std::int64_t deg = (n - k) / (q - 1) + (k - 1) / (q - 1);
    for (int i = 2; i <= q - 1; ++i)
        deg += std::min((k - 1) / (i - 1), (n - k) / (q - i));
    return deg;
}

/// All q-APs in [n] containing every given point. For two or more points the
/// positions of two elements pin the progression, so at most q*q results.
inline std::vector<ArithmeticProgression> aps_through_points(const std::vector<Vertex>& points,
                                                             Vertex n, int q) {
    detail::check_ap_args(n, q);
    if (points.empty()) throw std::domain_error("aps_through_points: empty point set");
    std::vector<Vertex> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (Vertex v : pts)
        if (v < 1 || v > n) throw std::domain_error("aps_through_points: point out of [1, n]");

    std::vector<ArithmeticProgression> out;
    auto keep_if_contains_all = [&](const ArithmeticProgression& ap) {
        for (Vertex v : pts)
            if (!ap.contains(v)) return;
        out.push_back(ap);
    };

    if (pts.size() == 1) {
        const Vertex k = pts[0];
        // k at position i (0-based) with common difference d pins first = k - i*d.
        // first decreases and last increases in d, so bail on the first failure.
        for (int i = 0; i < q; ++i) {
            for (Vertex d = 1;; ++d) {
                const Vertex first = k - static_cast<Vertex>(i) * d;
                const Vertex last = k + static_cast<Vertex>(q - 1 - i) * d;
                if (first < 1 || last > n) break;
                keep_if_contains_all({first, d, q});
            }
        }
    } else {
        const Vertex x = pts[0], y = pts[1];
        for (int i = 0; i < q; ++i) {
            for (int j = i + 1; j < q; ++j) {
                const Vertex gap = y - x;
                if (gap % (j - i) != 0) continue;
                const Vertex d = gap / (j - i);
                if (d < 1) continue;
                const Vertex first = x - static_cast<Vertex>(i) * d;
                if (first < 1) continue;
                const ArithmeticProgression ap{first, d, q};
                if (!ap.fits_in(n)) continue;
                keep_if_contains_all(ap);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline bool ap_exists_through(const std::vector<Vertex>& points, Vertex n, int q) {
    return !aps_through_points(points, n, q).empty();
}

/// Exact element-wise intersection of two progressions, sorted ascending.
/// For equal lengths q1 and diff(a) < diff(b) the size is bounded by
/// ceil(q1 * gcd(da, db) / db).
inline std::vector<Vertex> ap_intersection(const ArithmeticProgression& a,
                                           const ArithmeticProgression& b) {
    std::vector<Vertex> out;
    const ArithmeticProgression &lo = a.first <= b.first ? a : b, &hi = a.first <= b.first ? b : a;
    for (int i = 0; i < hi.length; ++i) {
        const Vertex v = hi.element(i);
        if (v > lo.last()) break;
        if (lo.contains(v)) out.push_back(v);
    }
    return out;
}

/// Residues of the progression's elements modulo `modulus`, sorted ascending.
/// The size is min{t, length} with t = modulus / gcd(modulus, diff).
inline std::vector<Vertex> ap_residues_mod(const ArithmeticProgression& a, Vertex modulus) {
    if (modulus < 1) throw std::invalid_argument("ap_residues_mod: modulus must be >= 1");
    std::set<Vertex> res;
    for (int i = 0; i < a.length; ++i) {
        Vertex r = a.element(i) % modulus;
        if (r < 0) r += modulus;
        res.insert(r);
    }
    return {res.begin(), res.end()};
}

/// Pairs (a, b), a != b, in [n] such that some q-AP contains {x, a, b} and some
/// q-AP contains {y, a, b}. Solved by inverting the 2x2 rational position
/// system for each coefficient pair (t1, t2), t_i = r/s with r, s in {-q..q};
/// candidate solutions are kept only if witnessing progressions fit in [n].
inline std::vector<std::pair<Vertex, Vertex>> count_common_cover_pairs(Vertex x, Vertex y, int q,
                                                                       Vertex n) {
    detail::check_ap_args(n, q);
    if (x == y) throw std::domain_error("count_common_cover_pairs: x and y must differ");
    if (x < 1 || x > n || y < 1 || y > n)
        throw std::domain_error("count_common_cover_pairs: vertex out of [1, n]");

    // Distinct rationals r/s with r, s in {-q..q}, s != 0, as reduced (num, den), den > 0.
    std::set<std::pair<Vertex, Vertex>> ratios;
    for (Vertex r = -q; r <= q; ++r) {
        for (Vertex s = -q; s <= q; ++s) {
            if (s == 0) continue;
            Vertex g = std::gcd(r, s);
            if (g == 0) g = 1;
            Vertex num = r / g, den = s / g;
            if (den < 0) { num = -num; den = -den; }
            ratios.insert({num, den});
        }
    }

    std::set<std::pair<Vertex, Vertex>> found;
    for (const auto& [u1, v1] : ratios) {
        for (const auto& [u2, v2] : ratios) {
            const Vertex det = u2 * v1 - u1 * v2;  // (t2 - t1) * v1 * v2
            if (det == 0) continue;                // t1 == t2
            // From x = (1-t1)a + t1 b and y = (1-t2)a + t2 b.
            const Vertex num_a = u2 * v1 * x - u1 * v2 * y;
            const Vertex num_b = (v1 - u1) * v2 * y - (v2 - u2) * v1 * x;
            if (num_a % det != 0 || num_b % det != 0) continue;
            const Vertex a = num_a / det, b = num_b / det;
            if (a < 1 || a > n || b < 1 || b > n || a == b) continue;
            if (found.count({a, b})) continue;
            if (ap_exists_through({x, a, b}, n, q) && ap_exists_through({y, a, b}, n, q))
                found.insert({a, b});
        }
    }
    return {found.begin(), found.end()};
}

/// Reconstruct a progression from its element set, if the sorted elements are
/// equally spaced (length >= 3).
inline std::optional<ArithmeticProgression> ap_from_elements(std::vector<Vertex> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (elems.size() < 3) return std::nullopt;
    const Vertex d = elems[1] - elems[0];
    if (d < 1) return std::nullopt;
    for (std::size_t i = 2; i < elems.size(); ++i)
        if (elems[i] - elems[i - 1] != d) return std::nullopt;
    return ArithmeticProgression{elems[0], d, static_cast<int>(elems.size())};
}

/// All q-APs entirely contained in the subset, lexicographic (first, diff).
/// Every such progression is pinned by its first two elements, so the scan is
/// over ordered element pairs.
inline std::vector<ArithmeticProgression> aps_in_subset(const GroundSubset& s, int q) {
    if (q < 3) throw std::invalid_argument("aps_in_subset: length must be >= 3");
    std::vector<ArithmeticProgression> out;
    if (s.elements.size() < static_cast<std::size_t>(q)) return out;
    std::vector<char> in(static_cast<std::size_t>(s.n) + 1, 0);
    for (Vertex v : s.elements) in[static_cast<std::size_t>(v)] = 1;

    const auto& e = s.elements;
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            const Vertex d = e[j] - e[i];
            const Vertex last = e[i] + static_cast<Vertex>(q - 1) * d;
            if (last > s.n) break;
            bool ok = true;
            for (int k = 2; k < q; ++k) {
                if (!in[static_cast<std::size_t>(e[i] + static_cast<Vertex>(k) * d)]) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.push_back({e[i], d, q});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace vdw
