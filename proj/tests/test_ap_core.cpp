#include "doctest.h"

#include <numeric>
#include <set>

#include "oracles.hpp"
#include "vdw/ap.hpp"
#include "vdw/hypergraph.hpp"
#include "vdw/rng.hpp"

using namespace vdw;

namespace {
std::set<Vertex> to_set(const ArithmeticProgression& ap) {
    auto e = ap.elements();
    return {e.begin(), e.end()};
}
}  // namespace

TEST_CASE("enumerate_aps matches the brute-force double loop") {
    SUBCASE("n=5 q=3 gives the four classical progressions") {
        const auto aps = enumerate_aps(5, 3);
        REQUIRE(aps.size() == 4);
        std::set<std::set<Vertex>> sets;
        for (const auto& ap : aps) sets.insert(to_set(ap));
        CHECK(sets == std::set<std::set<Vertex>>{
                          {1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {1, 3, 5}});
    }
    SUBCASE("ground set shorter than q is empty") {
        CHECK(enumerate_aps(2, 3).empty());
    }
    SUBCASE("n=9 q=3 has 16 progressions") {
        CHECK(enumerate_aps(9, 3).size() == 16);
        CHECK(oracle::count_aps(9, 3) == 16);
    }
    SUBCASE("lexicographic (first, diff) order and count formula, n <= 64") {
        for (Vertex n : {1, 2, 5, 17, 40, 64}) {
            for (int q : {3, 4, 5}) {
                const auto aps = enumerate_aps(n, q);
                CHECK(std::is_sorted(aps.begin(), aps.end()));
                CHECK(std::adjacent_find(aps.begin(), aps.end()) == aps.end());
                CHECK(static_cast<std::int64_t>(aps.size()) == oracle::count_aps(n, q));
                CHECK(static_cast<std::int64_t>(aps.size()) == count_aps(n, q));
            }
        }
    }
}

TEST_CASE("ap_degree case formula") {
    CHECK(ap_degree(1, 9, 3) == 4);
    CHECK(ap_degree(1, 2, 3) == 0);
    CHECK_THROWS_AS(ap_degree(0, 9, 3), std::domain_error);
    CHECK_THROWS_AS(ap_degree(10, 9, 3), std::domain_error);

    SUBCASE("equals brute force and stays <= n") {
        for (Vertex n : {1, 7, 23, 60}) {
            for (int q : {3, 4, 5}) {
                std::int64_t sum = 0;
                for (Vertex k = 1; k <= n; ++k) {
                    const auto d = ap_degree(k, n, q);
                    CHECK(d == oracle::degree(k, n, q));
                    CHECK(d <= n);
                    sum += d;
                }
                // Every progression is counted once per element.
                CHECK(sum == q * count_aps(n, q));
            }
        }
    }
}

TEST_CASE("aps_through_points") {
    SUBCASE("two points in [9]") {
        const auto got = aps_through_points({1, 3}, 9, 3);
        REQUIRE(got.size() == 2);
        CHECK(to_set(got[0]) == std::set<Vertex>{1, 2, 3});
        CHECK(to_set(got[1]) == std::set<Vertex>{1, 3, 5});
    }
    SUBCASE("single point agrees with ap_degree") {
        for (Vertex n : {5, 12, 30})
            for (int q : {3, 4})
                for (Vertex k = 1; k <= n; ++k)
                    CHECK(static_cast<std::int64_t>(aps_through_points({k}, n, q).size()) ==
                          ap_degree(k, n, q));
    }
    SUBCASE("four points never fit in a 3-AP") {
        CHECK(aps_through_points({1, 2, 3, 4}, 9, 3).empty());
    }
    SUBCASE("empty point set is a domain error") {
        CHECK_THROWS_AS(aps_through_points({}, 9, 3), std::domain_error);
    }
    SUBCASE("pair determination bound: at most q^2 results, all pairs of [100]") {
        for (int q : {3, 4, 5}) {
            const Vertex n = 100;
            for (Vertex x = 1; x <= n; ++x) {
                for (Vertex y = x + 1; y <= n; ++y) {
                    const auto got = aps_through_points({x, y}, n, q);
                    CHECK(static_cast<int>(got.size()) <= q * q);
                    for (const auto& ap : got) {
                        CHECK(ap.contains(x));
                        CHECK(ap.contains(y));
                    }
                }
            }
        }
    }
}

TEST_CASE("ap_intersection") {
    const ArithmeticProgression a{1, 1, 5}, b{1, 2, 5};
    CHECK(ap_intersection(a, b) == std::vector<Vertex>{1, 3, 5});

    SUBCASE("identical progressions intersect fully") {
        CHECK(ap_intersection(b, b).size() == 5);
    }
    SUBCASE("disjoint ranges") {
        CHECK(ap_intersection({1, 1, 4}, {20, 3, 4}).empty());
    }
    SUBCASE("gcd bound over equal-length pairs") {
        const Vertex n = 120;
        for (int q1 : {4, 5}) {
            for (Vertex da = 1; da <= 8; ++da) {
                for (Vertex db = da + 1; db <= 8; ++db) {
                    const Vertex g = std::gcd(da, db);
                    const Vertex bound = (q1 * g + db - 1) / db;
                    for (Vertex fa = 1; fa + (q1 - 1) * da <= n; fa += 3) {
                        for (Vertex fb = 1; fb + (q1 - 1) * db <= n; fb += 3) {
                            const auto inter =
                                ap_intersection({fa, da, q1}, {fb, db, q1});
                            CHECK(static_cast<Vertex>(inter.size()) <= bound);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("ap_residues_mod") {
    SUBCASE("size formula examples") {
        CHECK(ap_residues_mod({1, 2, 5}, 4) == std::vector<Vertex>{1, 3});
        CHECK(ap_residues_mod({1, 1, 6}, 6).size() == 6);
        CHECK(ap_residues_mod({3, 8, 5}, 4).size() == 1);  // diff multiple of modulus
    }
    SUBCASE("size formula and periodicity on small sweeps") {
        for (Vertex first = 1; first <= 12; ++first) {
            for (Vertex d = 1; d <= 15; ++d) {
                for (int len : {3, 5, 8, 10}) {
                    for (Vertex mod = 1; mod <= 30; ++mod) {
                        const ArithmeticProgression ap{first, d, len};
                        const auto res = ap_residues_mod(ap, mod);
                        const Vertex t = mod / std::gcd(mod, d);
                        CHECK(static_cast<Vertex>(res.size()) ==
                              std::min<Vertex>(t, len));
                        for (int i = 0; i + t < len; ++i)
                            CHECK((ap.element(i) - ap.element(i + static_cast<int>(t))) % mod ==
                                  0);
                    }
                }
            }
        }
    }
}

TEST_CASE("count_common_cover_pairs agrees with the exhaustive double loop") {
    SUBCASE("x=1 y=2 q=3 small boards") {
        for (Vertex n : {4, 12, 30}) {
            const auto fast = count_common_cover_pairs(1, 2, 3, n);
            auto slow = oracle::common_cover_pairs(1, 2, 3, n);
            std::sort(slow.begin(), slow.end());
            CHECK(fast == slow);
        }
    }
    SUBCASE("other anchor pairs") {
        for (auto [x, y] : std::vector<std::pair<Vertex, Vertex>>{{3, 7}, {2, 9}, {5, 6}}) {
            const auto fast = count_common_cover_pairs(x, y, 3, 25);
            auto slow = oracle::common_cover_pairs(x, y, 3, 25);
            std::sort(slow.begin(), slow.end());
            CHECK(fast == slow);
        }
    }
    SUBCASE("result saturates in n") {
        const auto small = count_common_cover_pairs(1, 2, 3, 100);
        const auto large = count_common_cover_pairs(1, 2, 3, 10000);
        CHECK(small.size() == large.size());
    }
    SUBCASE("x == y is a domain error") {
        CHECK_THROWS_AS(count_common_cover_pairs(4, 4, 3, 10), std::domain_error);
    }
}

TEST_CASE("random_subset determinism and edge probabilities") {
    SUBCASE("p = 0 and p = 1") {
        CHECK(random_subset({50, 0.0, 7}).empty());
        const auto full = random_subset({50, 1.0, 7});
        CHECK(full.elements == GroundSubset::full(50).elements);
    }
    SUBCASE("same params give the same subset") {
        const auto a = random_subset({256, 0.37, 123456789});
        const auto b = random_subset({256, 0.37, 123456789});
        CHECK(a.elements == b.elements);
        const auto c = random_subset({256, 0.37, 123456790});
        CHECK(a.elements != c.elements);
    }
    SUBCASE("inclusion rate is plausible") {
        const auto s = random_subset({100000, 0.25, 42});
        CHECK(s.size() > 23500);
        CHECK(s.size() < 26500);
    }
}

TEST_CASE("induced_hypergraph") {
    SUBCASE("subset {1,2,3,5} of [5]") {
        const GroundSubset s(5, {1, 2, 3, 5});
        const auto h = induced_hypergraph(s, {3});
        REQUIRE(h.long_edges().size() == 2);
        CHECK(to_set(h.long_edges()[0]) == std::set<Vertex>{1, 2, 3});
        CHECK(to_set(h.long_edges()[1]) == std::set<Vertex>{1, 3, 5});
        CHECK(h.short_edges().empty());
    }
    SUBCASE("empty subset has no edges") {
        const auto h = induced_hypergraph(GroundSubset(9, {}), {4, 3});
        CHECK(h.edge_count() == 0);
    }
    SUBCASE("full subset reproduces the plain enumeration") {
        for (Vertex n : {9, 25}) {
            const auto h = induced_hypergraph(GroundSubset::full(n), {4, 3});
            CHECK(h.long_edges() == enumerate_aps(n, 4));
            CHECK(h.short_edges() == enumerate_aps(n, 3));
        }
    }
    SUBCASE("vertex index inverts edge membership") {
        const auto s = random_subset({60, 0.5, 11});
        const auto h = induced_hypergraph(s, {4, 3});
        for (Vertex v : h.incident_vertices()) {
            for (EdgeRef r : h.incident(v)) CHECK(h.edge(r).contains(v));
        }
        std::size_t incidences = 0;
        for (Vertex v : h.incident_vertices()) incidences += h.incident(v).size();
        CHECK(incidences == h.long_edges().size() * 4 + h.short_edges().size() * 3);
    }
}
