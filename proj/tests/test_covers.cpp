#include <catch_amalgamated.hpp>

#include <map>
#include <random>

#include "testkit/corpus.hpp"
#include "testkit/oracles.hpp"
#include "tsc/cohen_macaulay.hpp"
#include "tsc/covers.hpp"
#include "tsc/error.hpp"
#include "tsc/total_complex.hpp"

using namespace tsc;

namespace {

SimplicialComplex make(std::vector<Face> facets)
{
    return SimplicialComplex::from_facets(std::move(facets));
}

bool hits_all(const SimplicialComplex& c, const Face& cover)
{
    for (const Face& f : c.facets()) {
        bool hit = false;
        for (int v : f)
            hit = hit || std::binary_search(cover.begin(), cover.end(), v);
        if (!hit)
            return false;
    }
    return true;
}

std::map<int, int> size_histogram(const CoverReport& r)
{
    std::map<int, int> h;
    for (const Face& c : r.covers)
        ++h[static_cast<int>(c.size())];
    return h;
}

} // namespace

TEST_CASE("covers of small complexes", "[covers]")
{
    const auto s = minimal_vertex_covers(make({{1, 2, 3}}));
    CHECK(s.covers == std::vector<Face>{{1}, {2}, {3}});
    CHECK(s.cardinalities == std::vector<int>{1, 1, 1});
    CHECK(s.unmixed);
    CHECK(is_unmixed(make({{1, 2}})));

    const auto path = minimal_vertex_covers(make({{1, 2}, {2, 3}}));
    CHECK(path.covers == std::vector<Face>{{1, 3}, {2}});
    CHECK(path.cardinalities == std::vector<int>{1, 2});
    CHECK_FALSE(path.unmixed);
}

TEST_CASE("covers of friendship complexes", "[covers]")
{
    const auto f6 = minimal_vertex_covers(build_tsc(gen_friendship(1)));
    CHECK(f6.covers.size() == 15);
    CHECK(size_histogram(f6) == std::map<int, int>{{4, 15}});
    CHECK(f6.unmixed);

    const auto c11 = build_tsc(gen_friendship(2));
    const auto f11 = minimal_vertex_covers(c11);
    CHECK(f11.covers == oracle::covers_by_subsets(c11));
    CHECK(size_histogram(f11) == std::map<int, int>{{7, 55}, {8, 9}});
    CHECK_FALSE(f11.unmixed);
    CHECK(std::find(f11.covers.begin(), f11.covers.end(),
                    Face{1, 3, 4, 5, 6, 7, 8, 9}) != f11.covers.end());

    const auto f16 = minimal_vertex_covers(build_tsc(gen_friendship(3)));
    CHECK(size_histogram(f16) == std::map<int, int>{{10, 252}, {12, 13}});
}

TEST_CASE("closed-form cover count", "[covers]")
{
    CHECK(friendship_cover_count(2) == 55);
    CHECK(friendship_cover_count(3) == 252);
    CHECK(friendship_cover_count(4) == 3 * 3 * (32 + 76 + 9));
    CHECK_THROWS_AS(friendship_cover_count(1), DomainError);
    CHECK_THROWS_AS(friendship_cover_count(0), DomainError);
}

TEST_CASE("c42 fixture covers", "[covers][c42]")
{
    const auto rep = minimal_vertex_covers(c42_fixture());
    CHECK(rep.covers.size() == 34);
    CHECK(size_histogram(rep) == std::map<int, int>{{6, 6}, {7, 28}});
    CHECK_FALSE(rep.unmixed);
    CHECK(std::find(rep.covers.begin(), rep.covers.end(), Face{1, 4, 5, 6, 8, 9}) != rep.covers.end());
    CHECK(std::find(rep.covers.begin(), rep.covers.end(), Face{1, 2, 4, 5, 6, 8, 10}) !=
          rep.covers.end());
    CHECK_FALSE(is_unmixed(c42_fixture()));

    const auto built = minimal_vertex_covers(build_tsc(gen_c42()));
    CHECK(size_histogram(built) == std::map<int, int>{{6, 6}, {7, 27}});
}

TEST_CASE("decomposition", "[covers][decompose]")
{
    const auto d = facet_ideal_decomposition(make({{1, 2}, {2, 3}}));
    CHECK(to_string(d) == "(x1,x3) ∩ (x2)");
    REQUIRE(d.size() == 2);
    CHECK(d[0].variables == Face{1, 3});
    CHECK(to_string(facet_ideal_decomposition(make({{1, 2, 3}}))) == "(x1) ∩ (x2) ∩ (x3)");

    const auto c = build_tsc(gen_friendship(2));
    const auto comps = facet_ideal_decomposition(c);
    const auto covers = minimal_vertex_covers(c).covers;
    REQUIRE(comps.size() == covers.size());
    for (std::size_t i = 0; i < comps.size(); ++i)
        REQUIRE(comps[i].variables == covers[i]);
}

TEST_CASE("stanley-reisner generators", "[covers][sr]")
{
    CHECK(stanley_reisner_generators(make({{1, 2}, {2, 3}, {1, 3}})) == std::vector<Face>{{1, 2, 3}});
    CHECK(stanley_reisner_generators(make({{1, 2, 3, 4}})).empty());
    CHECK(stanley_reisner_generators(make({{1}, {2}})) == std::vector<Face>{{1, 2}});

    const auto f6 = stanley_reisner_generators(build_tsc(gen_friendship(1)));
    CHECK(f6.size() == 15);
    for (const Face& g : f6)
        CHECK(g.size() == 4);

    for (const auto& [name, c] : corpus::named_complexes()) {
        if (c.vertices().size() > 12)
            continue;
        INFO(name);
        CHECK(stanley_reisner_generators(c) == oracle::minimal_nonfaces_by_subsets(c));
    }
}

TEST_CASE("cover enumeration matches the subset oracle", "[covers][oracle]")
{
    for (const auto& [name, c] : corpus::named_complexes()) {
        if (c.vertices().size() > 16)
            continue;
        INFO(name);
        CHECK(minimal_vertex_covers(c).covers == oracle::covers_by_subsets(c));
    }
    for (const auto& g : corpus::all_graphs(5)) {
        const auto c = build_tsc(g);
        if (c.vertices().size() > 16)
            continue;
        REQUIRE(minimal_vertex_covers(c).covers == oracle::covers_by_subsets(c));
    }
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> count(1, 9), size(1, 4), vert(1, 14);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Face> facets;
        for (int i = count(rng); i > 0; --i) {
            Face f;
            for (int k = size(rng); k > 0; --k)
                f.push_back(vert(rng));
            facets.push_back(f);
        }
        const auto c = make(facets);
        REQUIRE(minimal_vertex_covers(c).covers == oracle::covers_by_subsets(c));
    }
}

TEST_CASE("covers are minimal transversals", "[covers][property]")
{
    for (const auto& [name, c] : corpus::named_complexes()) {
        const auto rep = minimal_vertex_covers(c);
        std::map<int, int> hist;
        for (const Face& cover : rep.covers) {
            REQUIRE(hits_all(c, cover));
            for (std::size_t drop = 0; drop < cover.size(); ++drop) {
                Face smaller = cover;
                smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
                REQUIRE_FALSE(hits_all(c, smaller));
            }
        }
        REQUIRE(std::is_sorted(rep.covers.begin(), rep.covers.end()));
        REQUIRE(std::adjacent_find(rep.covers.begin(), rep.covers.end()) == rep.covers.end());
        REQUIRE(std::is_sorted(rep.cardinalities.begin(), rep.cardinalities.end()));
        REQUIRE(rep.unmixed == (rep.cardinalities.front() == rep.cardinalities.back()));
    }
}

TEST_CASE("CM complexes that are mixed", "[covers][cm]")
{
    // Cohen-Macaulayness of the Stanley-Reisner ring does not force the facet
    // ideal to be unmixed: Δ_T(F11) is CM yet has covers of sizes 7 and 8.
    const auto c = build_tsc(gen_friendship(2));
    CHECK(is_cm(c).verdict);
    CHECK_FALSE(is_unmixed(c));
    // In the other direction the implication holds trivially on simplices.
    CHECK(is_cm(make({{1, 2, 3}})).verdict);
    CHECK(is_unmixed(make({{1, 2, 3}})));
}
