#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "modcx/fixtures.hpp"

using namespace modcx;

TEST_CASE("catalog loads and metadata is re-verified") {
    for (const auto& name : FixtureCatalog::names()) {
        ArtinAlgebra r = FixtureCatalog::load(name);
        CHECK(r.dim() >= 1);
        CHECK(r.m_power_lengths().back() == 0);
    }
}

TEST_CASE("named fixture invariants") {
    ArtinAlgebra dn = FixtureCatalog::load("dual_numbers");
    CHECK(dn.dim() == 2);
    CHECK(dn.socle_length() == 1);
    CHECK(dn.gorenstein());
    CHECK(dn.ci_codim == 1);

    ArtinAlgebra e3 = FixtureCatalog::load("m2_e3");
    CHECK(e3.dim() == 4);
    CHECK(e3.socle_length() == 3);
    auto tags = fixture_tags(e3);
    CHECK(std::count(tags.begin(), tags.end(), "2r>l") == 1);
    CHECK(std::count(tags.begin(), tags.end(), "m2-zero") == 1);

    ArtinAlgebra g = FixtureCatalog::load("gor_m3");
    CHECK(g.dim() == 5);
    CHECK(g.socle_length() == 1);
    CHECK(g.gorenstein());
    CHECK_FALSE(g.ci_codim.has_value());
    auto gt = fixture_tags(g);
    CHECK(std::count(gt.begin(), gt.end(), "m3-zero") == 1);
    CHECK(std::count(gt.begin(), gt.end(), "m2-zero") == 0);

    ArtinAlgebra ng = FixtureCatalog::load("nongor_m3");
    CHECK(ng.dim() == 4);
    CHECK(ng.socle_length() == 2);
    CHECK_FALSE(ng.gorenstein());
    auto nt = fixture_tags(ng);
    CHECK(std::count(nt.begin(), nt.end(), "2r>l-2") == 1);

    CHECK_THROWS_AS(FixtureCatalog::load("no_such_ring"), input_error);
}

TEST_CASE("the 2r>l family covers every square-zero fixture") {
    std::set<std::string> expected{"m2_e2", "m2_e3", "m2_e4"};
    for (const auto& name : FixtureCatalog::names()) {
        ArtinAlgebra r = FixtureCatalog::load(name);
        auto tags = fixture_tags(r);
        bool heavy = std::count(tags.begin(), tags.end(), "2r>l") == 1;
        CHECK(heavy == (expected.count(name) == 1));
    }
}

TEST_CASE("random modules are deterministic and minimal") {
    ArtinAlgebra r = FixtureCatalog::load("ci_x2y2");
    ModulePresentation a = random_module(r, 1234);
    ModulePresentation b = random_module(r, 1234);
    CHECK(a.gens == b.gens);
    REQUIRE(a.relations.size() == b.relations.size());
    for (std::size_t i = 0; i < a.relations.size(); ++i)
        for (std::size_t j = 0; j < a.relations[i].size(); ++j)
            CHECK(a.relations[i][j].coeffs == b.relations[i][j].coeffs);

    for (std::uint64_t seed = 0; seed < 24; ++seed) {
        ModulePresentation p = random_module(r, seed);
        // entries always live inside the maximal ideal
        for (const auto& row : p.relations)
            for (const auto& e : row) CHECK(e.coeffs[r.unit_index()] == 0);
        ModuleRep m = ModuleRep::realize(r, p);
        CHECK(m.length() > 0);
        CHECK(m.min_gens() == p.gens);
    }
}

TEST_CASE("random modules respect the requested bounds") {
    ArtinAlgebra r = FixtureCatalog::load("m2_e2");
    for (std::uint64_t seed = 50; seed < 70; ++seed) {
        ModulePresentation p = random_module(r, seed, 2, 3);
        CHECK(p.gens >= 1);
        CHECK(p.gens <= 2);
        CHECK(p.relations.size() >= 1);
        CHECK(p.relations.size() <= 3);
    }
    CHECK_THROWS_AS(random_module(r, 1, 0, 3), input_error);
}
