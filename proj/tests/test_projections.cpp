#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "residua/projections.hpp"

using namespace residua;

namespace {

std::vector<std::string> comp_strings(const ProjectedSystem& ps) {
    std::vector<std::string> out;
    for (const auto& c : ps.components) out.push_back(component_str(c));
    return out;
}

std::size_t expected_root_count(const ProjectedComponent& c) {
    std::size_t n = c.rank;
    if (c.type == "A") return n * (n + 1);
    if (c.type == "B" || c.type == "C") return 2 * n * n;
    if (c.type == "D") return 2 * n * (n - 1);
    if (c.type == "BC") return 2 * n * n + 2 * n;
    if (c.type == "A1") return 2;
    FAIL("unknown type ", c.type);
    return 0;
}

Rational dot(const RVec& x, const RVec& y) {
    Rational acc(0);
    for (std::size_t i = 0; i < x.size(); ++i) acc = acc + x[i] * y[i];
    return acc;
}

void for_each_proper_subset(std::size_t rank, const std::function<void(std::vector<std::size_t>)>& f) {
    for (unsigned mask = 1; mask + 1 < (1u << rank); ++mask) {
        std::vector<std::size_t> kept;
        for (std::size_t i = 0; i < rank; ++i)
            if (mask & (1u << i)) kept.push_back(i);
        f(kept);
    }
}

} // namespace

TEST_SUITE("subsets") {
    TEST_CASE("validation") {
        RootSystemSpec b3(Kind::B, 3);
        CHECK_THROWS_AS(ThetaSubset(b3, {}), std::invalid_argument);
        CHECK_THROWS_AS(ThetaSubset(b3, {0, 1, 2}), std::invalid_argument);
        CHECK_THROWS_AS(ThetaSubset(b3, {3}), std::invalid_argument);
        CHECK(ThetaSubset(b3, {0, 2}).removed() == std::vector<std::size_t>{1});
    }
}

TEST_SUITE("projection geometry") {
    TEST_CASE("kept roots vanish, removed roots span") {
        for (Kind k : {Kind::A, Kind::B, Kind::C, Kind::D}) {
            std::size_t rank = 4;
            RootSystemSpec spec(k, rank);
            auto simples = simple_roots(spec);
            for_each_proper_subset(rank, [&](std::vector<std::size_t> kept) {
                ThetaSubset th(spec, kept);
                for (std::size_t i : kept) {
                    auto p = project_vector(th, simples[i]);
                    for (const auto& x : p) CHECK(x == Rational(0));
                }
                auto ps = project_roots(th);
                CHECK(ps.delta.size() == th.removed().size());
                for (const auto& d : ps.delta) {
                    bool nonzero = false;
                    for (const auto& x : d) nonzero = nonzero || x != Rational(0);
                    CHECK(nonzero);
                }
            });
        }
    }

    TEST_CASE("projection is idempotent and orthogonal") {
        ThetaSubset th(RootSystemSpec(Kind::B, 4), {0, 2});
        auto p = project_vector(th, {HalfInt(1), HalfInt(0), HalfInt(0), HalfInt(0)});
        CHECK(p == RVec{Rational(1, 2), Rational(1, 2), Rational(0), Rational(0)});
        // the residue e1 - p lies in span(Theta): orthogonal to p
        RVec res{Rational(1) - p[0], Rational(0) - p[1], Rational(0) - p[2], Rational(0) - p[3]};
        CHECK(dot(res, p) == Rational(0));
    }
}

TEST_SUITE("projected components") {
    TEST_CASE("frozen examples") {
        auto ps1 = project_roots(ThetaSubset(RootSystemSpec(Kind::B, 4), {0, 2}));
        CHECK(comp_strings(ps1) == std::vector<std::string>{"BC2"});
        CHECK(ps1.sigma.size() == 28);

        auto ps2 = project_roots(ThetaSubset(RootSystemSpec(Kind::B, 4), {0}));
        CHECK(comp_strings(ps2) == std::vector<std::string>{"BC1", "B2"});

        auto ps3 = project_roots(ThetaSubset(RootSystemSpec(Kind::A, 5), {0, 2, 4}));
        CHECK(comp_strings(ps3) == std::vector<std::string>{"A2"});

        auto ps4 = project_roots(ThetaSubset(RootSystemSpec(Kind::C, 4), {0, 2}));
        CHECK(comp_strings(ps4) == std::vector<std::string>{"C2"});

        auto ps5 = project_roots(ThetaSubset(RootSystemSpec(Kind::D, 4), {0, 2}));
        CHECK(comp_strings(ps5) == std::vector<std::string>{"C2"});

        auto ps6 = project_roots(ThetaSubset(RootSystemSpec(Kind::B, 3), {2}));
        CHECK(comp_strings(ps6) == std::vector<std::string>{"B2"});

        auto ps7 = project_roots(ThetaSubset(RootSystemSpec(Kind::C, 3), {2}));
        CHECK(comp_strings(ps7) == std::vector<std::string>{"BC2"});

        auto ps8 = project_roots(ThetaSubset(RootSystemSpec(Kind::D, 4), {0, 1}));
        CHECK(comp_strings(ps8) == std::vector<std::string>{"A11"});
    }

    TEST_CASE("component axioms") {
        for (Kind k : {Kind::A, Kind::B, Kind::C, Kind::D}) {
            std::size_t rank = k == Kind::A ? 4u : 5u;
            RootSystemSpec spec(k, rank);
            for_each_proper_subset(rank, [&](std::vector<std::size_t> kept) {
                ThetaSubset th(spec, kept);
                auto ps = project_roots(th);
                for (const auto& c : ps.components) {
                    CHECK(c.roots.size() == expected_root_count(c));
                    std::set<RVec> all(c.roots.begin(), c.roots.end());
                    CHECK(all.size() == c.roots.size());
                    for (const auto& r : c.roots) {
                        RVec neg = r;
                        for (auto& x : neg) x = -x;
                        CHECK(all.count(neg));
                        CHECK(dot(r, r) != Rational(0));
                    }
                }
            });
        }
    }
}

TEST_SUITE("regularity condition") {
    TEST_CASE("frozen cases") {
        CHECK(theta_condition(ThetaSubset(RootSystemSpec(Kind::B, 4), {0, 2})));
        CHECK(!theta_condition(ThetaSubset(RootSystemSpec(Kind::B, 4), {0})));
        CHECK(theta_condition(ThetaSubset(RootSystemSpec(Kind::A, 5), {0, 2, 4})));
        // keeping the two outer roots of a rank-4 chain leaves unequal blocks
        CHECK(!theta_condition(ThetaSubset(RootSystemSpec(Kind::A, 4), {0, 3})));
        CHECK(theta_condition(ThetaSubset(RootSystemSpec(Kind::C, 4), {0, 2})));
        CHECK(!theta_condition(ThetaSubset(RootSystemSpec(Kind::B, 5), {1, 2, 4})));
        CHECK(block_sizes(ThetaSubset(RootSystemSpec(Kind::B, 4), {0})) ==
              std::vector<std::size_t>{2, 1, 1});
        CHECK(block_sizes(ThetaSubset(RootSystemSpec(Kind::B, 4), {0, 2})) ==
              std::vector<std::size_t>{2, 2});
    }

    TEST_CASE("condition gives a full-rank component") {
        for (Kind k : {Kind::A, Kind::B, Kind::C, Kind::D}) {
            std::size_t rank = 5;
            RootSystemSpec spec(k, rank);
            for_each_proper_subset(rank, [&](std::vector<std::size_t> kept) {
                ThetaSubset th(spec, kept);
                if (!theta_condition(th)) return;
                auto ps = project_roots(th);
                bool full = false;
                for (const auto& c : ps.components) full = full || c.rank == th.removed().size();
                CHECK(full);
            });
        }
    }
}

TEST_SUITE("combination property") {
    TEST_CASE("holds on the frozen subsets") {
        for (auto [k, r, kept] : std::vector<std::tuple<Kind, std::size_t, std::vector<std::size_t>>>{
                 {Kind::B, 4, {0, 2}}, {Kind::B, 4, {0}}, {Kind::A, 5, {0, 2, 4}},
                 {Kind::C, 4, {0, 2}}, {Kind::D, 4, {0, 2}}, {Kind::B, 5, {1, 2, 4}}}) {
            ThetaSubset th(RootSystemSpec(k, r), kept);
            CHECK(unique_same_sign_combinations(project_roots(th)));
        }
    }
}
