#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

#include "residua/rootsys.hpp"
#include "residua/dynkin.hpp"
#include "residua/segments.hpp"

using namespace residua;

namespace {

ResidualSegment seg(Kind k, const std::string& s) { return segment_parse(k, s); }

std::vector<HalfInt> abs_sorted(const std::vector<HalfInt>& v) {
    std::vector<HalfInt> out;
    out.reserve(v.size());
    for (auto x : v) out.push_back(x.abs());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

// All weakly decreasing vectors of the given size with doubled entries in
// [0, max_doubled], stepping by the given doubled increment.
void sweep_dominant(std::size_t size, int max_doubled, int step,
                    const std::function<void(const std::vector<HalfInt>&)>& f) {
    std::vector<int> cur(size, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int hi) {
        if (i == size) {
            std::vector<HalfInt> v;
            for (int d : cur) v.push_back(HalfInt::from_doubled(d));
            f(v);
            return;
        }
        for (int d = hi; d >= 0; d -= step) {
            cur[i] = d;
            rec(i + 1, d);
        }
    };
    rec(0, max_doubled);
}

} // namespace

TEST_SUITE("linear segments") {
    TEST_CASE("values and length") {
        LinearSegment s(HalfInt(3), HalfInt(-1));
        CHECK(s.length() == 5);
        CHECK(s.values() == std::vector<HalfInt>{HalfInt(3), HalfInt(2), HalfInt(1), HalfInt(0), HalfInt(-1)});
        CHECK(s.midpoint_twice() == HalfInt(2));
        LinearSegment h(HalfInt::half(5), HalfInt::half(5));
        CHECK(h.length() == 1);
        CHECK(h.midpoint_twice() == HalfInt(5));
    }

    TEST_CASE("construction rejections") {
        CHECK_THROWS_AS(LinearSegment(HalfInt(1), HalfInt(2)), std::invalid_argument);
        CHECK_THROWS_AS(LinearSegment(HalfInt(2), HalfInt::half(1)), std::invalid_argument);
    }

    TEST_CASE("text form") {
        CHECK(linear_str(LinearSegment(HalfInt(5), HalfInt(-4))) == "(5,-4)");
        CHECK(linear_str(LinearSegment(HalfInt::half(7), HalfInt::half(-1))) == "(7/2,-1/2)");
    }
}

TEST_SUITE("jumps") {
    TEST_CASE("rank-14 string") {
        auto s = seg(Kind::B, "54433222111100");
        auto j = jumps_of(s);
        CHECK(jumps_str(j) == "5,4,2,1,0");
        CHECK(jordan_of(s) == Partition{11, 9, 5, 3, 1});
        CHECK(segment_from_jumps(j, 14) == s);
    }

    TEST_CASE("rank-9 strings") {
        auto b = seg(Kind::B, "543322110");
        CHECK(jumps_str(jumps_of(b)) == "5,3,0");
        CHECK(jordan_of(b) == Partition{11, 7, 1});

        auto d = seg(Kind::D, "765432110");
        CHECK(jumps_str(jumps_of(d)) == "7,1");
        CHECK(jordan_of(d) == Partition{15, 3});
    }

    TEST_CASE("half-integral strings") {
        ResidualSegment c{Kind::C, {HalfInt::half(5), HalfInt::half(3), HalfInt::half(1), HalfInt::half(1)}};
        CHECK(jumps_str(jumps_of(c)) == "5/2,1/2");
        CHECK(jordan_of(c) == Partition{6, 2});
        CHECK(segment_from_jumps(jumps_of(c), 4) == c);
    }

    TEST_CASE("single-part type A") {
        ResidualSegment a{Kind::A, {HalfInt(2), HalfInt(1), HalfInt(0), HalfInt(-1), HalfInt(-2)}};
        CHECK(jumps_of(a).jumps == std::vector<HalfInt>{HalfInt(2)});
        CHECK(jordan_of(a) == Partition{5});
    }

    TEST_CASE("round trip over all small distinguished strings") {
        for (Kind k : {Kind::A, Kind::B, Kind::C, Kind::D}) {
            for (std::size_t r = (k == Kind::D ? 2u : 1u); r <= 11; ++r) {
                RootSystemSpec spec(k, r);
                for (const auto& p : distinguished_partitions(spec)) {
                    auto s = partition_to_segment(spec, p);
                    CHECK(jordan_of(s) == p);
                    CHECK(segment_from_jumps(jumps_of(s), r) == s);
                }
            }
        }
    }
}

TEST_SUITE("residual points") {
    TEST_CASE("frozen values") {
        CHECK(default_epsilon(Kind::B) == HalfInt(1));
        CHECK(default_epsilon(Kind::C) == HalfInt::half(1));

        CHECK(is_residual_point(RootSystemSpec(Kind::B, 3), {HalfInt(3), HalfInt(2), HalfInt(1)}));
        CHECK(!is_residual_point(RootSystemSpec(Kind::B, 3), {HalfInt(1), HalfInt(0), HalfInt(0)}));
        CHECK(is_residual_point(RootSystemSpec(Kind::A, 2), {HalfInt(2), HalfInt(1), HalfInt(0)}));
        CHECK(!is_residual_point(RootSystemSpec(Kind::A, 1), {HalfInt(2), HalfInt(0)}));
        CHECK(is_residual_point(RootSystemSpec(Kind::D, 3), {HalfInt(2), HalfInt(1), HalfInt(0)}));
        CHECK(is_residual_point(RootSystemSpec(Kind::C, 1), {HalfInt::half(1)}));

        // Custom evaluation point shifts the type B short-root condition.
        CHECK(is_residual_point(RootSystemSpec(Kind::C, 4),
                                {HalfInt::half(7), HalfInt::half(5), HalfInt::half(3), HalfInt::half(1)},
                                HalfInt::half(1)));
    }

    TEST_CASE("invariance under the Weyl action") {
        std::mt19937 rng(20260826);
        for (Kind k : {Kind::A, Kind::B, Kind::C, Kind::D}) {
            for (std::size_t r = (k == Kind::D ? 2u : 2u); r <= 6; ++r) {
                RootSystemSpec spec(k, r);
                for (const auto& p : distinguished_partitions(spec)) {
                    auto s = partition_to_segment(spec, p);
                    Parameter lam = s.values;
                    for (int t = 0; t < 8; ++t) {
                        std::vector<std::size_t> perm(spec.dim());
                        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
                        std::shuffle(perm.begin(), perm.end(), rng);
                        std::vector<int> sign(spec.dim(), 1);
                        if (k == Kind::B || k == Kind::C) {
                            for (std::size_t i = 0; i < sign.size(); ++i) sign[i] = (rng() & 1) ? -1 : 1;
                        } else if (k == Kind::D) {
                            int cnt = 0;
                            for (std::size_t i = 0; i < sign.size(); ++i) {
                                sign[i] = (rng() & 1) ? -1 : 1;
                                cnt += sign[i] < 0;
                            }
                            bool has_zero = std::find(lam.begin(), lam.end(), HalfInt(0)) != lam.end();
                            if ((cnt % 2) && !has_zero) sign[0] = -sign[0];
                        }
                        SignedPermutation w{perm, sign};
                        auto moved = weyl_apply(spec, w, lam);
                        CHECK(is_residual_point(spec, moved));
                    }
                }
            }
        }
    }

    TEST_CASE("exhaustive small-rank characterization") {
        // In each small rank the residual dominant points are exactly the
        // distinguished strings (compared through absolute values, which
        // determine the orbit here since every type D string has a zero).
        struct Row { Kind k; std::size_t r; int maxd; int step; };
        for (Row row : {Row{Kind::B, 2, 8, 2}, Row{Kind::B, 3, 10, 2},
                        Row{Kind::C, 2, 9, 1}, Row{Kind::C, 3, 11, 1},
                        Row{Kind::D, 3, 8, 2}, Row{Kind::D, 4, 10, 2}}) {
            RootSystemSpec spec(row.k, row.r);
            std::set<std::vector<HalfInt>> expected;
            for (const auto& p : distinguished_partitions(spec))
                expected.insert(partition_to_segment(spec, p).values);
            sweep_dominant(row.r, row.maxd, row.step, [&](const std::vector<HalfInt>& v) {
                bool res = is_residual_point(spec, v);
                bool exp = expected.count(abs_sorted(v)) > 0;
                CHECK(res == exp);
            });
        }
    }
}

TEST_SUITE("extraction and insertion") {
    TEST_CASE("frozen extractions") {
        auto b14 = seg(Kind::B, "54433222111100");
        auto [s0, r0] = extract_jump_pair(b14, 0);
        CHECK(s0 == LinearSegment(HalfInt(5), HalfInt(-4)));
        CHECK(r0 == seg(Kind::B, "2110"));

        auto [s1, r1] = extract_jump_pair(b14, 1);
        CHECK(s1 == LinearSegment(HalfInt(4), HalfInt(-2)));
        CHECK(r1 == seg(Kind::B, "5432110"));

        auto d9 = seg(Kind::D, "765432110");
        auto [sd, rd] = extract_jump_pair(d9, 0);
        CHECK(sd == LinearSegment(HalfInt(7), HalfInt(-1)));
        CHECK(rd.values.empty());
        CHECK(is_valid_residual_segment(rd));

        ResidualSegment c4{Kind::C, {HalfInt::half(5), HalfInt::half(3), HalfInt::half(1), HalfInt::half(1)}};
        auto [sc, rc] = extract_jump_pair(c4, 0);
        CHECK(sc == LinearSegment(HalfInt::half(5), HalfInt::half(-1)));
        CHECK(rc.values.empty());

        CHECK_THROWS_AS(extract_jump_pair(b14, 4), std::out_of_range);
    }

    TEST_CASE("insertion undoes extraction") {
        for (Kind k : {Kind::B, Kind::C, Kind::D}) {
            for (std::size_t r = 2; r <= 12; ++r) {
                RootSystemSpec spec(k, r);
                for (const auto& p : distinguished_partitions(spec)) {
                    auto s = partition_to_segment(spec, p);
                    auto js = jumps_of(s);
                    for (std::size_t i = 0; i + 1 < js.jumps.size(); ++i) {
                        auto [lin, rest] = extract_jump_pair(s, i);
                        CHECK(is_valid_residual_segment(rest));
                        CHECK(insert_segment(rest, lin) == s);
                    }
                }
            }
        }
    }

    TEST_CASE("no symmetric extraction survives") {
        // Removing the absolute values of a symmetric segment (a,-a) from a
        // valid string is either impossible or breaks validity.
        for (Kind k : {Kind::B, Kind::C, Kind::D}) {
            for (std::size_t r = 2; r <= 9; ++r) {
                RootSystemSpec spec(k, r);
                for (const auto& p : distinguished_partitions(spec)) {
                    auto s = partition_to_segment(spec, p);
                    for (int a2 = 0; a2 <= 12; ++a2) {
                        if (k != Kind::C && (a2 % 2)) continue;
                        if (k == Kind::C && !(a2 % 2)) continue;
                        HalfInt a = HalfInt::from_doubled(a2);
                        LinearSegment sym(a, -a);
                        if (sym.length() >= s.rank()) continue;
                        auto rem = s;
                        bool ok = true;
                        for (auto v : sym.values()) {
                            auto it = std::find(rem.values.begin(), rem.values.end(), v.abs());
                            if (it == rem.values.end()) { ok = false; break; }
                            rem.values.erase(it);
                        }
                        if (ok) CHECK(!is_valid_residual_segment(rem));
                    }
                }
            }
        }
    }
}

TEST_SUITE("merging") {
    TEST_CASE("precondition") {
        auto b14 = seg(Kind::B, "54433222111100");
        ResidualSegment empty{Kind::B, {}};
        CHECK_THROWS_AS(find_mergeable({LinearSegment(HalfInt(5), HalfInt(-4))}, empty, b14),
                        std::invalid_argument);
    }

    TEST_CASE("longer nested segment first") {
        auto b14 = seg(Kind::B, "54433222111100");
        ResidualSegment empty{Kind::B, {}};
        LinearSegment outer(HalfInt(5), HalfInt(-4));
        LinearSegment inner(HalfInt(2), HalfInt(-1));
        CHECK(find_mergeable({outer, inner}, empty, b14) == 0);
        CHECK(find_mergeable({inner, outer}, empty, b14) == 1);
    }

    TEST_CASE("zero-free segment preferred") {
        auto b7 = seg(Kind::B, "3221110");
        ResidualSegment empty{Kind::B, {}};
        LinearSegment with_zero(HalfInt(3), HalfInt(-2));
        LinearSegment zero_free(HalfInt(1), HalfInt(1));
        CHECK(is_valid_residual_segment(insert_segment(empty, with_zero)));
        CHECK(is_valid_residual_segment(insert_segment(empty, zero_free)));
        CHECK(find_mergeable({with_zero, zero_free}, empty, b7) == 1);
        CHECK(find_mergeable({zero_free, with_zero}, empty, b7) == 0);
    }

    TEST_CASE("no single insertion") {
        // Neither segment alone leaves a valid string, so no merge order works.
        auto t4 = seg(Kind::B, "2110");
        ResidualSegment tail21{Kind::B, {HalfInt(2), HalfInt(1)}};
        CHECK(find_mergeable({LinearSegment(HalfInt(0), HalfInt(0)), LinearSegment(HalfInt(1), HalfInt(1))},
                             tail21, t4) == std::nullopt);

        auto t5 = seg(Kind::B, "32110");
        ResidualSegment empty{Kind::B, {}};
        CHECK(find_mergeable({LinearSegment(HalfInt(1), HalfInt(-1)), LinearSegment(HalfInt(3), HalfInt(2))},
                             empty, t5) == std::nullopt);
    }
}

TEST_SUITE("cuspidal strings") {
    TEST_CASE("flatten and rank") {
        CuspidalString c{{LinearSegment(HalfInt(2), HalfInt(0))}, seg(Kind::B, "321")};
        CHECK(c.rank() == 6);
        CHECK(c.flatten() == std::vector<HalfInt>{HalfInt(2), HalfInt(1), HalfInt(0),
                                                  HalfInt(3), HalfInt(2), HalfInt(1)});
    }

    TEST_CASE("text round trip") {
        for (const char* text : {"(5,-4)|[2110]@B", "[543322110]@B", "(7,-1)|[]@D",
                                 "(2,0)|(1,1)|[321]@B",
                                 "(7/2,-1/2)|[5/2,3/2,1/2,1/2]@C"}) {
            auto c = cuspidal_parse(text);
            CHECK(cuspidal_str(c) == text);
            CHECK(cuspidal_parse(cuspidal_str(c)) == c);
        }
        CHECK(cuspidal_parse("(5, -4) | [2110] @ B") == cuspidal_parse("(5,-4)|[2110]@B"));
        CHECK_THROWS_AS(cuspidal_parse("(5,-4)"), std::invalid_argument);
        CHECK_THROWS_AS(cuspidal_parse("[123]@X"), std::invalid_argument);
    }
}
