#include "residua/orbits.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <set>
#include <stdexcept>

namespace residua {

std::size_t max_enumeration_rank() {
    if (const char* env = std::getenv("RESIDUA_MAX_RANK")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return 8;
}

DominantRep dominant_rep(const OrbitContext& ctx, const Parameter& lambda) {
    std::size_t n = ctx.spec.dim();
    if (lambda.size() != n)
        throw std::invalid_argument("dominant_rep: wrong number of coordinates");
    Parameter target(n);
    if (ctx.spec.kind == Kind::A) {
        target = lambda;
        std::sort(target.begin(), target.end(), std::greater<>());
    } else {
        for (std::size_t i = 0; i < n; ++i) target[i] = lambda[i].abs();
        std::sort(target.begin(), target.end(), std::greater<>());
        if (ctx.spec.kind == Kind::D) {
            bool has_zero = false;
            int negs = 0;
            for (HalfInt x : lambda) {
                if (x == HalfInt(0)) has_zero = true;
                if (x < HalfInt(0)) ++negs;
            }
            if (!has_zero && negs % 2 != 0) target[n - 1] = -target[n - 1];
        }
    }
    SignedPermutation w = SignedPermutation::identity(n);
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t pick = n; // prefer a source that needs no sign flip
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j] || lambda[j].abs() != target[i].abs()) continue;
            if (lambda[j] == target[i]) { pick = j; break; }
            if (pick == n) pick = j;
        }
        used[pick] = true;
        w.perm_inv[i] = pick;
        w.sign[i] = (lambda[pick] == target[i] || lambda[pick] == HalfInt(0)) ? 1 : -1;
    }
    DominantRep rep{target, w};
    if (weyl_apply(ctx.spec, rep.witness, lambda) != target)
        throw std::logic_error("dominant_rep: witness reconstruction failed");
    return rep;
}

bool orbit_equivalent(const OrbitContext& ctx, const Parameter& a, const Parameter& b) {
    if (a.size() != b.size()) return false;
    return dominant_rep(ctx, a).value == dominant_rep(ctx, b).value;
}

std::vector<Parameter> enumerate_orbit(const OrbitContext& ctx, const Parameter& lambda) {
    std::size_t n = ctx.spec.dim();
    if (lambda.size() != n)
        throw std::invalid_argument("enumerate_orbit: wrong number of coordinates");
    if (ctx.spec.rank > max_enumeration_rank())
        throw std::length_error("enumerate_orbit: rank above guard, set RESIDUA_MAX_RANK to raise");
    Parameter base = lambda;
    std::sort(base.begin(), base.end());
    bool has_zero = std::find(base.begin(), base.end(), HalfInt(0)) != base.end();
    std::set<Parameter> out;
    do {
        if (ctx.spec.kind == Kind::A) {
            out.insert(base);
            continue;
        }
        std::vector<std::size_t> nz;
        for (std::size_t i = 0; i < n; ++i)
            if (base[i] != HalfInt(0)) nz.push_back(i);
        for (std::size_t mask = 0; mask < (std::size_t{1} << nz.size()); ++mask) {
            if (ctx.spec.kind == Kind::D && !has_zero &&
                std::popcount(mask) % 2 != 0)
                continue;
            Parameter v = base;
            for (std::size_t t = 0; t < nz.size(); ++t)
                if (mask >> t & 1) v[nz[t]] = -v[nz[t]];
            out.insert(std::move(v));
        }
    } while (std::next_permutation(base.begin(), base.end()));
    return {out.begin(), out.end()};
}

long long c1(const OrbitContext& ctx, const Parameter& lambda) {
    long long count = 0;
    for (const Vec& beta : positive_roots(ctx.spec))
        if (pairing(lambda, beta) < HalfInt(0)) ++count;
    return count;
}

// splittings of the dominant multiset into (a..b) + valid residual tail
static std::vector<CuspidalString> splittings(Kind kind, const Parameter& dominant_abs,
                                              const std::vector<HalfInt>& starts) {
    std::vector<CuspidalString> out;
    for (HalfInt a : starts) {
        if (a < HalfInt(0)) continue;
        for (HalfInt b = a; b >= -a; b -= HalfInt(1)) {
            std::vector<HalfInt> pool = dominant_abs;
            bool ok = true;
            for (HalfInt v = a; v >= b && ok; v -= HalfInt(1)) {
                auto it = std::find(pool.begin(), pool.end(), v.abs());
                if (it == pool.end()) ok = false;
                else pool.erase(it);
            }
            if (!ok) continue;
            ResidualSegment tail{kind, pool};
            if (!is_valid_residual_segment(tail)) continue;
            out.push_back(CuspidalString{{LinearSegment(a, b)}, tail});
        }
    }
    return out;
}

std::vector<CuspidalString> enumerate_L(const OrbitContext& ctx, const ResidualSegment& s) {
    if (s.kind == Kind::A) return {CuspidalString{{}, s}};
    if (!is_valid_residual_segment(s))
        throw std::invalid_argument("enumerate_L: string is not residual");
    std::vector<CuspidalString> out{CuspidalString{{}, s}};
    for (CuspidalString& c : splittings(s.kind, s.values, jumps_of(s).jumps))
        out.push_back(std::move(c));
    return out;
}

std::vector<CuspidalString> enumerate_splittings(const OrbitContext& ctx,
                                                 const Parameter& lambda) {
    if (ctx.spec.kind == Kind::A)
        throw std::invalid_argument("enumerate_splittings: type A has no splittings");
    Parameter dom = dominant_rep(ctx, lambda).value;
    for (HalfInt& x : dom) x = x.abs(); // type D may end negative
    std::sort(dom.begin(), dom.end(), std::greater<>());
    std::vector<HalfInt> starts;
    for (HalfInt v : dom)
        if (starts.empty() || starts.back() != v) starts.push_back(v);
    return splittings(ctx.spec.kind, dom, starts);
}

} // namespace residua
