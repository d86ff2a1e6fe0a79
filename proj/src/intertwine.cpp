#include "residua/intertwine.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace residua {

static void check_move_kind(const OrbitContext& ctx, MoveKind kind) {
    if (kind == MoveKind::SignFlipLast &&
        (ctx.spec.kind == Kind::A || ctx.spec.kind == Kind::D))
        throw std::invalid_argument("sign flip move needs type B or C");
    if (kind == MoveKind::DReflectLastPair && ctx.spec.kind != Kind::D)
        throw std::invalid_argument("pair reflection move needs type D");
}

MoveStatus move_status(const OrbitContext& ctx, const Parameter& lambda,
                       MoveKind kind, std::size_t index) {
    check_move_kind(ctx, kind);
    std::size_t n = lambda.size();
    switch (kind) {
        case MoveKind::Transpose: {
            if (index + 1 >= n) throw std::out_of_range("move_status: transpose index");
            if (lambda[index] < lambda[index + 1]) return MoveStatus::NonGenericKernel;
            if (lambda[index] == lambda[index + 1]) return MoveStatus::Bijective;
            return MoveStatus::Forbidden;
        }
        case MoveKind::SignFlipLast: {
            if (n == 0) throw std::out_of_range("move_status: empty string");
            if (lambda[n - 1] < HalfInt(0)) return MoveStatus::NonGenericKernel;
            if (lambda[n - 1] == HalfInt(0)) return MoveStatus::Bijective;
            return MoveStatus::Forbidden;
        }
        case MoveKind::DReflectLastPair: {
            if (n < 2) throw std::out_of_range("move_status: need two coordinates");
            HalfInt sum = lambda[n - 2] + lambda[n - 1];
            if (sum < HalfInt(0)) return MoveStatus::NonGenericKernel;
            if (sum == HalfInt(0)) return MoveStatus::Bijective;
            return MoveStatus::Forbidden;
        }
    }
    throw std::logic_error("move_status: unreachable");
}

Parameter apply_move(const OrbitContext& ctx, const Parameter& lambda,
                     MoveKind kind, std::size_t index) {
    check_move_kind(ctx, kind);
    Parameter out = lambda;
    std::size_t n = out.size();
    switch (kind) {
        case MoveKind::Transpose:
            if (index + 1 >= n) throw std::out_of_range("apply_move: transpose index");
            std::swap(out[index], out[index + 1]);
            break;
        case MoveKind::SignFlipLast:
            if (n == 0) throw std::out_of_range("apply_move: empty string");
            out[n - 1] = -out[n - 1];
            break;
        case MoveKind::DReflectLastPair: {
            if (n < 2) throw std::out_of_range("apply_move: need two coordinates");
            HalfInt x = out[n - 2], y = out[n - 1];
            out[n - 2] = -y;
            out[n - 1] = -x;
            break;
        }
    }
    return out;
}

Parameter replay(const OrbitContext& ctx, const Parameter& start,
                 const std::vector<Move>& moves) {
    Parameter cur = start;
    for (const Move& m : moves) {
        MoveStatus st = move_status(ctx, cur, m.kind, m.index);
        if (st != m.status) throw std::logic_error("replay: recorded status is stale");
        if (st == MoveStatus::Forbidden) throw std::logic_error("replay: forbidden move");
        cur = apply_move(ctx, cur, m.kind, m.index);
    }
    return cur;
}

namespace {

struct PathBuilder {
    const OrbitContext& ctx;
    Parameter cur;
    std::vector<Move> moves;

    void step(MoveKind kind, std::size_t index = 0) {
        MoveStatus st = move_status(ctx, cur, kind, index);
        if (st == MoveStatus::Forbidden)
            throw std::logic_error("path_nongeneric: procedure hit a forbidden move");
        moves.push_back(Move{kind, index, st});
        cur = apply_move(ctx, cur, kind, index);
    }
};

MovePath bfs_path(const OrbitContext& ctx, const Parameter& src, const Parameter& dst) {
    constexpr std::size_t state_limit = 200000;
    std::size_t n = src.size();
    std::map<Parameter, std::pair<Parameter, Move>> parent;
    std::deque<Parameter> queue{src};
    parent.emplace(src, std::make_pair(src, Move{MoveKind::Transpose, 0, MoveStatus::Bijective}));
    auto expand = [&](const Parameter& at, MoveKind kind, std::size_t index) {
        MoveStatus st = move_status(ctx, at, kind, index);
        if (st == MoveStatus::Forbidden) return;
        Parameter next = apply_move(ctx, at, kind, index);
        if (parent.count(next)) return;
        parent.emplace(next, std::make_pair(at, Move{kind, index, st}));
        queue.push_back(std::move(next));
    };
    while (!queue.empty() && parent.size() < state_limit) {
        Parameter at = queue.front();
        queue.pop_front();
        if (at == dst) {
            MovePath p;
            p.found = true;
            for (Parameter v = dst; v != src;) {
                auto& [prev, mv] = parent.at(v);
                p.moves.push_back(mv);
                v = prev;
            }
            std::reverse(p.moves.begin(), p.moves.end());
            return p;
        }
        for (std::size_t i = 0; i + 1 < n; ++i) expand(at, MoveKind::Transpose, i);
        if (ctx.spec.kind == Kind::B || ctx.spec.kind == Kind::C)
            expand(at, MoveKind::SignFlipLast, 0);
        if (ctx.spec.kind == Kind::D) expand(at, MoveKind::DReflectLastPair, 0);
    }
    return {};
}

} // namespace

MovePath path_nongeneric(const OrbitContext& ctx, const CuspidalString& src,
                         const CuspidalString& dst, bool search) {
    Parameter from = src.flatten(), to = dst.flatten();
    if (!orbit_equivalent(ctx, from, to))
        throw std::invalid_argument("path_nongeneric: strings lie in different orbits");
    if (from == to) return MovePath{true, {}};
    bool shaped = src.linear.size() == 1 && dst.linear.size() <= 1;
    HalfInt a(0), b(0), bp(0);
    if (shaped) {
        a = src.linear[0].a;
        b = src.linear[0].b;
        bp = dst.linear.empty() ? a + HalfInt(1) : dst.linear[0].b;
        shaped = (dst.linear.empty() || dst.linear[0].a == a) && bp > b &&
                 (bp - b).is_integer();
    }
    if (!shaped) {
        if (search) return bfs_path(ctx, from, to);
        return {};
    }
    std::size_t n = from.size();
    PathBuilder pb{ctx, from, {}};
    std::size_t run = src.linear[0].length(); // current linear-run length
    try {
        for (HalfInt v = b; v < bp; v += HalfInt(1)) {
            std::size_t p = run - 1; // v sits at the end of the run
            if (v < HalfInt(0)) {
                while (p + 1 < n) pb.step(MoveKind::Transpose, p++);
                if (ctx.spec.kind == Kind::D) {
                    // With no zero to reflect against (empty tail), the last
                    // two slots hold the run end (v+1, v) and the reflection
                    // absorbs both values at once.
                    bool pair_in_run = pb.cur[n - 2] == v + HalfInt(1) &&
                                       v + HalfInt(1) < HalfInt(0) && v + HalfInt(1) < bp;
                    pb.step(MoveKind::DReflectLastPair);
                    if (pair_in_run) {
                        for (std::size_t q : {n - 2, n - 1}) {
                            while (q > run - 2 && pb.cur[q - 1] < pb.cur[q]) {
                                pb.step(MoveKind::Transpose, q - 1);
                                --q;
                            }
                        }
                        run -= 2;
                        v += HalfInt(1);
                        continue;
                    }
                    p = n - 2; // |v| landed second to last, a zero took the end
                } else {
                    pb.step(MoveKind::SignFlipLast);
                }
                while (p > run - 1 && pb.cur[p - 1] < pb.cur[p])
                    pb.step(MoveKind::Transpose, --p);
            } else {
                while (p + 1 < n && pb.cur[p] < pb.cur[p + 1])
                    pb.step(MoveKind::Transpose, p++);
            }
            --run;
        }
    } catch (const std::logic_error&) {
        if (search) return bfs_path(ctx, from, to);
        return {};
    }
    if (pb.cur != to) {
        if (search) return bfs_path(ctx, from, to);
        return {};
    }
    return MovePath{true, std::move(pb.moves)};
}

std::string case_tag_str(CaseTag t) {
    switch (t) {
        case CaseTag::DominantResidual: return "1a dominant residual";
        case CaseTag::ExtremalPair: return "1b extremal pair";
        case CaseTag::JumpTruncation: return "1c jump truncation";
        case CaseTag::OrderMinimum: return "2a order minimum";
        case CaseTag::MinimumTruncation: return "2b minimum truncation";
        case CaseTag::Unclassified: return "unclassified";
    }
    throw std::logic_error("case_tag_str: unreachable");
}

static Parameter standard_param(const CuspidalString& c) {
    // Langlands parameter of the standard module: the linear part twists by
    // its midpoint, the discrete part contributes zero. Doubled entries.
    Parameter out;
    for (const LinearSegment& s : c.linear)
        out.insert(out.end(), s.length(), s.midpoint_twice());
    out.insert(out.end(), c.tail.values.size(), HalfInt(0));
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

CaseTag classify_case(const OrbitContext& ctx, const CuspidalString& s) {
    if (s.linear.size() > 1)
        throw std::invalid_argument("classify_case: at most one linear segment");
    Parameter lambda = s.flatten();
    Parameter dom = dominant_rep(ctx, lambda).value;
    if (is_residual_point(ctx.spec, dom, ctx.epsilon)) {
        if (lambda == dom) return CaseTag::DominantResidual;
        if (s.linear.empty() || !is_valid_residual_segment(s.tail))
            return CaseTag::Unclassified;
        Parameter abs = dom;
        for (HalfInt& x : abs) x = x.abs();
        std::sort(abs.begin(), abs.end(), std::greater<>());
        JumpsSet j = jumps_of(ResidualSegment{ctx.spec.kind, abs});
        HalfInt a = s.linear[0].a, b = s.linear[0].b;
        for (std::size_t i = 0; i < j.jumps.size(); ++i) {
            if (j.jumps[i] != a) continue;
            if (i + 1 >= j.jumps.size()) break;
            if (b == -j.jumps[i + 1]) return CaseTag::ExtremalPair;
            if (b > -j.jumps[i + 1]) return CaseTag::JumpTruncation;
        }
        return CaseTag::Unclassified;
    }
    if (s.linear.size() != 1 || !is_valid_residual_segment(s.tail))
        return CaseTag::Unclassified;
    std::vector<CuspidalString> cands = enumerate_splittings(ctx, lambda);
    const CuspidalString* minimal = nullptr;
    for (const CuspidalString& c : cands) {
        bool below_all = true;
        for (const CuspidalString& o : cands)
            below_all = below_all && leq_order(ctx.spec, standard_param(c), standard_param(o));
        if (below_all) { minimal = &c; break; }
    }
    if (!minimal) return CaseTag::Unclassified;
    HalfInt a = s.linear[0].a, b = s.linear[0].b;
    HalfInt am = minimal->linear[0].a, bm = minimal->linear[0].b;
    if (a == am && b == bm) return CaseTag::OrderMinimum;
    if (a == am && b > bm) return CaseTag::MinimumTruncation;
    return CaseTag::Unclassified;
}

} // namespace residua
