#include "residua/cli.hpp"

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "residua/dynkin.hpp"
#include "residua/intertwine.hpp"
#include "residua/langlands.hpp"
#include "residua/orbits.hpp"
#include "residua/projections.hpp"
#include "residua/rootsys.hpp"
#include "residua/segments.hpp"

namespace residua::cli {

namespace {

using nlohmann::json;

json half_json(HalfInt v) {
    if (v.is_integer()) return json{{"num", v.as_integer()}, {"den", 1}};
    return json{{"num", v.doubled()}, {"den", 2}};
}

json vec_json(const std::vector<HalfInt>& v) {
    json arr = json::array();
    for (HalfInt x : v) arr.push_back(half_json(x));
    return arr;
}

Parameter parse_params(const std::string& s) {
    Parameter out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        out.push_back(HalfInt::parse(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

struct Options {
    std::string type = "B";
    std::string format = "text";
    unsigned jobs = 1; // accepted for interface stability; runs are sequential
    bool json_out() const { return format == "json"; }
    RootSystemSpec spec(std::size_t rank) const {
        return RootSystemSpec(kind_from_letter(type.at(0)), rank);
    }
    Kind kind() const { return kind_from_letter(type.at(0)); }
};

void emit(const Options& opt, const json& j, const std::string& text) {
    if (opt.json_out()) std::cout << j.dump() << "\n";
    else std::cout << text << "\n";
}

SegmentMultiset parse_multiset(const std::string& s) {
    std::vector<LinearSegment> segs;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t open = s.find('(', pos);
        if (open == std::string::npos) break;
        std::size_t comma = s.find(',', open);
        std::size_t close = s.find(')', open);
        if (comma == std::string::npos || close == std::string::npos || comma > close)
            throw std::invalid_argument("malformed segment list");
        segs.emplace_back(HalfInt::parse(s.substr(open + 1, comma - open - 1)),
                          HalfInt::parse(s.substr(comma + 1, close - comma - 1)));
        pos = close + 1;
    }
    if (segs.empty()) throw std::invalid_argument("empty segment list");
    return SegmentMultiset::of(std::move(segs));
}

std::string multiset_str(const SegmentMultiset& m) {
    std::string out;
    for (std::size_t i = 0; i < m.segs.size(); ++i) {
        if (i) out += '|';
        out += linear_str(m.segs[i]);
    }
    return out;
}

int verify_suite(std::size_t max_rank);

} // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"exact combinatorics of residual points, segments and orbits"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", opt.jobs, "worker hint (runs stay deterministic)");

    std::function<int()> action;

    // orbits
    std::size_t rank = 0;
    auto* orbits_cmd = app.add_subcommand("orbits", "list residual orbits of a system");
    orbits_cmd->add_option("--type", opt.type)->required();
    orbits_cmd->add_option("--rank", rank)->required();
    orbits_cmd->callback([&] {
        action = [&]() -> int {
            RootSystemSpec spec = opt.spec(rank);
            json arr = json::array();
            std::string text;
            for (const Partition& p : distinguished_partitions(spec)) {
                ResidualSegment s = partition_to_segment(spec, p);
                arr.push_back(json{{"partition", p},
                                   {"segment", vec_json(s.values)},
                                   {"jumps", vec_json(jumps_of(s).jumps)}});
                if (!text.empty()) text += '\n';
                text += partition_str(p) + " -> " + segment_str(s);
            }
            emit(opt, json{{"type", opt.type}, {"rank", rank}, {"orbits", arr}}, text);
            return 0;
        };
    });

    // segment subcommands
    std::string seg_in, partition_in, jumps_in, labels_in;
    auto* seg_cmd = app.add_subcommand("segment", "conversions around residual segments");
    seg_cmd->require_subcommand(1);

    auto* fp = seg_cmd->add_subcommand("from-partition", "partition -> segment");
    fp->add_option("--type", opt.type)->required();
    fp->add_option("--rank", rank)->required();
    fp->add_option("--partition", partition_in)->required();
    fp->callback([&] {
        action = [&]() -> int {
            ResidualSegment s =
                partition_to_segment(opt.spec(rank), partition_parse(partition_in));
            emit(opt, json{{"segment", vec_json(s.values)}}, segment_str(s));
            return 0;
        };
    });

    auto* tj = seg_cmd->add_subcommand("to-jumps", "segment -> jumps and Jordan block");
    tj->add_option("--type", opt.type)->required();
    tj->add_option("--segment", seg_in)->required();
    tj->callback([&] {
        action = [&]() -> int {
            ResidualSegment s = segment_parse(opt.kind(), seg_in);
            if (!is_valid_residual_segment(s))
                throw std::domain_error("string is not a residual segment");
            JumpsSet j = jumps_of(s);
            emit(opt,
                 json{{"jumps", vec_json(j.jumps)}, {"jordan", jordan_of(s)}},
                 "jumps: " + jumps_str(j) + "\njordan: " + partition_str(jordan_of(s)));
            return 0;
        };
    });

    auto* fj = seg_cmd->add_subcommand("from-jumps", "jumps -> segment");
    fj->add_option("--type", opt.type)->required();
    fj->add_option("--rank", rank)->required();
    fj->add_option("--jumps", jumps_in)->required();
    fj->callback([&] {
        action = [&]() -> int {
            JumpsSet j{opt.kind(), {}};
            for (HalfInt v : parse_params(jumps_in)) j.jumps.push_back(v);
            ResidualSegment s = segment_from_jumps(j, rank);
            emit(opt, json{{"segment", vec_json(s.values)}}, segment_str(s));
            return 0;
        };
    });

    auto* tw = seg_cmd->add_subcommand("to-wdd", "segment -> weighted diagram labels");
    tw->add_option("--type", opt.type)->required();
    tw->add_option("--segment", seg_in)->required();
    tw->callback([&] {
        action = [&]() -> int {
            WeightedDynkinDiagram d = segment_to_wdd(segment_parse(opt.kind(), seg_in));
            std::string text;
            for (std::size_t i = 0; i < d.labels.size(); ++i) {
                if (i) text += ',';
                text += std::to_string(d.labels[i]);
            }
            emit(opt, json{{"labels", d.labels}}, text);
            return 0;
        };
    });

    auto* fw = seg_cmd->add_subcommand("from-wdd", "weighted diagram labels -> segment");
    fw->add_option("--type", opt.type)->required();
    fw->add_option("--labels", labels_in)->required();
    fw->callback([&] {
        action = [&]() -> int {
            WeightedDynkinDiagram d{opt.kind(), {}};
            for (HalfInt v : parse_params(labels_in))
                d.labels.push_back(static_cast<int>(v.as_integer()));
            ResidualSegment s = wdd_to_segment(d);
            emit(opt, json{{"segment", vec_json(s.values)}}, segment_str(s));
            return 0;
        };
    });

    // residual-check
    std::string lambda_in, eps_in;
    auto* rc = app.add_subcommand("residual-check", "test a parameter for residuality");
    rc->add_option("--type", opt.type)->required();
    rc->add_option("--rank", rank)->required();
    rc->add_option("--lambda", lambda_in)->required();
    rc->add_option("--eps", eps_in, "short-root evaluation point (default 1 for B, 1/2 for C)");
    rc->callback([&] {
        action = [&]() -> int {
            RootSystemSpec spec = opt.spec(rank);
            HalfInt eps = eps_in.empty() ? default_epsilon(spec.kind) : HalfInt::parse(eps_in);
            bool res = is_residual_point(spec, parse_params(lambda_in), eps);
            emit(opt, json{{"residual", res}}, std::string("residual: ") + (res ? "true" : "false"));
            return 0;
        };
    });

    // order compare / minimize
    std::string mu_in, pi_in, segs_in;
    auto* order_cmd = app.add_subcommand("order", "Langlands-parameter order");
    order_cmd->require_subcommand(1);
    auto* oc = order_cmd->add_subcommand("compare", "mu <= pi in the prefix-sum order");
    oc->add_option("--type", opt.type)->required();
    oc->add_option("--mu", mu_in)->required();
    oc->add_option("--pi", pi_in)->required();
    oc->callback([&] {
        action = [&]() -> int {
            Parameter mu = parse_params(mu_in), pi = parse_params(pi_in);
            std::size_t r = opt.kind() == Kind::A ? mu.size() - 1 : mu.size();
            bool le = leq_order(opt.spec(r), mu, pi);
            emit(opt, json{{"leq", le}}, std::string("leq: ") + (le ? "true" : "false"));
            return 0;
        };
    });
    auto* om = order_cmd->add_subcommand("minimize", "reduce linked pairs to the minimum");
    om->add_option("--segments", segs_in)->required();
    om->callback([&] {
        action = [&]() -> int {
            SegmentMultiset m = minimize(parse_multiset(segs_in));
            json arr = json::array();
            for (const LinearSegment& s : m.segs)
                arr.push_back(json{{"a", half_json(s.a)}, {"b", half_json(s.b)}});
            emit(opt, json{{"segments", arr}}, multiset_str(m));
            return 0;
        };
    });

    // dominant
    auto* dom_cmd = app.add_subcommand("dominant", "dominant orbit representative");
    dom_cmd->add_option("--type", opt.type)->required();
    dom_cmd->add_option("--lambda", lambda_in)->required();
    dom_cmd->callback([&] {
        action = [&]() -> int {
            Parameter lam = parse_params(lambda_in);
            std::size_t r = opt.kind() == Kind::A ? lam.size() - 1 : lam.size();
            OrbitContext ctx(opt.spec(r));
            DominantRep rep = dominant_rep(ctx, lam);
            emit(opt, json{{"dominant", vec_json(rep.value)}}, vec_str(rep.value));
            return 0;
        };
    });

    // c1
    auto* c1_cmd = app.add_subcommand("c1", "count strictly negative coroot pairings");
    c1_cmd->add_option("--type", opt.type)->required();
    c1_cmd->add_option("--lambda", lambda_in)->required();
    c1_cmd->callback([&] {
        action = [&]() -> int {
            Parameter lam = parse_params(lambda_in);
            std::size_t r = opt.kind() == Kind::A ? lam.size() - 1 : lam.size();
            OrbitContext ctx(opt.spec(r));
            long long v = c1(ctx, lam);
            emit(opt, json{{"c1", v}}, std::to_string(v));
            return 0;
        };
    });

    // enumerate-L
    auto* el = app.add_subcommand("enumerate-L", "cuspidal strings attached to a residual orbit");
    el->add_option("--type", opt.type)->required();
    el->add_option("--segment", seg_in)->required();
    el->callback([&] {
        action = [&]() -> int {
            ResidualSegment s = segment_parse(opt.kind(), seg_in);
            OrbitContext ctx(RootSystemSpec(s.kind, s.rank()));
            json arr = json::array();
            std::string text;
            for (const CuspidalString& c : enumerate_L(ctx, s)) {
                arr.push_back(cuspidal_str(c));
                if (!text.empty()) text += '\n';
                text += cuspidal_str(c);
            }
            emit(opt, json{{"strings", arr}}, text);
            return 0;
        };
    });

    // path
    std::string src_in, dst_in;
    bool search = false;
    auto* path_cmd = app.add_subcommand("path", "intertwining move path between strings");
    path_cmd->add_option("--type", opt.type)->required();
    path_cmd->add_option("--src", src_in)->required();
    path_cmd->add_option("--dst", dst_in)->required();
    path_cmd->add_flag("--search", search, "fall back to bounded breadth-first search");
    path_cmd->callback([&] {
        action = [&]() -> int {
            CuspidalString src = cuspidal_parse(src_in), dst = cuspidal_parse(dst_in);
            OrbitContext ctx(opt.spec(src.rank()));
            MovePath p = path_nongeneric(ctx, src, dst, search);
            if (!p.found) {
                emit(opt, json{{"found", false}}, "no path");
                return 1;
            }
            json arr = json::array();
            std::string text;
            for (const Move& m : p.moves) {
                std::string name;
                switch (m.kind) {
                    case MoveKind::Transpose: name = "transpose " + std::to_string(m.index); break;
                    case MoveKind::SignFlipLast: name = "flip-last"; break;
                    case MoveKind::DReflectLastPair: name = "reflect-pair"; break;
                }
                std::string st = m.status == MoveStatus::Bijective ? "bijective" : "kernel";
                arr.push_back(json{{"move", name}, {"status", st}});
                if (!text.empty()) text += '\n';
                text += name + " (" + st + ")";
            }
            if (text.empty()) text = "already equal";
            emit(opt, json{{"found", true}, {"moves", arr}}, text);
            return 0;
        };
    });

    // classify
    std::string string_in;
    auto* cls = app.add_subcommand("classify", "case tag of a cuspidal string");
    cls->add_option("--type", opt.type)->required();
    cls->add_option("--string", string_in)->required();
    cls->callback([&] {
        action = [&]() -> int {
            CuspidalString c = cuspidal_parse(string_in);
            OrbitContext ctx(opt.spec(c.rank()));
            CaseTag tag = classify_case(ctx, c);
            emit(opt, json{{"case", case_tag_str(tag)}}, case_tag_str(tag));
            return 0;
        };
    });

    // project
    std::string theta_in;
    auto* pj = app.add_subcommand("project", "root-system projection along Theta");
    pj->add_option("--type", opt.type)->required();
    pj->add_option("--rank", rank)->required();
    pj->add_option("--theta", theta_in, "1-based indices of the retained simple roots")->required();
    pj->callback([&] {
        action = [&]() -> int {
            std::vector<std::size_t> kept;
            for (HalfInt v : parse_params(theta_in)) {
                long long i = v.as_integer();
                if (i < 1) throw std::invalid_argument("--theta indices are 1-based");
                kept.push_back(static_cast<std::size_t>(i - 1));
            }
            ThetaSubset th(opt.spec(rank), kept);
            ProjectedSystem ps = project_roots(th);
            bool cond = theta_condition(th);
            json comps = json::array();
            std::string text = "theta-condition: " + std::string(cond ? "true" : "false");
            for (const ProjectedComponent& c : ps.components) {
                comps.push_back(json{{"type", c.type}, {"rank", c.rank}});
                text += "\ncomponent: " + component_str(c);
            }
            emit(opt, json{{"theta_condition", cond}, {"components", comps}}, text);
            return 0;
        };
    });

    // verify-suite
    std::size_t max_rank = 6;
    auto* vs = app.add_subcommand("verify-suite", "run the invariant sweeps");
    vs->add_option("--max-rank", max_rank, "largest rank to sweep");
    vs->callback([&] { action = [&]() -> int { return verify_suite(max_rank); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return action();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

namespace {

int verify_suite(std::size_t max_rank) {
    long long cases = 0;
    auto report = [&](const std::string& name) {
        std::cout << "ok: " << name << " (" << cases << " cases)\n";
        cases = 0;
    };
    for (Kind kind : {Kind::B, Kind::C, Kind::D}) {
        for (std::size_t r = kind == Kind::D ? 2 : 1; r <= max_rank; ++r) {
            RootSystemSpec spec(kind, r);
            for (const Partition& p : distinguished_partitions(spec)) {
                ResidualSegment s = partition_to_segment(spec, p);
                if (!is_valid_residual_segment(s))
                    throw std::logic_error("sweep: built string fails validity");
                if (jordan_of(s) != p) throw std::logic_error("sweep: jordan round trip");
                if (segment_from_jumps(jumps_of(s), r) != s)
                    throw std::logic_error("sweep: jumps round trip");
                if (wdd_to_segment(segment_to_wdd(s)) != s)
                    throw std::logic_error("sweep: diagram round trip");
                if (!is_residual_point(spec, s.values))
                    throw std::logic_error("sweep: built string is not residual");
                JumpsSet j = jumps_of(s);
                for (std::size_t i = 0; i + 1 < j.jumps.size(); ++i) {
                    auto [lin, rest] = extract_jump_pair(s, i);
                    if (!is_valid_residual_segment(rest) && !rest.values.empty())
                        throw std::logic_error("sweep: extraction residue invalid");
                    ResidualSegment back = insert_segment(rest, lin);
                    if (back != s) throw std::logic_error("sweep: extraction round trip");
                }
                ++cases;
            }
        }
    }
    report("partition/segment/jumps/diagram round trips");
    for (Kind kind : {Kind::B, Kind::C, Kind::D}) {
        for (std::size_t r = kind == Kind::D ? 2 : 1; r <= std::min<std::size_t>(max_rank, 5); ++r) {
            RootSystemSpec spec(kind, r);
            OrbitContext ctx(spec);
            for (const Partition& p : distinguished_partitions(spec)) {
                ResidualSegment s = partition_to_segment(spec, p);
                for (const Parameter& v : enumerate_orbit(ctx, s.values)) {
                    if (!is_residual_point(spec, v))
                        throw std::logic_error("sweep: residuality is not orbit invariant");
                    if ((c1(ctx, v) == 0) != is_dominant(spec, v))
                        throw std::logic_error("sweep: c1 zero off the dominant point");
                    ++cases;
                }
            }
        }
    }
    report("orbit invariance and c1 positivity");
    return 0;
}

} // namespace

} // namespace residua::cli
