#include "residua/segments.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace residua {

LinearSegment::LinearSegment(HalfInt a_, HalfInt b_) : a(a_), b(b_) {
    if (a < b) throw std::invalid_argument("LinearSegment: needs a >= b");
    if (!(a - b).is_integer())
        throw std::invalid_argument("LinearSegment: a - b must be an integer");
}

std::size_t LinearSegment::length() const {
    return static_cast<std::size_t>((a - b).as_integer()) + 1;
}

std::vector<HalfInt> LinearSegment::values() const {
    std::vector<HalfInt> v;
    for (HalfInt x = a; x >= b; x -= HalfInt(1)) v.push_back(x);
    return v;
}

std::vector<HalfInt> CuspidalString::flatten() const {
    std::vector<HalfInt> out;
    for (const LinearSegment& s : linear)
        for (HalfInt x : s.values()) out.push_back(x);
    out.insert(out.end(), tail.values.begin(), tail.values.end());
    return out;
}

std::size_t CuspidalString::rank() const {
    std::size_t r = tail.rank();
    for (const LinearSegment& s : linear) r += s.length();
    return r;
}

// multiplicity of each value in the full symmetric string, nonneg side only
static std::map<HalfInt, long long, std::greater<HalfInt>>
symmetric_counts(const ResidualSegment& s) {
    std::map<HalfInt, long long, std::greater<HalfInt>> c;
    for (HalfInt v : s.values) ++c[v];
    if (s.kind == Kind::B) c[HalfInt(0)] = 2 * c[HalfInt(0)] + 1;
    else if (s.kind == Kind::D) c[HalfInt(0)] *= 2;
    return c;
}

JumpsSet jumps_of(const ResidualSegment& s) {
    JumpsSet out{s.kind, {}};
    if (s.kind == Kind::A) {
        if (!s.values.empty()) out.jumps.push_back(s.values.front());
        return out;
    }
    auto counts = symmetric_counts(s);
    for (long long i = 1;; ++i) {
        bool found = false;
        for (const auto& [v, c] : counts) { // descending values
            if (c >= i) {
                out.jumps.push_back(v);
                found = true;
                break;
            }
        }
        if (!found) break;
    }
    return out;
}

Partition jordan_of(const ResidualSegment& s) {
    Partition p;
    for (HalfInt a : jumps_of(s).jumps) p.push_back(a.doubled() + 1);
    return p;
}

ResidualSegment segment_from_jumps(const JumpsSet& j, std::size_t rank) {
    Partition p;
    for (HalfInt a : j.jumps) p.push_back(a.doubled() + 1);
    return partition_to_segment(RootSystemSpec(j.kind, rank), p);
}

HalfInt default_epsilon(Kind k) {
    return k == Kind::C ? HalfInt::from_doubled(1) : HalfInt(1);
}

bool is_residual_point(const RootSystemSpec& spec, const Parameter& lambda) {
    return is_residual_point(spec, lambda, default_epsilon(spec.kind));
}

bool is_residual_point(const RootSystemSpec& spec, const Parameter& lambda,
                       HalfInt epsilon) {
    if (lambda.size() != spec.dim())
        throw std::invalid_argument("is_residual_point: wrong number of coordinates");
    long long kplus = spec.kind == Kind::A ? 0 : 1;
    long long kappa = (spec.kind == Kind::B || spec.kind == Kind::C) ? 1 : 0;
    long long ones = 0, zeros = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        for (std::size_t j = i + 1; j < lambda.size(); ++j) {
            HalfInt diff = (lambda[i] - lambda[j]).abs();
            HalfInt sum = (lambda[i] + lambda[j]).abs();
            if (diff == HalfInt(1)) ++ones;
            if (diff == HalfInt(0)) ++zeros;
            if (kplus) {
                if (sum == HalfInt(1)) ++ones;
                if (sum == HalfInt(0)) ++zeros;
            }
        }
        if (kappa) {
            if (lambda[i].abs() == epsilon) ++ones;
            if (lambda[i] == HalfInt(0)) ++zeros;
        }
    }
    return ones - 2 * zeros == static_cast<long long>(spec.rank);
}

std::pair<LinearSegment, ResidualSegment> extract_jump_pair(const ResidualSegment& s,
                                                            std::size_t i) {
    JumpsSet j = jumps_of(s);
    if (i + 1 >= j.jumps.size())
        throw std::out_of_range("extract_jump_pair: no consecutive pair at this index");
    HalfInt a = j.jumps[i], b = j.jumps[i + 1];
    // remove one copy of a..b+1, two copies of b..1 (C: ..1/2), one zero (B, D)
    std::vector<HalfInt> pool = s.values;
    auto remove_one = [&](HalfInt v) {
        auto it = std::find(pool.begin(), pool.end(), v);
        if (it == pool.end())
            throw std::domain_error("extract_jump_pair: string is missing value " + v.str());
        pool.erase(it);
    };
    for (HalfInt v = a; v > b; v -= HalfInt(1)) remove_one(v);
    for (HalfInt v = b; v > HalfInt(0); v -= HalfInt(1)) {
        remove_one(v);
        remove_one(v);
    }
    if (s.kind != Kind::C) remove_one(HalfInt(0));
    return {LinearSegment(a, -b), ResidualSegment{s.kind, std::move(pool)}};
}

ResidualSegment insert_segment(const ResidualSegment& tail, const LinearSegment& seg) {
    ResidualSegment out = tail;
    for (HalfInt v : seg.values()) out.values.push_back(v.abs());
    std::sort(out.values.begin(), out.values.end(), std::greater<>());
    return out;
}

std::optional<std::size_t> find_mergeable(const std::vector<LinearSegment>& segs,
                                          const ResidualSegment& tail,
                                          const ResidualSegment& target) {
    ResidualSegment all = tail;
    for (const LinearSegment& s : segs) all = insert_segment(all, s);
    ResidualSegment want = target;
    std::sort(want.values.begin(), want.values.end(), std::greater<>());
    if (all.values != want.values || all.kind != want.kind)
        throw std::invalid_argument("find_mergeable: segments do not reassemble the target");
    std::vector<std::size_t> order(segs.size());
    for (std::size_t k = 0; k < segs.size(); ++k) order[k] = k;
    auto has_zero = [](const LinearSegment& s) {
        return s.a >= HalfInt(0) && s.b <= HalfInt(0) && s.a.is_integer();
    };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        bool zx = has_zero(segs[x]), zy = has_zero(segs[y]);
        if (zx != zy) return !zx; // zero-free first
        return segs[x].length() > segs[y].length(); // outermost of a nest first
    });
    for (std::size_t k : order)
        if (is_valid_residual_segment(insert_segment(tail, segs[k]))) return k;
    return std::nullopt;
}

std::string linear_str(const LinearSegment& s) {
    return "(" + s.a.str() + "," + s.b.str() + ")";
}

std::string jumps_str(const JumpsSet& j) {
    std::string out;
    for (std::size_t i = 0; i < j.jumps.size(); ++i) {
        if (i) out += ',';
        out += j.jumps[i].str();
    }
    return out;
}

std::string cuspidal_str(const CuspidalString& c) {
    std::string out;
    for (const LinearSegment& s : c.linear) {
        out += linear_str(s);
        out += '|';
    }
    out += '[' + segment_str(c.tail) + "]@";
    out += kind_letter(c.tail.kind);
    return out;
}

CuspidalString cuspidal_parse(const std::string& in) {
    std::string s = in;
    std::erase(s, ' ');
    CuspidalString c{{}, ResidualSegment{Kind::B, {}}};
    std::size_t pos = 0;
    while (pos < s.size() && s[pos] == '(') {
        std::size_t close = s.find(')', pos);
        std::size_t comma = s.find(',', pos);
        if (close == std::string::npos || comma == std::string::npos || comma > close)
            throw std::invalid_argument("cuspidal_parse: malformed linear segment");
        HalfInt a = HalfInt::parse(s.substr(pos + 1, comma - pos - 1));
        HalfInt b = HalfInt::parse(s.substr(comma + 1, close - comma - 1));
        c.linear.emplace_back(a, b);
        pos = close + 1;
        if (pos < s.size() && s[pos] == '|') ++pos;
    }
    std::size_t open = s.find('[', pos);
    std::size_t close = s.find(']', pos);
    std::size_t at = s.find('@', pos);
    if (open == std::string::npos || close == std::string::npos || at == std::string::npos ||
        at + 1 >= s.size())
        throw std::invalid_argument("cuspidal_parse: expected [segment]@KIND tail");
    Kind kind = kind_from_letter(s[at + 1]);
    c.tail = segment_parse(kind, s.substr(open + 1, close - open - 1));
    return c;
}

} // namespace residua
