#include "residua/dynkin.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "residua/segments.hpp"

namespace residua {

std::size_t ResidualSegment::rank() const {
    if (kind == Kind::A) return values.empty() ? 0 : values.size() - 1;
    return values.size();
}

bool is_distinguished_partition(const RootSystemSpec& spec, const Partition& p) {
    if (p.empty()) return false;
    long long sum = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i && p[i] >= p[i - 1]) return false;
        sum += p[i];
    }
    long long n = static_cast<long long>(spec.rank);
    switch (spec.kind) {
        case Kind::A:
            return p.size() == 1 && p[0] == n + 1;
        case Kind::B:
            if (sum != 2 * n + 1) return false;
            break;
        case Kind::C:
            if (sum != 2 * n) return false;
            for (long long q : p)
                if (q % 2 != 0) return false;
            return true;
        case Kind::D:
            if (sum != 2 * n || p.size() % 2 != 0) return false;
            break;
    }
    for (long long q : p)
        if (q % 2 == 0) return false;
    return true;
}

std::vector<Partition> distinguished_partitions(const RootSystemSpec& spec) {
    if (spec.kind == Kind::A)
        return {Partition{static_cast<long long>(spec.rank) + 1}};
    long long target = spec.kind == Kind::B ? 2ll * spec.rank + 1 : 2ll * spec.rank;
    long long step = spec.kind == Kind::C ? 2 : 2; // parts of one parity, spaced by 2
    long long largest_allowed = target;
    if (spec.kind == Kind::C && largest_allowed % 2 != 0) --largest_allowed;
    std::vector<Partition> out;
    Partition cur;
    std::function<void(long long, long long)> rec = [&](long long remaining, long long max_part) {
        if (remaining == 0) {
            if (spec.kind != Kind::D || cur.size() % 2 == 0) out.push_back(cur);
            return;
        }
        long long start = std::min(max_part, remaining);
        // align parity: B/D parts odd, C parts even
        long long want = spec.kind == Kind::C ? 0 : 1;
        if (start % 2 != want) --start;
        for (long long q = start; q >= step - (spec.kind == Kind::C ? 0 : 1); q -= 2) {
            cur.push_back(q);
            rec(remaining - q, q - 2);
            cur.pop_back();
        }
    };
    rec(target, largest_allowed);
    return out; // recursion emits decreasing-lexicographic order
}

ResidualSegment partition_to_segment(const RootSystemSpec& spec, const Partition& p) {
    if (!is_distinguished_partition(spec, p))
        throw std::invalid_argument("partition_to_segment: partition is not distinguished for " +
                                    std::string(1, kind_letter(spec.kind)) +
                                    std::to_string(spec.rank));
    std::vector<HalfInt> all;
    for (long long q : p) {
        // a part q spans the string (q-1)/2, (q-3)/2, ..., -(q-1)/2
        HalfInt a = HalfInt::from_doubled(q - 1);
        for (long long t = 0; t < q; ++t) all.push_back(a - HalfInt(t));
    }
    std::sort(all.begin(), all.end(), std::greater<>());
    ResidualSegment s{spec.kind, {}};
    std::size_t keep = spec.kind == Kind::A ? all.size() : spec.rank;
    s.values.assign(all.begin(), all.begin() + keep);
    return s;
}

bool is_valid_residual_segment(const ResidualSegment& s) {
    if (s.kind == Kind::A) {
        if (s.values.empty()) return false;
        for (std::size_t i = 0; i + 1 < s.values.size(); ++i)
            if (s.values[i] - s.values[i + 1] != HalfInt(1)) return false;
        // centered at zero: a = -b
        return s.values.front() == -s.values.back();
    }
    if (s.values.empty()) return true; // rank-0 leftover of an extraction
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        if (s.values[i] < HalfInt(0)) return false;
        if (i && s.values[i] > s.values[i - 1]) return false;
        bool integer = s.values[i].is_integer();
        if (s.kind == Kind::C ? integer : !integer) return false;
    }
    std::size_t rank = s.values.size();
    if (s.kind == Kind::D && rank < 2) return false;
    RootSystemSpec spec(s.kind, rank);
    JumpsSet j = jumps_of(s);
    Partition jordan;
    for (HalfInt a : j.jumps) jordan.push_back(a.doubled() + 1);
    if (!is_distinguished_partition(spec, jordan)) return false;
    return partition_to_segment(spec, jordan) == s;
}

WeightedDynkinDiagram segment_to_wdd(const ResidualSegment& s) {
    if (!is_valid_residual_segment(s))
        throw std::domain_error("segment_to_wdd: no even diagram, string is not residual");
    const auto& v = s.values;
    std::size_t n = v.size();
    WeightedDynkinDiagram d{s.kind, {}};
    auto push = [&](HalfInt twice) {
        if (twice != HalfInt(0) && twice != HalfInt(2))
            throw std::domain_error("segment_to_wdd: no even diagram, label outside {0,2}");
        d.labels.push_back(static_cast<int>(twice.as_integer()));
    };
    for (std::size_t i = 0; i + 1 < n; ++i) push(2 * (v[i] - v[i + 1]));
    switch (s.kind) {
        case Kind::A:
            break; // the n-1 difference labels are all of them
        case Kind::B:
            push(2 * v[n - 1]);
            break;
        case Kind::C:
            push(4 * v[n - 1]);
            break;
        case Kind::D:
            push(2 * (v[n - 2] + v[n - 1]));
            break;
    }
    return d;
}

ResidualSegment wdd_to_segment(const WeightedDynkinDiagram& d) {
    const auto& l = d.labels;
    std::size_t n = l.size();
    if (n == 0) throw std::domain_error("wdd_to_segment: empty diagram");
    for (int x : l)
        if (x != 0 && x != 2) throw std::domain_error("wdd_to_segment: label outside {0,2}");
    if (d.kind == Kind::D && n < 2) throw std::domain_error("wdd_to_segment: type D needs rank >= 2");
    ResidualSegment s{d.kind, {}};
    if (d.kind == Kind::A) {
        for (int x : l)
            if (x != 2) throw std::domain_error("wdd_to_segment: type A diagram must be all 2s");
        for (std::size_t i = 0; i <= n; ++i)
            s.values.push_back(HalfInt::from_doubled(static_cast<long long>(n) -
                                                     2 * static_cast<long long>(i)));
        return s;
    }
    std::vector<HalfInt> v(d.kind == Kind::D ? n : n, HalfInt(0));
    std::size_t first_back; // highest index already solved
    switch (d.kind) {
        case Kind::B:
            v[n - 1] = HalfInt::from_doubled(l[n - 1]);
            first_back = n - 1;
            break;
        case Kind::C:
            if (l[n - 1] != 2)
                throw std::domain_error("wdd_to_segment: type C diagram must end with 2");
            v[n - 1] = HalfInt::from_doubled(1);
            first_back = n - 1;
            break;
        case Kind::D: {
            // last two labels see v[n-2] - v[n-1] and v[n-2] + v[n-1]
            if ((l[n - 2] + l[n - 1]) % 4 != 0)
                throw std::domain_error("wdd_to_segment: fork labels are inconsistent");
            v[n - 2] = HalfInt((l[n - 2] + l[n - 1]) / 4);
            v[n - 1] = HalfInt((l[n - 1] - l[n - 2]) / 4);
            first_back = n - 2;
            break;
        }
        default:
            throw std::logic_error("wdd_to_segment: unreachable");
    }
    for (std::size_t i = first_back; i-- > 0;)
        v[i] = v[i + 1] + HalfInt::from_doubled(l[i]);
    s.values = std::move(v);
    if (!is_valid_residual_segment(s))
        throw std::domain_error("wdd_to_segment: labels do not come from a residual string");
    return s;
}

std::string partition_str(const Partition& p) {
    std::string s = "{";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    return s + "}";
}

Partition partition_parse(const std::string& in) {
    std::string s = in;
    std::erase_if(s, [](char c) { return c == '{' || c == '}' || c == ' '; });
    Partition p;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        p.push_back(std::stoll(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return p;
}

std::string segment_str(const ResidualSegment& s) {
    bool compact = !s.values.empty();
    for (HalfInt v : s.values)
        compact = compact && v.is_integer() && v >= HalfInt(0) && v <= HalfInt(9);
    std::string out;
    if (compact) {
        for (HalfInt v : s.values) out += static_cast<char>('0' + v.as_integer());
        return out;
    }
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        if (i) out += ',';
        out += s.values[i].str();
    }
    return out;
}

ResidualSegment segment_parse(Kind kind, const std::string& in) {
    std::string s = in;
    std::erase_if(s, [](char c) { return c == '[' || c == ']' || c == '(' || c == ')' || c == ' '; });
    ResidualSegment out{kind, {}};
    if (s.empty()) return out;
    bool digits_only = s.find_first_not_of("0123456789") == std::string::npos && s.find(',') == std::string::npos;
    if (digits_only) {
        for (char c : s) out.values.push_back(HalfInt(c - '0'));
        return out;
    }
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        out.values.push_back(HalfInt::parse(s.substr(pos, next - pos)));
        pos = next + 1;
        if (pos > s.size()) break;
    }
    return out;
}

} // namespace residua
