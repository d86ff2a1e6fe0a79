#include "residua/langlands.hpp"

#include <algorithm>
#include <stdexcept>

namespace residua {

SegmentMultiset SegmentMultiset::of(std::vector<LinearSegment> v) {
    SegmentMultiset m{std::move(v)};
    m.normalize();
    return m;
}

void SegmentMultiset::normalize() {
    std::sort(segs.begin(), segs.end(), [](const LinearSegment& x, const LinearSegment& y) {
        if (x.midpoint_twice() != y.midpoint_twice())
            return x.midpoint_twice() > y.midpoint_twice();
        if (x.length() != y.length()) return x.length() > y.length();
        return x.a > y.a;
    });
}

bool linked(const LinearSegment& s1, const LinearSegment& s2) {
    const LinearSegment& hi = s1.a >= s2.a ? s1 : s2;
    const LinearSegment& lo = s1.a >= s2.a ? s2 : s1;
    if (!(hi.a - lo.a).is_integer()) return false; // different cosets never meet
    if (hi.a == lo.a || hi.b <= lo.b) return false; // containment (or equality)
    // union is a segment iff lo.a >= hi.b - 1
    return lo.a >= hi.b - HalfInt(1);
}

std::pair<LinearSegment, std::optional<LinearSegment>>
union_intersection(const LinearSegment& s1, const LinearSegment& s2) {
    if (!linked(s1, s2)) throw std::invalid_argument("union_intersection: segments not linked");
    const LinearSegment& hi = s1.a >= s2.a ? s1 : s2;
    const LinearSegment& lo = s1.a >= s2.a ? s2 : s1;
    LinearSegment uni(hi.a, lo.b);
    if (lo.a < hi.b) return {uni, std::nullopt}; // adjacent: empty intersection
    return {uni, LinearSegment(lo.a, hi.b)};
}

std::vector<HalfInt> langlands_param(const SegmentMultiset& m) {
    std::vector<HalfInt> out;
    for (const LinearSegment& s : m.segs)
        out.insert(out.end(), s.length(), s.midpoint_twice());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

bool leq_order(const RootSystemSpec& spec, const Parameter& mu, const Parameter& pi) {
    if (mu.size() != pi.size())
        throw std::invalid_argument("leq_order: parameters of different length");
    std::size_t n = mu.size();
    std::vector<long long> d(n); // doubled differences
    long long total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = pi[i].doubled() - mu[i].doubled();
        total += d[i];
    }
    if (spec.kind == Kind::A) {
        // compare modulo a constant shift c = total/n of every coordinate
        long long prefix = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            prefix += d[k - 1];
            if (static_cast<long long>(n) * prefix < static_cast<long long>(k) * total)
                return false;
        }
        return true;
    }
    long long prefix = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        prefix += d[k];
        if (prefix < 0) return false;
    }
    long long last = d[n - 1];
    if (spec.kind == Kind::D)
        return prefix >= last && prefix >= -last;
    return prefix + last >= 0;
}

SegmentMultiset minimize(SegmentMultiset m) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < m.segs.size() && !changed; ++i)
            for (std::size_t j = i + 1; j < m.segs.size() && !changed; ++j) {
                if (!linked(m.segs[i], m.segs[j])) continue;
                auto [uni, inter] = union_intersection(m.segs[i], m.segs[j]);
                m.segs.erase(m.segs.begin() + j);
                m.segs.erase(m.segs.begin() + i);
                m.segs.push_back(uni);
                if (inter) m.segs.push_back(*inter);
                changed = true;
            }
    }
    m.normalize();
    return m;
}

bool positive_partial_sums(const Parameter& lambda) {
    long long acc = 0;
    for (std::size_t k = 0; k + 1 < lambda.size(); ++k) {
        acc += lambda[k].doubled();
        if (acc <= 0) return false;
    }
    return true;
}

} // namespace residua
