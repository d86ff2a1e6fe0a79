#include "residua/rootsys.hpp"

#include <numeric>
#include <stdexcept>

namespace residua {

HalfInt HalfInt::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("HalfInt: empty string");
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) {
        return HalfInt(std::stoll(s));
    }
    long long num = std::stoll(s.substr(0, slash));
    long long den = std::stoll(s.substr(slash + 1));
    if (den == 2) return HalfInt::from_doubled(num);
    if (den == 1) return HalfInt(num);
    throw std::invalid_argument("HalfInt: denominator must be 1 or 2 in '" + s + "'");
}

char kind_letter(Kind k) {
    switch (k) {
        case Kind::A: return 'A';
        case Kind::B: return 'B';
        case Kind::C: return 'C';
        case Kind::D: return 'D';
    }
    throw std::logic_error("kind_letter: bad kind");
}

Kind kind_from_letter(char c) {
    switch (c) {
        case 'A': case 'a': return Kind::A;
        case 'B': case 'b': return Kind::B;
        case 'C': case 'c': return Kind::C;
        case 'D': case 'd': return Kind::D;
    }
    throw std::invalid_argument(std::string("unknown type letter '") + c + "'");
}

RootSystemSpec::RootSystemSpec(Kind k, std::size_t r) : kind(k), rank(r) {
    if (r < 1) throw std::invalid_argument("root system rank must be >= 1");
    if (k == Kind::D && r < 2) throw std::invalid_argument("type D needs rank >= 2");
}

static Vec unit(std::size_t n, std::size_t i, HalfInt v = HalfInt(1)) {
    Vec e(n, HalfInt(0));
    e[i] = v;
    return e;
}

std::vector<Vec> simple_roots(const RootSystemSpec& spec) {
    std::size_t n = spec.dim();
    std::vector<Vec> out;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Vec a(n, HalfInt(0));
        a[i] = HalfInt(1);
        a[i + 1] = HalfInt(-1);
        out.push_back(a);
    }
    switch (spec.kind) {
        case Kind::A:
            break; // the n-1 difference roots are all of them
        case Kind::B:
            out.push_back(unit(n, n - 1));
            break;
        case Kind::C:
            out.push_back(unit(n, n - 1, HalfInt(2)));
            break;
        case Kind::D: {
            Vec a(n, HalfInt(0));
            a[n - 2] = HalfInt(1);
            a[n - 1] = HalfInt(1);
            out.push_back(a);
            break;
        }
    }
    return out;
}

std::vector<Vec> positive_roots(const RootSystemSpec& spec) {
    std::size_t n = spec.dim();
    std::vector<Vec> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec a(n, HalfInt(0));
            a[i] = HalfInt(1);
            a[j] = HalfInt(-1);
            out.push_back(a);
        }
    if (spec.kind == Kind::A) return out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec a(n, HalfInt(0));
            a[i] = HalfInt(1);
            a[j] = HalfInt(1);
            out.push_back(a);
        }
    if (spec.kind == Kind::B)
        for (std::size_t i = 0; i < n; ++i) out.push_back(unit(n, i));
    if (spec.kind == Kind::C)
        for (std::size_t i = 0; i < n; ++i) out.push_back(unit(n, i, HalfInt(2)));
    return out;
}

HalfInt dot2(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot2: length mismatch");
    long long acc = 0; // sum of doubled*doubled = 4<a,b>, the doubled value of 2<a,b>
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += a[i].doubled() * b[i].doubled();
    return HalfInt::from_doubled(acc);
}

HalfInt pairing(const Vec& lambda, const Vec& alpha) {
    if (lambda.size() != alpha.size()) throw std::invalid_argument("pairing: length mismatch");
    long long num = 0, nrm = 0; // both 4x the true products
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        num += lambda[i].doubled() * alpha[i].doubled();
        nrm += alpha[i].doubled() * alpha[i].doubled();
    }
    if (nrm == 0) throw std::domain_error("pairing: zero root");
    long long doubled = 4 * num; // doubled value of 2<l,a>/<a,a> is 2*2num/nrm
    if (doubled % nrm != 0) throw std::domain_error("pairing: value leaves (1/2)Z");
    return HalfInt::from_doubled(doubled / nrm);
}

bool is_dominant(const RootSystemSpec& spec, const Parameter& lambda) {
    for (const Vec& a : simple_roots(spec))
        if (pairing(lambda, a) < HalfInt(0)) return false;
    return true;
}

SignedPermutation SignedPermutation::identity(std::size_t n) {
    SignedPermutation w;
    w.perm_inv.resize(n);
    std::iota(w.perm_inv.begin(), w.perm_inv.end(), std::size_t{0});
    w.sign.assign(n, 1);
    return w;
}

int SignedPermutation::flips() const {
    int c = 0;
    for (int s : sign)
        if (s < 0) ++c;
    return c;
}

Parameter weyl_apply(const RootSystemSpec& spec, const SignedPermutation& w,
                     const Parameter& lambda) {
    std::size_t n = spec.dim();
    if (lambda.size() != n || w.size() != n)
        throw std::invalid_argument("weyl_apply: length mismatch");
    if (spec.kind == Kind::A && w.flips() != 0)
        throw std::invalid_argument("weyl_apply: type A admits no sign flips");
    if (spec.kind == Kind::D && w.flips() % 2 != 0) {
        bool has_zero = false;
        for (const HalfInt& x : lambda) has_zero = has_zero || x == HalfInt(0);
        if (!has_zero)
            throw std::invalid_argument(
                "weyl_apply: odd sign count in type D needs a zero coordinate");
    }
    Parameter out(n);
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t src = w.perm_inv[i];
        if (src >= n || seen[src]) throw std::invalid_argument("weyl_apply: not a permutation");
        seen[src] = true;
        out[i] = w.sign[i] < 0 ? -lambda[src] : lambda[src];
    }
    return out;
}

bool dynkin_adjacent(const RootSystemSpec& spec, std::size_t i, std::size_t j) {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    std::size_t n = spec.rank;
    if (j >= n) throw std::invalid_argument("dynkin_adjacent: index out of range");
    if (spec.kind == Kind::D) {
        if (j == n - 1) return i == n - 3; // the fork root attaches to node n-2
        return j == i + 1;
    }
    return j == i + 1;
}

bool parameter_equivalent(const RootSystemSpec& spec, const Parameter& a,
                          const Parameter& b) {
    if (a.size() != b.size()) return false;
    if (spec.kind != Kind::A) return a == b;
    if (a.empty()) return true;
    HalfInt shift = b[0] - a[0];
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] - a[i] != shift) return false;
    return true;
}

std::string vec_str(const Vec& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += v[i].str();
    }
    return s;
}

} // namespace residua
