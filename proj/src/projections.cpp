#include "residua/projections.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace residua {

namespace {

Rational rdot(const RVec& a, const RVec& b) {
    Rational acc;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

RVec to_rvec(const Vec& v) {
    RVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
    return out;
}

/// Coordinates of u in the given (independent) basis; nullopt when u is
/// outside its span. Exact Gaussian elimination.
std::optional<std::vector<Rational>> coords_in_basis(const std::vector<RVec>& basis,
                                                     const RVec& u) {
    std::size_t rows = u.size(), cols = basis.size();
    // augmented matrix [basis columns | u]
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m[r][c] = basis[c][r];
        m[r][cols] = u[r];
    }
    std::vector<std::size_t> pivot_row(cols, rows);
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t p = lead;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[lead]);
        Rational inv = Rational(1) / m[lead][c];
        for (std::size_t k = c; k <= cols; ++k) m[lead][k] = m[lead][k] * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || m[r][c].is_zero()) continue;
            Rational f = m[r][c];
            for (std::size_t k = c; k <= cols; ++k) m[r][k] = m[r][k] - f * m[lead][k];
        }
        pivot_row[c] = lead;
        ++lead;
    }
    std::vector<Rational> x(cols);
    for (std::size_t c = 0; c < cols; ++c) {
        if (pivot_row[c] == rows) {
            // free column: basis dependent; treat coefficient as zero
            x[c] = Rational(0);
        } else {
            x[c] = m[pivot_row[c]][cols];
        }
    }
    // consistency: rows below the pivots must have zero rhs
    for (std::size_t r = lead; r < rows; ++r)
        if (!m[r][cols].is_zero()) return std::nullopt;
    // verify (guards the free-column shortcut)
    for (std::size_t r = 0; r < rows; ++r) {
        Rational acc;
        for (std::size_t c = 0; c < cols; ++c) acc += x[c] * basis[c][r];
        if (!(acc == u[r])) return std::nullopt;
    }
    return x;
}

bool in_span(const std::vector<RVec>& basis, const RVec& u) {
    return coords_in_basis(basis, u).has_value();
}

} // namespace

ThetaSubset::ThetaSubset(RootSystemSpec s, std::vector<std::size_t> kept)
    : spec(s), theta(std::move(kept)) {
    std::sort(theta.begin(), theta.end());
    theta.erase(std::unique(theta.begin(), theta.end()), theta.end());
    if (theta.empty()) throw std::invalid_argument("ThetaSubset: Theta must be nonempty");
    if (theta.back() >= spec.rank)
        throw std::invalid_argument("ThetaSubset: simple-root index out of range");
    if (theta.size() >= spec.rank)
        throw std::invalid_argument("ThetaSubset: Theta must be proper");
}

std::vector<std::size_t> ThetaSubset::removed() const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t i = 0; i < spec.rank; ++i) {
        if (k < theta.size() && theta[k] == i) ++k;
        else out.push_back(i);
    }
    return out;
}

RVec project_vector(const ThetaSubset& th, const Vec& v) {
    std::vector<Vec> simple = simple_roots(th.spec);
    std::vector<RVec> basis;
    for (std::size_t i : th.theta) basis.push_back(to_rvec(simple[i]));
    RVec u = to_rvec(v);
    // solve the Gram system G c = <basis, u>, then subtract sum c_i basis_i
    std::size_t k = basis.size();
    std::vector<RVec> gram_cols(k, RVec(k));
    RVec rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) gram_cols[j][i] = rdot(basis[i], basis[j]);
        rhs[i] = rdot(basis[i], u);
    }
    auto c = coords_in_basis(gram_cols, rhs);
    if (!c) throw std::logic_error("project_vector: singular Gram matrix");
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t t = 0; t < u.size(); ++t) u[t] -= (*c)[j] * basis[j][t];
    return u;
}

static bool is_zero(const RVec& v) {
    for (const Rational& x : v)
        if (!x.is_zero()) return false;
    return true;
}

static RVec scaled(const RVec& v, Rational f) {
    RVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = f * v[i];
    return out;
}

/// Projection lines of the coordinate vectors, in order of first coordinate,
/// deduplicated up to sign.
static std::vector<RVec> projection_lines(const ThetaSubset& th) {
    std::size_t n = th.spec.dim();
    std::vector<RVec> lines;
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n, HalfInt(0));
        e[i] = HalfInt(1);
        RVec p = project_vector(th, e);
        if (is_zero(p)) continue;
        bool seen = false;
        for (const RVec& q : lines)
            seen = seen || p == q || scaled(p, Rational(-1)) == q;
        if (!seen) lines.push_back(std::move(p));
    }
    return lines;
}

std::vector<std::size_t> block_sizes(const ThetaSubset& th) {
    std::vector<std::size_t> out;
    for (const RVec& p : projection_lines(th)) {
        Rational nrm = rdot(p, p); // equals 1/size for every block shape
        Rational size = Rational(1) / nrm;
        if (!size.is_integer())
            throw std::logic_error("block_sizes: non-integral block size");
        out.push_back(static_cast<std::size_t>(size.num()));
    }
    return out;
}

bool theta_condition(const ThetaSubset& th) {
    std::vector<std::size_t> sizes = block_sizes(th);
    for (std::size_t s : sizes)
        if (s != sizes.front()) return false;
    return !sizes.empty();
}

ProjectedSystem project_roots(const ThetaSubset& th) {
    ProjectedSystem ps;
    std::vector<Vec> pos = positive_roots(th.spec);
    std::vector<RVec> unique;
    for (const Vec& r : pos) {
        RVec p = project_vector(th, r);
        if (is_zero(p)) continue;
        RVec neg = scaled(p, Rational(-1));
        ps.sigma.push_back(p);
        ps.sigma.push_back(neg);
        if (std::find(unique.begin(), unique.end(), p) == unique.end()) {
            unique.push_back(p);
            unique.push_back(std::move(neg));
        }
    }
    std::vector<Vec> simple = simple_roots(th.spec);
    for (std::size_t i : th.removed()) ps.delta.push_back(project_vector(th, simple[i]));

    // group the projection lines into maximal runs of equal norm; each run
    // spans one irreducible piece of the projected system
    std::vector<RVec> lines = projection_lines(th);
    std::size_t start = 0;
    while (start < lines.size()) {
        std::size_t end = start + 1;
        while (end < lines.size() && rdot(lines[end], lines[end]) == rdot(lines[start], lines[start]))
            ++end;
        std::vector<RVec> group(lines.begin() + start, lines.begin() + end);
        std::vector<RVec> roots;
        for (const RVec& u : unique)
            if (in_span(group, u)) roots.push_back(u);
        if (!roots.empty()) {
            bool has_single = false, has_double = false;
            for (const RVec& p : group) {
                RVec p2 = scaled(p, Rational(2));
                for (const RVec& u : roots) {
                    if (u == p || u == scaled(p, Rational(-1))) has_single = true;
                    if (u == p2 || u == scaled(p2, Rational(-1))) has_double = true;
                }
            }
            ProjectedComponent comp;
            comp.rank = group.size();
            if (has_single && has_double) comp.type = "BC";
            else if (comp.rank == 1) comp.type = "A1";
            else if (has_single) comp.type = "B";
            else if (has_double) comp.type = "C";
            else if (th.spec.kind == Kind::A) {
                comp.type = "A";
                comp.rank = group.size() - 1;
            } else {
                comp.type = "D";
            }
            std::sort(roots.begin(), roots.end());
            comp.roots = std::move(roots);
            ps.components.push_back(std::move(comp));
        }
        start = end;
    }
    return ps;
}

bool unique_same_sign_combinations(const ProjectedSystem& ps) {
    for (const RVec& u : ps.sigma) {
        auto c = coords_in_basis(ps.delta, u);
        if (!c) return false;
        int sign = 0;
        for (const Rational& x : *c) {
            if (!x.is_integer()) return false;
            if (x.num() == 0) continue;
            int s = x.num() > 0 ? 1 : -1;
            if (sign == 0) sign = s;
            else if (sign != s) return false;
        }
    }
    return true;
}

std::string component_str(const ProjectedComponent& c) {
    return c.type + std::to_string(c.rank);
}

} // namespace residua
