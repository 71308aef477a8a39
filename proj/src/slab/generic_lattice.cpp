#include "kgap/generic_lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace kgap {

namespace {

using Matrix = std::vector<std::vector<double>>;

struct GramSchmidt {
    Matrix mu;
    std::vector<double> norms2;
};

double dot(const std::vector<double>& a, const std::vector<double>& b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

GramSchmidt gram_schmidt(const Matrix& b)
{
    const std::size_t n = b.size();
    GramSchmidt gs{Matrix(n, std::vector<double>(n, 0.0)), std::vector<double>(n, 0.0)};
    Matrix star = b;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            gs.mu[i][j] = dot(b[i], star[j]) / gs.norms2[j];
            for (std::size_t c = 0; c < b[i].size(); ++c) {
                star[i][c] -= gs.mu[i][j] * star[j][c];
            }
        }
        gs.norms2[i] = dot(star[i], star[i]);
    }
    return gs;
}

struct BoxPoint {
    double u;
    double vnorm;
};

// All lattice points (u, v) with |u| < u_max and |v|_max <= v_max, found by
// scaling the box to the unit cube and enumerating the ball around it.
class BoxEnumerator {
public:
    BoxEnumerator(const Matrix& basis, std::size_t node_cap) : basis_(basis), node_cap_(node_cap) {}

    std::vector<BoxPoint> query(double u_max, double v_max)
    {
        const std::size_t n = basis_.size();
        Matrix scaled = basis_;
        for (auto& row : scaled) {
            row[0] /= u_max;
            for (std::size_t c = 1; c < n; ++c) {
                row[c] /= v_max;
            }
        }
        reduced_ = lll_reduce(std::move(scaled));
        gs_ = gram_schmidt(reduced_);
        z_.assign(n, 0.0);
        out_.clear();
        nodes_ = 0;
        u_max_ = u_max;
        v_max_ = v_max;
        radius2_ = static_cast<double>(n) * (1.0 + 1e-9) + 1e-9;
        descend(n, 0.0);
        return out_;
    }

private:
    const Matrix& basis_;
    std::size_t node_cap_;
    Matrix reduced_;
    GramSchmidt gs_;
    std::vector<double> z_;
    std::vector<BoxPoint> out_;
    std::size_t nodes_ = 0;
    double u_max_ = 1.0;
    double v_max_ = 1.0;
    double radius2_ = 1.0;

    void emit()
    {
        const std::size_t n = reduced_.size();
        std::vector<double> x(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            if (z_[i] == 0.0) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                x[c] += z_[i] * reduced_[i][c];
            }
        }
        const double u = x[0] * u_max_;
        double vnorm = 0.0;
        for (std::size_t c = 1; c < n; ++c) {
            vnorm = std::max(vnorm, std::abs(x[c]) * v_max_);
        }
        out_.push_back({u, vnorm});
    }

    // Levels are filled from the last Gram-Schmidt vector down to the first.
    void descend(std::size_t level, double used)
    {
        if (++nodes_ > node_cap_) {
            throw Error("enumeration node cap exceeded");
        }
        if (level == 0) {
            emit();
            return;
        }
        const std::size_t i = level - 1;
        const std::size_t n = reduced_.size();
        double center = 0.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            center -= z_[j] * gs_.mu[j][i];
        }
        const double rem = radius2_ - used;
        if (rem < 0.0) {
            return;
        }
        const double half_width = std::sqrt(rem / gs_.norms2[i]);
        const double lo = std::ceil(center - half_width);
        const double hi = std::floor(center + half_width);
        for (double zi = lo; zi <= hi; zi += 1.0) {
            const double offset = zi - center;
            const double next = used + offset * offset * gs_.norms2[i];
            if (next > radius2_) {
                continue;
            }
            z_[i] = zi;
            descend(level - 1, next);
        }
        z_[i] = 0.0;
    }
};

void validate(const GenericLattice& m)
{
    const std::size_t n = m.dim();
    if (n < 2) {
        throw Error("generic lattice must have dimension d + 1 >= 2");
    }
    for (const auto& row : m.basis) {
        if (row.size() != n) {
            throw Error("generic lattice basis must be square");
        }
        for (double x : row) {
            if (!std::isfinite(x)) {
                throw Error("generic lattice basis has a non-finite entry");
            }
        }
    }
    if (!(m.tolerance > 0.0)) {
        throw Error("tolerance must be positive");
    }
    if (std::abs(std::abs(determinant(m.basis)) - 1.0) > m.tolerance) {
        throw Error("generic lattice is not unimodular within tolerance");
    }
}

}  // namespace

double determinant(const std::vector<std::vector<double>>& m)
{
    Matrix a = m;
    const std::size_t n = a.size();
    double det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) {
                pivot = r;
            }
        }
        if (a[pivot][col] == 0.0) {
            return 0.0;
        }
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) {
                a[r][c] -= f * a[col][c];
            }
        }
    }
    return det;
}

std::vector<std::vector<double>> lll_reduce(std::vector<std::vector<double>> b)
{
    constexpr double delta = 0.99;
    const std::size_t n = b.size();
    if (n < 2) {
        return b;
    }
    GramSchmidt gs = gram_schmidt(b);
    std::size_t k = 1;
    std::size_t guard = 0;
    while (k < n) {
        if (++guard > 100000) {
            throw Error("LLL reduction did not converge");
        }
        for (std::size_t jj = k; jj-- > 0;) {
            const double q = std::round(gs.mu[k][jj]);
            if (q == 0.0) {
                continue;
            }
            for (std::size_t c = 0; c < b[k].size(); ++c) {
                b[k][c] -= q * b[jj][c];
            }
            for (std::size_t i = 0; i < jj; ++i) {
                gs.mu[k][i] -= q * gs.mu[jj][i];
            }
            gs.mu[k][jj] -= q;
        }
        const double mu = gs.mu[k][k - 1];
        if (gs.norms2[k] >= (delta - mu * mu) * gs.norms2[k - 1]) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            gs = gram_schmidt(b);
            k = std::max<std::size_t>(k - 1, 1);
        }
    }
    return b;
}

double generic_global_bound(const GenericLattice& m, const GenericOptions& options)
{
    validate(m);
    const double tol = m.tolerance;
    const auto d = static_cast<double>(m.dim() - 1);
    BoxEnumerator box(m.basis, options.node_cap);
    for (double radius = std::pow(2.0, 1.0 / d);; radius *= 2.0) {
        if (radius > options.radius_cap) {
            throw Error("radius cap exceeded");
        }
        double best = std::numeric_limits<double>::infinity();
        for (const auto& p : box.query(0.5, radius)) {
            if (std::abs(p.u) < 0.5 - tol && p.vnorm > tol && p.vnorm <= radius) {
                best = std::min(best, p.vnorm);
            }
        }
        if (std::isfinite(best)) {
            return best;
        }
    }
}

std::size_t generic_value_count(const GenericLattice& m, const GenericOptions& options)
{
    const double tol = m.tolerance;
    const double bound = generic_global_bound(m, options);

    std::vector<BoxPoint> points;
    BoxEnumerator box(m.basis, options.node_cap);
    for (const auto& p : box.query(1.0, bound + tol)) {
        if (std::abs(p.u) < 1.0 - tol && p.vnorm > tol && p.vnorm <= bound + tol) {
            points.push_back(p);
        }
    }

    std::vector<double> cuts;
    for (const auto& p : points) {
        for (double t : {-p.u, 1.0 - p.u}) {
            if (t > tol && t < 1.0 - tol) {
                cuts.push_back(t);
            }
        }
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> merged{0.0};
    for (double t : cuts) {
        if (t - merged.back() > tol) {
            merged.push_back(t);
        }
    }
    if (1.0 - merged.back() <= tol) {
        merged.back() = 1.0;
    } else {
        merged.push_back(1.0);
    }

    std::vector<double> values;
    for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
        const double t = 0.5 * (merged[i] + merged[i + 1]);
        double best = std::numeric_limits<double>::infinity();
        for (const auto& p : points) {
            if (-t < p.u && p.u < 1.0 - t) {
                best = std::min(best, p.vnorm);
            }
        }
        if (!std::isfinite(best)) {
            throw Error("no admissible point for t = " + std::to_string(t));
        }
        values.push_back(best);
    }
    std::sort(values.begin(), values.end());
    std::size_t count = 0;
    double last = -std::numeric_limits<double>::infinity();
    for (double v : values) {
        if (v - last > tol) {
            ++count;
            last = v;
        }
    }
    return count;
}

GenericLattice float_rendering(const KroneckerInstance& inst, double tolerance)
{
    const std::size_t d = inst.dim();
    const double n_plus = static_cast<double>(inst.N) + 0.5;
    const double scale = std::pow(n_plus, 1.0 / static_cast<double>(d));
    GenericLattice m;
    m.tolerance = tolerance;
    m.basis.assign(d + 1, std::vector<double>(d + 1, 0.0));
    m.basis[0][0] = 1.0 / n_plus;
    for (std::size_t j = 0; j < d; ++j) {
        m.basis[0][j + 1] = scale * inst.alpha[j].to_double();
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            m.basis[i + 1][j + 1] = scale * inst.lattice.basis()(i, j).to_double();
        }
    }
    return m;
}

}  // namespace kgap
