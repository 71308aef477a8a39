#include "kgap/linalg.hpp"

#include <utility>

namespace kgap {

namespace {

void require_same_dim(const RatVec& a, const RatVec& b)
{
    if (a.dim() != b.dim()) {
        throw Error("dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    }
}

Integer common_denominator(const RatMat& m)
{
    Integer d = 1;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), m(r, c).den().get_mpz_t());
        }
    }
    return d;
}

std::vector<std::vector<Integer>> scaled_integer_rows(const RatMat& m, const Integer& scale)
{
    std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            a[r][c] = m(r, c).num() * (scale / m(r, c).den());
        }
    }
    return a;
}

}  // namespace

RatVec::RatVec(std::size_t dim) : entries_(dim, Rational(0)) {}

RatVec::RatVec(std::initializer_list<Rational> entries) : entries_(entries) {}

RatVec::RatVec(std::vector<Rational> entries) : entries_(std::move(entries)) {}

bool RatVec::is_zero() const
{
    for (const auto& e : entries_) {
        if (!e.is_zero()) {
            return false;
        }
    }
    return true;
}

RatVec& RatVec::operator+=(const RatVec& o)
{
    require_same_dim(*this, o);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += o.entries_[i];
    }
    return *this;
}

RatVec& RatVec::operator-=(const RatVec& o)
{
    require_same_dim(*this, o);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] -= o.entries_[i];
    }
    return *this;
}

RatVec& RatVec::operator*=(const Rational& s)
{
    for (auto& e : entries_) {
        e *= s;
    }
    return *this;
}

RatVec RatVec::operator-() const
{
    RatVec r(*this);
    for (auto& e : r.entries_) {
        e = -e;
    }
    return r;
}

RatMat::RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

RatMat::RatMat(std::initializer_list<std::initializer_list<Rational>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw Error("ragged matrix literal");
        }
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

RatMat RatMat::from_rows(const std::vector<RatVec>& rows)
{
    if (rows.empty()) {
        return {};
    }
    RatMat m(rows.size(), rows.front().dim());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].dim() != m.cols_) {
            throw Error("ragged matrix rows");
        }
        for (std::size_t c = 0; c < m.cols_; ++c) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

RatMat RatMat::identity(std::size_t n)
{
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

RatVec RatMat::row(std::size_t r) const
{
    return RatVec(std::vector<Rational>(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                        entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)));
}

RatMat RatMat::transpose() const
{
    RatMat t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

RatMat operator*(const RatMat& a, const RatMat& b)
{
    if (a.cols_ != b.rows_) {
        throw Error("dimension mismatch in matrix product");
    }
    RatMat p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k).is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                p(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return p;
}

RatVec operator*(const RatVec& x, const RatMat& m)
{
    if (x.dim() != m.rows()) {
        throw Error("dimension mismatch in vector-matrix product");
    }
    RatVec y(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (x[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            y[j] += x[i] * m(i, j);
        }
    }
    return y;
}

RatVec operator*(const RatMat& m, const RatVec& x)
{
    if (x.dim() != m.cols()) {
        throw Error("dimension mismatch in matrix-vector product");
    }
    RatVec y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            y[i] += m(i, j) * x[j];
        }
    }
    return y;
}

Rational det(const RatMat& m)
{
    if (!m.is_square()) {
        throw Error("determinant of non-square matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        return 1;
    }
    const Integer scale = common_denominator(m);
    auto a = scaled_integer_rows(m, scale);

    // Bareiss: every intermediate division is exact.
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a[swap][k] == 0) {
                ++swap;
            }
            if (swap == n) {
                return 0;
            }
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    Integer scale_pow;
    mpz_pow_ui(scale_pow.get_mpz_t(), scale.get_mpz_t(), n);
    return Rational::reduce(sign * a[n - 1][n - 1], scale_pow);
}

RatMat inverse(const RatMat& m)
{
    if (!m.is_square()) {
        throw Error("inverse of non-square matrix");
    }
    const std::size_t n = m.rows();
    RatMat a = m;
    RatMat inv = RatMat::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            throw Error("singular");
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const Rational p = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col).is_zero()) {
                continue;
            }
            const Rational f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

bool is_unimodular(const RatMat& m)
{
    return m.is_square() && abs(det(m)) == Rational(1);
}

RatMat triangular_basis(const RatMat& basis)
{
    if (!basis.is_square()) {
        throw Error("lattice basis must be square");
    }
    const std::size_t n = basis.rows();
    const Integer scale = common_denominator(basis);
    auto a = scaled_integer_rows(basis, scale);

    for (std::size_t col = 0; col < n; ++col) {
        // Euclid on column `col` over rows col..n-1 until a single nonzero remains.
        for (;;) {
            std::size_t best = n;
            for (std::size_t i = col; i < n; ++i) {
                if (a[i][col] != 0 && (best == n || abs(a[i][col]) < abs(a[best][col]))) {
                    best = i;
                }
            }
            if (best == n) {
                throw Error("singular");
            }
            std::swap(a[col], a[best]);
            bool done = true;
            for (std::size_t i = col + 1; i < n; ++i) {
                if (a[i][col] == 0) {
                    continue;
                }
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[col][col].get_mpz_t());
                for (std::size_t j = col; j < n; ++j) {
                    a[i][j] -= q * a[col][j];
                }
                if (a[i][col] != 0) {
                    done = false;
                }
            }
            if (done) {
                break;
            }
        }
        if (a[col][col] < 0) {
            for (std::size_t j = col; j < n; ++j) {
                a[col][j] = -a[col][j];
            }
        }
    }

    RatMat t(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            t(r, c) = Rational::reduce(a[r][c], scale);
        }
    }
    return t;
}

}  // namespace kgap
