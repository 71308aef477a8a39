#pragma once

// Exact rational vectors and matrices.
//
// Vectors are row vectors throughout: a lattice with basis B (rows are basis
// vectors) is the set {c * B : c integer}.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "kgap/rational.hpp"

namespace kgap {

class RatVec {
public:
    RatVec() = default;
    explicit RatVec(std::size_t dim);
    RatVec(std::initializer_list<Rational> entries);
    explicit RatVec(std::vector<Rational> entries);

    static RatVec zero(std::size_t dim) { return RatVec(dim); }

    std::size_t dim() const { return entries_.size(); }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    Rational& operator[](std::size_t i) { return entries_[i]; }
    std::span<const Rational> entries() const { return entries_; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    bool is_zero() const;

    RatVec& operator+=(const RatVec& o);
    RatVec& operator-=(const RatVec& o);
    RatVec& operator*=(const Rational& s);
    friend RatVec operator+(RatVec a, const RatVec& b) { return a += b; }
    friend RatVec operator-(RatVec a, const RatVec& b) { return a -= b; }
    friend RatVec operator*(RatVec a, const Rational& s) { return a *= s; }
    friend RatVec operator*(const Rational& s, RatVec a) { return a *= s; }
    RatVec operator-() const;

    friend bool operator==(const RatVec&, const RatVec&) = default;
    /// Lexicographic order on entries.
    friend bool operator<(const RatVec& a, const RatVec& b) { return a.entries_ < b.entries_; }

private:
    std::vector<Rational> entries_;
};

class RatMat {
public:
    RatMat() = default;
    RatMat(std::size_t rows, std::size_t cols);
    RatMat(std::initializer_list<std::initializer_list<Rational>> rows);
    static RatMat from_rows(const std::vector<RatVec>& rows);
    static RatMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    RatVec row(std::size_t r) const;
    RatMat transpose() const;

    friend RatMat operator*(const RatMat& a, const RatMat& b);
    friend bool operator==(const RatMat&, const RatMat&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Row vector times matrix: (x * M)_j = sum_i x_i M_ij.
RatVec operator*(const RatVec& x, const RatMat& m);
/// Matrix times column vector.
RatVec operator*(const RatMat& m, const RatVec& x);

/// Exact determinant via fraction-free (Bareiss) elimination.
Rational det(const RatMat& m);

/// Exact inverse. Throws Error("singular") when det(m) == 0.
RatMat inverse(const RatMat& m);

bool is_unimodular(const RatMat& m);

/// Basis of the same lattice in upper-triangular form: row i has zeros in
/// columns j < i and a positive diagonal entry. Computed by integer
/// row reduction on the matrix scaled to a common denominator.
RatMat triangular_basis(const RatMat& basis);

}  // namespace kgap
