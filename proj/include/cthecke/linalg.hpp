#pragma once

#include <vector>

#include "cthecke/rational.hpp"

namespace cthecke {

// Dense integer matrix. The representation matrices built in this project are
// 0/1 with at most one nonzero per column, so 64-bit entries are ample.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    long long& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    long long at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    friend IntMat operator*(const IntMat& x, const IntMat& y);
    friend bool operator==(const IntMat& x, const IntMat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const IntMat& x, const IntMat& y) { return !(x == y); }

private:
    int rows_, cols_;
    std::vector<long long> a_;
};

// Dense matrix over exact rationals.
class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static RatMat identity(int n) {
        RatMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }
    static RatMat from_int(const IntMat& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const;

    friend RatMat operator*(const RatMat& x, const RatMat& y);
    friend RatMat operator+(const RatMat& x, const RatMat& y);
    friend RatMat operator-(const RatMat& x, const RatMat& y);
    friend RatMat operator*(const Rational& c, const RatMat& x);
    friend bool operator==(const RatMat& x, const RatMat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const RatMat& x, const RatMat& y) { return !(x == y); }

    // Matrix-vector product.
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

// Rank of an integer matrix by fraction-free (Bareiss) elimination. Exact;
// intermediate minors are tracked in 128 bits and overflow throws.
int rank_fraction_free(const IntMat& m);

// Reduce a list of rational rows to reduced row echelon form in place.
// Returns the pivot column of each remaining row; zero rows are dropped.
std::vector<int> rref(std::vector<std::vector<Rational>>& rows, int ncols);

// Reduced basis of {x : Ax = 0} where A is given as a list of rows.
// Each basis vector has a 1 in its free column and 0 in the other free
// columns, so the basis is canonical for a given column order.
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows, int ncols);

// Rank of a rational row list (consumes the rows).
int rank_of_rows(std::vector<std::vector<Rational>> rows, int ncols);

}  // namespace cthecke
