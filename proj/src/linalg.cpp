#include "cthecke/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace cthecke {

IntMat operator*(const IntMat& x, const IntMat& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("IntMat: dimension mismatch");
    IntMat out(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
        for (int k = 0; k < x.cols_; ++k) {
            long long v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols_; ++j) out.at(i, j) += v * y.at(k, j);
        }
    return out;
}

RatMat RatMat::from_int(const IntMat& m) {
    RatMat out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = Rational(m.at(i, j));
    return out;
}

bool RatMat::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

RatMat operator*(const RatMat& x, const RatMat& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("RatMat: dimension mismatch");
    RatMat out(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
        for (int k = 0; k < x.cols_; ++k) {
            const Rational& v = x.at(i, k);
            if (v.is_zero()) continue;
            for (int j = 0; j < y.cols_; ++j) out.at(i, j) += v * y.at(k, j);
        }
    return out;
}

RatMat operator+(const RatMat& x, const RatMat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("RatMat: dimension mismatch");
    RatMat out(x.rows_, x.cols_);
    for (size_t i = 0; i < x.a_.size(); ++i) out.a_[i] = x.a_[i] + y.a_[i];
    return out;
}

RatMat operator-(const RatMat& x, const RatMat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("RatMat: dimension mismatch");
    RatMat out(x.rows_, x.cols_);
    for (size_t i = 0; i < x.a_.size(); ++i) out.a_[i] = x.a_[i] - y.a_[i];
    return out;
}

RatMat operator*(const Rational& c, const RatMat& x) {
    RatMat out(x.rows_, x.cols_);
    for (size_t i = 0; i < x.a_.size(); ++i) out.a_[i] = c * x.a_[i];
    return out;
}

std::vector<Rational> RatMat::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("RatMat: vector size mismatch");
    std::vector<Rational> out(rows_);
    for (int i = 0; i < rows_; ++i) {
        Rational s;
        for (int j = 0; j < cols_; ++j) s += at(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

namespace {

long long checked_narrow(__int128 v) {
    if (v < static_cast<__int128>(INT64_MIN) || v > static_cast<__int128>(INT64_MAX))
        throw std::overflow_error("fraction-free elimination: minor exceeds 64-bit range");
    return static_cast<long long>(v);
}

}  // namespace

int rank_fraction_free(const IntMat& m) {
    const int nr = m.rows(), nc = m.cols();
    std::vector<std::vector<long long>> a(nr, std::vector<long long>(nc));
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) a[i][j] = m.at(i, j);

    long long prev = 1;
    int rank = 0;
    for (int col = 0; col < nc && rank < nr; ++col) {
        int piv = -1;
        for (int r = rank; r < nr; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        const long long p = a[rank][col];
        // every row below the pivot is updated, pivot-column zeros included:
        // the division by the previous pivot is exact only for the full
        // one-step formula
        for (int r = rank + 1; r < nr; ++r) {
            for (int c = col + 1; c < nc; ++c) {
                __int128 v = static_cast<__int128>(a[r][c]) * p -
                             static_cast<__int128>(a[r][col]) * a[rank][c];
                if (v % prev != 0)
                    throw std::logic_error("fraction-free elimination: inexact division");
                a[r][c] = checked_narrow(v / prev);
            }
            a[r][col] = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

std::vector<int> rref(std::vector<std::vector<Rational>>& rows, int ncols) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < ncols && r < static_cast<int>(rows.size()); ++c) {
        int pr = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (!rows[i][c].is_zero()) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(rows[r], rows[pr]);
        const Rational p = rows[r][c];
        for (int j = c; j < ncols; ++j) rows[r][j] /= p;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const Rational f = rows[i][c];
            for (int j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(pivots.size());
    return pivots;
}

std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows, int ncols) {
    std::vector<int> pivots = rref(rows, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(ncols);
        v[free] = Rational(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank_of_rows(std::vector<std::vector<Rational>> rows, int ncols) {
    return static_cast<int>(rref(rows, ncols).size());
}

}  // namespace cthecke
