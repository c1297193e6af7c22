#pragma once

#include <stdexcept>
#include <vector>

namespace mdr {

// Minimal dense square matrix over an exact ring element type.
template <class T>
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {
        if (n < 0) throw std::invalid_argument("negative matrix dimension");
    }

    int dim() const { return n_; }
    T& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const T& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    static Matrix identity(int n, const T& one) {
        Matrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    Matrix operator*(const Matrix& rhs) const {
        if (n_ != rhs.n_) throw std::invalid_argument("matrix dimension mismatch");
        Matrix out(n_);
        for (int i = 0; i < n_; ++i) {
            for (int k = 0; k < n_; ++k) {
                const T& aik = at(i, k);
                for (int j = 0; j < n_; ++j) {
                    out.at(i, j) += aik * rhs.at(k, j);
                }
            }
        }
        return out;
    }

    T trace() const {
        T s{};
        for (int i = 0; i < n_; ++i) s += at(i, i);
        return s;
    }

    // Delete one row and one column.
    Matrix minor_at(int row, int col) const {
        Matrix out(n_ - 1);
        for (int i = 0, oi = 0; i < n_; ++i) {
            if (i == row) continue;
            for (int j = 0, oj = 0; j < n_; ++j) {
                if (j == col) continue;
                out.at(oi, oj) = at(i, j);
                ++oj;
            }
            ++oi;
        }
        return out;
    }

private:
    int n_ = 0;
    std::vector<T> a_;
};

}  // namespace mdr
