#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace griesslab {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : r_(r), c_(c), d_(r * c, T(0)) {}
    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    T& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<T> d_;
};

// Reduced row echelon form in place; returns pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m) {
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && is_zero(m(p, col))) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        T inv = T(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m(i, col))) continue;
            T f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!is_zero(m(row, j))) m(i, j) -= f * m(row, j);
        }
        piv.push_back(col);
        ++row;
    }
    return piv;
}

template <class T>
std::size_t rank(Matrix<T> m) {
    return rref(m).size();
}

// Solve a x = b exactly. Free variables are set to zero.
// nullopt if the system is inconsistent.
template <class T>
std::optional<std::vector<T>> solve_linear(const Matrix<T>& a, const std::vector<T>& b) {
    Matrix<T> aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
    std::vector<T> x(a.cols(), T(0));
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, a.cols());
    return x;
}

}  // namespace griesslab
