#pragma once

#include <vector>

#include "crpoisson/scalar.hpp"

namespace crp {

/// Dense matrix over the Gaussian rationals. Only exact operations.
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<Scalar> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Scalar& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Scalar& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static Matrix identity(int nn) {
        Matrix m(nn, nn);
        for (int i = 0; i < nn; ++i) m.at(i, i) = Scalar(1);
        return m;
    }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Scalar& c) const;
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }

    Matrix commutator(const Matrix& o) const { return *this * o - o * *this; }

    Scalar trace() const;
    Matrix conjTranspose() const;
    bool isZero() const;
};

/// Row echelon reduction in place; returns pivot column list.
std::vector<int> rowReduce(Matrix& m);

int rank(Matrix m);

/// Basis of the right nullspace {x : M x = 0}.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m);

/// Solve M x = b; empty optional when inconsistent. Under-determined systems
/// return the particular solution with free variables set to zero.
std::vector<Scalar> solveLinear(Matrix m, std::vector<Scalar> b, bool& ok);

}  // namespace crp
