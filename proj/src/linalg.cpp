#include "crpoisson/linalg.hpp"

#include <stdexcept>

namespace crp {

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Scalar& v = at(i, k);
            if (v.isZero()) continue;
            for (int j = 0; j < o.cols; ++j) {
                const Scalar& w = o.at(k, j);
                if (!w.isZero()) out.at(i, j) += v * w;
            }
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    Matrix out = *this;
    for (size_t i = 0; i < a.size(); ++i) out.a[i] += o.a[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    Matrix out = *this;
    for (size_t i = 0; i < a.size(); ++i) out.a[i] -= o.a[i];
    return out;
}

Matrix Matrix::operator*(const Scalar& c) const {
    Matrix out = *this;
    for (auto& v : out.a) v *= c;
    return out;
}

Scalar Matrix::trace() const {
    Scalar t;
    for (int i = 0; i < rows && i < cols; ++i) t += at(i, i);
    return t;
}

Matrix Matrix::conjTranspose() const {
    Matrix out(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.at(j, i) = at(i, j).conj();
    return out;
}

bool Matrix::isZero() const {
    for (const auto& v : a)
        if (!v.isZero()) return false;
    return true;
}

std::vector<int> rowReduce(Matrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (!m.at(i, c).isZero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
        Scalar inv = Scalar(1) / m.at(r, c);
        for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c).isZero()) continue;
            Scalar f = m.at(i, c);
            for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(Matrix m) { return static_cast<int>(rowReduce(m).size()); }

std::vector<std::vector<Scalar>> nullspace(const Matrix& m) {
    Matrix red = m;
    std::vector<int> pivots = rowReduce(red);
    std::vector<bool> isPivot(static_cast<size_t>(m.cols), false);
    for (int c : pivots) isPivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int freeCol = 0; freeCol < m.cols; ++freeCol) {
        if (isPivot[static_cast<size_t>(freeCol)]) continue;
        std::vector<Scalar> x(static_cast<size_t>(m.cols));
        x[static_cast<size_t>(freeCol)] = Scalar(1);
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            x[static_cast<size_t>(pivots[pr])] = -red.at(static_cast<int>(pr), freeCol);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<Scalar> solveLinear(Matrix m, std::vector<Scalar> b, bool& ok) {
    // Augment and reduce.
    Matrix aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[static_cast<size_t>(i)];
    }
    std::vector<int> pivots = rowReduce(aug);
    ok = true;
    for (int c : pivots)
        if (c == m.cols) ok = false;  // pivot in the RHS column: inconsistent
    std::vector<Scalar> x(static_cast<size_t>(m.cols));
    if (!ok) return x;
    for (size_t pr = 0; pr < pivots.size(); ++pr)
        x[static_cast<size_t>(pivots[pr])] = aug.at(static_cast<int>(pr), m.cols);
    return x;
}

}  // namespace crp
