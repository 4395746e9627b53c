#include "cremona/linalg.hpp"

#include <utility>

namespace cremona {

void Matrix::push_row(const std::vector<Fe>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw Error(ErrorKind::InvalidArgument, "row length mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Fe{1};
    return m;
}

std::vector<std::size_t> rref(const Field& F, Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c).code == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        Fe s = F.inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = F.mul(m(r, j), s);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).code == 0) continue;
            Fe f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = F.sub(m(i, j), F.mul(f, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const Field& F, Matrix m) { return rref(F, m).size(); }

Fe det(const Field& F, Matrix m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "det of non-square matrix");
    const std::size_t n = m.rows();
    Fe d{1};
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c).code == 0) ++piv;
        if (piv == n) return Fe{0};
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
            d = F.neg(d);
        }
        d = F.mul(d, m(c, c));
        Fe s = F.inv(m(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).code == 0) continue;
            Fe f = F.mul(m(i, c), s);
            for (std::size_t j = c; j < n; ++j) m(i, j) = F.sub(m(i, j), F.mul(f, m(c, j)));
        }
    }
    return d;
}

std::vector<std::vector<Fe>> nullspace(const Field& F, Matrix m) {
    const std::size_t n = m.cols();
    auto pivots = rref(F, m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    Matrix basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Fe> v(n);
        v[f] = Fe{1};
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(m(r, f));
        basis.push_row(v);
    }
    std::vector<std::vector<Fe>> out;
    if (basis.rows() == 0) return out;
    rref(F, basis);
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        std::vector<Fe> v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = basis(r, j);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace cremona
