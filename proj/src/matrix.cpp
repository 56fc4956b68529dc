#include "tropiq/matrix.hpp"

#include <stdexcept>

namespace tropiq {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return QMatrix();
    QMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) throw std::invalid_argument("ragged rows");
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

std::vector<Rational> QMatrix::row(std::size_t r) const {
    std::vector<Rational> v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

void QMatrix::set_row(std::size_t r, const std::vector<Rational>& v) {
    if (v.size() != cols_) throw std::invalid_argument("row size mismatch");
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

QMatrix QMatrix::transposed() const {
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("dimension mismatch in product");
    QMatrix p(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& v = at(r, k);
            if (v == 0) continue;
            for (std::size_t c = 0; c < other.cols_; ++c) {
                if (other.at(k, c) == 0) continue;
                p.at(r, c) += v * other.at(k, c);
            }
        }
    return p;
}

bool QMatrix::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// Integer matrix with the same rank: every row scaled by the lcm of its
// denominators.
std::vector<std::vector<Int>> cleared_rows(const QMatrix& m) {
    std::vector<std::vector<Int>> rows(m.rows(), std::vector<Int>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Int l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c)
            l = boost::multiprecision::lcm(l, rational_den(m.at(r, c)));
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational& v = m.at(r, c);
            rows[r][c] = rational_num(v) * (l / rational_den(v));
        }
    }
    return rows;
}

} // namespace

std::size_t rank_exact(const QMatrix& m) {
    auto a = cleared_rows(m);
    const std::size_t nr = m.rows(), nc = m.cols();
    std::size_t rank = 0;
    Int prev = 1;
    for (std::size_t col = 0; col < nc && rank < nr; ++col) {
        // Pick the nonzero pivot of smallest magnitude to limit growth.
        std::size_t piv = nr;
        for (std::size_t r = rank; r < nr; ++r) {
            if (a[r][col] == 0) continue;
            if (piv == nr || abs_int(a[r][col]) < abs_int(a[piv][col])) piv = r;
        }
        if (piv == nr) continue;
        std::swap(a[rank], a[piv]);
        const Int& p = a[rank][col];
        // The update runs on every remaining row, including rows already
        // zero in this column; Bareiss divisibility needs the full sweep.
        for (std::size_t r = rank + 1; r < nr; ++r) {
            for (std::size_t c = col + 1; c < nc; ++c)
                a[r][c] = (a[r][c] * p - a[r][col] * a[rank][c]) / prev;
            a[r][col] = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

std::size_t kernel_dim(const QMatrix& m) { return m.cols() - rank_exact(m); }

QMatrix rref(const QMatrix& m, std::vector<std::size_t>* pivots) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    std::vector<std::size_t> piv;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols() && lead < rows.size(); ++col) {
        std::size_t sel = rows.size();
        for (std::size_t r = lead; r < rows.size(); ++r)
            if (rows[r][col] != 0) { sel = r; break; }
        if (sel == rows.size()) continue;
        std::swap(rows[lead], rows[sel]);
        Rational inv = rows[lead][col];
        for (std::size_t c = col; c < m.cols(); ++c) rows[lead][c] /= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead || rows[r][col] == 0) continue;
            Rational f = rows[r][col];
            for (std::size_t c = col; c < m.cols(); ++c) rows[r][c] -= f * rows[lead][c];
        }
        piv.push_back(col);
        ++lead;
    }
    QMatrix out(piv.size(), m.cols());
    for (std::size_t r = 0; r < piv.size(); ++r) out.set_row(r, rows[r]);
    if (pivots) *pivots = piv;
    return out;
}

QMatrix kernel_basis(const QMatrix& m) {
    std::vector<std::size_t> piv;
    QMatrix r = rref(m, &piv);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    QMatrix k(free_cols.size(), m.cols());
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        std::size_t f = free_cols[i];
        k.at(i, f) = 1;
        for (std::size_t pr = 0; pr < piv.size(); ++pr) k.at(i, piv[pr]) = -r.at(pr, f);
    }
    return k;
}

bool solve_linear(const QMatrix& a, const std::vector<Rational>& b, std::vector<Rational>& x) {
    if (b.size() != a.rows()) throw std::invalid_argument("rhs size mismatch");
    QMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    std::vector<std::size_t> piv;
    QMatrix r = rref(aug, &piv);
    x.assign(a.cols(), Rational(0));
    for (std::size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] == a.cols()) return false; // pivot in the augmented column
        x[piv[i]] = r.at(i, a.cols());
    }
    return true;
}

bool coordinates_in_rowspan(const QMatrix& basis, const QMatrix& vecs, QMatrix& coords) {
    QMatrix bt = basis.transposed();
    coords = QMatrix(vecs.rows(), basis.rows());
    for (std::size_t r = 0; r < vecs.rows(); ++r) {
        std::vector<Rational> x;
        if (!solve_linear(bt, vecs.row(r), x)) return false;
        coords.set_row(r, x);
    }
    return true;
}

Rational determinant(const QMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    QMatrix a = m;
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = n;
        for (std::size_t r = col; r < n; ++r)
            if (a.at(r, col) != 0) { sel = r; break; }
        if (sel == n) return Rational(0);
        if (sel != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a.at(col, c), a.at(sel, c));
            det = -det;
        }
        det *= a.at(col, col);
        Rational inv = a.at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a.at(r, col) == 0) continue;
            Rational f = a.at(r, col) / inv;
            for (std::size_t c = col; c < n; ++c) a.at(r, c) -= f * a.at(col, c);
        }
    }
    return det;
}

} // namespace tropiq
