#include "cycbrauer/linalg.hpp"

namespace cycbrauer {

Mat Mat::identity(int n, int m) {
    Mat r(n, n, m);
    for (int i = 0; i < n; ++i) r.at(i, i) = Cyclotomic::one(m);
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    Mat r(rows_, o.cols_, m_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Cyclotomic& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Cyclotomic& y = o.at(k, j);
                if (y.is_zero()) continue;
                r.at(i, j) += x * y;
            }
        }
    }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    Mat r(*this);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    Mat r(*this);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

Mat Mat::scaled(const Cyclotomic& c) const {
    Mat r(*this);
    for (auto& x : r.a_) x *= c;
    return r;
}

bool Mat::operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i) {
        if (!(a_[i] == o.a_[i])) return false;
    }
    return true;
}

Cyclotomic Mat::trace() const {
    Cyclotomic t = Cyclotomic::zero(m_);
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

bool Mat::is_zero() const {
    for (const auto& x : a_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

Mat Mat::kronecker(const Mat& o) const {
    Mat r(rows_ * o.rows_, cols_ * o.cols_, m_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const Cyclotomic& x = at(i, j);
            if (x.is_zero()) continue;
            for (int p = 0; p < o.rows_; ++p)
                for (int q = 0; q < o.cols_; ++q) {
                    const Cyclotomic& y = o.at(p, q);
                    if (y.is_zero()) continue;
                    r.at(i * o.rows_ + p, j * o.cols_ + q) = x * y;
                }
        }
    return r;
}

std::vector<Cyclotomic> Mat::apply(const std::vector<Cyclotomic>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<Cyclotomic> r(rows_, Cyclotomic::zero(m_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || v[j].is_zero()) continue;
            r[i] += at(i, j) * v[j];
        }
    return r;
}

bool LinearSpan::add(const std::vector<Cyclotomic>& v) {
    std::vector<Cyclotomic> w = v;
    std::vector<Cyclotomic> combo(accepted_ + 1, Cyclotomic::zero(m_));
    combo[accepted_] = Cyclotomic::one(m_);
    for (const auto& row : rows_) {
        if (row.pivot >= w.size()) continue;
        const Cyclotomic& c = w[row.pivot];
        if (c.is_zero()) continue;
        for (size_t j = 0; j < w.size(); ++j) {
            if (!row.v[j].is_zero()) w[j] -= c * row.v[j];
        }
        for (size_t j = 0; j < row.combo.size(); ++j) {
            if (!row.combo[j].is_zero()) combo[j] -= c * row.combo[j];
        }
    }
    size_t piv = 0;
    while (piv < w.size() && w[piv].is_zero()) ++piv;
    ++accepted_;
    if (piv == w.size()) return false;
    Cyclotomic inv = w[piv].inverse();
    for (auto& x : w) x *= inv;
    for (auto& x : combo) x *= inv;
    rows_.push_back(Row{std::move(w), std::move(combo), piv});
    return true;
}

std::optional<std::vector<Cyclotomic>> LinearSpan::express(const std::vector<Cyclotomic>& v) const {
    std::vector<Cyclotomic> w = v;
    std::vector<Cyclotomic> coeffs(accepted_, Cyclotomic::zero(m_));
    for (const auto& row : rows_) {
        if (row.pivot >= w.size()) continue;
        const Cyclotomic& c = w[row.pivot];
        if (c.is_zero()) continue;
        for (size_t j = 0; j < w.size(); ++j) {
            if (!row.v[j].is_zero()) w[j] -= c * row.v[j];
        }
        for (size_t j = 0; j < row.combo.size(); ++j) {
            if (!row.combo[j].is_zero()) coeffs[j] += c * row.combo[j];
        }
    }
    for (const auto& x : w) {
        if (!x.is_zero()) return std::nullopt;
    }
    return coeffs;
}

bool LinearSpan::contains(const std::vector<Cyclotomic>& v) const {
    return express(v).has_value();
}

namespace {

// In-place reduction to row echelon form; returns pivot columns.
std::vector<int> echelonize(std::vector<std::vector<Cyclotomic>>& rows, int cols) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        int sel = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i) {
            if (!rows[i][c].is_zero()) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        std::swap(rows[r], rows[sel]);
        Cyclotomic inv = rows[r][c].inverse();
        for (int j = c; j < cols; ++j) rows[r][j] *= inv;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r) continue;
            const Cyclotomic f = rows[i][c];
            if (f.is_zero()) continue;
            for (int j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::vector<std::vector<Cyclotomic>> nullspace(const Mat& a) {
    int n = a.cols();
    std::vector<std::vector<Cyclotomic>> rows(a.rows(), std::vector<Cyclotomic>(n, Cyclotomic::zero(a.order())));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < n; ++j) rows[i][j] = a.at(i, j);
    std::vector<int> pivots = echelonize(rows, n);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Cyclotomic>> basis;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Cyclotomic> v(n, Cyclotomic::zero(a.order()));
        v[c] = Cyclotomic::one(a.order());
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Cyclotomic>> solve(const Mat& a, const std::vector<Cyclotomic>& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("rhs length mismatch");
    int n = a.cols();
    std::vector<std::vector<Cyclotomic>> rows(a.rows(), std::vector<Cyclotomic>(n + 1, Cyclotomic::zero(a.order())));
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < n; ++j) rows[i][j] = a.at(i, j);
        rows[i][n] = b[i];
    }
    std::vector<int> pivots = echelonize(rows, n + 1);
    std::vector<Cyclotomic> x(n, Cyclotomic::zero(a.order()));
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == n) return std::nullopt;  // inconsistent
        x[pivots[i]] = rows[i][n];
    }
    return x;
}

int rank(const Mat& a) {
    std::vector<std::vector<Cyclotomic>> rows(a.rows(), std::vector<Cyclotomic>(a.cols(), Cyclotomic::zero(a.order())));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) rows[i][j] = a.at(i, j);
    return static_cast<int>(echelonize(rows, a.cols()).size());
}

}  // namespace cycbrauer
