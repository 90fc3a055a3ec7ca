#include "sfthom/intmatrix.hpp"

#include <algorithm>
#include <sstream>

#include "sfthom/errors.hpp"

namespace sfthom {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw InputError("IntMatrix: ragged initializer");
        for (const auto& x : r) a_.push_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

bool IntMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(rows_);
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("IntMatrix: shape mismatch in +");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("IntMatrix: shape mismatch in -");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw InputError("IntMatrix: shape mismatch in *");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& x = (*this)(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator*(const Int& k) const {
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * k;
    return r;
}

IntMatrix IntMatrix::operator-() const { return *this * Int(-1); }

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

IntMatrix IntMatrix::pow(std::size_t e) const {
    if (rows_ != cols_) throw InputError("IntMatrix: pow of non-square matrix");
    IntMatrix acc = identity(rows_), base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw InputError("IntMatrix: vector length mismatch");
    std::vector<Int> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
    return r;
}

IntMatrix IntMatrix::column(std::size_t c) const {
    IntMatrix r(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) r(i, 0) = (*this)(i, c);
    return r;
}

void IntMatrix::set_column(std::size_t c, const std::vector<Int>& v) {
    if (v.size() != rows_) throw InputError("IntMatrix: column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = v[i];
}

IntMatrix IntMatrix::hconcat(const IntMatrix& o) const {
    if (rows_ != o.rows_) throw InputError("IntMatrix: row mismatch in hconcat");
    IntMatrix r(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
    }
    return r;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& idx) const {
    IntMatrix r(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t i = 0; i < rows_; ++i) r(i, j) = (*this)(i, idx[j]);
    return r;
}

// Bareiss fraction-free elimination; returns the determinant.
Int IntMatrix::det() const {
    if (rows_ != cols_) throw InputError("IntMatrix: det of non-square matrix");
    if (rows_ == 0) return 1;
    IntMatrix m = *this;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < rows_; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < rows_ && m(p, k) == 0) ++p;
            if (p == rows_) return 0;
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < rows_; ++i)
            for (std::size_t j = k + 1; j < cols_; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign > 0 ? m(rows_ - 1, cols_ - 1) : -m(rows_ - 1, cols_ - 1);
}

std::size_t IntMatrix::rank() const {
    IntMatrix m = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t p = r;
        while (p < rows_ && m(p, c) == 0) ++p;
        if (p == rows_) continue;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m(r, j), m(p, j));
        for (std::size_t i = r + 1; i < rows_; ++i) {
            if (m(i, c) == 0) continue;
            Int g = gcd(m(i, c), m(r, c));
            Int fr = m(i, c) / g, fp = m(r, c) / g;
            for (std::size_t j = c; j < cols_; ++j) m(i, j) = m(i, j) * fp - m(r, j) * fr;
        }
        ++r;
    }
    return r;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

std::vector<Int> SmithForm::divisors() const {
    std::vector<Int> d;
    std::size_t n = std::min(D.rows(), D.cols());
    for (std::size_t i = 0; i < n; ++i)
        if (D(i, i) != 0) d.push_back(D(i, i));
    return d;
}

std::size_t SmithForm::rank() const { return divisors().size(); }

namespace {

struct SnfWork {
    IntMatrix S, U, V, Uinv, Vinv;

    explicit SnfWork(const IntMatrix& m)
        : S(m),
          U(IntMatrix::identity(m.rows())),
          V(IntMatrix::identity(m.cols())),
          Uinv(IntMatrix::identity(m.rows())),
          Vinv(IntMatrix::identity(m.cols())) {}

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < S.cols(); ++c) std::swap(S(i, c), S(j, c));
        for (std::size_t c = 0; c < U.cols(); ++c) std::swap(U(i, c), U(j, c));
        for (std::size_t r = 0; r < Uinv.rows(); ++r) std::swap(Uinv(r, i), Uinv(r, j));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < S.rows(); ++r) std::swap(S(r, i), S(r, j));
        for (std::size_t r = 0; r < V.rows(); ++r) std::swap(V(r, i), V(r, j));
        for (std::size_t c = 0; c < Vinv.cols(); ++c) std::swap(Vinv(i, c), Vinv(j, c));
    }
    // row_i -= q * row_j
    void add_row(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < S.cols(); ++c) S(i, c) -= q * S(j, c);
        for (std::size_t c = 0; c < U.cols(); ++c) U(i, c) -= q * U(j, c);
        for (std::size_t r = 0; r < Uinv.rows(); ++r) Uinv(r, j) += q * Uinv(r, i);
    }
    // col_i -= q * col_j
    void add_col(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < S.rows(); ++r) S(r, i) -= q * S(r, j);
        for (std::size_t r = 0; r < V.rows(); ++r) V(r, i) -= q * V(r, j);
        for (std::size_t c = 0; c < Vinv.cols(); ++c) Vinv(j, c) += q * Vinv(i, c);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < S.cols(); ++c) S(i, c) = -S(i, c);
        for (std::size_t c = 0; c < U.cols(); ++c) U(i, c) = -U(i, c);
        for (std::size_t r = 0; r < Uinv.rows(); ++r) Uinv(r, i) = -Uinv(r, i);
    }

    // Move the minimal-absolute-value nonzero entry of S[t.., t..] to (t,t).
    // Returns false if the submatrix is zero.
    bool place_pivot(std::size_t t) {
        bool found = false;
        std::size_t bi = t, bj = t;
        Int best;
        for (std::size_t i = t; i < S.rows(); ++i)
            for (std::size_t j = t; j < S.cols(); ++j) {
                if (S(i, j) == 0) continue;
                Int v = abs(S(i, j));
                if (!found || v < best) {
                    found = true;
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (!found) return false;
        swap_rows(t, bi);
        swap_cols(t, bj);
        return true;
    }

    // Clear row t and column t beyond the pivot; pivot shrinks on the way.
    void diagonal_step(std::size_t t) {
        for (;;) {
            if (!place_pivot(t)) return;
            bool dirty = false;
            for (std::size_t i = t + 1; i < S.rows(); ++i) {
                if (S(i, t) == 0) continue;
                add_row(i, t, S(i, t) / S(t, t));
                if (S(i, t) != 0) dirty = true;  // remainder smaller than pivot
            }
            for (std::size_t j = t + 1; j < S.cols(); ++j) {
                if (S(t, j) == 0) continue;
                add_col(j, t, S(t, j) / S(t, t));
                if (S(t, j) != 0) dirty = true;
            }
            if (!dirty) return;
        }
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    SnfWork w(m);
    const std::size_t n = std::min(m.rows(), m.cols());
    for (;;) {
        for (std::size_t t = 0; t < n; ++t) w.diagonal_step(t);
        for (std::size_t t = 0; t < n; ++t)
            if (w.S(t, t) < 0) w.negate_row(t);
        // Enforce the divisibility chain; each fix strictly shrinks d_t.
        bool fixed = true;
        for (std::size_t t = 0; t + 1 < n; ++t) {
            if (w.S(t, t) == 0 && w.S(t + 1, t + 1) != 0) {
                w.swap_rows(t, t + 1);
                w.swap_cols(t, t + 1);
                fixed = false;
                break;
            }
            if (w.S(t, t) != 0 && w.S(t + 1, t + 1) % w.S(t, t) != 0) {
                w.add_col(t, t + 1, Int(-1));  // col_t += col_{t+1}
                fixed = false;
                break;
            }
        }
        if (fixed) break;
    }
    SmithForm out{w.S, w.U, w.V, w.Uinv, w.Vinv};
    return out;
}

IntMatrix kernel_basis(const IntMatrix& m) {
    SmithForm f = smith_normal_form(m);
    std::vector<std::size_t> ker;
    const std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (j >= n || f.D(j, j) == 0) ker.push_back(j);
    return f.V.select_columns(ker);
}

IntMatrix image_basis(const IntMatrix& m) {
    SmithForm f = smith_normal_form(m);
    std::vector<std::size_t> im;
    const std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t j = 0; j < n; ++j)
        if (f.D(j, j) != 0) im.push_back(j);
    IntMatrix b(m.rows(), im.size());
    for (std::size_t k = 0; k < im.size(); ++k)
        for (std::size_t i = 0; i < m.rows(); ++i) b(i, k) = f.Uinv(i, im[k]) * f.D(im[k], im[k]);
    return b;
}

bool solve(const IntMatrix& m, const std::vector<Int>& b, std::vector<Int>& x) {
    if (b.size() != m.rows()) throw InputError("solve: rhs length mismatch");
    SmithForm f = smith_normal_form(m);
    std::vector<Int> ub = f.U.apply(b);
    std::vector<Int> y(m.cols());
    const std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i < n && f.D(i, i) != 0) {
            if (ub[i] % f.D(i, i) != 0) return false;
            y[i] = ub[i] / f.D(i, i);
        } else if (ub[i] != 0) {
            return false;
        }
    }
    x = f.V.apply(y);
    return true;
}

IntMatrix solve_all(const IntMatrix& m, const IntMatrix& B, const char* what) {
    if (B.rows() != m.rows()) throw InputError("solve_all: shape mismatch");
    SmithForm f = smith_normal_form(m);
    IntMatrix X(m.cols(), B.cols());
    const std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t c = 0; c < B.cols(); ++c) {
        std::vector<Int> b(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) b[i] = B(i, c);
        std::vector<Int> ub = f.U.apply(b);
        std::vector<Int> y(m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i < n && f.D(i, i) != 0) {
                if (ub[i] % f.D(i, i) != 0)
                    throw InternalError(std::string("solve_all: no integral solution in ") + what);
                y[i] = ub[i] / f.D(i, i);
            } else if (ub[i] != 0) {
                throw InternalError(std::string("solve_all: inconsistent system in ") + what);
            }
        }
        X.set_column(c, f.V.apply(y));
    }
    return X;
}

IntMatrix lattice_canonical(const IntMatrix& m) {
    IntMatrix h = m;
    const std::size_t rows = h.rows(), cols = h.cols();
    std::size_t c0 = 0;
    std::vector<std::size_t> pivot_row;
    for (std::size_t r = 0; r < rows && c0 < cols; ++r) {
        for (;;) {
            std::size_t best = cols;
            for (std::size_t j = c0; j < cols; ++j) {
                if (h(r, j) == 0) continue;
                if (best == cols || abs(h(r, j)) < abs(h(r, best))) best = j;
            }
            if (best == cols) break;
            if (best != c0)
                for (std::size_t i = 0; i < rows; ++i) std::swap(h(i, c0), h(i, best));
            bool clean = true;
            for (std::size_t j = c0 + 1; j < cols; ++j) {
                if (h(r, j) == 0) continue;
                Int q = h(r, j) / h(r, c0);
                for (std::size_t i = 0; i < rows; ++i) h(i, j) -= q * h(i, c0);
                if (h(r, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h(r, c0) == 0) continue;  // no pivot in this row
        if (h(r, c0) < 0)
            for (std::size_t i = 0; i < rows; ++i) h(i, c0) = -h(i, c0);
        // Canonical residues left of the pivot: 0 <= h(r,k) < h(r,c0).
        for (std::size_t k = 0; k < c0; ++k) {
            Int q = h(r, k) / h(r, c0);
            if (h(r, k) - q * h(r, c0) < 0) q -= 1;  // floor division
            if (q != 0)
                for (std::size_t i = 0; i < rows; ++i) h(i, k) -= q * h(i, c0);
        }
        pivot_row.push_back(r);
        ++c0;
    }
    std::vector<std::size_t> keep(c0);
    for (std::size_t j = 0; j < c0; ++j) keep[j] = j;
    return h.select_columns(keep);
}

bool lattice_contains(const IntMatrix& lat, const std::vector<Int>& v) {
    if (lat.cols() == 0) return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
    std::vector<Int> x;
    return solve(lat, v, x);
}

}  // namespace sfthom
