#ifndef SFTHOM_INTMATRIX_HPP
#define SFTHOM_INTMATRIX_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace sfthom {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Dense matrix over arbitrary-precision integers.  All arithmetic is exact.
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool operator==(const IntMatrix& o) const = default;

    bool is_zero() const;
    bool is_identity() const;

    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator*(const Int& k) const;
    IntMatrix operator-() const;

    IntMatrix transpose() const;
    IntMatrix pow(std::size_t e) const;  // square matrices only

    // Column vector helpers (vectors are n x 1 matrices).
    std::vector<Int> apply(const std::vector<Int>& v) const;
    IntMatrix column(std::size_t c) const;
    void set_column(std::size_t c, const std::vector<Int>& v);

    // Horizontal concatenation [this | o].
    IntMatrix hconcat(const IntMatrix& o) const;
    // Submatrix of the listed columns, in order.
    IntMatrix select_columns(const std::vector<std::size_t>& idx) const;

    // Exact determinant (square matrices), fraction-free elimination.
    Int det() const;
    // Rank over the rationals.
    std::size_t rank() const;

    std::string to_string() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

// Smith normal form: U * m * V = D with D diagonal, d_1 | d_2 | ..., d_i >= 0,
// and U, V unimodular.  Uinv and Vinv are maintained alongside so that
// kernel/image lattices and exact linear solves come for free.
struct SmithForm {
    IntMatrix D;
    IntMatrix U, V;
    IntMatrix Uinv, Vinv;
    std::vector<Int> divisors() const;  // nonzero diagonal entries
    std::size_t rank() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Basis of the integer kernel {x : m x = 0}, one column per basis vector.
// The returned lattice is saturated (it is a direct summand of Z^cols).
IntMatrix kernel_basis(const IntMatrix& m);

// Basis of the image lattice {m x : x in Z^cols}.
IntMatrix image_basis(const IntMatrix& m);

// Solve m x = b exactly over the integers; returns false if no solution.
bool solve(const IntMatrix& m, const std::vector<Int>& b, std::vector<Int>& x);

// Solve m X = B columnwise; throws InternalError if any column fails.
IntMatrix solve_all(const IntMatrix& m, const IntMatrix& B, const char* what);

// Hermite-style canonical basis of the lattice spanned by the columns of m.
// Two column sets span the same lattice iff their canonical bases are equal.
IntMatrix lattice_canonical(const IntMatrix& m);

// Does the lattice spanned by the columns of `lat` contain v?
bool lattice_contains(const IntMatrix& lat, const std::vector<Int>& v);

}  // namespace sfthom

#endif
