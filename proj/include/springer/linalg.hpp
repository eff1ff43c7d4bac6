#pragma once

// Exact linear algebra: small dense matrices with fraction-free elimination and
// Smith normal form, plus incremental sparse row echelon forms used for the
// large degreewise span computations.

#include <map>
#include <utility>
#include <vector>

#include "springer/integer.hpp"

namespace springer {

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols);

    static ExactMatrix identity(int n);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    Rational& at(int r, int c) { return data_[index(r, c)]; }
    const Rational& at(int r, int c) const { return data_[index(r, c)]; }

    bool is_integral() const;
    bool is_zero() const;

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    ExactMatrix pow(unsigned e) const;

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    std::size_t index(int r, int c) const;

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

// Bareiss elimination after clearing row denominators.
long rank_rational(const ExactMatrix& m);

// Nonzero invariant factors d_1 | d_2 | ... (positive). Throws
// std::invalid_argument on non-integral entries.
std::vector<Integer> smith_normal_form(const ExactMatrix& m);

// Sorted by column, no zero entries.
using SparseVector = std::vector<std::pair<int, Rational>>;
using IntSparseVector = std::vector<std::pair<int, Integer>>;

// Row echelon form over Q built one row at a time. The pivot of a row is its
// smallest column index, so callers pick the column numbering to express
// which coordinates should be eliminated first.
class SparseEchelon {
public:
    explicit SparseEchelon(int cols) : cols_(cols) {}

    // Reduces v against the current pivots; returns true if it was independent.
    bool insert(SparseVector v);

    int cols() const noexcept { return cols_; }
    long rank() const noexcept { return static_cast<long>(pivots_.size()); }
    bool full() const noexcept { return rank() == cols_; }
    // Pivot columns in increasing order.
    std::vector<int> pivot_columns() const;

private:
    int cols_;
    std::map<int, SparseVector> pivots_;  // pivot entry normalised to 1
};

// Echelon form of an integer lattice under unimodular row operations
// (gcd combination when the pivot does not divide the incoming entry).
class IntegerEchelon {
public:
    explicit IntegerEchelon(int cols) : cols_(cols) {}

    void insert(IntSparseVector v);

    int cols() const noexcept { return cols_; }
    long rank() const noexcept { return static_cast<long>(rows_.size()); }
    // True when every pivot is 1, which already forces all invariant factors to 1.
    bool unit_pivots() const;
    // Invariant factors of the lattice spanned so far.
    std::vector<Integer> invariant_factors() const;

private:
    int cols_;
    std::map<int, IntSparseVector> rows_;  // positive pivot at the first entry
};

}  // namespace springer
