#include "springer/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace springer {

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("ExactMatrix: dimensions must be positive");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0));
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::size_t ExactMatrix::index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("ExactMatrix: index out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
}

bool ExactMatrix::is_integral() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_integer(); });
}

bool ExactMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("ExactMatrix: shape mismatch in product");
    ExactMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j)
                if (!b.at(k, j).is_zero()) out.at(i, j) += x * b.at(k, j);
        }
    return out;
}

ExactMatrix ExactMatrix::pow(unsigned e) const {
    if (rows_ != cols_) throw std::invalid_argument("ExactMatrix: power of a non-square matrix");
    ExactMatrix result = identity(rows_), base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

namespace {

using IntRows = std::vector<std::vector<Integer>>;

IntRows integer_rows(const ExactMatrix& m) {
    IntRows rows(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (int j = 0; j < m.cols(); ++j) {
            const Integer& d = m.at(i, j).den();
            l = Integer::divexact(l * d, gcd(l, d));
        }
        auto& row = rows[static_cast<std::size_t>(i)];
        for (int j = 0; j < m.cols(); ++j) {
            const Rational& x = m.at(i, j);
            row.push_back(Integer::divexact(x.num() * l, x.den()));
        }
    }
    return rows;
}

}  // namespace

long rank_rational(const ExactMatrix& m) {
    IntRows a = integer_rows(m);
    const int rows = m.rows(), cols = m.cols();
    Integer prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && a[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(r)]);
        const auto& piv = a[static_cast<std::size_t>(r)];
        for (int i = r + 1; i < rows; ++i) {
            auto& row = a[static_cast<std::size_t>(i)];
            Integer f = row[static_cast<std::size_t>(c)];
            for (int j = c; j < cols; ++j) {
                auto js = static_cast<std::size_t>(j);
                row[js] = Integer::divexact(piv[static_cast<std::size_t>(c)] * row[js] - f * piv[js], prev);
            }
        }
        prev = piv[static_cast<std::size_t>(c)];
        ++r;
    }
    return r;
}

std::vector<Integer> smith_normal_form(const ExactMatrix& m) {
    if (!m.is_integral()) throw std::invalid_argument("smith_normal_form: non-integral entry");
    IntRows a = integer_rows(m);
    const int rows = m.rows(), cols = m.cols();
    auto at = [&](int i, int j) -> Integer& { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
    std::vector<Integer> diag;
    for (int t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            int pi = -1, pj = -1;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j)
                    if (!at(i, j).is_zero() && (pi < 0 || abs(at(i, j)) < abs(at(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) {
                std::sort(diag.begin(), diag.end());
                return diag;
            }
            std::swap(a[static_cast<std::size_t>(t)], a[static_cast<std::size_t>(pi)]);
            for (int i = 0; i < rows; ++i) std::swap(at(i, t), at(i, pj));

            bool clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (at(i, t).is_zero()) continue;
                Integer q = at(i, t) / at(t, t);
                for (int j = t; j < cols; ++j) at(i, j) -= q * at(t, j);
                if (!at(i, t).is_zero()) clean = false;
            }
            for (int j = t + 1; j < cols; ++j) {
                if (at(t, j).is_zero()) continue;
                Integer q = at(t, j) / at(t, t);
                for (int i = t; i < rows; ++i) at(i, j) -= q * at(i, t);
                if (!at(t, j).is_zero()) clean = false;
            }
            if (!clean) continue;

            int bad = -1;
            for (int i = t + 1; i < rows && bad < 0; ++i)
                for (int j = t + 1; j < cols; ++j)
                    if (!(at(i, j) % at(t, t)).is_zero()) {
                        bad = i;
                        break;
                    }
            if (bad >= 0) {
                for (int j = t; j < cols; ++j) at(t, j) += at(bad, j);
                continue;
            }
            diag.push_back(abs(at(t, t)));
            break;
        }
    }
    std::sort(diag.begin(), diag.end());
    return diag;
}

namespace {

// a*x + b*y for sorted sparse vectors.
template <class Vec, class Scalar>
Vec combine(const Scalar& a, const Vec& x, const Scalar& b, const Vec& y) {
    Vec out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            auto v = a * x[i].second;
            if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            auto v = b * y[j].second;
            if (!v.is_zero()) out.emplace_back(y[j].first, std::move(v));
            ++j;
        } else {
            auto v = a * x[i].second + b * y[j].second;
            if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

// v - c * row, skipping the (cancelling) leading entries of both.
SparseVector eliminate(const SparseVector& v, const Rational& c, const SparseVector& row) {
    SparseVector out;
    out.reserve(v.size() + row.size());
    std::size_t i = 1, j = 1;
    while (i < v.size() || j < row.size()) {
        if (j == row.size() || (i < v.size() && v[i].first < row[j].first)) {
            out.push_back(v[i++]);
        } else if (i == v.size() || row[j].first < v[i].first) {
            out.emplace_back(row[j].first, -(c * row[j].second));
            ++j;
        } else {
            Rational x = v[i].second - c * row[j].second;
            if (!x.is_zero()) out.emplace_back(v[i].first, std::move(x));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

bool SparseEchelon::insert(SparseVector v) {
    while (!v.empty()) {
        if (v.front().first < 0 || v.back().first >= cols_) throw std::out_of_range("SparseEchelon: column out of range");
        auto it = pivots_.find(v.front().first);
        if (it == pivots_.end()) {
            if (!v.front().second.is_one()) {
                Rational inv = v.front().second.inverse();
                for (auto& e : v) e.second *= inv;
            }
            const int col = v.front().first;
            pivots_.emplace(col, std::move(v));
            return true;
        }
        Rational c = v.front().second;
        v = eliminate(v, c, it->second);
    }
    return false;
}

std::vector<int> SparseEchelon::pivot_columns() const {
    std::vector<int> out;
    out.reserve(pivots_.size());
    for (const auto& [c, row] : pivots_) out.push_back(c);
    return out;
}

void IntegerEchelon::insert(IntSparseVector v) {
    while (!v.empty()) {
        if (v.front().first < 0 || v.back().first >= cols_) throw std::out_of_range("IntegerEchelon: column out of range");
        const int col = v.front().first;
        auto it = rows_.find(col);
        if (it == rows_.end()) {
            if (v.front().second.sign() < 0)
                for (auto& e : v) e.second = -e.second;
            rows_.emplace(col, std::move(v));
            return;
        }
        IntSparseVector& row = it->second;
        const Integer p = row.front().second;
        const Integer a = v.front().second;
        if ((a % p).is_zero()) {
            v = combine(Integer(1), v, -(a / p), row);
            continue;
        }
        ExtendedGcd e = extended_gcd(p, a);
        IntSparseVector merged = combine(e.x, row, e.y, v);
        IntSparseVector rest = combine(Integer::divexact(a, e.g), row, -Integer::divexact(p, e.g), v);
        if (merged.front().second.sign() < 0)
            for (auto& t : merged) t.second = -t.second;
        row = std::move(merged);
        v = std::move(rest);
    }
}

bool IntegerEchelon::unit_pivots() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const auto& kv) { return kv.second.front().second.is_one(); });
}

std::vector<Integer> IntegerEchelon::invariant_factors() const {
    if (rows_.empty()) return {};
    if (unit_pivots()) return std::vector<Integer>(rows_.size(), Integer(1));
    std::map<int, int> used;
    for (const auto& [c, row] : rows_)
        for (const auto& e : row) used.emplace(e.first, 0);
    int k = 0;
    for (auto& [c, idx] : used) idx = k++;
    ExactMatrix m(static_cast<int>(rows_.size()), k);
    int r = 0;
    for (const auto& [c, row] : rows_) {
        for (const auto& e : row) m.at(r, used.at(e.first)) = Rational(e.second);
        ++r;
    }
    return smith_normal_form(m);
}

}  // namespace springer
