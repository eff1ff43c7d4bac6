#pragma once

// lambda- and gamma-operations on classes of the form sum of line classes
// plus an integer multiple of the trivial class, with u_i standing for the
// i-th line class.

#include <vector>

#include "springer/groebner.hpp"
#include "springer/ideals.hpp"
#include "springer/partition.hpp"
#include "springer/polynomial.hpp"

namespace springer {

class VirtualClass {
public:
    VirtualClass() = default;
    // lines are 1-based variable indices, repeats allowed.
    VirtualClass(int n, std::vector<int> lines, long shift);
    static VirtualClass of_subset(const IndexSubset& subset, long shift);

    int n() const noexcept { return n_; }
    const std::vector<int>& lines() const noexcept { return lines_; }
    long shift() const noexcept { return shift_; }
    long augmentation() const noexcept { return static_cast<long>(lines_.size()) + shift_; }

    // sum of u_i over the multiset, plus shift
    Polynomial to_polynomial() const;
    VirtualClass shifted(long k) const;
    std::string to_string() const;

    friend VirtualClass operator+(const VirtualClass& a, const VirtualClass& b);
    friend bool operator==(const VirtualClass&, const VirtualClass&) = default;

private:
    int n_ = 0;
    std::vector<int> lines_;  // sorted
    long shift_ = 0;
};

// lambda^0(x), ..., lambda^truncation(x): coefficients of
// prod (1 + u_i t) * (1 + t)^shift.
std::vector<Polynomial> lambda_series(const VirtualClass& x, int truncation);
Polynomial lambda_op(const VirtualClass& x, int d);

// The two expressions for gamma^d: sum_k lambda^k(x) C(d-1, k-1), and
// lambda^d(x + d - 1).
Polynomial gamma_sum_form(const VirtualClass& x, int d);
Polynomial gamma_shift_form(const VirtualClass& x, int d);

// Evaluates both forms; throws std::logic_error if they differ.
Polynomial gamma_op(const VirtualClass& x, int d);

struct RelationRow {
    IndexSubset subset;
    int d = 0;
    int q = 0;
    Polynomial element;      // in u
    Polynomial normal_form;  // in the basis' variables
    bool vanishes() const noexcept { return normal_form.is_zero(); }
};

struct RelationReport {
    Partition lambda;
    std::vector<RelationRow> rows;
    bool pass = false;
    // First row that fails, if any.
    const RelationRow* first_failure() const;
};

// gb is a K-theoretic basis for lambda written in `convention` (u or v).
// Checks gamma^d(sum u - s) for every subset and d in [s+1-q, s+2].
RelationReport verify_gamma_relations(const Partition& lambda, const GroebnerBasis& gb,
                                      Convention convention = Convention::v);
// Same window, with lambda^d(sum u - q).
RelationReport equivalent_lambda_relations(const Partition& lambda, const GroebnerBasis& gb,
                                           Convention convention = Convention::v);

}  // namespace springer
