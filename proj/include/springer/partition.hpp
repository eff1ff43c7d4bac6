#pragma once

// Partition combinatorics: conjugates, tail sums, multinomial ranks, Springer
// dimensions and lazily enumerated index subsets. All indices at the public
// boundary are 1-based.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "springer/integer.hpp"

namespace springer {

class Partition {
public:
    Partition() = default;
    // Throws std::invalid_argument if parts are not weakly decreasing or contain
    // a non-positive entry. Trailing zeros are stripped first.
    explicit Partition(std::vector<int> parts);

    // "5,4,4,2,2,2,1". Diagnostics name the first offending (1-based) position.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int n() const noexcept { return n_; }
    std::size_t length() const noexcept { return parts_.size(); }
    // 1-based, zero past the last part.
    int part(int i) const noexcept;

    std::string to_string() const;  // same grammar as parse

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

Partition dual(const Partition& lambda);

// Sum of the last s entries of lambda viewed as a length-n vector; 1 <= s <= n.
int p_function(const Partition& lambda, int s);

// n! / (lambda_1! ... lambda_l!)
Integer multinomial_rank(const Partition& lambda);

// Sum over the dual partition of eta_j (eta_j - 1) / 2.
int springer_dimension(const Partition& lambda);

// All partitions of n, largest first part first: (n), (n-1,1), ..., (1^n).
std::vector<Partition> enumerate_partitions(int n);

class IndexSubset {
public:
    IndexSubset() = default;
    // Throws unless 1 <= i_1 < ... < i_s <= n.
    IndexSubset(std::vector<int> indices, int n);

    const std::vector<int>& indices() const noexcept { return indices_; }
    int size() const noexcept { return static_cast<int>(indices_.size()); }
    int ambient() const noexcept { return n_; }
    std::string to_string() const;  // "(1,3)"

    friend bool operator==(const IndexSubset&, const IndexSubset&) = default;
    friend auto operator<=>(const IndexSubset& a, const IndexSubset& b) { return a.indices_ <=> b.indices_; }

private:
    std::vector<int> indices_;
    int n_ = 0;
};

// Lexicographic stream of the s-subsets of [1, n]. Memory is O(s).
class SubsetStream {
public:
    SubsetStream(int n, int s);

    class iterator {
    public:
        using value_type = IndexSubset;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        const IndexSubset& operator*() const noexcept { return current_; }
        const IndexSubset* operator->() const noexcept { return &current_; }
        iterator& operator++();
        iterator operator++(int) {
            iterator t = *this;
            ++*this;
            return t;
        }
        friend bool operator==(const iterator& a, const iterator& b) noexcept { return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_); }

    private:
        friend class SubsetStream;
        iterator(int n, int s);
        int n_ = 0;
        std::vector<int> work_;
        IndexSubset current_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(n_, s_); }
    iterator end() const { return iterator(); }

private:
    int n_, s_;
};

SubsetStream enumerate_subsets(int n, int s);

}  // namespace springer
