#include "springer/partition.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace springer {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition part " + std::to_string(i + 1) + " is not positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition is not weakly decreasing at position " + std::to_string(i + 1) +
                                        " (" + std::to_string(parts_[i - 1]) + " < " + std::to_string(parts_[i]) + ")");
        n_ += parts_[i];
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    int index = 1;
    if (text.empty()) throw std::invalid_argument("empty partition");
    while (true) {
        auto comma = text.find(',', pos);
        std::string_view field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
            throw std::invalid_argument("partition entry at position " + std::to_string(index) + " is not an integer: '" +
                                        std::string(field) + "'");
        if (value <= 0)
            throw std::invalid_argument("partition part " + std::to_string(index) + " is not positive");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
        ++index;
    }
    return Partition(std::move(parts));
}

int Partition::part(int i) const noexcept {
    if (i < 1 || i > static_cast<int>(parts_.size())) return 0;
    return parts_[i - 1];
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition dual(const Partition& lambda) {
    std::vector<int> eta;
    int largest = lambda.parts().empty() ? 0 : lambda.parts().front();
    for (int j = 1; j <= largest; ++j) {
        int count = 0;
        for (int p : lambda.parts())
            if (p >= j) ++count;
        eta.push_back(count);
    }
    return Partition(std::move(eta));
}

int p_function(const Partition& lambda, int s) {
    const int n = lambda.n();
    if (s < 1 || s > n)
        throw std::out_of_range("p_function: s=" + std::to_string(s) + " outside [1," + std::to_string(n) + "]");
    int total = 0;
    for (int j = n - s + 1; j <= n; ++j) total += lambda.part(j);
    return total;
}

Integer multinomial_rank(const Partition& lambda) {
    Integer r = factorial(static_cast<unsigned>(lambda.n()));
    for (int p : lambda.parts()) r = Integer::divexact(r, factorial(static_cast<unsigned>(p)));
    return r;
}

int springer_dimension(const Partition& lambda) {
    int dim = 0;
    const Partition eta_parts = dual(lambda);
    for (int eta : eta_parts.parts()) dim += eta * (eta - 1) / 2;
    return dim;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions_rec(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_partitions: n must be positive");
    std::vector<Partition> out;
    std::vector<int> prefix;
    partitions_rec(n, n, prefix, out);
    return out;
}

IndexSubset::IndexSubset(std::vector<int> indices, int n) : indices_(std::move(indices)), n_(n) {
    for (std::size_t k = 0; k < indices_.size(); ++k) {
        if (indices_[k] < 1 || indices_[k] > n)
            throw std::invalid_argument("subset index " + std::to_string(indices_[k]) + " outside [1," +
                                        std::to_string(n) + "]");
        if (k > 0 && indices_[k] <= indices_[k - 1])
            throw std::invalid_argument("subset indices must be strictly increasing");
    }
}

std::string IndexSubset::to_string() const {
    std::string s = "(";
    for (std::size_t k = 0; k < indices_.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(indices_[k]);
    }
    return s + ")";
}

SubsetStream::SubsetStream(int n, int s) : n_(n), s_(s) {
    if (s < 1 || s > n)
        throw std::out_of_range("enumerate_subsets: s=" + std::to_string(s) + " outside [1," + std::to_string(n) + "]");
}

SubsetStream::iterator::iterator(int n, int s) : n_(n), work_(static_cast<std::size_t>(s)), done_(false) {
    for (int k = 0; k < s; ++k) work_[static_cast<std::size_t>(k)] = k + 1;
    current_ = IndexSubset(work_, n_);
}

SubsetStream::iterator& SubsetStream::iterator::operator++() {
    const int s = static_cast<int>(work_.size());
    int k = s - 1;
    while (k >= 0 && work_[static_cast<std::size_t>(k)] == n_ - s + k + 1) --k;
    if (k < 0) {
        done_ = true;
        return *this;
    }
    ++work_[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < s; ++j) work_[static_cast<std::size_t>(j)] = work_[static_cast<std::size_t>(j - 1)] + 1;
    current_ = IndexSubset(work_, n_);
    return *this;
}

SubsetStream enumerate_subsets(int n, int s) { return SubsetStream(n, s); }

}  // namespace springer
