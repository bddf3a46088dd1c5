#ifndef REMBED_PARTITION_HPP
#define REMBED_PARTITION_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "rembed/numbers.hpp"

namespace rembed {

// Integer partition: weakly decreasing positive parts.  The empty partition
// (weight 0) is allowed.
class Partition {
public:
    Partition() = default;

    // Parts may be given in any order; they are sorted decreasing.
    // Nonpositive parts are rejected.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // Number of parts equal to 1.
    int ones() const;

    // Copy with all 1-parts removed.
    Partition without_ones() const;

    // Exponent form, e.g. "5 4^3 2^2"; the empty partition prints "-".
    std::string to_string() const;
    // Comma form, e.g. "5,4,4,4,2,2".
    std::string to_comma_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// Accepts both text syntaxes: comma form "5,4,4,2" and exponent form
// "5 4^3 2^2" (whitespace-separated tokens, caret for repetition).
Partition parse_partition(std::string_view text);

// |C_lambda|: number of permutations of S_n with cycle type lambda,
// n!/(prod lambda_i * prod mult_m!).
BigInt conj_class_size(const Partition& lambda);

// All partitions of n in lexicographically decreasing order:
// (n), ..., (1,...,1).  Usable in range-for; the iterator yields
// const Partition&.
class PartitionRange {
public:
    explicit PartitionRange(int n);

    class iterator {
    public:
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(int n);

        const Partition& operator*() const { return current_; }
        const Partition* operator->() const { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& a, const iterator& b) {
            return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
        }

    private:
        void load();

        std::vector<int> x_; // working buffer, 1-padded beyond h_
        int m_ = 0;          // parts in the current partition
        int h_ = -1;         // last index with x_[h_] > 1
        bool done_ = true;
        bool final_emitted_ = false;
        Partition current_;
    };

    iterator begin() const { return iterator(n_); }
    iterator end() const { return iterator(); }

private:
    int n_;
};

std::vector<Partition> all_partitions(int n);

} // namespace rembed

#endif
