#include "rembed/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "rembed/errors.hpp"

namespace rembed {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw PreconditionError("partition parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::ones() const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), 1));
}

Partition Partition::without_ones() const {
    std::vector<int> kept;
    kept.reserve(parts_.size());
    for (int p : parts_) {
        if (p > 1) kept.push_back(p);
    }
    return Partition(std::move(kept));
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size();) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        if (i > 0) out << ' ';
        out << parts_[i];
        if (j - i > 1) out << '^' << (j - i);
        i = j;
    }
    return out.str();
}

std::string Partition::to_comma_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out << ',';
        out << parts_[i];
    }
    return out.str();
}

namespace {

int parse_positive_int(std::string_view tok, std::string_view what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 1) {
        throw ParseError("invalid " + std::string(what) + ": '" + std::string(tok) + "'");
    }
    return value;
}

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

} // namespace

Partition parse_partition(std::string_view text) {
    text = trimmed(text);
    if (text.empty()) throw ParseError("empty partition");

    std::vector<int> parts;
    if (text.find(',') != std::string_view::npos) {
        // comma form: "5,4,4,2"
        std::size_t start = 0;
        while (true) {
            std::size_t comma = text.find(',', start);
            std::string_view tok = trimmed(text.substr(
                start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
            parts.push_back(parse_positive_int(tok, "partition part"));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    } else {
        // exponent form: "5 4^3 2^2" (a lone "7" parses here too)
        std::size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
            if (i >= text.size()) break;
            std::size_t j = i;
            while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
            std::string_view tok = text.substr(i, j - i);
            std::size_t caret = tok.find('^');
            if (caret == std::string_view::npos) {
                parts.push_back(parse_positive_int(tok, "partition part"));
            } else {
                int part = parse_positive_int(tok.substr(0, caret), "partition part");
                int mult = parse_positive_int(tok.substr(caret + 1), "partition multiplicity");
                if (mult > 1'000'000) throw ParseError("partition multiplicity too large");
                parts.insert(parts.end(), mult, part);
            }
            i = j;
        }
    }
    if (parts.empty()) throw ParseError("empty partition");
    return Partition(std::move(parts));
}

BigInt conj_class_size(const Partition& lambda) {
    if (lambda.empty()) throw PreconditionError("conjugacy class of the empty partition");
    BigInt size = factorial(lambda.weight());
    int run = 0;
    int prev = 0;
    for (int p : lambda.parts()) {
        size /= p;
        if (p == prev) {
            ++run;
            size /= run; // divides the multiplicity factorial incrementally
        } else {
            prev = p;
            run = 1;
        }
    }
    return size;
}

// Partitions of n in lexicographically decreasing order, buffer-based.
PartitionRange::PartitionRange(int n) : n_(n) {
    if (n < 0) throw PreconditionError("partitions of a negative integer");
}

PartitionRange::iterator::iterator(int n) : done_(false) {
    if (n == 0) {
        // single empty partition
        m_ = 0;
        h_ = -1;
        final_emitted_ = true;
        current_ = Partition();
        return;
    }
    x_.assign(n, 1);
    x_[0] = n;
    m_ = 1;
    h_ = n > 1 ? 0 : -1;
    final_emitted_ = (n == 1);
    load();
}

void PartitionRange::iterator::load() {
    current_ = Partition(std::vector<int>(x_.begin(), x_.begin() + m_));
}

PartitionRange::iterator& PartitionRange::iterator::operator++() {
    if (done_) return *this;
    if (final_emitted_) {
        done_ = true;
        return *this;
    }
    if (x_[h_] == 2) {
        x_[h_] = 1;
        ++m_;
        --h_;
    } else {
        int r = x_[h_] - 1;
        int t = m_ - h_; // units freed: the 1 removed from x_[h_] plus the trailing ones
        x_[h_] = r;
        while (t >= r) {
            ++h_;
            x_[h_] = r;
            t -= r;
        }
        if (t == 0) {
            m_ = h_ + 1;
        } else {
            m_ = h_ + 2;
            if (t > 1) {
                ++h_;
                x_[h_] = t;
            }
        }
    }
    final_emitted_ = (x_[0] == 1);
    load();
    return *this;
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    for (const Partition& p : PartitionRange(n)) out.push_back(p);
    return out;
}

} // namespace rembed
