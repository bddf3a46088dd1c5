#include "rembed/stirling.hpp"

#include <stdexcept>

#include "rembed/errors.hpp"

namespace rembed {

StirlingTable::StirlingTable(int max_n) {
    if (max_n < 0) throw PreconditionError("Stirling table bound must be >= 0");
    rows_.resize(max_n + 1);
    rows_[0] = {BigInt(1)}; // c(0,0) = 1
    for (int n = 1; n <= max_n; ++n) {
        rows_[n].assign(n + 1, BigInt(0));
        for (int k = 1; k <= n; ++k) {
            // c(n, k) = (n-1) c(n-1, k) + c(n-1, k-1)
            rows_[n][k] = rows_[n - 1][k - 1];
            if (k <= n - 1) rows_[n][k] += (n - 1) * rows_[n - 1][k];
        }
    }
}

const BigInt& StirlingTable::unsigned_value(int n, int k) const {
    if (n < 0 || n > bound() || k < 0 || k > n) {
        throw std::out_of_range("Stirling index outside table");
    }
    return rows_[n][k];
}

BigInt StirlingTable::signed_value(int n, int k) const {
    const BigInt& c = unsigned_value(n, k);
    return (n - k) % 2 == 0 ? c : -c;
}

const std::vector<BigInt>& StirlingTable::row(int n) const {
    if (n < 0 || n > bound()) throw std::out_of_range("Stirling row outside table");
    return rows_[n];
}

BigInt stirling_unsigned(int n, int k) {
    StirlingTable table(n);
    return table.unsigned_value(n, k);
}

} // namespace rembed
