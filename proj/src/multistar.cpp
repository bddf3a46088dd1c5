#include "rembed/multistar.hpp"

#include <stdexcept>

#include "rembed/errors.hpp"
#include "rembed/stirling.hpp"

namespace rembed {

MultistarSpec reduce_partition(const Partition& lambda) {
    if (lambda.empty()) throw PreconditionError("multistar needs a nonempty partition");
    MultistarSpec spec;
    spec.original = lambda;
    spec.reduced = lambda.without_ones();
    spec.ones_removed = lambda.ones();
    spec.weight = lambda.weight();
    spec.reduced_weight = spec.reduced.weight();
    return spec;
}

IntPolynomial stanley_polynomial(const Partition& lambda) {
    if (lambda.empty() || lambda.weight() < 1) {
        throw PreconditionError("Stanley polynomial needs a nonempty partition");
    }
    IntPolynomial g = rising_factorial_poly(lambda.weight());
    for (int part : lambda.parts()) {
        g -= shift_poly(g, part);
    }
    return g;
}

FaceDistribution multistar_face_distribution(const Partition& lambda) {
    if (lambda.empty()) throw PreconditionError("multistar needs a nonempty partition");
    if (lambda.ones() > 0) {
        throw PreconditionError("distribution needs all parts >= 2 (reduce the partition first)");
    }
    const int n = lambda.weight();
    const BigInt class_size = conj_class_size(lambda);
    const BigInt denom = factorial(n + 1);
    const IntPolynomial g = stanley_polynomial(lambda);

    FaceDistribution dist;
    for (int j = 1; j <= g.degree(); ++j) {
        const BigInt& c = g.coeff(j);
        if (c == 0) continue;
        BigInt scaled = c * class_size;
        if (scaled < 0 || scaled % denom != 0) {
            throw std::logic_error("face counts did not divide out exactly");
        }
        dist.add(j, scaled / denom);
    }
    if (dist.total() != class_size) {
        throw std::logic_error("face distribution total differs from the class size");
    }
    return dist;
}

Rational multistar_expected_faces(const Partition& lambda) {
    MultistarSpec spec = reduce_partition(lambda);
    if (spec.reduced_weight == 0) return 1; // a star of leaves is a tree
    return multistar_face_distribution(spec.reduced).expectation();
}

FaceDistribution dipole_face_distribution(int n) {
    if (n < 2) throw PreconditionError("dipole distribution needs n >= 2");
    StirlingTable table(n + 1);
    // 2 c(n+1, k) / (n (n+1)) full cycles give k faces when n - k is even;
    // the weights sum to (n-1)!, one per rotation of the far vertex
    const BigInt denom = BigInt(n) * (n + 1);
    FaceDistribution dist;
    for (int k = n % 2 == 0 ? 2 : 1; k <= n; k += 2) {
        BigInt w = 2 * table.unsigned_value(n + 1, k);
        if (w % denom != 0) throw std::logic_error("dipole weight did not divide out exactly");
        dist.add(k, w / denom);
    }
    if (dist.total() != factorial(n - 1)) {
        throw std::logic_error("dipole weights do not sum to (n-1)!");
    }
    return dist;
}

Rational dipole_expected_faces(int n) {
    if (n < 2) throw PreconditionError("dipole expectation needs n >= 2");
    return harmonic(n - 1) + Rational(1, (n + 1) / 2);
}

FaceDistribution monopole_face_distribution(int n_loops) {
    if (n_loops < 1) throw PreconditionError("monopole needs at least one loop");
    return multistar_face_distribution(Partition(std::vector<int>(n_loops, 2)));
}

Rational delta(int n) {
    if (n < 2) throw PreconditionError("delta needs n >= 2");
    return harmonic(n - 1) + Rational(1, (n + 1) / 2);
}

IntervalReport interval_check(const Partition& lambda) {
    MultistarSpec spec = reduce_partition(lambda);
    if (spec.reduced_weight < 2) {
        throw PreconditionError("interval check needs reduced weight >= 2");
    }
    IntervalReport report;
    report.lambda = lambda;
    report.n_prime = spec.reduced_weight;
    report.expectation = multistar_expected_faces(lambda);
    report.dipole_value = delta(spec.reduced_weight);
    report.gap = abs(report.expectation - report.dipole_value);
    report.radius = Rational(1, spec.reduced_weight + 1);
    report.inside = report.gap < report.radius;
    return report;
}

} // namespace rembed
