#ifndef REMBED_MULTISTAR_HPP
#define REMBED_MULTISTAR_HPP

#include "rembed/distribution.hpp"
#include "rembed/numbers.hpp"
#include "rembed/partition.hpp"
#include "rembed/polynomial.hpp"

namespace rembed {

// A multistar of type lambda |- n: center vertex of degree n, outer vertex i
// joined by lambda_i parallel edges.  Outer vertices of degree 1 do not
// affect the face count, so computations run on the reduced partition.
struct MultistarSpec {
    Partition original;
    Partition reduced;      // 1-parts removed
    int ones_removed = 0;   // r(lambda)
    int weight = 0;         // n
    int reduced_weight = 0; // n' = n - r
};

MultistarSpec reduce_partition(const Partition& lambda);

// (prod_i (1 - E^{lambda_i})) applied to q(q+1)...(q+n), where E is the shift
// f(q) -> f(q-1); evaluated iteratively as g <- g - g(q - lambda_i).  For
// lambda |- n, the coefficient of q^j, scaled by |C_lambda|/(n+1)!, counts
// the permutations of type lambda whose product with a fixed full cycle has
// j cycles.
IntPolynomial stanley_polynomial(const Partition& lambda);

// Exact face distribution of the multistar of type lambda: weight of j faces
// is |C_lambda| * [q^j] stanley_polynomial(lambda) / (n+1)!, total
// |C_lambda|.  Requires a nonempty lambda with all parts >= 2 (reduce
// first); the division is exact by construction and checked.
FaceDistribution multistar_face_distribution(const Partition& lambda);

// Expected number of faces of a random embedding of the multistar of type
// lambda (any nonempty lambda; reduces internally; a star/tree with n' = 0
// has exactly one face).
Rational multistar_expected_faces(const Partition& lambda);

// Dipole D_n closed form: weight of k faces is 2 c(n+1, k) / (n (n+1)) per
// full cycle when n - k is even (zero otherwise), scaled to total (n-1)!.
// n >= 2.
FaceDistribution dipole_face_distribution(int n);

// E[F(D_n)] = H_{n-1} + 1/ceil(n/2), n >= 2.
Rational dipole_expected_faces(int n);

// The bouquet of n loops has the face distribution of the multistar of type
// (2, ..., 2) with n parts (subdividing every loop).  Weights carry the
// multistar normalization (total = |C_{2^n}| in S_{2n}).  n_loops >= 1.
FaceDistribution monopole_face_distribution(int n_loops);

// Delta_n = H_{n-1} + 1/ceil(n/2): the dipole expectation, the center of the
// multistar interval.  n >= 2.
Rational delta(int n);

struct IntervalReport {
    Partition lambda;
    int n_prime = 0;
    Rational expectation;  // E[F_lambda]
    Rational dipole_value; // Delta_{n'}
    Rational gap;          // |E - Delta|
    Rational radius;       // 1/(n' + 1)
    bool inside = false;   // strict: gap < radius
};

// Exact check that E[F_lambda] lies within 1/(n'+1) of Delta_{n'}; strict
// rational comparison, no epsilon.  Requires reduced weight n' >= 2.
IntervalReport interval_check(const Partition& lambda);

} // namespace rembed

#endif
