#pragma once

#include <gmpxx.h>

#include <vector>

#include "divis/code.hpp"

namespace divis {

// Exact weight distribution: counts[w] = number of codewords of weight w.
// Integer arithmetic only (GMP), no floating point anywhere.
struct WeightDistribution {
    int n = 0;
    std::vector<mpz_class> counts; // size n + 1

    mpz_class total() const;

    bool operator==(const WeightDistribution& o) const { return n == o.n && counts == o.counts; }
    bool operator!=(const WeightDistribution& o) const { return !(*this == o); }
};

WeightDistribution wd_from_histogram(int n, const std::vector<std::uint64_t>& counts);

// By direct enumeration of C (subject to the cap).
WeightDistribution weight_distribution(const LinearCode& C, std::uint64_t cap = kDefaultEnumCap);

// Enumerates whichever of C and its dual is smaller and transforms back.
WeightDistribution weight_distribution_auto(const LinearCode& C, std::uint64_t cap = kDefaultEnumCap);

// True iff every weight with a nonzero count is a multiple of delta.
bool is_divisible(const WeightDistribution& wd, int delta);

// Largest delta such that the distribution is delta-divisible: the gcd of all
// nonzero-count weights.  Returns 0 when only weight 0 occurs (every delta
// divides vacuously).
int max_divisor(const WeightDistribution& wd);

// MacWilliams transform: weight distribution of the dual code.  The dimension
// k is recovered from sum(counts) = q^k; throws BadParameters when the total
// is not a power of q, NonIntegerResult when a transformed count fails the
// exact division by q^k (the input was not a weight distribution of a code).
WeightDistribution macwilliams_transform(const WeightDistribution& wd, int q);

// The first four Pless power moments of a binary full-length code, each side
// evaluated exactly.  Throws NotBinary for q != 2 and NotFullLength when the
// dual distribution has B_1 != 0.
struct PowerMoments {
    mpz_class lhs[4];
    mpz_class rhs[4];
    bool ok[4];
    bool all_ok() const { return ok[0] && ok[1] && ok[2] && ok[3]; }
};

PowerMoments pless_power_moments(const WeightDistribution& wd, int q);

enum class Family { simplex, reed_muller, parity_check };

const char* family_name(Family f); // "SIM", "RM", "PC"

// Closed-form weight distribution of the m-fold repetition of one family
// member, without constructing the code:
//   SIM(q,k): 1 + (q^k - 1) x^(q^(k-1))
//   RM(q,k):  1 + (q^k - q) x^((q-1) q^(k-2)) + (q-1) x^(q^(k-1))
//   PC(q,k):  A_i = C(k+1,i) [ (q-1)^i + (q-1)(-1)^i ] / q
// with every exponent scaled by m.  Validates q prime power, m >= 1, and
// k >= 1 (SIM, PC) or k >= 2 (RM).
WeightDistribution family_weight_distribution(Family f, int q, int k, int m);

// Weight distribution of the m-fold repetition: counts move from w to m * w.
WeightDistribution repetition_transform(const WeightDistribution& wd, int m);

// Weight distribution of a direct sum: the convolution product.
WeightDistribution direct_sum_wd(const WeightDistribution& a, const WeightDistribution& b);

} // namespace divis
