#pragma once

#include <string>
#include <vector>

#include "divis/spectrum.hpp"

namespace divis {

// One building-block constituent: the m-fold repetition of a family member.
// Canonical tags avoid the low-parameter coincidences between families (see
// canonicalize); two distinct canonical tags are never isomorphic.
struct FamilyTag {
    Family family;
    int q = 0;
    int k = 0;
    int m = 1;

    bool operator==(const FamilyTag& o) const {
        return family == o.family && q == o.q && k == o.k && m == o.m;
    }
    bool operator!=(const FamilyTag& o) const { return !(*this == o); }
    // Certificate order: family, then k, then m.
    bool operator<(const FamilyTag& o) const {
        if (family != o.family) return family < o.family;
        if (k != o.k) return k < o.k;
        if (m != o.m) return m < o.m;
        return q < o.q;
    }

    std::string to_string() const; // "m x SIM(q,k)"
};

// Largest a with q^a | delta.
int divisor_exponent(int q, int delta);

// Columns are projective representatives of all nonzero vectors of GF(q)^k,
// sorted ascending by their integer encoding (first coordinate most
// significant).  [(q^k-1)/(q-1), k], constant weight q^(k-1).
LinearCode simplex_code(int q, int k);

// Columns are all vectors of GF(q)^(k-1) in ascending encoding order with an
// appended all-one row.  [q^(k-1), k]; indecomposable except (q,k) = (2,2).
LinearCode reed_muller_code(int q, int k);

// All vectors of GF(q)^(k+1) with coordinate sum zero; generator (I | -1).
LinearCode parity_check_code(int q, int k);

// repetition(family code, m).
LinearCode construct(const FamilyTag& tag);

int tag_dimension(const FamilyTag& tag);
int tag_effective_length(const FamilyTag& tag); // m * base length

// Closed-form weight distribution of construct(tag).
WeightDistribution tag_weight_distribution(const FamilyTag& tag);

// Rewrites the low-parameter isomorphisms onto their canonical side:
//   m x PC(q,1) -> 2m x SIM(q,1)
//   m x PC(2,2) -> m x SIM(2,2)
//   m x PC(2,3) -> m x RM(2,3)
//   m x PC(3,2) -> m x RM(3,2)
FamilyTag canonicalize(FamilyTag tag);

// The complete list of canonical constituent tags admissible for a
// delta-divisible code over GF(q) spanned by weight-delta words:
//   SIM(q,k), k in 1..a+1, m = delta / q^(k-1)
//   RM(2,k),  k in 3..a+2, m = delta / 2^(k-2)       (binary only)
//   PC(2,k),  k >= 4,      m = delta / 2             (binary, a >= 1)
// where a = max{e : q^e | delta}.  The parity-check series is infinite, so it
// is materialized up to effective length max_len.
std::vector<FamilyTag> catalog_for(int q, int delta, int max_len);

// Isomorphism-invariant identification key: enough to separate all catalog
// members (distinct canonical tags never collide).
struct Fingerprint {
    int q = 0;
    int k = 0;
    int n_eff = 0;
    WeightDistribution wd;
    std::vector<int> column_profile; // sorted projective column multiplicities
    int minweight_span_dim = 0;      // dim of span of minimum-nonzero-weight words

    bool operator==(const Fingerprint& o) const {
        return q == o.q && k == o.k && n_eff == o.n_eff && wd == o.wd &&
               column_profile == o.column_profile && minweight_span_dim == o.minweight_span_dim;
    }
    bool operator!=(const Fingerprint& o) const { return !(*this == o); }
};

Fingerprint fingerprint(const LinearCode& C, std::uint64_t cap = kDefaultEnumCap);

// The unique catalog tag matching a full-length indecomposable delta-divisible
// code spanned by weight-delta words.  Fingerprint match plus a geometric
// column-multiset cross-check.  Throws NotInCatalog when nothing matches
// (impossible for inputs satisfying the preconditions).
FamilyTag identify(const LinearCode& C, int delta, std::uint64_t cap = kDefaultEnumCap);

// Column-multiset shape test: simplex = every projective point m times;
// RM = the points off one hyperplane, m times each; PC = a frame of k+1
// points in general position, m times each.
bool matches_family_geometry(const LinearCode& C, const FamilyTag& tag);

} // namespace divis
