#pragma once

#include <string>
#include <vector>

#include "divis/catalog.hpp"
#include "divis/structure.hpp"

namespace divis {

// The structural witness: a delta-divisible code spanned by its weight-delta
// words is the direct sum of the listed constituents plus zero positions,
// uniquely up to order.  leftover_dim > 0 records that the input was NOT
// spanned by weight-delta words; the constituents then describe the span.
struct Certificate {
    int q = 0;
    int delta = 0;
    std::vector<FamilyTag> constituents; // sorted by (family, k, m)
    int zero_count = 0;
    int leftover_dim = 0;

    bool operator==(const Certificate& o) const {
        return q == o.q && delta == o.delta && constituents == o.constituents &&
               zero_count == o.zero_count && leftover_dim == o.leftover_dim;
    }
};

// One constituent per line ("m x SIM(q,k)"), then "zeros: z", "leftover_dim: d".
std::string certificate_to_string(const Certificate& cert);

// Pipeline: check divisibility, span the weight-delta words, split off zero
// positions, decompose into blocks, identify each block.  Throws NotDivisible
// when some codeword weight is not a multiple of delta; NotInCatalog cannot
// trigger on inputs satisfying its preconditions and doubles as a self-check.
Certificate classify(const LinearCode& C, int delta, std::uint64_t cap = kDefaultEnumCap);

// Constructive re-check of a certificate against C: admissible constituents,
// consistent length/dimension/zero bookkeeping, equal weight distributions of
// reconstruction and weight-delta span, matching block-fingerprint multisets,
// and exact isomorphism per block where the tiny search is feasible.  Order
// of constituents does not matter.  Returns false on any mismatch.
bool verify_certificate(const LinearCode& C, const Certificate& cert,
                        std::uint64_t cap = kDefaultEnumCap);

// Exactly the catalog's constituent ranges for (q, delta), with
// a = max{e : q^e | delta}:
//   SIM: 1 <= k <= a+1 and m = delta / q^(k-1)
//   RM:  q = 2, 3 <= k <= a+2 and m = delta / 2^(k-2)
//   PC:  q = 2, a >= 1, k >= 4 and m = delta / 2
bool admissibility_check(const FamilyTag& tag, int q, int delta);

} // namespace divis
