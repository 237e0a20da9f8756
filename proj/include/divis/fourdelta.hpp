#pragma once

#include <optional>
#include <string>
#include <vector>

#include "divis/classify.hpp"

namespace divis {

// Binary projective 2^a-divisible codes of length 4 * 2^a containing the
// all-one word have their whole weight distribution forced by (a, k):
// counts 1, 2^(k-a-1)-4, 2^k - 2^(k-a) + 6, 2^(k-a-1)-4, 1 at weights
// 0, Delta, 2*Delta, 3*Delta, 4*Delta.  Requires k >= a+3.
WeightDistribution quadruple_weight_distribution(int a, int k);

// One concrete constituent multiset for the weight-Delta span of such a code.
struct QuadrupleInstance {
    std::vector<FamilyTag> constituents; // concrete tags, sorted
    int n_eff_sum = 0;
    long long a_delta = 0;  // weight-Delta words of the direct sum
    bool admissible = false; // a_delta + 4 is a power of 2
    int dim = 0;             // a + 1 + log2(a_delta + 4) when admissible
};

// One symbolic row of the case table: a decomposition shape, possibly with
// free dimension parameters, plus all its concrete instances within the
// effective-length budget 4 * Delta.
struct QuadrupleRow {
    int index = 0;            // 1..17
    std::string pattern;      // e.g. "RM(2,k1) + RM(2,k2)" with m implied
    std::string a_delta_expr; // e.g. "2^k1 + 2^k2 - 4"
    std::string k_expr;       // dimension when admissible, "-" otherwise
    std::string condition;    // "always", "never", or the side condition
    std::vector<QuadrupleInstance> instances;
};

// The complete case analysis for Delta = 2^a: every multiset of admissible
// constituents whose effective lengths fit into 4 * Delta, grouped into the
// 17 fixed decomposition shapes.  Requires a >= 1.
std::vector<QuadrupleRow> quadruple_table(int a);

// The two dimension-maximal projective 2^a-divisible codes of length 4*2^a:
// a direct sum of two Reed-Muller codes RM_2(a+2) for every a >= 2, plus, for
// a = 2 only, the extension of 2*PC_2(7) by a word covering one position of
// each repeated pair.  Both [4*Delta, 2a+4], verified on construction.
struct MaximalCodes {
    LinearCode rm_pair;
    std::optional<LinearCode> pc_extension;
};

MaximalCodes build_maximal_codes(int a);

// How the two a=2 maximal codes differ, and the invariance over all valid
// extension words.
struct DistinguishReport {
    WeightDistribution wd;     // (1, 28, 198, 28, 1), shared
    bool same_wd = false;
    bool rm_self_dual = false;
    bool pc_self_dual = false;
    int rm_span_dim = 0; // dim of span of weight-4 words: 8
    int pc_span_dim = 0; // 7
    int extension_count = 0;            // 256 valid choices
    bool extensions_one_fingerprint = false;
    bool complement_weight_uniform = false; // words outside 2*PC_2(7) all weigh 8
};

// Only defined for a = 2; the second maximal code does not exist otherwise.
DistinguishReport distinguish_maximal(int a = 2);

} // namespace divis
