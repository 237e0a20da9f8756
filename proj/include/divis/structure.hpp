#pragma once

#include <map>
#include <vector>

#include "divis/code.hpp"

namespace divis {

// Finest splitting of C into support-disjoint indecomposable pieces plus the
// zero positions.  Block position sets and zero_positions partition 0..n-1;
// block codes are full-length on their own coordinates.
struct Decomposition {
    std::vector<LinearCode> blocks;
    std::vector<std::vector<int>> positions; // original coordinates per block, ascending
    std::vector<int> zero_positions;
};

// Graph criterion on the reduced generator matrix: positions are linked when
// some generator row is nonzero on both; indecomposable iff the nonzero
// positions form one component.  Zero codes and dimension-1 codes count as
// indecomposable; zero columns are ignored here (decompose reports them).
bool is_indecomposable(const LinearCode& C);

// Blocks ordered by smallest position.  Reassembling the blocks at their
// positions and adding back the zero columns reproduces C exactly.
Decomposition decompose(const LinearCode& C);

// Inverse of decompose for testing: embeds each block at its positions.
LinearCode reassemble(const Field& F, int n, const Decomposition& dec);

// The code D with m*D isomorphic to C, from dividing every projective column
// multiplicity by m; the result is verified by fingerprint equality of the
// m-fold repetition against C.  Throws NotRepetition when a multiplicity is
// not divisible by m or the verification fails, NotFullLength on zero
// columns, BadParameters for m < 1.
LinearCode extract_repetition(const LinearCode& C, int m, std::uint64_t cap = kDefaultEnumCap);

// Subcode spanned by the codewords of weight exactly w, same length as C.
LinearCode weight_span(const LinearCode& C, int w, std::uint64_t cap = kDefaultEnumCap);

enum class IntersectionCase { equivalent, proper, disjoint };

const char* intersection_case_name(IntersectionCase c);

// Support overlap data of two weight-delta words of a delta-divisible code:
// either c' is a scalar multiple of c (equivalent, b = delta), or the
// supports overlap in exactly (q-1)/q * delta positions with every nonzero
// agreement ratio hit delta/q times (proper), or the supports are disjoint.
struct IntersectionReport {
    IntersectionCase kind;
    int b = 0;                     // #(supp c  ∩  supp c')
    std::map<felem, int> a_lambda; // lambda -> #{i in common support : c'_i = lambda * c_i}
    felem scale = 0;               // witness for the equivalent case
};

// Throws LemmaViolation when the pair fits none of the three cases (the
// ambient code cannot have been delta-divisible), BadParameters when a word
// does not have weight delta, LengthMismatch on unequal lengths.
IntersectionReport intersection_report(const Field& F, const std::vector<felem>& c,
                                       const std::vector<felem>& cp, int delta);

// Exact equivalence decision by exhaustive search: coordinate permutations
// for q = 2 (n <= 10), monomial maps for q in {3,4} (n <= 6).  Invariant
// screen first, so cheap mismatches never search.  Throws InstanceTooLarge
// beyond the caps, FieldMismatch for different fields.
bool tiny_isomorphism(const LinearCode& A, const LinearCode& B);

} // namespace divis
