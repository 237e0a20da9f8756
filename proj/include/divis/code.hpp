#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "divis/field.hpp"

namespace divis {

// Hard ceiling on q^k for any full codeword enumeration.
constexpr std::uint64_t kDefaultEnumCap = std::uint64_t(1) << 24;

// A linear [n, k] code over GF(q), stored as the reduced row echelon form of
// a generator matrix.  RREF is the canonical representative: two LinearCode
// values compare equal iff they are the same subspace of GF(q)^n.
// Immutable after construction.
class LinearCode {
  public:
    // Zero code of length n.
    LinearCode(const Field& F, int n);

    // Span of the given rows (they may be dependent; k is the computed rank).
    static LinearCode from_rows(const Field& F, int n, const std::vector<std::vector<felem>>& rows);

    const Field& field() const { return *f_; }
    int q() const { return f_->q(); }
    int n() const { return n_; }
    int k() const { return int(gen_.size()); }

    // RREF generator rows; empty for the zero code.
    const std::vector<std::vector<felem>>& rows() const { return gen_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const std::vector<felem>& word) const;

    bool operator==(const LinearCode& o) const {
        return f_ == o.f_ && n_ == o.n_ && gen_ == o.gen_;
    }
    bool operator!=(const LinearCode& o) const { return !(*this == o); }

  private:
    const Field* f_;
    int n_;
    std::vector<std::vector<felem>> gen_;
    std::vector<int> pivots_;
};

// Hamming weight.
int weight(const std::vector<felem>& v);

// 0-based support positions, ascending.
std::vector<int> support(const std::vector<felem>& v);

// q^k if it is <= cap, otherwise throws EnumerationTooLarge.
std::uint64_t enumeration_size(const LinearCode& C, std::uint64_t cap = kDefaultEnumCap);

// Calls fn(word, weight) once for every codeword, the zero word included.
// Order is unspecified but deterministic.  Never materializes the code:
// q = 2 walks a Gray sequence (one generator toggled per step), q > 2 walks
// a base-q odometer with incremental weight updates.
template <typename Fn>
void for_each_codeword(const LinearCode& C, Fn&& fn, std::uint64_t cap = kDefaultEnumCap) {
    const std::uint64_t total = enumeration_size(C, cap);
    const Field& F = C.field();
    const int k = C.k(), n = C.n(), q = C.q();

    std::vector<felem> cur(n, 0);
    int wt = 0;
    fn(const_cast<const std::vector<felem>&>(cur), 0);
    if (k == 0) return;

    // Sparse row supports: adding d * row touches only these positions.
    std::vector<std::vector<std::pair<int, felem>>> supp(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j)
            if (C.rows()[i][j] != 0) supp[i].push_back({j, C.rows()[i][j]});

    auto bump = [&](int row, felem d) {
        for (auto [pos, val] : supp[row]) {
            felem old = cur[pos];
            felem nw = F.add(old, F.mul(d, val));
            wt += int(nw != 0) - int(old != 0);
            cur[pos] = nw;
        }
    };

    if (q == 2) {
        for (std::uint64_t i = 1; i < total; ++i) {
            int row = __builtin_ctzll(i);
            bump(row, 1);
            fn(const_cast<const std::vector<felem>&>(cur), wt);
        }
        return;
    }

    std::vector<int> digit(k, 0);
    for (std::uint64_t i = 1; i < total; ++i) {
        int row = 0;
        while (digit[row] == q - 1) {
            bump(row, F.neg(felem(q - 1)));
            digit[row] = 0;
            ++row;
        }
        // Step the coefficient from digit to digit+1 in encoding order; the
        // difference is not 1 in extension fields (1 + 1 = 0 in GF(4)).
        bump(row, F.sub(felem(digit[row] + 1), felem(digit[row])));
        ++digit[row];
        fn(const_cast<const std::vector<felem>&>(cur), wt);
    }
}

// All codewords, q^k of them.  Subject to the cap.
std::vector<std::vector<felem>> codewords(const LinearCode& C, std::uint64_t cap = kDefaultEnumCap);

// counts[w] = number of codewords of weight w, exact.  For q = 2 this runs on
// bit-packed rows (word-parallel XOR + popcount); otherwise via
// for_each_codeword.
std::vector<std::uint64_t> weight_histogram(const LinearCode& C, std::uint64_t cap = kDefaultEnumCap);

// Restriction of every codeword to the given 0-based positions (ascending,
// duplicates rejected).  Throws BadPositions on out-of-range or duplicates.
LinearCode puncture(const LinearCode& C, const std::vector<int>& keep);

// Restriction of C to the complement of supp(c).  c must lie in C.
LinearCode residual(const LinearCode& C, const std::vector<felem>& c);

// Dual code: all v with <v, c> = 0 for every c in C.
LinearCode dual(const LinearCode& C);

// Codes side by side: [n1 + n2, k1 + k2].  Fields must match.
LinearCode direct_sum(const LinearCode& A, const LinearCode& B);

// m-fold repetition: m copies of C concatenated, position j of copy t at
// coordinate t * n + j.  The dimension stays k.
LinearCode repetition(const LinearCode& C, int m);

// Positions where every codeword is zero (0-based, ascending).
std::vector<int> zero_positions(const LinearCode& C);

struct StrippedCode {
    LinearCode code;           // zero columns removed
    std::vector<int> kept;     // kept[i] = original position of new position i
    std::vector<int> removed;  // original zero positions
};

StrippedCode strip_zeros(const LinearCode& C);

// Column data of the RREF generator matrix, projectively normalized.
struct ColumnMultiset {
    std::map<std::vector<felem>, int> points; // normalized column -> multiplicity
    int zero_columns = 0;
};

ColumnMultiset column_multiset(const LinearCode& C);

// No zero column and no two columns projectively equivalent.
bool is_projective(const LinearCode& C);

// True iff no column is zero.
bool is_full_length(const LinearCode& C);

// Largest multiplicity in the column multiset (0 for n = 0); zero columns do
// not count.
int max_column_multiplicity(const LinearCode& C);

// Number of nonzero columns.
int effective_length(const LinearCode& C);

} // namespace divis
