#include "divis/code.hpp"

#include <algorithm>
#include <bit>

namespace divis {

namespace {

// In-place reduced row echelon form; drops zero rows, returns pivot columns.
std::vector<int> rref_rows(const Field& F, std::vector<std::vector<felem>>& rows, int n) {
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < n && r < int(rows.size()); ++col) {
        int sel = -1;
        for (int i = r; i < int(rows.size()); ++i)
            if (rows[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[r], rows[sel]);
        if (rows[r][col] != 1) {
            felem s = F.inv(rows[r][col]);
            for (int j = col; j < n; ++j) rows[r][j] = F.mul(rows[r][j], s);
        }
        for (int i = 0; i < int(rows.size()); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            felem c = rows[i][col];
            for (int j = col; j < n; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(c, rows[r][j]));
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

void check_row(const Field& F, const std::vector<felem>& row, int n) {
    if (int(row.size()) != n) fail(errc::length_mismatch, "row length != n");
    for (felem x : row)
        if (x >= F.q()) fail(errc::bad_parameters, "entry out of field range");
}

} // namespace

LinearCode::LinearCode(const Field& F, int n) : f_(&F), n_(n) {
    if (n < 0) fail(errc::bad_parameters, "negative length");
}

LinearCode LinearCode::from_rows(const Field& F, int n,
                                 const std::vector<std::vector<felem>>& rows) {
    LinearCode C(F, n);
    std::vector<std::vector<felem>> work = rows;
    for (const auto& row : work) check_row(F, row, n);
    C.pivots_ = rref_rows(F, work, n);
    C.gen_ = std::move(work);
    return C;
}

bool LinearCode::contains(const std::vector<felem>& word) const {
    check_row(*f_, word, n_);
    std::vector<felem> w = word;
    for (int i = 0; i < k(); ++i) {
        felem c = w[pivots_[i]];
        if (c == 0) continue;
        for (int j = 0; j < n_; ++j) w[j] = f_->sub(w[j], f_->mul(c, gen_[i][j]));
    }
    return std::all_of(w.begin(), w.end(), [](felem x) { return x == 0; });
}

int weight(const std::vector<felem>& v) {
    int w = 0;
    for (felem x : v) w += (x != 0);
    return w;
}

std::vector<int> support(const std::vector<felem>& v) {
    std::vector<int> s;
    for (int i = 0; i < int(v.size()); ++i)
        if (v[i] != 0) s.push_back(i);
    return s;
}

std::uint64_t enumeration_size(const LinearCode& C, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (int i = 0; i < C.k(); ++i) {
        if (total > cap / C.q()) fail(errc::enumeration_too_large,
                                      "q^k exceeds cap " + std::to_string(cap));
        total *= C.q();
    }
    if (total > cap) fail(errc::enumeration_too_large, "q^k exceeds cap " + std::to_string(cap));
    return total;
}

std::vector<std::vector<felem>> codewords(const LinearCode& C, std::uint64_t cap) {
    std::vector<std::vector<felem>> out;
    out.reserve(enumeration_size(C, cap));
    for_each_codeword(C, [&](const std::vector<felem>& w, int) { out.push_back(w); }, cap);
    return out;
}

std::vector<std::uint64_t> weight_histogram(const LinearCode& C, std::uint64_t cap) {
    const std::uint64_t total = enumeration_size(C, cap);
    std::vector<std::uint64_t> counts(C.n() + 1, 0);
    if (C.q() != 2) {
        for_each_codeword(C, [&](const std::vector<felem>&, int w) { ++counts[w]; }, cap);
        return counts;
    }

    // Bit-packed Gray walk: one generator row toggled per step.
    const int k = C.k(), n = C.n();
    const int blocks = std::max(1, (n + 63) / 64);
    std::vector<std::uint64_t> packed(std::size_t(k) * blocks, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j)
            if (C.rows()[i][j]) packed[std::size_t(i) * blocks + j / 64] |= std::uint64_t(1) << (j % 64);

    std::vector<std::uint64_t> cur(blocks, 0);
    ++counts[0];
    for (std::uint64_t i = 1; i < total; ++i) {
        const std::uint64_t* row = &packed[std::size_t(__builtin_ctzll(i)) * blocks];
        int w = 0;
        for (int b = 0; b < blocks; ++b) {
            cur[b] ^= row[b];
            w += std::popcount(cur[b]);
        }
        ++counts[w];
    }
    return counts;
}

LinearCode puncture(const LinearCode& C, const std::vector<int>& keep) {
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= C.n()) fail(errc::bad_positions, "position out of range");
        if (i > 0 && keep[i] <= keep[i - 1]) fail(errc::bad_positions, "positions not strictly ascending");
    }
    std::vector<std::vector<felem>> rows(C.k());
    for (int i = 0; i < C.k(); ++i) {
        rows[i].reserve(keep.size());
        for (int j : keep) rows[i].push_back(C.rows()[i][j]);
    }
    return LinearCode::from_rows(C.field(), int(keep.size()), rows);
}

LinearCode residual(const LinearCode& C, const std::vector<felem>& c) {
    if (!C.contains(c)) fail(errc::not_a_codeword, "residual word not in code");
    std::vector<int> keep;
    for (int j = 0; j < C.n(); ++j)
        if (c[j] == 0) keep.push_back(j);
    return puncture(C, keep);
}

LinearCode dual(const LinearCode& C) {
    const Field& F = C.field();
    const int n = C.n(), k = C.k();
    std::vector<bool> is_pivot(n, false);
    for (int p : C.pivots()) is_pivot[p] = true;

    // One dual basis vector per non-pivot column j: 1 at j, -gen[i][j] at
    // pivot i, zero elsewhere.
    std::vector<std::vector<felem>> rows;
    for (int j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        std::vector<felem> v(n, 0);
        v[j] = 1;
        for (int i = 0; i < k; ++i) v[C.pivots()[i]] = F.neg(C.rows()[i][j]);
        rows.push_back(std::move(v));
    }
    return LinearCode::from_rows(F, n, rows);
}

LinearCode direct_sum(const LinearCode& A, const LinearCode& B) {
    if (&A.field() != &B.field()) fail(errc::field_mismatch, "direct sum across fields");
    const int n = A.n() + B.n();
    std::vector<std::vector<felem>> rows;
    rows.reserve(A.k() + B.k());
    for (const auto& r : A.rows()) {
        std::vector<felem> v(n, 0);
        std::copy(r.begin(), r.end(), v.begin());
        rows.push_back(std::move(v));
    }
    for (const auto& r : B.rows()) {
        std::vector<felem> v(n, 0);
        std::copy(r.begin(), r.end(), v.begin() + A.n());
        rows.push_back(std::move(v));
    }
    return LinearCode::from_rows(A.field(), n, rows);
}

LinearCode repetition(const LinearCode& C, int m) {
    if (m < 1) fail(errc::bad_parameters, "repetition count must be >= 1");
    const int n = C.n();
    std::vector<std::vector<felem>> rows(C.k());
    for (int i = 0; i < C.k(); ++i) {
        rows[i].reserve(std::size_t(n) * m);
        for (int t = 0; t < m; ++t)
            rows[i].insert(rows[i].end(), C.rows()[i].begin(), C.rows()[i].end());
    }
    return LinearCode::from_rows(C.field(), n * m, rows);
}

std::vector<int> zero_positions(const LinearCode& C) {
    std::vector<int> out;
    for (int j = 0; j < C.n(); ++j) {
        bool all_zero = true;
        for (int i = 0; i < C.k() && all_zero; ++i) all_zero = C.rows()[i][j] == 0;
        if (all_zero) out.push_back(j);
    }
    return out;
}

StrippedCode strip_zeros(const LinearCode& C) {
    std::vector<int> removed = zero_positions(C);
    std::vector<int> kept;
    std::size_t ri = 0;
    for (int j = 0; j < C.n(); ++j) {
        if (ri < removed.size() && removed[ri] == j) {
            ++ri;
            continue;
        }
        kept.push_back(j);
    }
    return {puncture(C, kept), kept, removed};
}

ColumnMultiset column_multiset(const LinearCode& C) {
    ColumnMultiset ms;
    for (int j = 0; j < C.n(); ++j) {
        std::vector<felem> col(C.k());
        for (int i = 0; i < C.k(); ++i) col[i] = C.rows()[i][j];
        if (weight(col) == 0) {
            ++ms.zero_columns;
            continue;
        }
        ++ms.points[projective_normalize(C.field(), std::move(col))];
    }
    return ms;
}

bool is_projective(const LinearCode& C) {
    ColumnMultiset ms = column_multiset(C);
    if (ms.zero_columns > 0) return false;
    for (const auto& [pt, mult] : ms.points)
        if (mult > 1) return false;
    return true;
}

bool is_full_length(const LinearCode& C) { return zero_positions(C).empty(); }

int max_column_multiplicity(const LinearCode& C) {
    int mx = 0;
    for (const auto& [pt, mult] : column_multiset(C).points) mx = std::max(mx, mult);
    return mx;
}

int effective_length(const LinearCode& C) { return C.n() - int(zero_positions(C).size()); }

} // namespace divis
