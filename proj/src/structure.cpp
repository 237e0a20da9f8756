#include "divis/structure.hpp"

#include <algorithm>
#include <numeric>

#include "divis/catalog.hpp"

namespace divis {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

bool is_indecomposable(const LinearCode& C) {
    if (C.k() <= 1) return true;
    UnionFind uf(C.n());
    for (const auto& row : C.rows()) {
        int first = -1;
        for (int j = 0; j < C.n(); ++j) {
            if (row[j] == 0) continue;
            if (first < 0)
                first = j;
            else
                uf.unite(first, j);
        }
    }
    int root = -1;
    for (int j = 0; j < C.n(); ++j) {
        bool nonzero = false;
        for (int i = 0; i < C.k() && !nonzero; ++i) nonzero = C.rows()[i][j] != 0;
        if (!nonzero) continue;
        if (root < 0)
            root = uf.find(j);
        else if (uf.find(j) != root)
            return false;
    }
    return true;
}

Decomposition decompose(const LinearCode& C) {
    StrippedCode stripped = strip_zeros(C);
    const LinearCode& S = stripped.code;

    Decomposition dec;
    dec.zero_positions = stripped.removed;
    if (S.k() == 0) return dec;

    UnionFind uf(S.n());
    for (const auto& row : S.rows()) {
        int first = -1;
        for (int j = 0; j < S.n(); ++j) {
            if (row[j] == 0) continue;
            if (first < 0)
                first = j;
            else
                uf.unite(first, j);
        }
    }

    // Components in order of smallest position.
    std::vector<int> comp_of(S.n(), -1);
    std::vector<std::vector<int>> comps;
    for (int j = 0; j < S.n(); ++j) {
        int r = uf.find(j);
        if (comp_of[r] < 0) {
            comp_of[r] = int(comps.size());
            comps.emplace_back();
        }
        comps[comp_of[r]].push_back(j);
    }

    for (const auto& comp : comps) {
        dec.blocks.push_back(puncture(S, comp));
        std::vector<int> orig;
        orig.reserve(comp.size());
        for (int j : comp) orig.push_back(stripped.kept[j]);
        dec.positions.push_back(std::move(orig));
    }
    return dec;
}

LinearCode reassemble(const Field& F, int n, const Decomposition& dec) {
    std::vector<std::vector<felem>> rows;
    for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
        for (const auto& brow : dec.blocks[b].rows()) {
            std::vector<felem> v(n, 0);
            for (std::size_t j = 0; j < brow.size(); ++j) v[dec.positions[b][j]] = brow[j];
            rows.push_back(std::move(v));
        }
    }
    return LinearCode::from_rows(F, n, rows);
}

LinearCode extract_repetition(const LinearCode& C, int m, std::uint64_t cap) {
    if (m < 1) fail(errc::bad_parameters, "repetition count must be >= 1");
    if (!is_full_length(C)) fail(errc::not_full_length, "repetition extraction needs a full-length code");
    if (m == 1) return C;

    ColumnMultiset ms = column_multiset(C);
    std::vector<std::vector<felem>> cols;
    for (const auto& [pt, mult] : ms.points) {
        if (mult % m != 0)
            fail(errc::not_repetition, "column multiplicity " + std::to_string(mult) +
                                           " not divisible by " + std::to_string(m));
        for (int t = 0; t < mult / m; ++t) cols.push_back(pt);
    }

    const int k = C.k(), n = int(cols.size());
    std::vector<std::vector<felem>> rows(k, std::vector<felem>(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < k; ++i) rows[i][j] = cols[j][i];
    LinearCode D = LinearCode::from_rows(C.field(), n, rows);

    if (D.k() != k || fingerprint(repetition(D, m), cap) != fingerprint(C, cap))
        fail(errc::not_repetition, "column division does not reproduce the code");
    return D;
}

LinearCode weight_span(const LinearCode& C, int w, std::uint64_t cap) {
    if (w < 0) fail(errc::bad_parameters, "negative weight");
    const Field& F = C.field();
    const int n = C.n(), k = C.k();

    // Incremental echelon basis of the span; leading coefficients kept at 1.
    std::vector<std::vector<felem>> basis;
    std::vector<int> leads;
    auto insert = [&](std::vector<felem> v) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            felem c = v[leads[i]];
            if (c == 0) continue;
            for (int j = 0; j < n; ++j) v[j] = F.sub(v[j], F.mul(c, basis[i][j]));
        }
        int lead = -1;
        for (int j = 0; j < n; ++j)
            if (v[j] != 0) {
                lead = j;
                break;
            }
        if (lead < 0) return;
        if (v[lead] != 1) {
            felem s = F.inv(v[lead]);
            for (int j = lead; j < n; ++j) v[j] = F.mul(v[j], s);
        }
        std::size_t at = 0;
        while (at < leads.size() && leads[at] < lead) ++at;
        basis.insert(basis.begin() + at, std::move(v));
        leads.insert(leads.begin() + at, lead);
    };

    for_each_codeword(
        C,
        [&](const std::vector<felem>& word, int wt) {
            if (wt == w && int(basis.size()) < k) insert(word);
        },
        cap);
    return LinearCode::from_rows(F, n, basis);
}

const char* intersection_case_name(IntersectionCase c) {
    switch (c) {
        case IntersectionCase::equivalent: return "equivalent";
        case IntersectionCase::proper: return "proper";
        case IntersectionCase::disjoint: return "disjoint";
    }
    return "?";
}

IntersectionReport intersection_report(const Field& F, const std::vector<felem>& c,
                                       const std::vector<felem>& cp, int delta) {
    if (c.size() != cp.size()) fail(errc::length_mismatch, "words of different length");
    if (delta < 1) fail(errc::bad_parameters, "delta must be >= 1");
    if (weight(c) != delta || weight(cp) != delta)
        fail(errc::bad_parameters, "both words must have weight delta");

    IntersectionReport rep;
    for (felem l = 1; l < F.q(); ++l) rep.a_lambda[l] = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0 || cp[i] == 0) continue;
        ++rep.b;
        ++rep.a_lambda[F.div(cp[i], c[i])];
    }

    if (rep.b == 0) {
        rep.kind = IntersectionCase::disjoint;
        return rep;
    }

    // Scalar multiple: same support and one ratio throughout.
    if (support(c) == support(cp)) {
        for (felem l = 1; l < F.q(); ++l) {
            if (rep.a_lambda[l] == delta) {
                rep.kind = IntersectionCase::equivalent;
                rep.scale = l;
                return rep;
            }
        }
    }

    const int q = F.q();
    bool proper = delta % q == 0 && rep.b == (q - 1) * (delta / q);
    for (felem l = 1; proper && l < q; ++l) proper = rep.a_lambda[l] == delta / q;
    if (!proper)
        fail(errc::lemma_violation,
             "weight-" + std::to_string(delta) + " pair with overlap " + std::to_string(rep.b) +
                 " fits no case; ambient code not " + std::to_string(delta) + "-divisible");
    rep.kind = IntersectionCase::proper;
    return rep;
}

namespace {

std::vector<int> sorted_column_profile(const LinearCode& C, int* zero_cols) {
    ColumnMultiset ms = column_multiset(C);
    std::vector<int> prof;
    for (const auto& [pt, mult] : ms.points) prof.push_back(mult);
    std::sort(prof.begin(), prof.end());
    *zero_cols = ms.zero_columns;
    return prof;
}

} // namespace

bool tiny_isomorphism(const LinearCode& A, const LinearCode& B) {
    if (&A.field() != &B.field()) fail(errc::field_mismatch, "isomorphism across fields");
    const int q = A.q(), n = A.n();
    if (q == 2) {
        if (n > 10) fail(errc::instance_too_large, "binary search capped at n = 10");
    } else if (q <= 4) {
        if (n > 6) fail(errc::instance_too_large, "monomial search capped at n = 6");
    } else {
        fail(errc::instance_too_large, "monomial search capped at q = 4");
    }

    if (n != B.n() || A.k() != B.k()) return false;
    if (A == B) return true;
    if (weight_histogram(A) != weight_histogram(B)) return false;
    int za = 0, zb = 0;
    if (sorted_column_profile(A, &za) != sorted_column_profile(B, &zb) || za != zb) return false;

    const int k = A.k();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    if (q == 2) {
        // B's codewords as bitmask set; A's generators mapped per permutation.
        std::vector<std::uint32_t> words;
        for_each_codeword(B, [&](const std::vector<felem>& w, int) {
            std::uint32_t m = 0;
            for (int j = 0; j < n; ++j)
                if (w[j]) m |= 1u << j;
            words.push_back(m);
        });
        std::sort(words.begin(), words.end());

        std::vector<std::vector<int>> rowpos(k);
        for (int i = 0; i < k; ++i) rowpos[i] = support(A.rows()[i]);

        do {
            bool ok = true;
            for (int i = 0; i < k && ok; ++i) {
                std::uint32_t m = 0;
                for (int p : rowpos[i]) m |= 1u << perm[p];
                ok = std::binary_search(words.begin(), words.end(), m);
            }
            if (ok) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    }

    // Monomial maps: permutation composed with per-position nonzero scaling.
    const Field& F = A.field();
    do {
        std::vector<felem> scale(n, 1);
        while (true) {
            bool ok = true;
            for (int i = 0; i < k && ok; ++i) {
                std::vector<felem> v(n, 0);
                for (int j = 0; j < n; ++j)
                    if (A.rows()[i][j]) v[perm[j]] = F.mul(scale[j], A.rows()[i][j]);
                ok = B.contains(v);
            }
            if (ok) return true;
            int j = 0;
            while (j < n && scale[j] == q - 1) scale[j++] = 1;
            if (j == n) break;
            ++scale[j];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace divis
