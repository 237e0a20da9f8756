#include "divis/catalog.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "divis/structure.hpp"

namespace divis {

namespace {

long long ipow(int b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

LinearCode code_from_columns(const Field& F, const std::vector<std::vector<felem>>& cols, int k) {
    const int n = int(cols.size());
    std::vector<std::vector<felem>> rows(k, std::vector<felem>(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < k; ++i) rows[i][j] = cols[j][i];
    return LinearCode::from_rows(F, n, rows);
}

// All vectors of GF(q)^len in ascending integer encoding (first coordinate
// most significant): lexicographic enumeration.
void for_each_vector(int q, int len, const std::function<void(const std::vector<felem>&)>& fn) {
    std::vector<felem> v(len, 0);
    while (true) {
        fn(v);
        int i = len - 1;
        while (i >= 0 && v[i] == q - 1) v[i--] = 0;
        if (i < 0) return;
        ++v[i];
    }
}

} // namespace

int divisor_exponent(int q, int delta) {
    if (q < 2 || delta < 1) fail(errc::bad_parameters, "divisor_exponent needs q >= 2, delta >= 1");
    int a = 0;
    while (delta % q == 0) {
        delta /= q;
        ++a;
    }
    return a;
}

std::string FamilyTag::to_string() const {
    return std::to_string(m) + " x " + family_name(family) + "(" + std::to_string(q) + "," +
           std::to_string(k) + ")";
}

LinearCode simplex_code(int q, int k) {
    if (k < 1) fail(errc::bad_parameters, "simplex dimension must be >= 1");
    const Field& F = field_of_order(q);
    if (ipow(q, k) > (1 << 24)) fail(errc::bad_parameters, "simplex dimension too large");
    std::set<std::vector<felem>> points; // lex order = ascending encoding
    std::vector<felem> v(k, 0);
    for_each_vector(q, k, [&](const std::vector<felem>& w) {
        if (weight(w) > 0) points.insert(projective_normalize(F, w));
    });
    return code_from_columns(F, {points.begin(), points.end()}, k);
}

LinearCode reed_muller_code(int q, int k) {
    if (k < 2) fail(errc::bad_parameters, "Reed-Muller dimension must be >= 2");
    const Field& F = field_of_order(q);
    if (ipow(q, k) > (1 << 24)) fail(errc::bad_parameters, "Reed-Muller dimension too large");
    std::vector<std::vector<felem>> cols;
    for_each_vector(q, k - 1, [&](const std::vector<felem>& w) {
        std::vector<felem> col = w;
        col.push_back(1);
        cols.push_back(std::move(col));
    });
    return code_from_columns(F, cols, k);
}

LinearCode parity_check_code(int q, int k) {
    if (k < 1) fail(errc::bad_parameters, "parity-check dimension must be >= 1");
    const Field& F = field_of_order(q);
    std::vector<std::vector<felem>> rows(k, std::vector<felem>(k + 1, 0));
    for (int i = 0; i < k; ++i) {
        rows[i][i] = 1;
        rows[i][k] = F.neg(1);
    }
    return LinearCode::from_rows(F, k + 1, rows);
}

LinearCode construct(const FamilyTag& tag) {
    if (tag.m < 1) fail(errc::bad_parameters, "repetition count must be >= 1");
    LinearCode base = [&] {
        switch (tag.family) {
            case Family::simplex: return simplex_code(tag.q, tag.k);
            case Family::reed_muller: return reed_muller_code(tag.q, tag.k);
            case Family::parity_check: return parity_check_code(tag.q, tag.k);
        }
        fail(errc::bad_parameters, "unknown family");
    }();
    return tag.m == 1 ? base : repetition(base, tag.m);
}

int tag_dimension(const FamilyTag& tag) { return tag.k; }

int tag_effective_length(const FamilyTag& tag) {
    switch (tag.family) {
        case Family::simplex: return tag.m * int((ipow(tag.q, tag.k) - 1) / (tag.q - 1));
        case Family::reed_muller: return tag.m * int(ipow(tag.q, tag.k - 1));
        case Family::parity_check: return tag.m * (tag.k + 1);
    }
    fail(errc::bad_parameters, "unknown family");
}

WeightDistribution tag_weight_distribution(const FamilyTag& tag) {
    return family_weight_distribution(tag.family, tag.q, tag.k, tag.m);
}

FamilyTag canonicalize(FamilyTag tag) {
    if (tag.family != Family::parity_check) return tag;
    if (tag.k == 1) return {Family::simplex, tag.q, 1, 2 * tag.m};
    if (tag.q == 2 && tag.k == 2) return {Family::simplex, 2, 2, tag.m};
    if (tag.q == 2 && tag.k == 3) return {Family::reed_muller, 2, 3, tag.m};
    if (tag.q == 3 && tag.k == 2) return {Family::reed_muller, 3, 2, tag.m};
    return tag;
}

std::vector<FamilyTag> catalog_for(int q, int delta, int max_len) {
    field_of_order(q); // validates q
    if (delta < 1) fail(errc::bad_parameters, "delta must be >= 1");
    if (max_len < 0) fail(errc::bad_parameters, "length bound must be >= 0");
    const int a = divisor_exponent(q, delta);

    std::vector<FamilyTag> tags;
    for (int k = 1; k <= a + 1; ++k) {
        FamilyTag t{Family::simplex, q, k, int(delta / ipow(q, k - 1))};
        if (tag_effective_length(t) <= max_len) tags.push_back(t);
    }
    if (q == 2) {
        for (int k = 3; k <= a + 2; ++k) {
            FamilyTag t{Family::reed_muller, 2, k, int(delta / ipow(2, k - 2))};
            if (tag_effective_length(t) <= max_len) tags.push_back(t);
        }
        if (a >= 1) {
            for (int k = 4; (delta / 2) * (k + 1) <= max_len; ++k)
                tags.push_back({Family::parity_check, 2, k, delta / 2});
        }
    }
    return tags;
}

Fingerprint fingerprint(const LinearCode& C, std::uint64_t cap) {
    Fingerprint fp;
    fp.q = C.q();
    fp.k = C.k();
    fp.n_eff = effective_length(C);
    fp.wd = weight_distribution(C, cap);
    for (const auto& [pt, mult] : column_multiset(C).points) fp.column_profile.push_back(mult);
    std::sort(fp.column_profile.begin(), fp.column_profile.end());
    int minw = 0;
    for (int w = 1; w <= fp.wd.n; ++w)
        if (fp.wd.counts[w] != 0) {
            minw = w;
            break;
        }
    fp.minweight_span_dim = minw == 0 ? 0 : weight_span(C, minw, cap).k();
    return fp;
}

bool matches_family_geometry(const LinearCode& C, const FamilyTag& tag) {
    if (C.q() != tag.q || C.k() != tag.k) return false;
    ColumnMultiset ms = column_multiset(C);
    if (ms.zero_columns != 0) return false;
    for (const auto& [pt, mult] : ms.points)
        if (mult != tag.m) return false;

    const int q = tag.q, k = tag.k;
    const int npts = int(ms.points.size());
    switch (tag.family) {
        case Family::simplex:
            return npts == int((ipow(q, k) - 1) / (q - 1));
        case Family::reed_muller: {
            if (npts != int(ipow(q, k - 1))) return false;
            // Some nonzero functional must avoid 0 on every point: the points
            // are then exactly the affine complement of its kernel hyperplane.
            const Field& F = C.field();
            bool found = false;
            std::vector<felem> h(k, 0);
            for_each_vector(q, k, [&](const std::vector<felem>& cand) {
                if (found || weight(cand) == 0) return;
                for (const auto& [pt, mult] : ms.points) {
                    felem dot = 0;
                    for (int i = 0; i < k; ++i) dot = F.add(dot, F.mul(cand[i], pt[i]));
                    if (dot == 0) return;
                }
                found = true;
            });
            return found;
        }
        case Family::parity_check: {
            if (npts != k + 1) return false;
            // Frame: every k-subset of the points has full rank.
            std::vector<std::vector<felem>> pts;
            for (const auto& [pt, mult] : ms.points) pts.push_back(pt);
            for (int skip = 0; skip <= k; ++skip) {
                std::vector<std::vector<felem>> rows;
                for (int i = 0; i <= k; ++i)
                    if (i != skip) rows.push_back(pts[i]);
                if (LinearCode::from_rows(C.field(), k, rows).k() != k) return false;
            }
            return true;
        }
    }
    return false;
}

FamilyTag identify(const LinearCode& C, int delta, std::uint64_t cap) {
    if (delta < 1) fail(errc::bad_parameters, "delta must be >= 1");
    const int q = C.q(), k = C.k();
    const int a = divisor_exponent(q, delta);

    std::vector<FamilyTag> candidates;
    if (k >= 1 && k <= a + 1) {
        FamilyTag t{Family::simplex, q, k, int(delta / ipow(q, k - 1))};
        if (tag_effective_length(t) == C.n()) candidates.push_back(t);
    }
    if (q == 2 && k >= 3 && k <= a + 2) {
        FamilyTag t{Family::reed_muller, 2, k, int(delta / ipow(2, k - 2))};
        if (tag_effective_length(t) == C.n()) candidates.push_back(t);
    }
    if (q == 2 && a >= 1 && k >= 4) {
        FamilyTag t{Family::parity_check, 2, k, delta / 2};
        if (tag_effective_length(t) == C.n()) candidates.push_back(t);
    }

    for (const FamilyTag& tag : candidates) {
        if (!matches_family_geometry(C, tag)) continue;
        if (fingerprint(C, cap) != fingerprint(construct(tag), cap)) continue;
        return tag;
    }
    fail(errc::not_in_catalog, "no catalog member matches ([" + std::to_string(C.n()) + "," +
                                   std::to_string(k) + "] over GF(" + std::to_string(q) +
                                   "), delta=" + std::to_string(delta) + ")");
}

} // namespace divis
