#include "divis/fourdelta.hpp"

#include <algorithm>
#include <functional>

#include "divis/errors.hpp"
#include "divis/structure.hpp"

namespace divis {

namespace {

bool power_of_two(long long x) { return x > 0 && (x & (x - 1)) == 0; }

int exact_log2(long long x) {
    int e = 0;
    while ((1LL << e) < x) ++e;
    return e;
}

// Weight-Delta word count of one constituent, from the closed forms.
long long tag_min_count(const FamilyTag& t) {
    switch (t.family) {
    case Family::simplex: return (1LL << t.k) - 1;
    case Family::reed_muller: return (1LL << t.k) - 2;
    case Family::parity_check: return 1LL * t.k * (t.k + 1) / 2;
    }
    fail(errc::bad_spec, "unknown family tag");
}

struct RowMeta {
    const char* pattern;
    const char* a_delta_expr;
    const char* k_expr;
    const char* condition;
};

// The 17 decomposition shapes that exhaust the effective-length budget
// 4*Delta, with D = Delta.  Symbolic constituents carry the implied
// multipliers m = D/2^(k-1) for SIM and m = D/2^(k-2) for RM.
constexpr RowMeta kRows[17] = {
    {"0", "0", "a+3", "always"},
    {"(D/2) x PC(2,7)", "28", "a+6", "always"},
    {"(D/2) x PC(2,6)", "21", "-", "never"},
    {"(D/2) x PC(2,5)", "15", "-", "never"},
    {"(D/2) x PC(2,5) + D x SIM(2,1)", "16", "-", "never"},
    {"(D/2) x PC(2,4)", "10", "-", "never"},
    {"(D/2) x PC(2,4) + D x SIM(2,1)", "11", "-", "never"},
    {"(D/2) x PC(2,4) + (D/2) x SIM(2,2)", "13", "-", "never"},
    {"RM(2,k1)", "2^k1 - 2", "-", "never"},
    {"RM(2,k1) + SIM(2,k2)", "2^k1 + 2^k2 - 3", "-", "never"},
    {"RM(2,k1) + RM(2,k2)", "2^k1 + 2^k2 - 4", "a+2+k1", "k1 = k2"},
    {"RM(2,k1) + D x SIM(2,1) + D x SIM(2,1)", "2^k1", "-", "never"},
    {"SIM(2,k1)", "2^k1 - 1", "-", "never"},
    {"SIM(2,k1) + SIM(2,k2)", "2^k1 + 2^k2 - 2", "a+4", "{k1,k2} = {2,1}"},
    {"SIM(2,k1) + D x SIM(2,1) + D x SIM(2,1)", "2^k1 + 1", "-", "never"},
    {"(D/2) x SIM(2,2) + (D/2) x SIM(2,2) + D x SIM(2,1)", "7", "-", "never"},
    {"D x SIM(2,1) + D x SIM(2,1) + D x SIM(2,1) + D x SIM(2,1)", "4", "a+4", "always"},
};

// Which shape a concrete multiset instantiates.  The case split doubles as an
// exhaustiveness check: every multiset within the budget must land in a row.
int row_of(const std::vector<FamilyTag>& ms) {
    int npc = 0, nrm = 0;
    std::vector<int> sims;
    int pck = 0;
    for (const FamilyTag& t : ms) {
        switch (t.family) {
        case Family::simplex: sims.push_back(t.k); break;
        case Family::reed_muller: ++nrm; break;
        case Family::parity_check: ++npc; pck = t.k; break;
        }
    }
    std::sort(sims.rbegin(), sims.rend());
    const int nsim = int(sims.size());
    if (npc == 1 && nrm == 0) {
        if (pck == 7 && nsim == 0) return 2;
        if (pck == 6 && nsim == 0) return 3;
        if (pck == 5 && nsim == 0) return 4;
        if (pck == 5 && sims == std::vector<int>{1}) return 5;
        if (pck == 4 && nsim == 0) return 6;
        if (pck == 4 && sims == std::vector<int>{1}) return 7;
        if (pck == 4 && sims == std::vector<int>{2}) return 8;
    } else if (npc == 0 && nrm == 1) {
        if (nsim == 0) return 9;
        if (nsim == 1) return 10;
        if (sims == std::vector<int>{1, 1}) return 12;
    } else if (npc == 0 && nrm == 2 && nsim == 0) {
        return 11;
    } else if (npc == 0 && nrm == 0) {
        if (nsim == 0) return 1;
        if (nsim == 1) return 13;
        if (nsim == 2) return 14;
        if (nsim == 3 && sims[1] == 1) return 15;
        if (sims == std::vector<int>{2, 2, 1}) return 16;
        if (sims == std::vector<int>{1, 1, 1, 1}) return 17;
    }
    fail(errc::bad_spec, "constituent multiset outside the 17 known shapes");
}

QuadrupleInstance make_instance(int a, const std::vector<FamilyTag>& ms) {
    QuadrupleInstance inst;
    inst.constituents = ms;
    std::sort(inst.constituents.begin(), inst.constituents.end());
    for (const FamilyTag& t : inst.constituents) {
        inst.n_eff_sum += tag_effective_length(t);
        inst.a_delta += tag_min_count(t);
    }
    if (power_of_two(inst.a_delta + 4)) {
        inst.admissible = true;
        inst.dim = a + 1 + exact_log2(inst.a_delta + 4);
    }
    return inst;
}

// All-one word of length n over GF(2).
std::vector<felem> all_one(int n) { return std::vector<felem>(std::size_t(n), felem(1)); }

void check_maximal(const LinearCode& C, int a, const char* which) {
    const int delta = 1 << a;
    if (C.n() != 4 * delta || C.k() != 2 * a + 4)
        fail(errc::bad_spec, std::string(which) + ": wrong parameters");
    if (!C.contains(all_one(C.n())))
        fail(errc::bad_spec, std::string(which) + ": all-one word missing");
    if (!is_projective(C))
        fail(errc::bad_spec, std::string(which) + ": not projective");
    if (!is_divisible(weight_distribution(C), delta))
        fail(errc::bad_spec, std::string(which) + ": not divisible");
}

} // namespace

WeightDistribution quadruple_weight_distribution(int a, int k) {
    if (a < 1 || a > 20) fail(errc::bad_parameters, "need 1 <= a <= 20");
    if (k < a + 3) fail(errc::bad_parameters, "need k >= a+3");
    const int delta = 1 << a;
    WeightDistribution wd;
    wd.n = 4 * delta;
    wd.counts.assign(std::size_t(wd.n) + 1, 0);
    const mpz_class side = (mpz_class(1) << (k - a - 1)) - 4;
    wd.counts[0] = 1;
    wd.counts[std::size_t(delta)] = side;
    wd.counts[std::size_t(2 * delta)] = (mpz_class(1) << k) - (mpz_class(1) << (k - a)) + 6;
    wd.counts[std::size_t(3 * delta)] = side;
    wd.counts[std::size_t(4 * delta)] = 1;
    return wd;
}

std::vector<QuadrupleRow> quadruple_table(int a) {
    if (a < 1 || a > 20) fail(errc::bad_parameters, "need 1 <= a <= 20");
    const int delta = 1 << a;
    const int budget = 4 * delta;

    std::vector<FamilyTag> cands = catalog_for(2, delta, budget);
    std::sort(cands.begin(), cands.end());

    std::vector<QuadrupleRow> rows(17);
    for (int i = 0; i < 17; ++i) {
        rows[i].index = i + 1;
        rows[i].pattern = kRows[i].pattern;
        rows[i].a_delta_expr = kRows[i].a_delta_expr;
        rows[i].k_expr = kRows[i].k_expr;
        rows[i].condition = kRows[i].condition;
    }

    // Every multiset of candidates within the budget, including the empty one.
    std::vector<FamilyTag> cur;
    std::function<void(std::size_t, int)> walk = [&](std::size_t from, int used) {
        rows[std::size_t(row_of(cur) - 1)].instances.push_back(make_instance(a, cur));
        for (std::size_t i = from; i < cands.size(); ++i) {
            const int ne = tag_effective_length(cands[i]);
            if (used + ne > budget) continue;
            cur.push_back(cands[i]);
            walk(i, used + ne);
            cur.pop_back();
        }
    };
    walk(0, 0);

    for (QuadrupleRow& row : rows) {
        std::sort(row.instances.begin(), row.instances.end(),
                  [](const QuadrupleInstance& x, const QuadrupleInstance& y) {
                      return x.constituents < y.constituents;
                  });
        if (row.instances.empty())
            fail(errc::bad_spec, "empty table row");
    }
    return rows;
}

MaximalCodes build_maximal_codes(int a) {
    if (a < 2 || a > 14) fail(errc::bad_parameters, "need 2 <= a <= 14");
    const LinearCode rm = reed_muller_code(2, a + 2);
    MaximalCodes out{direct_sum(rm, rm), std::nullopt};
    check_maximal(out.rm_pair, a, "RM pair");

    if (a == 2) {
        const LinearCode twice_pc = repetition(parity_check_code(2, 7), 2);
        std::vector<std::vector<felem>> rows = twice_pc.rows();
        std::vector<felem> v(16, 0);
        for (int j = 0; j < 8; ++j) v[std::size_t(j)] = 1; // one position of each doubled pair
        rows.push_back(v);
        out.pc_extension = LinearCode::from_rows(twice_pc.field(), 16, rows);
        check_maximal(*out.pc_extension, a, "PC extension");
    }
    return out;
}

DistinguishReport distinguish_maximal(int a) {
    if (a != 2) fail(errc::bad_parameters, "only defined for a = 2");
    const MaximalCodes mc = build_maximal_codes(2);
    const LinearCode& R = mc.rm_pair;
    const LinearCode& P = *mc.pc_extension;

    DistinguishReport rep;
    rep.wd = quadruple_weight_distribution(2, 8);
    rep.same_wd = weight_distribution(R) == rep.wd && weight_distribution(P) == rep.wd;
    rep.rm_self_dual = dual(R) == R;
    rep.pc_self_dual = dual(P) == P;
    rep.rm_span_dim = weight_span(R, 4).k();
    rep.pc_span_dim = weight_span(P, 4).k();

    // Words outside the doubled parity-check subcode must all have weight 8.
    const LinearCode twice_pc = repetition(parity_check_code(2, 7), 2);
    bool uniform = true;
    int outside = 0;
    for_each_codeword(P, [&](const std::vector<felem>& w, int wt) {
        if (twice_pc.contains(w)) return;
        ++outside;
        if (wt != 8) uniform = false;
    });
    rep.complement_weight_uniform = uniform && outside == 128;

    // Any extension word must separate the doubled column pairs (j, j+8),
    // or two equal columns survive and the code is not projective.  That
    // leaves the 2^8 selections of one position per pair; each is checked in
    // full and all must share the fingerprint.
    const Fingerprint want = fingerprint(P);
    bool all_match = true;
    for (int sel = 0; sel < 256; ++sel) {
        std::vector<felem> v(16, 0);
        for (int j = 0; j < 8; ++j) {
            const bool first = (sel >> j) & 1;
            v[std::size_t(first ? j : j + 8)] = 1;
        }
        std::vector<std::vector<felem>> rows = twice_pc.rows();
        rows.push_back(v);
        const LinearCode C = LinearCode::from_rows(twice_pc.field(), 16, rows);
        if (C.k() != 8 || !is_projective(C) || !is_divisible(weight_distribution(C), 4) ||
            fingerprint(C) != want) {
            all_match = false;
            break;
        }
        ++rep.extension_count;
    }
    rep.extensions_one_fingerprint = all_match;
    return rep;
}

} // namespace divis
