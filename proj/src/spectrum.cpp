#include "divis/spectrum.hpp"

#include <numeric>

namespace divis {

namespace {

mpz_class mpz_pow(unsigned long base, unsigned long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Exact division; throws NonIntegerResult when it does not come out even.
mpz_class exact_div(const mpz_class& a, const mpz_class& b, const char* what) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) fail(errc::non_integer_result, what);
    return q;
}

} // namespace

mpz_class WeightDistribution::total() const {
    mpz_class s = 0;
    for (const auto& c : counts) s += c;
    return s;
}

WeightDistribution wd_from_histogram(int n, const std::vector<std::uint64_t>& counts) {
    WeightDistribution wd;
    wd.n = n;
    wd.counts.assign(n + 1, 0);
    for (std::size_t w = 0; w < counts.size(); ++w) wd.counts[w] = mpz_class(counts[w]);
    return wd;
}

WeightDistribution weight_distribution(const LinearCode& C, std::uint64_t cap) {
    return wd_from_histogram(C.n(), weight_histogram(C, cap));
}

WeightDistribution weight_distribution_auto(const LinearCode& C, std::uint64_t cap) {
    if (C.k() <= C.n() - C.k()) return weight_distribution(C, cap);
    WeightDistribution dwd = weight_distribution(dual(C), cap);
    return macwilliams_transform(dwd, C.q());
}

bool is_divisible(const WeightDistribution& wd, int delta) {
    if (delta < 1) fail(errc::bad_parameters, "divisor must be >= 1");
    for (int w = 1; w <= wd.n; ++w)
        if (wd.counts[w] != 0 && w % delta != 0) return false;
    return true;
}

int max_divisor(const WeightDistribution& wd) {
    int g = 0;
    for (int w = 1; w <= wd.n; ++w)
        if (wd.counts[w] != 0) g = std::gcd(g, w);
    return g;
}

WeightDistribution macwilliams_transform(const WeightDistribution& wd, int q) {
    if (q < 2) fail(errc::bad_parameters, "field order must be >= 2");
    const int n = wd.n;
    mpz_class size = wd.total();
    // size must be q^k
    mpz_class t = size;
    int k = 0;
    while (t > 1) {
        if (t % q != 0) fail(errc::bad_parameters, "distribution total is not a power of q");
        t /= q;
        ++k;
    }
    if (size < 1) fail(errc::bad_parameters, "empty distribution");

    // B_j = q^-k * sum_i A_i * K_j(i),
    // K_j(i) = sum_t (-1)^t (q-1)^(j-t) C(i,t) C(n-i, j-t)
    WeightDistribution out;
    out.n = n;
    out.counts.assign(n + 1, 0);
    for (int j = 0; j <= n; ++j) {
        mpz_class acc = 0;
        for (int i = 0; i <= n; ++i) {
            if (wd.counts[i] == 0) continue;
            mpz_class kr = 0;
            const int tmax = std::min(i, j);
            for (int tt = 0; tt <= tmax; ++tt) {
                mpz_class term = binom(i, tt) * binom(n - i, j - tt) * mpz_pow(q - 1, j - tt);
                if (tt & 1)
                    kr -= term;
                else
                    kr += term;
            }
            acc += wd.counts[i] * kr;
        }
        out.counts[j] = exact_div(acc, size, "MacWilliams image count is not an integer");
    }
    return out;
}

PowerMoments pless_power_moments(const WeightDistribution& wd, int q) {
    if (q != 2) fail(errc::not_binary, "power moments implemented for q = 2 only");
    WeightDistribution dualwd = macwilliams_transform(wd, 2);
    if (dualwd.counts[1] != 0)
        fail(errc::not_full_length, "dual has words of weight 1 (zero coordinate present)");

    mpz_class size = wd.total(); // 2^k
    const int n = wd.n;
    const mpz_class B2 = n >= 2 ? dualwd.counts[2] : mpz_class(0);
    const mpz_class B3 = n >= 3 ? dualwd.counts[3] : mpz_class(0);

    PowerMoments pm;
    for (auto& v : pm.lhs) v = 0;
    for (int i = 0; i <= n; ++i) {
        mpz_class ai = wd.counts[i];
        if (ai == 0) continue;
        if (i > 0) pm.lhs[0] += ai;
        pm.lhs[1] += ai * i;
        pm.lhs[2] += ai * i * i;
        pm.lhs[3] += ai * i * i * i;
    }

    const mpz_class N = n;
    pm.rhs[0] = size - 1;
    pm.rhs[1] = exact_div(size * N, 2, "first moment");
    pm.rhs[2] = exact_div(size * (N * (N + 1) + 2 * B2), 4, "second moment");
    pm.rhs[3] = exact_div(size * (N * N * (N + 3) + 6 * N * B2 - 6 * B3), 8, "third moment");
    for (int i = 0; i < 4; ++i) pm.ok[i] = pm.lhs[i] == pm.rhs[i];
    return pm;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::simplex: return "SIM";
        case Family::reed_muller: return "RM";
        case Family::parity_check: return "PC";
    }
    return "?";
}

WeightDistribution family_weight_distribution(Family f, int q, int k, int m) {
    if (!prime_power(q)) fail(errc::bad_parameters, "q must be a prime power");
    if (m < 1) fail(errc::bad_parameters, "repetition count must be >= 1");
    const int kmin = f == Family::reed_muller ? 2 : 1;
    if (k < kmin) fail(errc::bad_parameters, "dimension too small for this family");

    WeightDistribution wd;
    auto qpow = [&](int e) { return mpz_pow(q, e); };

    switch (f) {
        case Family::simplex: {
            mpz_class n0 = (qpow(k) - 1) / (q - 1);
            if (!n0.fits_sint_p()) fail(errc::bad_parameters, "length overflow");
            wd.n = int(n0.get_si()) * m;
            wd.counts.assign(wd.n + 1, 0);
            wd.counts[0] = 1;
            mpz_class w = qpow(k - 1) * m;
            wd.counts[int(w.get_si())] = qpow(k) - 1;
            return wd;
        }
        case Family::reed_muller: {
            mpz_class n0 = qpow(k - 1);
            if (!n0.fits_sint_p()) fail(errc::bad_parameters, "length overflow");
            wd.n = int(n0.get_si()) * m;
            wd.counts.assign(wd.n + 1, 0);
            wd.counts[0] = 1;
            mpz_class w1 = qpow(k - 2) * (q - 1) * m;
            mpz_class w2 = qpow(k - 1) * m;
            wd.counts[int(w1.get_si())] += qpow(k) - q;
            wd.counts[int(w2.get_si())] += q - 1;
            return wd;
        }
        case Family::parity_check: {
            wd.n = (k + 1) * m;
            wd.counts.assign(wd.n + 1, 0);
            for (int i = 0; i <= k + 1; ++i) {
                mpz_class sgn = (i & 1) ? mpz_class(-(q - 1)) : mpz_class(q - 1);
                mpz_class a = binom(k + 1, i) * (mpz_pow(q - 1, i) + sgn);
                wd.counts[i * m] += exact_div(a, q, "parity-check count");
            }
            return wd;
        }
    }
    fail(errc::bad_parameters, "unknown family");
}

WeightDistribution repetition_transform(const WeightDistribution& wd, int m) {
    if (m < 1) fail(errc::bad_parameters, "repetition count must be >= 1");
    WeightDistribution out;
    out.n = wd.n * m;
    out.counts.assign(out.n + 1, 0);
    for (int w = 0; w <= wd.n; ++w) out.counts[w * m] = wd.counts[w];
    return out;
}

WeightDistribution direct_sum_wd(const WeightDistribution& a, const WeightDistribution& b) {
    WeightDistribution out;
    out.n = a.n + b.n;
    out.counts.assign(out.n + 1, 0);
    for (int i = 0; i <= a.n; ++i) {
        if (a.counts[i] == 0) continue;
        for (int j = 0; j <= b.n; ++j)
            if (b.counts[j] != 0) out.counts[i + j] += a.counts[i] * b.counts[j];
    }
    return out;
}

} // namespace divis
