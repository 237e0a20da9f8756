#include "divis/field.hpp"

#include <map>
#include <mutex>

namespace divis {

namespace {

constexpr int kMaxOrder = 16;

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Polynomials over GF(p): coefficient vectors, ascending powers, no trailing
// zero coefficients (the zero polynomial is the empty vector).

using Poly = std::vector<int>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo monic m.
Poly poly_rem(Poly f, const Poly& m, int p) {
    trim(f);
    const int dm = int(m.size()) - 1;
    while (int(f.size()) - 1 >= dm) {
        const int shift = int(f.size()) - 1 - dm;
        const int c = f.back();
        for (int i = 0; i <= dm; ++i) {
            int v = (f[shift + i] - c * m[i]) % p;
            f[shift + i] = v < 0 ? v + p : v;
        }
        trim(f);
    }
    return f;
}

bool poly_divides(const Poly& d, const Poly& f, int p) { return poly_rem(f, d, p).empty(); }

// Monic degree-r polynomial with coefficient part c (base-p digits of c are
// the coefficients below the leading 1).
Poly monic_from_code(int c, int r, int p) {
    Poly f(r + 1, 0);
    for (int i = 0; i < r; ++i) {
        f[i] = c % p;
        c /= p;
    }
    f[r] = 1;
    return f;
}

bool irreducible(const Poly& f, int p) {
    const int deg = int(f.size()) - 1;
    for (int dd = 1; dd <= deg / 2; ++dd) {
        int codes = 1;
        for (int i = 0; i < dd; ++i) codes *= p;
        for (int c = 0; c < codes; ++c)
            if (poly_divides(monic_from_code(c, dd, p), f, p)) return false;
    }
    return true;
}

Poly digits_of(int e, int r, int p) {
    Poly f(r, 0);
    for (int i = 0; i < r; ++i) {
        f[i] = e % p;
        e /= p;
    }
    trim(f);
    return f;
}

int pack(const Poly& f, int p) {
    int e = 0;
    for (int i = int(f.size()) - 1; i >= 0; --i) e = e * p + f[i];
    return e;
}

} // namespace

Field::Field(int p, int r) : p_(p), r_(r) {
    if (r < 1) fail(errc::bad_parameters, "field extension degree must be >= 1");
    if (!is_prime(p)) fail(errc::not_prime, "field characteristic " + std::to_string(p));
    long long q = 1;
    for (int i = 0; i < r; ++i) {
        q *= p;
        if (q > kMaxOrder) fail(errc::field_too_large, "order exceeds " + std::to_string(kMaxOrder));
    }
    q_ = int(q);

    if (r_ == 1) {
        mod_ = {0, 1};
    } else {
        // Smallest monic irreducible of degree r, ordered by the base-p
        // integer encoding of the sub-leading coefficients.
        int codes = q_; // p^r
        for (int c = 0; c < codes; ++c) {
            Poly f = monic_from_code(c, r_, p_);
            if (irreducible(f, p_)) {
                mod_ = f;
                break;
            }
        }
    }

    add_.assign(std::size_t(q_) * q_, 0);
    mul_.assign(std::size_t(q_) * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);

    for (int a = 0; a < q_; ++a) {
        Poly fa = digits_of(a, r_, p_);
        for (int b = 0; b < q_; ++b) {
            Poly fb = digits_of(b, r_, p_);

            Poly sum(r_, 0);
            for (int i = 0; i < r_; ++i) {
                int va = i < int(fa.size()) ? fa[i] : 0;
                int vb = i < int(fb.size()) ? fb[i] : 0;
                sum[i] = (va + vb) % p_;
            }
            trim(sum);
            add_[idx(felem(a), felem(b))] = felem(pack(sum, p_));

            Poly prod;
            if (!fa.empty() && !fb.empty()) {
                prod.assign(fa.size() + fb.size() - 1, 0);
                for (std::size_t i = 0; i < fa.size(); ++i)
                    for (std::size_t j = 0; j < fb.size(); ++j)
                        prod[i + j] = (prod[i + j] + fa[i] * fb[j]) % p_;
                prod = poly_rem(std::move(prod), mod_, p_);
            }
            mul_[idx(felem(a), felem(b))] = felem(pack(prod, p_));
        }
    }

    for (int a = 0; a < q_; ++a) {
        Poly fa = digits_of(a, r_, p_);
        Poly n(fa.size());
        for (std::size_t i = 0; i < fa.size(); ++i) n[i] = (p_ - fa[i]) % p_;
        trim(n);
        neg_[a] = felem(pack(n, p_));
    }

    for (int a = 1; a < q_; ++a) {
        int found = -1;
        for (int b = 1; b < q_; ++b)
            if (mul_[idx(felem(a), felem(b))] == 1) {
                found = b;
                break;
            }
        if (found < 0) fail(errc::bad_spec, "element without inverse; modulus not irreducible?");
        inv_[a] = felem(found);
    }

    verify_axioms();
}

// Exhaustive check of the field axioms over all q^3 triples; q <= 16 keeps
// this at most 4096 iterations per law.
void Field::verify_axioms() const {
    auto check = [](bool ok, const char* what) {
        if (!ok) fail(errc::bad_spec, std::string("field axiom violated: ") + what);
    };
    const int q = q_;
    for (int a = 0; a < q; ++a) {
        check(add(felem(a), 0) == a, "additive identity");
        check(mul(felem(a), 1) == a, "multiplicative identity");
        check(add(felem(a), neg(felem(a))) == 0, "additive inverse");
        check(mul(felem(a), 0) == 0, "zero annihilates");
        if (a != 0) check(mul(felem(a), inv_[a]) == 1, "multiplicative inverse");
        for (int b = 0; b < q; ++b) {
            check(add(felem(a), felem(b)) == add(felem(b), felem(a)), "add commutes");
            check(mul(felem(a), felem(b)) == mul(felem(b), felem(a)), "mul commutes");
            if (a != 0 && b != 0) check(mul(felem(a), felem(b)) != 0, "no zero divisors");
            for (int c = 0; c < q; ++c) {
                check(add(add(felem(a), felem(b)), felem(c)) == add(felem(a), add(felem(b), felem(c))),
                      "add associates");
                check(mul(mul(felem(a), felem(b)), felem(c)) == mul(felem(a), mul(felem(b), felem(c))),
                      "mul associates");
                check(mul(felem(a), add(felem(b), felem(c))) ==
                          add(mul(felem(a), felem(b)), mul(felem(a), felem(c))),
                      "distributivity");
            }
        }
    }
}

const Field& make_field(int p, int r) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, const Field*> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find({p, r});
    if (it != registry.end()) return *it->second;
    const Field* f = new Field(p, r); // immortal
    registry.emplace(std::make_pair(p, r), f);
    return *f;
}

bool prime_power(int q, int* p_out, int* r_out) {
    if (q < 2) return false;
    int p = 2;
    while (q % p != 0) {
        ++p;
        if (p * p > q) {
            p = q;
            break;
        }
    }
    if (!is_prime(p)) return false;
    int r = 0, m = q;
    while (m % p == 0) {
        m /= p;
        ++r;
    }
    if (m != 1) return false;
    if (p_out) *p_out = p;
    if (r_out) *r_out = r;
    return true;
}

const Field& field_of_order(int q) {
    if (q > kMaxOrder) fail(errc::field_too_large, "order " + std::to_string(q));
    int p, r;
    if (!prime_power(q, &p, &r)) fail(errc::bad_parameters, std::to_string(q) + " is not a prime power");
    return make_field(p, r);
}

std::vector<felem> projective_normalize(const Field& F, std::vector<felem> v) {
    for (felem x : v)
        if (x >= F.q()) fail(errc::bad_parameters, "coordinate out of field range");
    std::size_t lead = v.size();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) {
            lead = i;
            break;
        }
    if (lead == v.size()) fail(errc::zero_vector, "cannot normalize the zero vector");
    if (v[lead] != 1) {
        felem s = F.inv(v[lead]);
        for (auto& x : v) x = F.mul(x, s);
    }
    return v;
}

} // namespace divis
