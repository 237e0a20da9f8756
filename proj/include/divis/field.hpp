#pragma once

#include <cstdint>
#include <vector>

#include "divis/errors.hpp"

namespace divis {

// Field element. Values are 0..q-1; the mapping to polynomials over GF(p) is
// base-p digits, least significant digit = constant coefficient.
using felem = std::uint8_t;

// GF(p^r) with q = p^r <= 16, all arithmetic via lookup tables built once.
// Instances are immortal singletons owned by a registry; hold them by
// reference or pointer, never copy.  Two codes are over the same field iff
// their Field pointers are equal.
class Field {
  public:
    int p() const { return p_; }
    int r() const { return r_; }
    int q() const { return q_; }

    // Monic reduction modulus, coefficients ascending, length r+1.
    // For r == 1 this is x, i.e. {0, 1}.
    const std::vector<int>& modulus() const { return mod_; }

    felem add(felem a, felem b) const { return add_[idx(a, b)]; }
    felem sub(felem a, felem b) const { return add(a, neg(b)); }
    felem mul(felem a, felem b) const { return mul_[idx(a, b)]; }
    felem neg(felem a) const { return neg_[a]; }

    felem inv(felem a) const {
        if (a == 0) fail(errc::division_by_zero, "inverse of zero");
        return inv_[a];
    }

    felem div(felem a, felem b) const { return mul(a, inv(b)); }

    felem one() const { return 1; }

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

  private:
    friend const Field& make_field(int p, int r);
    Field(int p, int r);

    std::size_t idx(felem a, felem b) const { return std::size_t(a) * q_ + b; }
    void verify_axioms() const;

    int p_, r_, q_;
    std::vector<int> mod_;
    std::vector<felem> add_, mul_;
    std::vector<felem> neg_, inv_;
};

// Returns the unique registered GF(p^r).  Throws NotPrime if p is not prime,
// FieldTooLarge if p^r > 16, BadParameters if r < 1.
const Field& make_field(int p, int r);

// Factors q as p^r and returns make_field(p, r).  Throws BadParameters if q
// is not a prime power >= 2, FieldTooLarge if q > 16.
const Field& field_of_order(int q);

// True iff q = p^r for a prime p and r >= 1; fills p and r when it is.
bool prime_power(int q, int* p = nullptr, int* r = nullptr);

// Scales v so its first nonzero coordinate becomes 1.  Throws ZeroVector on
// the zero vector.  Constant on scaling orbits and idempotent.
std::vector<felem> projective_normalize(const Field& F, std::vector<felem> v);

} // namespace divis
