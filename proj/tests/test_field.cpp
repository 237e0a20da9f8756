#include <doctest.h>

#include "divis/errors.hpp"
#include "divis/field.hpp"
#include "helpers.hpp"

using namespace divis;
using divis::testing::throws_kind;

TEST_SUITE("field") {

TEST_CASE("prime fields match integer arithmetic mod p") {
    for (int p : {2, 3, 5, 7, 11, 13}) {
        const Field& F = make_field(p, 1);
        CHECK(F.q() == p);
        CHECK(F.p() == p);
        CHECK(F.r() == 1);
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) {
                CHECK(int(F.add(felem(a), felem(b))) == (a + b) % p);
                CHECK(int(F.mul(felem(a), felem(b))) == (a * b) % p);
                CHECK(int(F.sub(felem(a), felem(b))) == ((a - b) % p + p) % p);
            }
        for (int a = 1; a < p; ++a) {
            CHECK(F.mul(F.inv(felem(a)), felem(a)) == 1);
            CHECK(F.add(F.neg(felem(a)), felem(a)) == 0);
        }
    }
}

TEST_CASE("extension fields use the smallest-encoding irreducible modulus") {
    // Moduli as ascending coefficient vectors, constant term first.
    CHECK(make_field(2, 2).modulus() == std::vector<int>{1, 1, 1});       // x^2+x+1
    CHECK(make_field(2, 3).modulus() == std::vector<int>{1, 1, 0, 1});    // x^3+x+1
    CHECK(make_field(3, 2).modulus() == std::vector<int>{1, 0, 1});       // x^2+1
    CHECK(make_field(2, 4).modulus() == std::vector<int>{1, 1, 0, 0, 1}); // x^4+x+1
}

TEST_CASE("GF(4) multiplication table spot values") {
    const Field& F = make_field(2, 2);
    // 2 encodes x, 3 encodes x+1; x^2 = x+1 under x^2+x+1.
    CHECK(F.mul(2, 2) == 3);
    CHECK(F.mul(2, 3) == 1);
    CHECK(F.mul(3, 3) == 2);
    CHECK(F.inv(2) == 3);
}

TEST_CASE("GF(9) multiplication table spot values") {
    const Field& F = make_field(3, 2);
    // 3 encodes x; x^2 = -1 = 2 under x^2+1.
    CHECK(F.mul(3, 3) == 2);
    // (x+1)(x+2) = x^2 + 3x + 2 = x^2 + 2 = 2 + 2 = 1; codes 4 and 5.
    CHECK(F.mul(4, 5) == 1);
}

TEST_CASE("every nonzero element of every supported field has an inverse") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        const Field& F = field_of_order(q);
        for (int a = 1; a < q; ++a) {
            CHECK(F.mul(F.inv(felem(a)), felem(a)) == 1);
            CHECK(F.mul(felem(a), F.inv(felem(a))) == 1);
        }
    }
}

TEST_CASE("field construction failures") {
    CHECK(throws_kind(errc::not_prime, [] { make_field(6, 1); }));
    CHECK(throws_kind(errc::not_prime, [] { make_field(1, 1); }));
    CHECK(throws_kind(errc::bad_parameters, [] { make_field(2, 0); }));
    CHECK(throws_kind(errc::field_too_large, [] { make_field(2, 5); })); // 32 > 16
    CHECK(throws_kind(errc::field_too_large, [] { make_field(17, 1); }));
    CHECK(throws_kind(errc::bad_parameters, [] { field_of_order(6); }));
    CHECK(throws_kind(errc::bad_parameters, [] { field_of_order(1); }));
    CHECK(throws_kind(errc::field_too_large, [] { field_of_order(32); }));
}

TEST_CASE("division by zero is rejected") {
    CHECK(throws_kind(errc::division_by_zero, [] { field_of_order(4).inv(0); }));
}

TEST_CASE("field instances are singletons") {
    CHECK(&make_field(2, 2) == &field_of_order(4));
    CHECK(&make_field(3, 1) == &field_of_order(3));
    CHECK(&field_of_order(8) == &field_of_order(8));
}

TEST_CASE("prime_power factorization") {
    int p = 0, r = 0;
    CHECK(prime_power(16, &p, &r));
    CHECK(p == 2);
    CHECK(r == 4);
    CHECK(prime_power(9, &p, &r));
    CHECK(p == 3);
    CHECK(r == 2);
    CHECK(prime_power(7, &p, &r));
    CHECK(p == 7);
    CHECK(r == 1);
    CHECK_FALSE(prime_power(12, &p, &r));
    CHECK_FALSE(prime_power(1, &p, &r));
    CHECK_FALSE(prime_power(0, &p, &r));
}

TEST_CASE("projective normalization scales the first nonzero entry to one") {
    const Field& F3 = field_of_order(3);
    CHECK(projective_normalize(F3, {0, 2, 1}) == std::vector<felem>{0, 1, 2});
    CHECK(projective_normalize(F3, {1, 2, 0}) == std::vector<felem>{1, 2, 0});
    const Field& F4 = field_of_order(4);
    // leading 3 = x+1, inverse is x = 2: (3,1) -> (1, 2*1) = (1,2)
    CHECK(projective_normalize(F4, {3, 1}) == std::vector<felem>{1, 2});
    CHECK(throws_kind(errc::zero_vector, [&] { projective_normalize(F3, {0, 0, 0}); }));
}

TEST_CASE("normalized vectors are projective class representatives") {
    // Two vectors normalize identically iff one is a scalar multiple of the
    // other; checked exhaustively over GF(4)^2.
    const Field& F = field_of_order(4);
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b) {
            if (a == 0 || b == 0) continue;
            std::vector<felem> va{felem(a / 4), felem(a % 4)};
            std::vector<felem> vb{felem(b / 4), felem(b % 4)};
            bool multiple = false;
            for (int l = 1; l < 4; ++l)
                if (F.mul(felem(l), va[0]) == vb[0] && F.mul(felem(l), va[1]) == vb[1])
                    multiple = true;
            CHECK((projective_normalize(F, va) == projective_normalize(F, vb)) == multiple);
        }
}

} // TEST_SUITE
