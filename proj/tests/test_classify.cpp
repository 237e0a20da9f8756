#include <doctest.h>

#include "divis/classify.hpp"
#include "divis/errors.hpp"
#include "helpers.hpp"

using namespace divis;
using namespace divis::testing;

namespace {

LinearCode with_zero_columns(const LinearCode& C, int z) {
    return direct_sum(C, LinearCode(C.field(), z));
}

} // namespace

TEST_SUITE("classify") {

TEST_CASE("shuffled binary mix is recovered exactly") {
    const LinearCode plain = with_zero_columns(
        direct_sum(simplex_code(2, 3), repetition(parity_check_code(2, 4), 2)), 2);
    std::mt19937 rng(7u);
    const LinearCode C = shuffle_columns(plain, rng);

    const Certificate cert = classify(C, 4);
    CHECK(cert.q == 2);
    CHECK(cert.delta == 4);
    CHECK(cert.zero_count == 2);
    CHECK(cert.leftover_dim == 0);
    const std::vector<FamilyTag> want = {{Family::simplex, 2, 3, 1},
                                         {Family::parity_check, 2, 4, 2}};
    CHECK(cert.constituents == want);
    CHECK(certificate_to_string(cert) == "1 x SIM(2,3)\n2 x PC(2,4)\nzeros: 2\nleftover_dim: 0\n");
}

TEST_CASE("zero code classifies to zero positions only") {
    const Certificate cert = classify(LinearCode(field_of_order(2), 5), 4);
    CHECK(cert.constituents.empty());
    CHECK(cert.zero_count == 5);
    CHECK(cert.leftover_dim == 0);
    CHECK(verify_certificate(LinearCode(field_of_order(2), 5), cert));
}

TEST_CASE("the full space over GF(3) splits into unit simplex blocks") {
    const LinearCode C = code_of(3, {"10", "01"});
    const Certificate cert = classify(C, 1);
    const std::vector<FamilyTag> want = {{Family::simplex, 3, 1, 1}, {Family::simplex, 3, 1, 1}};
    CHECK(cert.constituents == want);
    CHECK(cert.zero_count == 0);
    CHECK(cert.leftover_dim == 0);
    CHECK(verify_certificate(C, cert));
}

TEST_CASE("three simplex scales over GF(3)") {
    const LinearCode plain = direct_sum(
        direct_sum(repetition(simplex_code(3, 1), 9), repetition(simplex_code(3, 2), 3)),
        simplex_code(3, 3));
    std::mt19937 rng(21u);
    const LinearCode C = shuffle_columns(plain, rng);

    const Certificate cert = classify(C, 9);
    const std::vector<FamilyTag> want = {{Family::simplex, 3, 1, 9},
                                         {Family::simplex, 3, 2, 3},
                                         {Family::simplex, 3, 3, 1}};
    CHECK(cert.constituents == want);
    CHECK(cert.zero_count == 0);
    CHECK(cert.leftover_dim == 0);
    CHECK(verify_certificate(C, cert)); // blocks exceed the search caps: fingerprints decide
}

TEST_CASE("words outside the weight-delta span become leftover dimension") {
    const LinearCode C = code_of(2, {"1111111100"});
    const Certificate cert = classify(C, 4);
    CHECK(cert.constituents.empty());
    CHECK(cert.zero_count == 10);
    CHECK(cert.leftover_dim == 1);
    CHECK(certificate_to_string(cert) == "zeros: 10\nleftover_dim: 1\n");
    CHECK(verify_certificate(C, cert));
}

TEST_CASE("an indecomposable member classifies to itself") {
    const Certificate cert = classify(reed_muller_code(2, 3), 2);
    CHECK(cert.constituents == std::vector<FamilyTag>{{Family::reed_muller, 2, 3, 1}});
    CHECK(cert.zero_count == 0);
    CHECK(cert.leftover_dim == 0);
    CHECK(verify_certificate(reed_muller_code(2, 3), cert));
}

TEST_CASE("classification failures") {
    CHECK(throws_kind(errc::not_divisible, [] { classify(dual(simplex_code(2, 3)), 2); }));
    CHECK(throws_kind(errc::bad_parameters, [] { classify(simplex_code(2, 2), 0); }));
    CHECK(throws_kind(errc::enumeration_too_large, [] {
        std::vector<std::vector<felem>> rows(25, std::vector<felem>(25, 0));
        for (int i = 0; i < 25; ++i) rows[i][i] = 1;
        classify(LinearCode::from_rows(field_of_order(2), 25, rows), 1);
    }));
}

TEST_CASE("certificate verification accepts honest mixes and rejects tampering") {
    const LinearCode plain = with_zero_columns(
        direct_sum(simplex_code(2, 2), repetition(simplex_code(2, 1), 2)), 1);
    std::mt19937 rng(3u);
    const LinearCode C = shuffle_columns(plain, rng);
    const Certificate cert = classify(C, 2);
    const std::vector<FamilyTag> want = {{Family::simplex, 2, 1, 2}, {Family::simplex, 2, 2, 1}};
    REQUIRE(cert.constituents == want);
    REQUIRE(cert.zero_count == 1);
    CHECK(verify_certificate(C, cert));

    Certificate bad = cert;
    bad.zero_count = 2;
    CHECK_FALSE(verify_certificate(C, bad));

    bad = cert;
    bad.leftover_dim = 1;
    CHECK_FALSE(verify_certificate(C, bad));

    bad = cert;
    bad.constituents[1].family = Family::reed_muller; // wrong family
    CHECK_FALSE(verify_certificate(C, bad));

    bad = cert;
    bad.constituents[0].m = 1; // wrong multiplier
    CHECK_FALSE(verify_certificate(C, bad));

    bad = cert;
    bad.constituents.pop_back();
    CHECK_FALSE(verify_certificate(C, bad));

    bad = cert;
    bad.constituents.push_back({Family::simplex, 2, 1, 2});
    CHECK_FALSE(verify_certificate(C, bad));

    bad = cert;
    bad.q = 3;
    CHECK_FALSE(verify_certificate(C, bad));

    // Swapping the two blocks' tags changes nothing: order is immaterial.
    Certificate swapped = cert;
    std::swap(swapped.constituents[0], swapped.constituents[1]);
    CHECK(verify_certificate(C, swapped));
}

TEST_CASE("admissible constituents for given parameters") {
    CHECK(admissibility_check({Family::simplex, 2, 1, 4}, 2, 4));
    CHECK(admissibility_check({Family::simplex, 2, 3, 1}, 2, 4));
    CHECK(admissibility_check({Family::reed_muller, 2, 3, 2}, 2, 4));
    CHECK(admissibility_check({Family::reed_muller, 2, 4, 1}, 2, 4));
    CHECK(admissibility_check({Family::parity_check, 2, 4, 2}, 2, 4));
    CHECK(admissibility_check({Family::parity_check, 2, 9, 2}, 2, 4)); // k unbounded
    CHECK(admissibility_check({Family::simplex, 3, 1, 9}, 3, 9));
    CHECK(admissibility_check({Family::simplex, 3, 3, 1}, 3, 9));

    CHECK_FALSE(admissibility_check({Family::simplex, 2, 4, 1}, 2, 4));   // k > a+1
    CHECK_FALSE(admissibility_check({Family::simplex, 2, 2, 3}, 2, 4));   // wrong m
    CHECK_FALSE(admissibility_check({Family::reed_muller, 2, 5, 1}, 2, 4)); // k > a+2
    CHECK_FALSE(admissibility_check({Family::reed_muller, 3, 2, 1}, 3, 3)); // non-binary
    CHECK_FALSE(admissibility_check({Family::parity_check, 2, 3, 2}, 2, 4)); // k < 4
    CHECK_FALSE(admissibility_check({Family::parity_check, 2, 4, 1}, 2, 4)); // wrong m
    CHECK_FALSE(admissibility_check({Family::parity_check, 2, 4, 1}, 2, 1)); // a = 0
    CHECK_FALSE(admissibility_check({Family::simplex, 2, 1, 4}, 3, 4));     // field mismatch
    CHECK_FALSE(admissibility_check({Family::simplex, 2, 1, 4}, 2, 0));
}

} // TEST_SUITE
