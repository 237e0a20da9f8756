#include <doctest.h>

#include "divis/catalog.hpp"
#include "divis/errors.hpp"
#include "divis/matrix_io.hpp"
#include "helpers.hpp"

using namespace divis;
using namespace divis::testing;

TEST_SUITE("matrix_io") {

TEST_CASE("frozen serializations of the generating families") {
    CHECK(code_to_string(simplex_code(2, 3)) == "2 7 3\n1010101\n0110011\n0001111\n");
    CHECK(code_to_string(parity_check_code(3, 2)) == "3 3 2\n102\n012\n");
    CHECK(code_to_string(reed_muller_code(2, 2)) == "2 2 2\n10\n01\n");
}

TEST_CASE("parse accepts comments, blank lines, and uppercase digits") {
    const LinearCode C = parse_code_string("# header comment\n\n3 3 2\n102\n# mid\n012\n");
    CHECK(C == parity_check_code(3, 2));
    const LinearCode D = parse_code_string("16 2 1\n1A\n");
    CHECK(D.rows()[0] == std::vector<felem>{1, 10});
}

TEST_CASE("hex digits cover GF(16)") {
    const LinearCode C = parse_code_string("16 4 2\n10af\n01b2\n");
    CHECK(C.k() == 2);
    CHECK(code_to_string(C) == "16 4 2\n10af\n01b2\n");
}

TEST_CASE("round trip through string form is the identity on the code") {
    for (int q : {2, 3, 4, 5, 8, 9, 16}) {
        std::mt19937 rng(5u * unsigned(q));
        const LinearCode C = random_code(q, 9, 4, rng);
        CHECK(parse_code_string(code_to_string(C)) == C);
    }
}

TEST_CASE("declared dimension must match the actual rank") {
    CHECK(throws_kind(errc::parse_error, [] { parse_code_string("2 3 2\n110\n110\n"); }));
    CHECK(throws_kind(errc::parse_error, [] { parse_code_string("3 2 2\n12\n21\n"); }));
    CHECK_NOTHROW(parse_code_string("3 2 1\n12\n"));
}

TEST_CASE("malformed inputs are rejected with ParseError") {
    const char* bad[] = {
        "",                      // empty
        "2 3\n110\n",            // short header
        "2 3 2\n110\n",          // missing row
        "2 3 1\n11\n",           // short row
        "2 3 1\n1100\n",         // long row
        "2 3 1\n120\n",          // digit out of field range
        "2 3 1\n1x0\n",          // non-digit
        "17 2 1\n10\n",          // field too large for the format
        "1 2 1\n10\n",           // q too small
        "2 3 4\n110\n011\n101\n111\n", // k > n
        "2 3 1\n110\n011\n",     // trailing content
        "-2 3 1\n110\n",         // negative field order
    };
    for (const char* s : bad)
        CHECK_MESSAGE(throws_kind(errc::parse_error, [&] { parse_code_string(s); }), s);
}

TEST_CASE("zero-dimensional codes serialize with no rows") {
    const LinearCode Z = parse_code_string("2 5 0\n");
    CHECK(Z.k() == 0);
    CHECK(Z.n() == 5);
    CHECK(code_to_string(Z) == "2 5 0\n");
}

TEST_CASE("read_code_file reports missing files") {
    CHECK(throws_kind(errc::parse_error, [] { read_code_file("/nonexistent/x.txt"); }));
}

} // TEST_SUITE
