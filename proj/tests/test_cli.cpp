#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
    int status = -1;
    std::string out;
};

// Runs the binary with the given arguments, stderr dropped, stdout captured.
CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(DIVIS_CLI_PATH) + " " + args + " 2>/dev/null";
    CliResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    const int rc = pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

std::string write_tmp(const std::string& name, const std::string& content) {
    std::ofstream out(name);
    REQUIRE(out.good());
    out << content;
    return name;
}

const std::string kSimplex23 = "2 7 3\n1010101\n0110011\n0001111\n";

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("construct writes frozen matrices to stdout") {
    CliResult r = run_cli("construct SIM 2 3");
    CHECK(r.status == 0);
    CHECK(r.out == kSimplex23);

    r = run_cli("construct PC 3 2");
    CHECK(r.status == 0);
    CHECK(r.out == "3 3 2\n102\n012\n");

    r = run_cli("construct SIM 2 2 3"); // threefold repetition
    CHECK(r.status == 0);
    CHECK(r.out == "2 9 2\n101101101\n011011011\n");
}

TEST_CASE("construct rejects bad parameters") {
    CHECK(run_cli("construct SIM 6 2").status == 2);  // 6 is not a prime power
    CHECK(run_cli("construct RM 2 1").status == 2);   // RM needs k >= 2
    CHECK(run_cli("construct XX 2 2").status == 2);   // unknown family name
    CHECK(run_cli("construct SIM 2").status == 2);    // missing k
}

TEST_CASE("analyze a simplex code, text format") {
    const std::string f = write_tmp("cli_simplex.txt", kSimplex23);
    const CliResult r = run_cli("analyze " + f);
    CHECK(r.status == 0);
    CHECK(r.out ==
          "q: 2\n"
          "n: 7\n"
          "k: 3\n"
          "n_eff: 7\n"
          "weight distribution: 0:1 4:7\n"
          "dual weight distribution: 0:1 3:7 4:7 7:1\n"
          "max divisor: 4\n"
          "projective: yes\n"
          "constant weight 4\n"
          "zero positions: []\n"
          "indecomposable\n"
          "pless moments: ok\n");
}

TEST_CASE("analyze reads stdin and emits csv") {
    const std::string f = write_tmp("cli_simplex.txt", kSimplex23);
    const CliResult r = run_cli("analyze - --format csv < " + f);
    CHECK(r.status == 0);
    CHECK(r.out ==
          "q,2\n"
          "n,7\n"
          "k,3\n"
          "n_eff,7\n"
          "weight distribution,\"0:1 4:7\"\n"
          "dual weight distribution,\"0:1 3:7 4:7 7:1\"\n"
          "max divisor,4\n"
          "projective,yes\n"
          "constant weight,4\n"
          "zero positions,[]\n"
          "blocks,indecomposable\n"
          "pless moments,ok\n");
}

TEST_CASE("analyze flags zero columns and skips moments when inapplicable") {
    const std::string f = write_tmp("cli_zerocol.txt", "2 3 1\n110\n");
    const CliResult r = run_cli("analyze " + f);
    CHECK(r.status == 0);
    CHECK(contains(r.out, "n_eff: 2\n"));
    CHECK(contains(r.out, "zero positions: [2]\n"));
    CHECK(contains(r.out, "pless moments: skipped (not full-length)\n"));

    const std::string g = write_tmp("cli_ternary.txt", "3 3 2\n102\n012\n");
    const CliResult r3 = run_cli("analyze " + g);
    CHECK(r3.status == 0);
    CHECK(contains(r3.out, "pless moments: skipped (not binary)\n"));
}

TEST_CASE("analyze the zero code") {
    const std::string f = write_tmp("cli_zero.txt", "2 5 0\n");
    const CliResult r = run_cli("analyze " + f);
    CHECK(r.status == 0);
    CHECK(contains(r.out, "k: 0\n"));
    CHECK(contains(r.out, "weight distribution: 0:1\n"));
    CHECK(contains(r.out, "dual weight distribution: 0:1 1:5 2:10 3:10 4:5 5:1\n"));
    CHECK(contains(r.out, "max divisor: 0\n"));
    CHECK(contains(r.out, "zero positions: [0,1,2,3,4]\n"));
}

TEST_CASE("analyze reports decomposable codes") {
    const std::string f = write_tmp("cli_blocks.txt", "2 5 3\n11000\n00110\n00001\n");
    const CliResult r = run_cli("analyze " + f);
    CHECK(r.status == 0);
    CHECK(contains(r.out, "decomposable: 3 blocks\n"));
}

TEST_CASE("classify emits the certificate") {
    const std::string f = write_tmp("cli_simplex.txt", kSimplex23);
    const CliResult r = run_cli("classify " + f + " --delta 4");
    CHECK(r.status == 0);
    CHECK(r.out == "1 x SIM(2,3)\nzeros: 0\nleftover_dim: 0\n");
}

TEST_CASE("classify reports leftover dimension with exit 1") {
    const std::string f = write_tmp("cli_leftover.txt", "2 10 1\n1111111100\n");
    const CliResult r = run_cli("classify " + f + " --delta 4");
    CHECK(r.status == 1);
    CHECK(r.out == "zeros: 10\nleftover_dim: 1\n");
}

TEST_CASE("classify rejects non-divisible codes with exit 1") {
    // Hamming [7,4] has words of weight 3.
    const std::string f =
        write_tmp("cli_hamming.txt", "2 7 4\n1000110\n0100101\n0010011\n0001111\n");
    const CliResult r = run_cli("classify " + f + " --delta 2");
    CHECK(r.status == 1);
    CHECK(r.out.empty());
}

TEST_CASE("check-lemmas on a constant-weight code") {
    const std::string f = write_tmp("cli_simplex.txt", kSimplex23);
    const CliResult r = run_cli("check-lemmas " + f + " --delta 4");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "words of weight 4: 7\n"
          "pairs: 21\n"
          "case equivalent: 0\n"
          "case proper: 21\n"
          "case disjoint: 0\n"
          "residuals checked: 7 (divisor 2)\n"
          "all checks hold\n");
}

TEST_CASE("table1 csv output for a = 1, frozen") {
    const CliResult r = run_cli("table1 1 --format csv");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "row,decomposition,A_D,k,condition,instances,admissible\n"
          "1,\"0\",\"0\",a+3,\"always\",1,1\n"
          "2,\"(D/2) x PC(2,7)\",\"28\",a+6,\"always\",1,1\n"
          "3,\"(D/2) x PC(2,6)\",\"21\",-,\"never\",1,0\n"
          "4,\"(D/2) x PC(2,5)\",\"15\",-,\"never\",1,0\n"
          "5,\"(D/2) x PC(2,5) + D x SIM(2,1)\",\"16\",-,\"never\",1,0\n"
          "6,\"(D/2) x PC(2,4)\",\"10\",-,\"never\",1,0\n"
          "7,\"(D/2) x PC(2,4) + D x SIM(2,1)\",\"11\",-,\"never\",1,0\n"
          "8,\"(D/2) x PC(2,4) + (D/2) x SIM(2,2)\",\"13\",-,\"never\",1,0\n"
          "9,\"RM(2,k1)\",\"2^k1 - 2\",-,\"never\",1,0\n"
          "10,\"RM(2,k1) + SIM(2,k2)\",\"2^k1 + 2^k2 - 3\",-,\"never\",2,0\n"
          "11,\"RM(2,k1) + RM(2,k2)\",\"2^k1 + 2^k2 - 4\",a+2+k1,\"k1 = k2\",1,1\n"
          "12,\"RM(2,k1) + D x SIM(2,1) + D x SIM(2,1)\",\"2^k1\",-,\"never\",1,0\n"
          "13,\"SIM(2,k1)\",\"2^k1 - 1\",-,\"never\",2,0\n"
          "14,\"SIM(2,k1) + SIM(2,k2)\",\"2^k1 + 2^k2 - 2\",a+4,\"{k1,k2} = {2,1}\",3,1\n"
          "15,\"SIM(2,k1) + D x SIM(2,1) + D x SIM(2,1)\",\"2^k1 + 1\",-,\"never\",2,0\n"
          "16,\"(D/2) x SIM(2,2) + (D/2) x SIM(2,2) + D x SIM(2,1)\",\"7\",-,\"never\",1,0\n"
          "17,\"D x SIM(2,1) + D x SIM(2,1) + D x SIM(2,1) + D x SIM(2,1)\",\"4\",a+4,"
          "\"always\",1,1\n");
}

TEST_CASE("table1 text output for a = 2 lists the admissible instances") {
    const CliResult r = run_cli("table1 2");
    CHECK(r.status == 0);
    CHECK(contains(r.out,
                   "constituent table for Delta = 2^2 = 4, length budget 4*Delta = 16"));
    CHECK(contains(r.out, "  row 1: 0  A_D=0  k=5\n"));
    CHECK(contains(r.out, "  row 2: 2 x PC(2,7)  A_D=28  k=8\n"));
    CHECK(contains(r.out, "  row 11: 2 x RM(2,3) + 2 x RM(2,3)  A_D=12  k=7\n"));
    CHECK(contains(r.out, "  row 11: 1 x RM(2,4) + 1 x RM(2,4)  A_D=28  k=8\n"));
    CHECK(contains(r.out, "  row 14: 4 x SIM(2,1) + 2 x SIM(2,2)  A_D=4  k=6\n"));
    CHECK(contains(r.out,
                   "  row 17: 4 x SIM(2,1) + 4 x SIM(2,1) + 4 x SIM(2,1) + 4 x SIM(2,1)"
                   "  A_D=4  k=6\n"));
    // Exactly six admissible instances.
    std::size_t hits = 0, at = 0;
    while ((at = r.out.find("\n  row ", at)) != std::string::npos) {
        ++hits;
        ++at;
    }
    CHECK(hits == 6);
    CHECK(contains(r.out, "note: row 17 equals row 11 at k1 = k2 = 2"));
}

TEST_CASE("fourdelta report at a = 2, frozen") {
    const CliResult r = run_cli("fourdelta 2");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "largest dimension at length 16 and divisor 4: 8\n"
          "code 1: RM(2,4) + RM(2,4), [16,8]\n"
          "code 2: extension of 2 x PC(2,7) by a half-support word, [16,8]\n"
          "weight distribution: 0:1 4:28 8:198 12:28 16:1 (both codes)\n"
          "self-dual: yes / yes\n"
          "weight-4 span dimensions: 8 / 7\n"
          "valid extension words: 256\n"
          "extensions share one fingerprint: yes\n"
          "words outside 2 x PC(2,7) all of weight 8: yes\n");
}

TEST_CASE("fourdelta at a = 3 has a single maximal code") {
    const CliResult r = run_cli("fourdelta 3");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "largest dimension at length 32 and divisor 8: 10\n"
          "code 1: RM(2,5) + RM(2,5), [32,10]\n"
          "code 2: none (second type exists only at divisor 4)\n"
          "weight distribution: 0:1 8:60 16:902 24:60 32:1\n");
    CHECK(run_cli("fourdelta 1").status == 2);
}

TEST_CASE("resource caps exit with code 3") {
    const std::string f = write_tmp("cli_simplex.txt", kSimplex23);
    CHECK(run_cli("--cap 4 classify " + f + " --delta 4").status == 3);
    CHECK(run_cli("--cap 4 analyze " + f).status == 3);

    // 2^13 codewords exceed the quadratic pair-check cap of 2^12.
    const CliResult big = run_cli("construct PC 2 13 -o cli_pc13.txt");
    REQUIRE(big.status == 0);
    CHECK(run_cli("check-lemmas cli_pc13.txt --delta 2").status == 3);
}

TEST_CASE("usage problems exit with code 2") {
    CHECK(run_cli("--seedless table1 1").status == 2);
    CHECK(run_cli("").status == 2);                    // no subcommand
    CHECK(run_cli("table1").status == 2);              // missing argument
    CHECK(run_cli("table1 2 --format json").status == 2);
    CHECK(run_cli("classify cli_no_such_file.txt --delta 2").status == 2);
    CHECK(run_cli("classify - --delta 0 < /dev/null").status == 2);
}

TEST_CASE("construct and analyze compose through files") {
    CHECK(run_cli("construct RM 2 4 -o cli_rm24.txt").status == 0);
    const CliResult r = run_cli("analyze cli_rm24.txt");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "n: 8\n"));
    CHECK(contains(r.out, "k: 4\n"));
    CHECK(contains(r.out, "weight distribution: 0:1 4:14 8:1\n"));
    CHECK(contains(r.out, "max divisor: 4\n"));
    CHECK(contains(r.out, "pless moments: ok\n"));
}

} // TEST_SUITE
