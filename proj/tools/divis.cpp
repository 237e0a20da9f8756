// Command-line front end: construction, analysis, and classification of
// divisible linear codes, plus the length-4*Delta case table and extremal
// codes.  Fully deterministic; exit codes 0 = checks hold, 1 = a verified
// hypothesis fails on the input, 2 = usage or parse problem, 3 = an
// enumeration or search cap was hit.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "divis/catalog.hpp"
#include "divis/classify.hpp"
#include "divis/code.hpp"
#include "divis/errors.hpp"
#include "divis/field.hpp"
#include "divis/fourdelta.hpp"
#include "divis/matrix_io.hpp"
#include "divis/spectrum.hpp"
#include "divis/structure.hpp"

namespace {

using namespace divis;

int exit_code_for(errc c) {
    switch (c) {
    case errc::not_divisible:
    case errc::lemma_violation:
    case errc::not_in_catalog:
    case errc::non_integer_result:
        return 1; // input violates the checked hypothesis
    case errc::enumeration_too_large:
    case errc::instance_too_large:
    case errc::field_too_large:
        return 3; // resource cap
    default:
        return 2; // usage, parameters, parsing
    }
}

LinearCode load(const std::string& path) {
    if (path == "-") return parse_code(std::cin);
    return read_code_file(path);
}

std::string wd_string(const WeightDistribution& wd) {
    std::ostringstream out;
    bool first = true;
    for (int w = 0; w <= wd.n; ++w) {
        if (wd.counts[std::size_t(w)] == 0) continue;
        if (!first) out << ' ';
        out << w << ':' << wd.counts[std::size_t(w)].get_str();
        first = false;
    }
    if (first) out << "empty";
    return out.str();
}

std::string int_list(const std::vector<int>& xs) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out << ',';
        out << xs[i];
    }
    out << ']';
    return out.str();
}

std::string csv_quote(const std::string& s) { return '"' + s + '"'; }

// ---- construct ----------------------------------------------------------

Family family_from(const std::string& name) {
    if (name == "SIM") return Family::simplex;
    if (name == "RM") return Family::reed_muller;
    if (name == "PC") return Family::parity_check;
    fail(errc::bad_spec, "unknown family: " + name);
}

int run_construct(const std::string& fam, int q, int k, int m, const std::string& out_path) {
    const FamilyTag tag{family_from(fam), q, k, m};
    const LinearCode C = construct(tag);
    if (out_path.empty()) {
        write_code(std::cout, C);
    } else {
        std::ofstream out(out_path);
        if (!out) fail(errc::parse_error, "cannot open output file: " + out_path);
        write_code(out, C);
    }
    return 0;
}

// ---- analyze ------------------------------------------------------------

int run_analyze(const std::string& path, const std::string& format, std::uint64_t cap) {
    const LinearCode C = load(path);
    const bool csv = format == "csv";

    const WeightDistribution wd = weight_distribution_auto(C, cap);
    const WeightDistribution dual_wd = macwilliams_transform(wd, C.q());
    const Decomposition dec = decompose(C);

    int constant = 0; // nonzero value: all nonzero words share this weight
    {
        std::vector<int> weights;
        for (int w = 1; w <= wd.n; ++w)
            if (wd.counts[std::size_t(w)] != 0) weights.push_back(w);
        if (weights.size() == 1) constant = weights[0];
    }

    const char* sep = csv ? "," : ": ";
    auto line = [&](const std::string& key, const std::string& value) {
        std::cout << key << sep << value << '\n';
    };

    line("q", std::to_string(C.q()));
    line("n", std::to_string(C.n()));
    line("k", std::to_string(C.k()));
    line("n_eff", std::to_string(effective_length(C)));
    line("weight distribution", csv ? csv_quote(wd_string(wd)) : wd_string(wd));
    line("dual weight distribution", csv ? csv_quote(wd_string(dual_wd)) : wd_string(dual_wd));
    line("max divisor", std::to_string(max_divisor(wd)));
    line("projective", is_projective(C) ? "yes" : "no");
    if (constant != 0 && !csv) std::cout << "constant weight " << constant << '\n';
    if (constant != 0 && csv) line("constant weight", std::to_string(constant));
    line("zero positions", int_list(dec.zero_positions));
    if (dec.blocks.size() >= 2) {
        if (csv)
            line("blocks", std::to_string(dec.blocks.size()));
        else
            std::cout << "decomposable: " << dec.blocks.size() << " blocks\n";
    } else {
        if (csv)
            line("blocks", "indecomposable");
        else
            std::cout << "indecomposable\n";
    }
    if (C.q() == 2 && C.n() >= 1 && is_full_length(C)) {
        const PowerMoments pm = pless_power_moments(wd, 2);
        line("pless moments", pm.all_ok() ? "ok" : "violated");
        if (!pm.all_ok()) return 1;
    } else {
        line("pless moments", C.q() != 2 ? "skipped (not binary)" : "skipped (not full-length)");
    }
    return 0;
}

// ---- classify -----------------------------------------------------------

int run_classify(const std::string& path, int delta, std::uint64_t cap) {
    const LinearCode C = load(path);
    const Certificate cert = classify(C, delta, cap);
    std::cout << certificate_to_string(cert);
    return cert.leftover_dim == 0 ? 0 : 1;
}

// ---- check-lemmas -------------------------------------------------------

int run_check_lemmas(const std::string& path, int delta, std::uint64_t cap) {
    const LinearCode C = load(path);
    if (delta < 1) fail(errc::bad_parameters, "divisor must be >= 1");

    // Quadratic in the codeword count, so a tighter cap than plain
    // enumeration.
    const std::uint64_t limit = std::min<std::uint64_t>(cap, 1u << 12);
    if (enumeration_size(C) > limit)
        fail(errc::instance_too_large, "codeword count exceeds the pair-check cap");

    std::vector<std::vector<felem>> min_words;
    std::vector<std::vector<felem>> nonzero;
    for_each_codeword(C, [&](const std::vector<felem>& w, int wt) {
        if (wt == delta) min_words.push_back(w);
        if (wt > 0) nonzero.push_back(w);
    });

    std::map<IntersectionCase, long long> cases;
    for (std::size_t i = 0; i < min_words.size(); ++i)
        for (std::size_t j = i + 1; j < min_words.size(); ++j) {
            const IntersectionReport rep =
                intersection_report(C.field(), min_words[i], min_words[j], delta);
            ++cases[rep.kind];
        }

    const long long pair_count =
        (long long)min_words.size() * ((long long)min_words.size() - 1) / 2;
    std::cout << "words of weight " << delta << ": " << min_words.size() << '\n';
    std::cout << "pairs: " << pair_count << '\n';
    std::cout << "case equivalent: " << cases[IntersectionCase::equivalent] << '\n';
    std::cout << "case proper: " << cases[IntersectionCase::proper] << '\n';
    std::cout << "case disjoint: " << cases[IntersectionCase::disjoint] << '\n';

    // Restriction to the complement of any codeword support stays divisible
    // by delta / gcd(q, delta).
    const int res_div = delta / std::gcd(C.q(), delta);
    long long checked = 0;
    for (const std::vector<felem>& w : nonzero) {
        const LinearCode R = residual(C, w);
        if (!is_divisible(weight_distribution(R, cap), res_div)) {
            std::cout << "residual divisibility by " << res_div << " fails at a weight-"
                      << weight(w) << " word\n";
            return 1;
        }
        ++checked;
    }
    std::cout << "residuals checked: " << checked << " (divisor " << res_div << ")\n";
    std::cout << "all checks hold\n";
    return 0;
}

// ---- table1 -------------------------------------------------------------

int run_table1(int a, const std::string& format) {
    const std::vector<QuadrupleRow> rows = quadruple_table(a);
    if (format == "csv") {
        std::cout << "row,decomposition,A_D,k,condition,instances,admissible\n";
        for (const QuadrupleRow& r : rows) {
            long long adm = 0;
            for (const QuadrupleInstance& inst : r.instances) adm += inst.admissible ? 1 : 0;
            std::cout << r.index << ',' << csv_quote(r.pattern) << ','
                      << csv_quote(r.a_delta_expr) << ',' << r.k_expr << ','
                      << csv_quote(r.condition) << ',' << r.instances.size() << ',' << adm
                      << '\n';
        }
        return 0;
    }

    std::cout << "constituent table for Delta = 2^" << a << " = " << (1 << a)
              << ", length budget 4*Delta = " << (4 << a) << " (D = Delta)\n\n";
    auto pad = [](const std::string& s, std::size_t w) {
        return s + std::string(s.size() + 2 > w ? 2 : w - s.size(), ' ');
    };
    std::size_t wpat = 13, wad = 3, wk = 1;
    for (const QuadrupleRow& r : rows) {
        wpat = std::max(wpat, r.pattern.size() + 2);
        wad = std::max(wad, r.a_delta_expr.size() + 2);
        wk = std::max(wk, r.k_expr.size() + 2);
    }
    std::cout << "row  " << pad("decomposition", wpat) << pad("A_D", wad) << pad("k", wk)
              << "condition\n";
    for (const QuadrupleRow& r : rows) {
        std::string idx = std::to_string(r.index);
        std::cout << std::string(3 - idx.size(), ' ') << idx << "  " << pad(r.pattern, wpat)
                  << pad(r.a_delta_expr, wad) << pad(r.k_expr, wk) << r.condition << '\n';
    }
    std::cout << "\nadmissible instances (A_D + 4 a power of 2):\n";
    for (const QuadrupleRow& r : rows)
        for (const QuadrupleInstance& inst : r.instances) {
            if (!inst.admissible) continue;
            std::cout << "  row " << r.index << ": ";
            if (inst.constituents.empty()) std::cout << "0";
            for (std::size_t i = 0; i < inst.constituents.size(); ++i) {
                if (i) std::cout << " + ";
                std::cout << inst.constituents[i].to_string();
            }
            std::cout << "  A_D=" << inst.a_delta << "  k=" << inst.dim << '\n';
        }
    std::cout << "\nnote: row 17 equals row 11 at k1 = k2 = 2 via RM(2,2) = SIM(2,1) + SIM(2,1);"
              << " the rows stay separate because RM(2,2) is decomposable.\n";
    return 0;
}

// ---- fourdelta ----------------------------------------------------------

int run_fourdelta(int a) {
    const MaximalCodes mc = build_maximal_codes(a);
    const int delta = 1 << a;
    std::cout << "largest dimension at length " << 4 * delta << " and divisor " << delta << ": "
              << 2 * a + 4 << "\n";
    std::cout << "code 1: RM(2," << a + 2 << ") + RM(2," << a + 2 << "), [" << mc.rm_pair.n()
              << "," << mc.rm_pair.k() << "]\n";
    if (!mc.pc_extension) {
        std::cout << "code 2: none (second type exists only at divisor 4)\n";
        std::cout << "weight distribution: " << wd_string(weight_distribution(mc.rm_pair))
                  << '\n';
        return 0;
    }

    std::cout << "code 2: extension of 2 x PC(2,7) by a half-support word, ["
              << mc.pc_extension->n() << "," << mc.pc_extension->k() << "]\n";
    const DistinguishReport rep = distinguish_maximal(a);
    std::cout << "weight distribution: " << wd_string(rep.wd)
              << (rep.same_wd ? " (both codes)" : " (MISMATCH)") << '\n';
    std::cout << "self-dual: " << (rep.rm_self_dual ? "yes" : "no") << " / "
              << (rep.pc_self_dual ? "yes" : "no") << '\n';
    std::cout << "weight-" << delta << " span dimensions: " << rep.rm_span_dim << " / "
              << rep.pc_span_dim << '\n';
    std::cout << "valid extension words: " << rep.extension_count << '\n';
    std::cout << "extensions share one fingerprint: "
              << (rep.extensions_one_fingerprint ? "yes" : "no") << '\n';
    std::cout << "words outside 2 x PC(2,7) all of weight " << 2 * delta << ": "
              << (rep.complement_weight_uniform ? "yes" : "no") << '\n';

    const bool ok = rep.same_wd && rep.rm_self_dual && rep.pc_self_dual &&
                    rep.rm_span_dim == 8 && rep.pc_span_dim == 7 && rep.extension_count == 256 &&
                    rep.extensions_one_fingerprint && rep.complement_weight_uniform;
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for divisible linear codes over small fields"};
    app.require_subcommand(1);

    std::uint64_t cap = kDefaultEnumCap;
    app.add_option("--cap", cap, "codeword enumeration cap (default 2^24)");

    // construct
    auto* c_construct = app.add_subcommand("construct", "write a family generator matrix");
    std::string fam;
    int cq = 0, ck = 0, cm = 1;
    std::string out_path;
    c_construct->add_option("family", fam, "SIM, RM, or PC")
        ->required()
        ->check(CLI::IsMember({"SIM", "RM", "PC"}));
    c_construct->add_option("q", cq, "field order")->required();
    c_construct->add_option("k", ck, "dimension")->required();
    c_construct->add_option("m", cm, "repetition multiplier (default 1)");
    c_construct->add_option("-o,--output", out_path, "output file (default stdout)");

    // analyze
    auto* c_analyze = app.add_subcommand("analyze", "report invariants of a code");
    std::string a_path, a_format = "text";
    c_analyze->add_option("file", a_path, "generator matrix file, - for stdin")->required();
    c_analyze->add_option("--format", a_format, "text or csv")
        ->check(CLI::IsMember({"text", "csv"}));

    // classify
    auto* c_classify = app.add_subcommand("classify", "decompose into catalog constituents");
    std::string k_path;
    int k_delta = 0;
    c_classify->add_option("file", k_path, "generator matrix file, - for stdin")->required();
    c_classify->add_option("--delta", k_delta, "divisor")->required();

    // check-lemmas
    auto* c_lemmas =
        app.add_subcommand("check-lemmas", "verify support-intersection and residual laws");
    std::string l_path;
    int l_delta = 0;
    c_lemmas->add_option("file", l_path, "generator matrix file, - for stdin")->required();
    c_lemmas->add_option("--delta", l_delta, "divisor")->required();

    // table1
    auto* c_table = app.add_subcommand("table1", "constituent table at length 4*Delta");
    int t_a = 0;
    std::string t_format = "text";
    c_table->add_option("a", t_a, "divisor exponent, Delta = 2^a")->required();
    c_table->add_option("--format", t_format, "text or csv")
        ->check(CLI::IsMember({"text", "csv"}));

    // fourdelta
    auto* c_four = app.add_subcommand("fourdelta", "extremal codes at length 4*Delta");
    int f_a = 0;
    c_four->add_option("a", f_a, "divisor exponent, Delta = 2^a")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(c_construct)) return run_construct(fam, cq, ck, cm, out_path);
        if (app.got_subcommand(c_analyze)) return run_analyze(a_path, a_format, cap);
        if (app.got_subcommand(c_classify)) return run_classify(k_path, k_delta, cap);
        if (app.got_subcommand(c_lemmas)) return run_check_lemmas(l_path, l_delta, cap);
        if (app.got_subcommand(c_table)) return run_table1(t_a, t_format);
        if (app.got_subcommand(c_four)) return run_fourdelta(f_a);
    } catch (const error& e) {
        std::cerr << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
