#include "divis/matrix_io.hpp"

#include <fstream>
#include <sstream>

namespace divis {

char digit_char(felem v) { return v < 10 ? char('0' + v) : char('a' + v - 10); }

felem char_digit(char c) {
    if (c >= '0' && c <= '9') return felem(c - '0');
    if (c >= 'a' && c <= 'f') return felem(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return felem(c - 'A' + 10);
    fail(errc::parse_error, std::string("invalid digit character '") + c + "'");
}

namespace {

// Next line with comments ('#' to end of line) and surrounding blanks removed;
// false at end of input.
bool next_content_line(std::istream& in, std::string& line) {
    std::string raw;
    while (std::getline(in, raw)) {
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::size_t b = raw.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        std::size_t e = raw.find_last_not_of(" \t\r");
        line = raw.substr(b, e - b + 1);
        return true;
    }
    return false;
}

} // namespace

LinearCode parse_code(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) fail(errc::parse_error, "missing header line");
    std::istringstream hdr(line);
    long long q = -1, n = -1, k = -1;
    std::string extra;
    if (!(hdr >> q >> n >> k) || (hdr >> extra))
        fail(errc::parse_error, "header must be exactly 'q n k'");
    if (q < 2 || q > 16) fail(errc::parse_error, "field order out of range: " + std::to_string(q));
    if (n < 0 || k < 0 || k > n) fail(errc::parse_error, "invalid dimensions in header");

    const Field& F = field_of_order(int(q));
    std::vector<std::vector<felem>> rows;
    for (long long i = 0; i < k; ++i) {
        if (!next_content_line(in, line))
            fail(errc::parse_error, "expected " + std::to_string(k) + " rows, got " + std::to_string(i));
        if ((long long)line.size() != n)
            fail(errc::parse_error, "row " + std::to_string(i + 1) + " has " +
                                        std::to_string(line.size()) + " digits, expected " +
                                        std::to_string(n));
        std::vector<felem> row(n);
        for (long long j = 0; j < n; ++j) {
            row[j] = char_digit(line[j]);
            if (row[j] >= q)
                fail(errc::parse_error, "digit " + std::string(1, line[j]) + " not in GF(" +
                                            std::to_string(q) + ")");
        }
        rows.push_back(std::move(row));
    }
    if (next_content_line(in, line)) fail(errc::parse_error, "trailing content after matrix rows");

    LinearCode C = LinearCode::from_rows(F, int(n), rows);
    if (C.k() != k)
        fail(errc::parse_error, "rows have rank " + std::to_string(C.k()) + ", header claims k=" +
                                    std::to_string(k));
    return C;
}

LinearCode parse_code_string(const std::string& text) {
    std::istringstream in(text);
    return parse_code(in);
}

LinearCode read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::parse_error, "cannot open file: " + path);
    return parse_code(in);
}

void write_code(std::ostream& out, const LinearCode& C) {
    out << C.q() << ' ' << C.n() << ' ' << C.k() << '\n';
    for (const auto& row : C.rows()) {
        std::string line(C.n(), '0');
        for (int j = 0; j < C.n(); ++j) line[j] = digit_char(row[j]);
        out << line << '\n';
    }
}

std::string code_to_string(const LinearCode& C) {
    std::ostringstream out;
    write_code(out, C);
    return out.str();
}

} // namespace divis
