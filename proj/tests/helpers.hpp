#pragma once

// Shared test utilities: literal generator matrices, deterministic random
// codes, and column shuffles.  All randomness is seeded mt19937, so every
// test run sees identical instances.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "divis/code.hpp"
#include "divis/errors.hpp"
#include "divis/field.hpp"
#include "divis/matrix_io.hpp"

namespace divis::testing {

inline std::vector<std::vector<felem>> rows_of(const std::vector<std::string>& lines) {
    std::vector<std::vector<felem>> rows;
    for (const std::string& s : lines) {
        std::vector<felem> row;
        for (char c : s) row.push_back(char_digit(c));
        rows.push_back(row);
    }
    return rows;
}

inline LinearCode code_of(int q, const std::vector<std::string>& lines) {
    const Field& F = field_of_order(q);
    const int n = lines.empty() ? 0 : int(lines[0].size());
    return LinearCode::from_rows(F, n, rows_of(lines));
}

// Same row space, columns rearranged by perm: new column j = old perm[j].
inline LinearCode permute_columns(const LinearCode& C, const std::vector<int>& perm) {
    std::vector<std::vector<felem>> rows;
    for (const std::vector<felem>& r : C.rows()) {
        std::vector<felem> s(r.size());
        for (std::size_t j = 0; j < r.size(); ++j) s[j] = r[std::size_t(perm[j])];
        rows.push_back(s);
    }
    return LinearCode::from_rows(C.field(), C.n(), rows);
}

inline LinearCode shuffle_columns(const LinearCode& C, std::mt19937& rng) {
    std::vector<int> perm(std::size_t(C.n()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return permute_columns(C, perm);
}

// Uniform random generator rows; the resulting dimension is whatever the
// row space has (at most k_rows).
inline LinearCode random_code(int q, int n, int k_rows, std::mt19937& rng) {
    const Field& F = field_of_order(q);
    std::uniform_int_distribution<int> d(0, q - 1);
    std::vector<std::vector<felem>> rows(static_cast<std::size_t>(k_rows),
                                         std::vector<felem>(static_cast<std::size_t>(n)));
    for (auto& r : rows)
        for (auto& x : r) x = felem(d(rng));
    return LinearCode::from_rows(F, n, rows);
}

// Exception kind matcher: run f, require a divis::error of the given kind.
template <typename F>
inline bool throws_kind(errc kind, F&& f) {
    try {
        f();
    } catch (const error& e) {
        return e.code() == kind;
    } catch (...) {
        return false;
    }
    return false;
}

} // namespace divis::testing
