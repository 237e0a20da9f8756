#pragma once

#include <stdexcept>
#include <string>

namespace divis {

// Error kinds surfaced by the library.  The CLI maps these onto exit codes,
// so every throw site picks the specific kind rather than a generic failure.
enum class errc {
    not_prime,
    field_too_large,
    division_by_zero,
    zero_vector,
    length_mismatch,
    enumeration_too_large,
    bad_positions,
    not_a_codeword,
    field_mismatch,
    non_integer_result,
    not_binary,
    not_full_length,
    bad_parameters,
    not_repetition,
    lemma_violation,
    instance_too_large,
    not_in_catalog,
    not_divisible,
    parse_error,
    bad_spec,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

} // namespace divis
