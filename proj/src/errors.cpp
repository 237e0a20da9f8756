#include "divis/errors.hpp"

namespace divis {

const char* errc_name(errc c) {
    switch (c) {
        case errc::not_prime: return "NotPrime";
        case errc::field_too_large: return "FieldTooLarge";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::zero_vector: return "ZeroVector";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::enumeration_too_large: return "EnumerationTooLarge";
        case errc::bad_positions: return "BadPositions";
        case errc::not_a_codeword: return "NotACodeword";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::non_integer_result: return "NonIntegerResult";
        case errc::not_binary: return "NotBinary";
        case errc::not_full_length: return "NotFullLength";
        case errc::bad_parameters: return "BadParameters";
        case errc::not_repetition: return "NotRepetition";
        case errc::lemma_violation: return "LemmaViolation";
        case errc::instance_too_large: return "InstanceTooLarge";
        case errc::not_in_catalog: return "NotInCatalog";
        case errc::not_divisible: return "NotDivisible";
        case errc::parse_error: return "ParseError";
        case errc::bad_spec: return "BadSpec";
    }
    return "UnknownError";
}

} // namespace divis
