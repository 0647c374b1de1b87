#pragma once

#include <stdexcept>
#include <string>

namespace lamptree {

// Library-wide error conditions. Every throwing operation documents which of
// these it can raise; callers that need to branch should switch on code().
enum class errc {
  parse_error,
  symbol_not_in_alphabet,
  not_invertible,
  state_budget_exceeded,
  invalid_modulus,
  depth_mismatch,
  alphabet_mismatch,
  word_too_long,
  non_binary_alphabet,
  level_too_deep,
  budget_exceeded,
  modulus_mismatch,
  symbol_out_of_range,
  invalid_unit,
  invalid_parameter,
  not_squarefree,
  not_prime,
  not_prime_power,
  not_in_stab,
  not_an_automorphism,
  not_positive_automorphism,
  iteration_budget_exceeded,
  bad_divisor,
  not_coprime,
  internal_defect,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::parse_error: return "parse_error";
    case errc::symbol_not_in_alphabet: return "symbol_not_in_alphabet";
    case errc::not_invertible: return "not_invertible";
    case errc::state_budget_exceeded: return "state_budget_exceeded";
    case errc::invalid_modulus: return "invalid_modulus";
    case errc::depth_mismatch: return "depth_mismatch";
    case errc::alphabet_mismatch: return "alphabet_mismatch";
    case errc::word_too_long: return "word_too_long";
    case errc::non_binary_alphabet: return "non_binary_alphabet";
    case errc::level_too_deep: return "level_too_deep";
    case errc::budget_exceeded: return "budget_exceeded";
    case errc::modulus_mismatch: return "modulus_mismatch";
    case errc::symbol_out_of_range: return "symbol_out_of_range";
    case errc::invalid_unit: return "invalid_unit";
    case errc::invalid_parameter: return "invalid_parameter";
    case errc::not_squarefree: return "not_squarefree";
    case errc::not_prime: return "not_prime";
    case errc::not_prime_power: return "not_prime_power";
    case errc::not_in_stab: return "not_in_stab";
    case errc::not_an_automorphism: return "not_an_automorphism";
    case errc::not_positive_automorphism: return "not_positive_automorphism";
    case errc::iteration_budget_exceeded: return "iteration_budget_exceeded";
    case errc::bad_divisor: return "bad_divisor";
    case errc::not_coprime: return "not_coprime";
    case errc::internal_defect: return "internal_defect";
  }
  return "unknown";
}

}  // namespace lamptree
