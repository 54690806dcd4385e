#pragma once

#include <stdexcept>
#include <string>

namespace ogc {

enum class errc {
    non_prime_characteristic,
    reducible_modulus,
    unsupported_size,
    division_by_zero,
    wrong_characteristic,
    dimension_mismatch,
    zero_vector,
    non_singular_point,
    vertex_not_subspace,
    bad_grade,
    grade_mismatch,
    inconsistent_recursion,
    form_in_annihilator,
    class_not_found,
    budget_exceeded,
    column_misalignment,
    parse_error,
    internal_inconsistency,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace ogc
