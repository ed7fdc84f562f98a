#pragma once

#include <stdexcept>
#include <string>

namespace sgpq {

enum class errc {
  empty_generators,
  non_coprime_generators,
  negative_input,
  ap_not_member,
  zero_denominator,
  full_monoid,
  limit_exceeded,
  bad_residue_sum,
  out_of_range,
  not_a_generating_set,
  bad_parameter,
  overflow,
  even_frobenius,
  bad_rho,
  bad_input,
  usage,
};

/// Domain error carrying a machine-checkable error code.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace sgpq
