#pragma once

#include <stdexcept>
#include <string>

namespace carleson {

enum class Errc {
  duplicate_atom_id,
  nonpositive_weight,
  zero_measure_set,
  space_mismatch,
  unknown_atom_id,
  duplicate_set_id,
  unknown_set_id,
  empty_collection,
  selection_impossible,
  no_qualifying_set,
  bucket_limit_exceeded,
  bad_order,
  gamma_out_of_range,
  too_large,
  grid_too_large,
  sum_exceeds_one,
  support_violation,
  no_candidates,
  bad_parameter,
  parse,
  validation,
  io,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace carleson
