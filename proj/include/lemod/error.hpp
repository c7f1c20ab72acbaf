#pragma once

#include <stdexcept>
#include <string>

namespace lemod {

// Error categories shared across the library.
enum class Errc {
  dimension_error,
  link_error,
  negative_le_number,
  model_mismatch,
  unsupported_symbolic,
  constraint_violation,
  parse_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::dimension_error: return "DIMENSION_ERROR";
    case Errc::link_error: return "LINK_ERROR";
    case Errc::negative_le_number: return "NEGATIVE_LE_NUMBER";
    case Errc::model_mismatch: return "MODEL_MISMATCH";
    case Errc::unsupported_symbolic: return "UNSUPPORTED_SYMBOLIC";
    case Errc::constraint_violation: return "CONSTRAINT_VIOLATION";
    case Errc::parse_error: return "PARSE_ERROR";
  }
  return "UNKNOWN_ERROR";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace lemod
