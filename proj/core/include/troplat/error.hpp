#pragma once

#include <stdexcept>
#include <string>

namespace troplat {

// Domain error with a stable machine-readable code, surfaced verbatim by the
// CLI error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

namespace errc {
inline constexpr const char* parse_error = "parse_error";
inline constexpr const char* bad_document = "bad_document";
inline constexpr const char* singular_matrix = "singular_matrix";
inline constexpr const char* rank_deficient = "rank_deficient";
inline constexpr const char* hyperplane_violation = "hyperplane_violation";
inline constexpr const char* guard_exceeded = "guard_exceeded";
inline constexpr const char* not_member = "not_member";
inline constexpr const char* non_finite_point = "non_finite_point";
inline constexpr const char* retry_exhausted = "retry_exhausted";
inline constexpr const char* truncation_too_small = "truncation_too_small";
inline constexpr const char* bad_prime = "bad_prime";
inline constexpr const char* domain_error = "domain_error";
inline constexpr const char* io_error = "io_error";
}  // namespace errc

}  // namespace troplat
