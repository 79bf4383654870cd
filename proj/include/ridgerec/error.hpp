#pragma once

#include <stdexcept>
#include <string>

namespace ridgerec {

// All recoverable failures carry a stable machine-readable code plus human text.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

namespace errc {
inline constexpr const char* invalid_input = "invalid-input";
inline constexpr const char* dimension_mismatch = "dimension-mismatch";
inline constexpr const char* ill_conditioned_covariance = "ill-conditioned-covariance";
inline constexpr const char* insufficient_samples = "insufficient-samples";
inline constexpr const char* slice_too_small = "slice-too-small";
inline constexpr const char* bad_slicing = "bad-slicing";
inline constexpr const char* bad_config = "bad-config";
inline constexpr const char* io_error = "io-error";
inline constexpr const char* parse_error = "parse-error";
}  // namespace errc

}  // namespace ridgerec
