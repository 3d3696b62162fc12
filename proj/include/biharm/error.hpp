#pragma once

#include <stdexcept>
#include <string>

namespace biharm {

enum class ErrorCode {
    invalid_argument,
    ansatz_insufficient,
    non_delta_boundary,
    no_convergence,
    stencil_out_of_domain,
    parse_error,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace biharm
