#pragma once

#include <stdexcept>
#include <string>

namespace ktb {

/// Failure categories shared by the C++ core and the C API.
enum class Errc {
    invalid_argument,
    parse_error,
    out_of_range,
    width_mismatch,
    tier_exceeded,
    not_applicable,
    budget_exceeded,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace ktb
