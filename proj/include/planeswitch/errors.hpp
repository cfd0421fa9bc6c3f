#pragma once

#include <stdexcept>
#include <string>

namespace planeswitch {

/// Raised when an operation would exceed the documented enumeration or
/// construction caps. Carries the sizes that triggered the refusal in what().
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when a self-check fails (certificate replay mismatch, axiom
/// violation in a structure we built ourselves, ...).
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace planeswitch
