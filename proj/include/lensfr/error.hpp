#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lensfr {

enum class ErrorKind {
    InvalidModulus,
    NotAUnit,
    OddModulusRequired,
    UnsupportedEvenOrder,
    NotALensSpace,
    InconsistentInput,
    DegenerateModulus,
    ModulusMismatch,
    PrimeRequired,
    CompositeRequired,
    UnsupportedKind,
    UnsupportedSize,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Thrown for every precondition violation in the library. The kind is
/// stable and is what tests and the CLI dispatch on.
class Error : public std::invalid_argument {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::invalid_argument(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace lensfr
