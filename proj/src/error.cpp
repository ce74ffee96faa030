#include "lensfr/error.hpp"

namespace lensfr {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidModulus: return "invalid-modulus";
        case ErrorKind::NotAUnit: return "not-a-unit";
        case ErrorKind::OddModulusRequired: return "odd-modulus-required";
        case ErrorKind::UnsupportedEvenOrder: return "unsupported-even-order";
        case ErrorKind::NotALensSpace: return "not-a-lens-space";
        case ErrorKind::InconsistentInput: return "inconsistent-input";
        case ErrorKind::DegenerateModulus: return "degenerate-modulus";
        case ErrorKind::ModulusMismatch: return "modulus-mismatch";
        case ErrorKind::PrimeRequired: return "prime-required";
        case ErrorKind::CompositeRequired: return "composite-required";
        case ErrorKind::UnsupportedKind: return "unsupported-kind";
        case ErrorKind::UnsupportedSize: return "unsupported-size";
    }
    return "unknown";
}

}  // namespace lensfr
