#ifndef KKSPACE_ERRORS_HPP
#define KKSPACE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kkspace {

// Raised when a computation hits a numerically singular or undefined point
// (singular refractive index, vanishing transfer-matrix element, ...).
// The CLI maps this family to exit code 4.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string &msg) : std::runtime_error(msg) {}
};

// Raised by estimators that need more structure in their input than present
// (e.g. fewer than three reflectivity maxima in the scanned band).
struct InsufficientDataError : NumericalError {
    explicit InsufficientDataError(const std::string &msg) : NumericalError(msg) {}
};

} // namespace kkspace

#endif
