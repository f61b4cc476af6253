#pragma once

#include <stdexcept>
#include <string>

namespace connmass {

enum class ErrorCode {
    InvalidArgument,   // bad parameter value, mismatched handles
    OutOfDomain,       // point not inside the domain
    UnsupportedDomain, // operation undefined for this domain kind (e.g. wedge volume)
    NumericalFailure,  // quadrature did not converge
    IoFailure,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string msg)
        : std::runtime_error(std::move(msg)), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Thrown when adaptive quadrature fails to converge; carries the best
// estimate obtained so far.
class NumericalError : public Error {
public:
    NumericalError(std::string msg, double partial, double err_estimate)
        : Error(ErrorCode::NumericalFailure, std::move(msg)),
          partial_(partial), err_(err_estimate) {}
    double partial_value() const noexcept { return partial_; }
    double error_estimate() const noexcept { return err_; }

private:
    double partial_;
    double err_;
};

inline void require(bool cond, ErrorCode code, const std::string& msg) {
    if (!cond) throw Error(code, msg);
}

} // namespace connmass
