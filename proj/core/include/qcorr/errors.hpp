#ifndef QCORR_ERRORS_HPP
#define QCORR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qcorr {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NonHermitian : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

class ParameterOutOfRange : public Error {
public:
    using Error::Error;
};

class NegativeParameter : public Error {
public:
    using Error::Error;
};

class NegativeEigenvalue : public Error {
public:
    using Error::Error;
};

class TraceNotOne : public Error {
public:
    using Error::Error;
};

class NotPositive : public Error {
public:
    using Error::Error;
};

class CompletenessViolation : public Error {
public:
    using Error::Error;
};

} // namespace qcorr

#endif
