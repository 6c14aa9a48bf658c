#pragma once

#include <stdexcept>
#include <string>

namespace rotorcrypt {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Henon orbit left the attractor basin.
class DivergenceError : public Error {
public:
    using Error::Error;
};

// Nyquist band too narrow to place the filterbank.
class DegenerateBandError : public Error {
public:
    using Error::Error;
};

// Bad PLP coefficient selection (duplicate or out-of-range index).
class SelectionError : public Error {
public:
    using Error::Error;
};

class SecretTooLargeError : public Error {
public:
    using Error::Error;
};

class InsufficientSharesError : public Error {
public:
    using Error::Error;
};

class MismatchedParamsError : public Error {
public:
    using Error::Error;
};

class NonInvertibleError : public Error {
public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

class EmptyImageError : public Error {
public:
    using Error::Error;
};

// File / format problems (WAV, PGM, key and share files).
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace rotorcrypt
