#pragma once

#include <stdexcept>
#include <string>

namespace cobweb {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

/// An F-nomial quotient that is not an integer.
class InadmissibleSequence : public Error {
public:
    InadmissibleSequence(int n, int k)
        : Error("sequence is not cobweb-admissible: F-nomial (" + std::to_string(n) + "," +
                std::to_string(k) + ") is not an integer"),
          n_(n), k_(k)
    {
    }

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }

private:
    int n_;
    int k_;
};

class FormMismatch : public Error {
public:
    using Error::Error;
};

class InsufficientPrefix : public Error {
public:
    using Error::Error;
};

/// Polynomial basis that is not a triangular (degree = index), monic family.
class InvalidBasis : public Error {
public:
    using Error::Error;
};

class NotUnitriangular : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

} // namespace cobweb
