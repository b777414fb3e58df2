#pragma once

#include <stdexcept>
#include <string>

namespace supercurve {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroPolynomialError : public Error {
public:
    ZeroPolynomialError() : Error("zero input: polynomial is identically zero") {}
};

class DegreeTooSmallError : public Error {
public:
    explicit DegreeTooSmallError(const std::string& what = "degree too small") : Error(what) {}
};

class DegenerateTransformError : public Error {
public:
    DegenerateTransformError() : Error("degenerate transformation: singular matrix") {}
};

class ReducibleModelError : public Error {
public:
    explicit ReducibleModelError(long witness)
        : Error("reducible model: every multiplicity is divisible by " + std::to_string(witness)),
          witness_(witness) {}
    long witness() const { return witness_; }

private:
    long witness_;
};

class InadmissibleSignatureError : public Error {
public:
    explicit InadmissibleSignatureError(const std::string& what) : Error("inadmissible signature: " + what) {}
};

class RigidStratumError : public Error {
public:
    RigidStratumError() : Error("rigid or empty stratum: 3g'-3+s is negative") {}
};

class EmptySearchSpaceError : public Error {
public:
    EmptySearchSpaceError() : Error("empty search space: no strictly positive value in the box") {}
};

class DatasetError : public Error {
public:
    using Error::Error;
};

class StructuralError : public Error {
public:
    using Error::Error;
};

class ParameterError : public Error {
public:
    using Error::Error;
};

class DegenerateInstantiationError : public Error {
public:
    explicit DegenerateInstantiationError(const std::string& what)
        : Error("degenerate instantiation: " + what) {}
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class OutsideTableError : public Error {
public:
    explicit OutsideTableError(long n)
        : Error("outside genus-4 superelliptic table: n = " + std::to_string(n)) {}
};

class ParseError : public Error {
public:
    using Error::Error;
};

class InvariantViolation : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    IoError(const std::string& what, std::size_t index)
        : Error(what + " (at record " + std::to_string(index) + ")"), index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

}  // namespace supercurve
