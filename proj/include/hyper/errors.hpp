#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyper {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input: inconsistent dimensions, bad indices, unknown labels.
/// Distinct from an input that is well-formed but violates an axiom.
class StructuralError : public Error {
    using Error::Error;
};

/// A hypergroup document that does not match the file schema.
class SchemaError : public StructuralError {
public:
    SchemaError(std::string path, const std::string& message)
        : StructuralError(path + ": " + message), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

class ParameterError : public Error {
    using Error::Error;
};

/// Cayley table that is not a group; carries a witness (x, y, z) when one
/// exists, e.g. a triple for which (xy)z != x(yz).
class GroupAxiomError : public Error {
public:
    GroupAxiomError(const std::string& message, std::array<std::size_t, 3> witness)
        : Error(message), witness_(witness) {}

    const std::array<std::size_t, 3>& witness() const noexcept { return witness_; }

private:
    std::array<std::size_t, 3> witness_;
};

class HaarError : public Error {
public:
    enum class Kind { NotUnimodularOrInvalid, Ambiguous };

    HaarError(Kind kind, const std::string& message) : Error(message), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

class NotSubhypergroupError : public Error {
    using Error::Error;
};

class NotGelfandPairError : public Error {
    using Error::Error;
};

class DegenerateSpectrumError : public Error {
    using Error::Error;
};

/// An internal invariant failed: a result the algorithm guarantees did not
/// verify. Indicates a bug or an input the construction does not cover.
class ConsistencyError : public Error {
    using Error::Error;
};

class BiInvarianceError : public Error {
    using Error::Error;
};

}  // namespace hyper
