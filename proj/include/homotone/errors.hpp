#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace homotone {

// Root of all domain errors. `kind()` is the stable machine-readable name;
// what() is "<kind>: <detail>".
class Error : public std::runtime_error {
public:
    Error(std::string_view kind, const std::string& detail)
        : std::runtime_error(std::string(kind) + ": " + detail), kind_(kind) {}

    std::string_view kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// File-level I/O failures (open/read/write). CLI exit code 2.
class IoError : public Error {
public:
    explicit IoError(const std::string& detail) : Error("IoError", detail) {}
};

// Malformed image data. CLI exit code 2.
class FormatError : public Error {
protected:
    using Error::Error;
};

class BadMagic final : public FormatError {
public:
    explicit BadMagic(const std::string& d) : FormatError("BadMagic", d) {}
};

class HeaderParse final : public FormatError {
public:
    explicit HeaderParse(const std::string& d) : FormatError("HeaderParse", d) {}
};

class Truncated final : public FormatError {
public:
    explicit Truncated(const std::string& d) : FormatError("Truncated", d) {}
};

class SampleOutOfRange final : public FormatError {
public:
    explicit SampleOutOfRange(const std::string& d) : FormatError("SampleOutOfRange", d) {}
};

class MaxvalOutOfRange final : public FormatError {
public:
    explicit MaxvalOutOfRange(const std::string& d) : FormatError("MaxvalOutOfRange", d) {}
};

// Degenerate inputs or unfittable statistics. CLI exit code 3.
class MathError : public Error {
protected:
    using Error::Error;
};

class ConstantImage final : public MathError {
public:
    explicit ConstantImage(const std::string& d) : MathError("ConstantImage", d) {}
};

class DegenerateNodes final : public MathError {
public:
    explicit DegenerateNodes(const std::string& d) : MathError("DegenerateNodes", d) {}
};

class EmptyPartition final : public MathError {
public:
    explicit EmptyPartition(const std::string& d) : MathError("EmptyPartition", d) {}
};

class GammaUndefined final : public MathError {
public:
    explicit GammaUndefined(const std::string& d) : MathError("GammaUndefined", d) {}
};

class Overflow final : public MathError {
public:
    explicit Overflow(const std::string& d) : MathError("Overflow", d) {}
};

} // namespace homotone
