#pragma once

#include <stdexcept>
#include <string>

namespace cvf {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Inversion of a non-unit (zero rational, jet with zero body, singular matrix).
class NonInvertible : public Error {
public:
    explicit NonInvertible(const std::string& msg) : Error(msg) {}
};

// Interpolation grid contains a repeated node.
class DuplicateNode : public Error {
public:
    explicit DuplicateNode(const std::string& msg) : Error(msg) {}
};

// A function claimed to be invariant restricted to something asymmetric on the torus.
class NotSymmetric : public Error {
public:
    explicit NotSymmetric(const std::string& msg) : Error(msg) {}
};

// Interpolation residual nonzero: the stated degree bound was too small.
class DegreeOverflow : public Error {
public:
    explicit DegreeOverflow(const std::string& msg) : Error(msg) {}
};

// Borel reconstruction: values do not scale like b^n across the control slice.
class WeightMismatch : public Error {
public:
    explicit WeightMismatch(const std::string& msg) : Error(msg) {}
};

// Casimir candidate failed its eigenvalue self-validation.
class NormalizationError : public Error {
public:
    explicit NormalizationError(const std::string& msg) : Error(msg) {}
};

// An expression nested derivative operators deeper than the compiled jet tower.
class EvalDepthExceeded : public Error {
public:
    explicit EvalDepthExceeded(const std::string& msg) : Error(msg) {}
};

// CLI expression syntax error; carries the offset of the offending token.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& msg)
        : Error(msg), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace cvf
