#ifndef PETINDUCE_ERRORS_HPP
#define PETINDUCE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace petinduce {

// Input could not be parsed (field-element strings, JSON payloads, flags).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// A geometric invariant was violated (bad partition, non-bijective PET, ...).
struct GeometryError : std::runtime_error {
    explicit GeometryError(const std::string& msg) : std::runtime_error(msg) {}
};

// Induction iteration cap reached before the window absorbed every orbit.
struct NonTerminating : std::runtime_error {
    explicit NonTerminating(const std::string& msg) : std::runtime_error(msg) {}
};

// A point fell on an atom boundary where the map is undefined.
struct OnBoundary : std::runtime_error {
    explicit OnBoundary(const std::string& msg) : std::runtime_error(msg) {}
};

struct DomainMismatch : GeometryError {
    explicit DomainMismatch(const std::string& msg) : GeometryError(msg) {}
};

struct ZeroScale : GeometryError {
    explicit ZeroScale(const std::string& msg) : GeometryError(msg) {}
};

struct EmptyWindow : GeometryError {
    explicit EmptyWindow(const std::string& msg) : GeometryError(msg) {}
};

struct ShapeMismatch : std::runtime_error {
    explicit ShapeMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnknownLetter : std::runtime_error {
    explicit UnknownLetter(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotAPermutation : std::runtime_error {
    explicit NotAPermutation(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotEndomorphism : std::runtime_error {
    explicit NotEndomorphism(const std::string& msg) : std::runtime_error(msg) {}
};

struct RationalAlpha : std::runtime_error {
    explicit RationalAlpha(const std::string& msg) : std::runtime_error(msg) {}
};

struct SelfInductionFailed : std::runtime_error {
    explicit SelfInductionFailed(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace petinduce

#endif  // PETINDUCE_ERRORS_HPP
