#pragma once

#include <stdexcept>
#include <string>

namespace gcoh {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad document, unknown id, degree outside the materialized range.
class InputError : public Error {
public:
    using Error::Error;
};

enum class MathErrorKind {
    NotClosed,
    NotIntegral,
    OmegaNotExact,
    NeedsRefinement,
    InvalidCocycle,
    CurvatureMismatch,
    NotARefinement,
    NotASection,
    NotFlat,
    Unsolvable,
};

std::string to_string(MathErrorKind kind);

/// A mathematical precondition failed. `detail` carries the structured obstruction as JSON text.
class MathError : public Error {
public:
    MathError(MathErrorKind kind, const std::string& message, std::string detail = "{}")
        : Error(to_string(kind) + ": " + message), kind_(kind), detail_(std::move(detail)) {}

    MathErrorKind kind() const { return kind_; }
    const std::string& detail() const { return detail_; }

private:
    MathErrorKind kind_;
    std::string detail_;
};

class SizeGuardExceeded : public Error {
public:
    SizeGuardExceeded(std::size_t cells, std::size_t cap)
        : Error("size guard exceeded: " + std::to_string(cells) + " cells > cap " + std::to_string(cap)),
          cells_(cells), cap_(cap) {}

    std::size_t cells() const { return cells_; }
    std::size_t cap() const { return cap_; }

private:
    std::size_t cells_;
    std::size_t cap_;
};

inline std::string to_string(MathErrorKind kind) {
    switch (kind) {
        case MathErrorKind::NotClosed: return "NotClosed";
        case MathErrorKind::NotIntegral: return "NotIntegral";
        case MathErrorKind::OmegaNotExact: return "OmegaNotExact";
        case MathErrorKind::NeedsRefinement: return "NeedsRefinement";
        case MathErrorKind::InvalidCocycle: return "InvalidCocycle";
        case MathErrorKind::CurvatureMismatch: return "CurvatureMismatch";
        case MathErrorKind::NotARefinement: return "NotARefinement";
        case MathErrorKind::NotASection: return "NotASection";
        case MathErrorKind::NotFlat: return "NotFlat";
        case MathErrorKind::Unsolvable: return "Unsolvable";
    }
    return "Unknown";
}

}  // namespace gcoh
