#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace quadpoint {

// Every library error carries a stable machine-readable code ("singular-matrix",
// "not-regularly-homotopic", ...) next to the human-readable message.  Tools that
// wrap the library report the code on their error channel.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error("dimension-mismatch", msg) {}
};

struct DimensionTooLarge : Error {
    explicit DimensionTooLarge(const std::string& msg) : Error("dimension-too-large", msg) {}
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& msg) : Error("singular-matrix", msg) {}
};

struct DegenerateForm : Error {
    explicit DegenerateForm(const std::string& msg) : Error("degenerate-form", msg) {}
};

struct NotTotallySingular : Error {
    explicit NotTotallySingular(const std::string& msg) : Error("not-totally-singular", msg) {}
};

struct WrongDimension : Error {
    explicit WrongDimension(const std::string& msg) : Error("wrong-dimension", msg) {}
};

struct NotABasis : Error {
    explicit NotABasis(const std::string& msg) : Error("not-a-basis", msg) {}
};

struct NotOrthogonal : Error {
    explicit NotOrthogonal(const std::string& msg) : Error("not-orthogonal", msg) {}
};

struct FormMismatch : Error {
    explicit FormMismatch(const std::string& msg) : Error("form-mismatch", msg) {}
};

struct InvalidEmbeddingData : Error {
    explicit InvalidEmbeddingData(const std::string& msg) : Error("invalid-embedding-data", msg) {}
};

struct GenusMismatch : Error {
    explicit GenusMismatch(const std::string& msg) : Error("genus-mismatch", msg) {}
};

struct OrientationMismatch : Error {
    explicit OrientationMismatch(const std::string& msg) : Error("orientation-mismatch", msg) {}
};

struct ComponentCountMismatch : Error {
    explicit ComponentCountMismatch(const std::string& msg) : Error("component-count-mismatch", msg) {}
};

struct NotRegularlyHomotopic : Error {
    explicit NotRegularlyHomotopic(const std::string& msg) : Error("not-regularly-homotopic", msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("parse-error", msg) {}
};

}  // namespace quadpoint
