#pragma once

#include <stdexcept>
#include <string>

namespace cutseq {

// Every library failure is one of these. `code` is stable and ends up in CLI JSON.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error("domain", what) {}
};

// x sits exactly on a branch endpoint (or a GCF tie)
struct BoundaryError : Error {
    explicit BoundaryError(const std::string& what) : Error("boundary point", what) {}
};

struct AdmissibilityError : Error {
    explicit AdmissibilityError(const std::string& what) : Error("inadmissible", what) {}
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t pos)
        : Error("parse", what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& what) : Error("field mismatch", what) {}
};

struct SearchExhausted : Error {
    explicit SearchExhausted(const std::string& what) : Error("exhausted", what) {}
};

} // namespace cutseq
