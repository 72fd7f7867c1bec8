#pragma once

#include <stdexcept>
#include <string>

namespace hardy {

enum class ErrorKind {
    domain,           // argument outside the operation's domain
    empty_polynomial, // operation undefined on the zero polynomial
    index_overflow,   // Dirichlet index does not fit in 64 bits
    term_cap,         // sparse expansion would exceed the configured term cap
    parse,            // malformed input file
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond) fail(kind, what);
}

} // namespace hardy
