#pragma once

#include <stdexcept>
#include <string>

namespace newtcert {

// Base class for all input/domain errors raised by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the parser; `pos` is a byte offset into the input text.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t pos)
        : error(what), pos_(pos) {}
    std::size_t pos() const { return pos_; }

private:
    std::size_t pos_;
};

// Raised when a Groebner computation exceeds its step budget.  This is a
// distinct outcome: callers must never turn it into a pass or fail verdict.
class resource_exhausted : public std::runtime_error {
public:
    explicit resource_exhausted(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace newtcert
