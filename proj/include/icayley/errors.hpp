#ifndef ICAYLEY_ERRORS_HPP
#define ICAYLEY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace icayley {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotAGroup : Error {
    using Error::Error;
};

struct NotPGroup : Error {
    using Error::Error;
};

struct NotAbelian : Error {
    using Error::Error;
};

struct NoUniqueInvolution : Error {
    using Error::Error;
};

struct NotAutomorphism : Error {
    using Error::Error;
};

struct OrderMismatch : Error {
    using Error::Error;
};

struct NotGenerating : Error {
    using Error::Error;
};

struct SizeCeiling : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    long found_so_far;  // lower bound established before the budget ran out
    BudgetExceeded(const std::string& msg, long found)
        : Error(msg), found_so_far(found) {}
};

struct UnknownName : Error {
    using Error::Error;
};

struct BadConstruction : Error {
    using Error::Error;
};

struct PreconditionViolated : Error {
    using Error::Error;
};

struct UnknownTag : Error {
    using Error::Error;
};

// Text parsing failures carry a position to make CLI diagnostics usable.
struct ParseError : Error {
    int position;  // 0-based offset into the recipe string
    ParseError(const std::string& msg, int pos) : Error(msg), position(pos) {}
};

struct FormatError : Error {
    int line;  // 1-based line number in the file
    FormatError(const std::string& msg, int ln) : Error(msg), line(ln) {}
};

// Unreadable or unwritable paths (as opposed to readable files with bad content).
struct IoError : Error {
    using Error::Error;
};

}  // namespace icayley

#endif
