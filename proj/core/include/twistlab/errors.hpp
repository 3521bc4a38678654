#ifndef TWISTLAB_ERRORS_HPP
#define TWISTLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace twistlab {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller violated a documented precondition (bad parameter ranges,
// composite modulus, excluded d, ...).
struct UsageError : Error {
    using Error::Error;
};

// The requested object is undefined for this parameter (d in {0, +-3}, ...).
struct DomainError : Error {
    using Error::Error;
};

// The reduction of a curve model mod p is not smooth / has wrong degree.
struct DegenerateModelError : Error {
    using Error::Error;
};

// A rational polynomial cannot be reduced mod p (denominator vanishes).
struct NotReducibleError : Error {
    using Error::Error;
};

// A prime of bad reduction was passed where a good prime is required.
struct BadPrimeError : Error {
    using Error::Error;
};

// A verification routine does not apply to these parameters (e.g. the
// required square root does not exist mod p).  Distinct from `false`.
struct InapplicableError : Error {
    using Error::Error;
};

// Twist-kernel inference ended with zero or several surviving candidate
// classes.  Never resolved silently.
struct InferenceAmbiguousError : Error {
    using Error::Error;
};

// An internal consistency check failed; indicates a bug, not bad input.
struct InternalError : Error {
    using Error::Error;
};

// A cache file is malformed.  Carries the offending line number.
struct CacheError : Error {
    CacheError(const std::string& file, long line, const std::string& what)
        : Error(file + ":" + std::to_string(line) + ": " + what),
          file_(file), line_(line) {}
    const std::string& file() const { return file_; }
    long line() const { return line_; }

 private:
    std::string file_;
    long line_;
};

}  // namespace twistlab

#endif
