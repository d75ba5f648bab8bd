#ifndef WORDWALK_ERROR_HPP
#define WORDWALK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wordwalk {

// Library-wide error with a machine-readable code. The CLI maps codes to
// exit statuses; tests match on them.
class Error : public std::runtime_error {
public:
    enum class Code {
        invalid_input,     // malformed arguments, parse failures, bad specs
        length_mismatch,   // word/walk shape disagreement
        domain_mismatch,   // walk composition domains do not line up
        not_primitive,     // operation defined for primitive words only
        budget_exceeded,   // enumeration or word-length cap hit
        unprintable,       // word cannot be rendered in chars mode
        internal,          // invariant violated inside the library
    };

    Error(Code code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    Code code() const noexcept { return code_; }

private:
    Code code_;
};

[[noreturn]] inline void raise(Error::Code code, const std::string& message) {
    throw Error(code, message);
}

} // namespace wordwalk

#endif
