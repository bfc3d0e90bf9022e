#ifndef HARDCORE_ERRORS_HPP
#define HARDCORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hardcore {

// Single exception type for the whole core; the code enum maps 1:1 onto the
// C API status values.
class Error : public std::runtime_error {
public:
    enum class Code {
        InvalidArgument,
        Parse,
        TooLarge,
        Precondition,
        BudgetExceeded,
        Io,
        Internal,
    };

    Error(Code code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    Code code() const noexcept { return code_; }

private:
    Code code_;
};

[[noreturn]] inline void throw_invalid(std::string msg) {
    throw Error(Error::Code::InvalidArgument, std::move(msg));
}
[[noreturn]] inline void throw_parse(std::string msg) {
    throw Error(Error::Code::Parse, std::move(msg));
}
[[noreturn]] inline void throw_too_large(std::string msg) {
    throw Error(Error::Code::TooLarge, std::move(msg));
}
[[noreturn]] inline void throw_precondition(std::string msg) {
    throw Error(Error::Code::Precondition, std::move(msg));
}
[[noreturn]] inline void throw_budget(std::string msg) {
    throw Error(Error::Code::BudgetExceeded, std::move(msg));
}
[[noreturn]] inline void throw_io(std::string msg) {
    throw Error(Error::Code::Io, std::move(msg));
}

} // namespace hardcore

#endif
