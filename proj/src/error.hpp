#pragma once

#include <stdexcept>
#include <string>

namespace mfwb {

// Exit-code contract: 1 validation failure, 2 computation failure,
// 3 I/O or parse error.
enum class Errc { validation = 1, compute = 2, io = 3 };

class Error : public std::runtime_error {
public:
    Error(Errc kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    Errc kind() const { return kind_; }

private:
    Errc kind_;
};

[[noreturn]] inline void fail(Errc kind, const std::string& msg)
{
    throw Error(kind, msg);
}

} // namespace mfwb
