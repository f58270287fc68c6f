#pragma once
#include <stdexcept>
#include <string>

namespace limtower {

/* Every failure carries a stable kind string so the CLI can map it to an
 * exit code and report entry without string-matching what() text. */
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const char* kind, const std::string& msg)
{
    throw Error(kind, msg);
}

inline void require(bool cond, const char* kind, const std::string& msg)
{
    if (!cond)
        fail(kind, msg);
}

} // namespace limtower
