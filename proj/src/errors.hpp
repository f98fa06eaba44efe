#pragma once

#include <stdexcept>
#include <string>

namespace trilength {

/// Failure categories surfaced across the library boundary.
///
/// parse        -- malformed input text or JSON
/// domain       -- input outside the supported class (e.g. not outerplanar)
/// limit        -- request exceeds a documented size cap
/// verification -- a drawing failed its own certification; also covers
///                 internal consistency violations, since both mean the
///                 produced artifact must not be trusted
enum class ErrorKind {
    parse,
    domain,
    limit,
    verification,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_parse(const std::string& msg) { throw Error(ErrorKind::parse, msg); }
[[noreturn]] inline void throw_domain(const std::string& msg) { throw Error(ErrorKind::domain, msg); }
[[noreturn]] inline void throw_limit(const std::string& msg) { throw Error(ErrorKind::limit, msg); }
[[noreturn]] inline void throw_verification(const std::string& msg) { throw Error(ErrorKind::verification, msg); }
[[noreturn]] inline void throw_internal(const std::string& msg) { throw Error(ErrorKind::internal, msg); }

} // namespace trilength
