#pragma once

#include <stdexcept>
#include <string>

namespace finalg {

enum class errc {
    invalid_parameter,
    size_limit,
    invalid_ideal,
    invalid_submodule,
    ring_mismatch,
    domain_mismatch,
    not_idempotent,
    empty_set,
    validation,
    internal,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::invalid_parameter: return "invalid-parameter";
    case errc::size_limit: return "size-limit";
    case errc::invalid_ideal: return "invalid-ideal";
    case errc::invalid_submodule: return "invalid-submodule";
    case errc::ring_mismatch: return "ring-mismatch";
    case errc::domain_mismatch: return "domain-mismatch";
    case errc::not_idempotent: return "not-idempotent";
    case errc::empty_set: return "empty-set";
    case errc::validation: return "validation";
    case errc::internal: return "internal";
    }
    return "?";
}

class error : public std::runtime_error {
public:
    error(errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}
    errc code() const { return code_; }

private:
    errc code_;
};

} // namespace finalg
