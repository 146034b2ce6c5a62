#pragma once

#include <stdexcept>
#include <string>

namespace acat {

// Error classes surfaced by validation, parsing, the generators and the
// theorem checkers. The class name doubles as the machine-greppable prefix
// on CLI error lines.
enum class errc {
    endo_morphism,
    cycle_detected,
    bad_composite,
    non_associative,
    missing_composite,
    endpoint_mismatch,
    composition_not_preserved,
    source_target_mismatch,
    not_endofunctor,
    non_commuting,
    inconsistent_system,
    method_mismatch,
    theorem_violated,
    parse_error,
    unknown_name,
    generation_failed,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code) {}

    errc code() const { return code_; }
    const char* class_name() const { return errc_name(code_); }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace acat
