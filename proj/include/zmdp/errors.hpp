#pragma once

#include <stdexcept>
#include <string>

namespace zmdp {

/// Error conditions surfaced by the library. The CLI maps these onto
/// process exit codes (validation -> 2, numerical -> 3, io -> 4).
enum class Errc {
    dangling_state,
    prob_sum_violation,
    dead_end,
    terminal_with_actions,
    mu_too_large,
    max_iter_exceeded,
    not_deterministic,
    singular_system,
    cap_explosion,
    cyclic,
    unknown_state_action,
    non_episodic,
    parse_error,
    io_error,
    invalid_argument,
};

inline const char* errc_name(Errc c) noexcept {
    switch (c) {
    case Errc::dangling_state: return "DanglingState";
    case Errc::prob_sum_violation: return "ProbSumViolation";
    case Errc::dead_end: return "DeadEnd";
    case Errc::terminal_with_actions: return "TerminalWithActions";
    case Errc::mu_too_large: return "MuTooLarge";
    case Errc::max_iter_exceeded: return "MaxIterExceeded";
    case Errc::not_deterministic: return "NotDeterministic";
    case Errc::singular_system: return "SingularSystem";
    case Errc::cap_explosion: return "CapExplosion";
    case Errc::cyclic: return "Cyclic";
    case Errc::unknown_state_action: return "UnknownStateAction";
    case Errc::non_episodic: return "NonEpisodic";
    case Errc::parse_error: return "ParseError";
    case Errc::io_error: return "IoError";
    case Errc::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace zmdp
