#pragma once

#include <stdexcept>
#include <string>

namespace torkam {

enum class ErrorKind {
    Dimension,            // malformed matrix/vector shapes
    UnsupportedSpectrum,  // selected eigenvalue complex or repeated
    Resonance,            // small divisor below the floor
    Aliasing,             // grid too small for the requested cutoff
    NotInvertible,        // contraction condition violated
    NoConvergence,        // iteration exhausted without meeting tolerance
    Ergodicity,           // 1 is an eigenvalue of the automorphism
    Safeguard,            // inductive-step admissibility inequality failed
    RelationViolation,    // input pair does not satisfy the group relation
    Parameter,            // inconsistent scheme parameters
    Input,                // invalid user-supplied data
    Config,               // config file schema violation
    Io,                   // file read/write failure
    Divergence,           // iteration norms grew repeatedly
};

/// Single exception type for the whole library; `kind()` tells callers
/// which contract was violated.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
    if (!cond) fail(kind, msg);
}

}  // namespace torkam
