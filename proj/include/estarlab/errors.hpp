#pragma once

#include <stdexcept>
#include <string>

namespace estarlab {

enum class Errc {
    width_exceeded,
    duplicate_point,
    not_a_topology,
    not_expansive,
    table_incomplete,
    table_key_not_estar_open,
    not_in_domain,
    space_mismatch,
    precondition_violated,
    unknown_claim,
    unknown_point,
    parse_error,
};

/// Error carrying a machine-checkable code plus a human witness message
/// (e.g. the offending set for a topology violation).
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& message) : std::runtime_error(message), code_(code) {}
    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace estarlab
