#pragma once

#include <stdexcept>
#include <string>

namespace treach {

// Every failure the library can signal carries one of these codes so that
// callers (and the CLI exit-code mapping) can distinguish them.
enum class Errc {
    unknown_vertex,
    unknown_endpoint,
    self_loop,
    duplicate_edge,
    empty_label_set,
    bad_label,
    not_an_edge,
    not_a_time_edge,
    bad_query,
    bad_instance,
    bad_witness,
    side_condition,
    oracle_scale,
    cap_exceeded,
    bad_decomposition,
    parse_error,
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace treach
