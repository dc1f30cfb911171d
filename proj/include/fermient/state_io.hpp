#pragma once

#include "fermient/fock.hpp"

#include <string>

namespace fermient {

// {"n_modes": 4, "amplitudes": [{"mask": 3, "re": 0.70710678118654757, "im": 0.0}, ...]}
// Malformed documents throw ParseError; physically invalid ones throw the
// make_state errors.
FockState parse_state(const std::string& text);
FockState read_state_file(const std::string& path);

// Nonzero amplitudes only, ascending mask, round-trip exact doubles.
std::string format_state(const FockState& state, int indent = -1);

}  // namespace fermient
