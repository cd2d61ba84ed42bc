#pragma once

#include <string>

namespace binsim {

// Shortest decimal representation that round-trips through from_chars, so
// serialized doubles parse back bit-exact and reruns stay byte-identical.
std::string format_double(double value);

}  // namespace binsim
