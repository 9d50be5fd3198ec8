#pragma once

#include <stdexcept>

namespace coset {

// Inputs contradict a structural guarantee (maps to CLI exit code 3).
struct inconsistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed file or argument (maps to CLI exit code 2).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace coset
