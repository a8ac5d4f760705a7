#pragma once

#include <stdexcept>

namespace zetacast {

// Input data that fails a contract check: bad CSV cell, non-positive level,
// duplicate period, mismatched lengths.
class validation_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed file content (unreadable file, non-numeric cell, missing column).
class parse_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An iterative method exhausted its budget before reaching tolerance.
class convergence_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Observation sequence whose probability underflows in every state.
class underflow_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// EM re-estimation drove an emission standard deviation below the floor.
class state_collapse_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fitted lag polynomial has a root on or inside the unit circle.
class unstable_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace zetacast
