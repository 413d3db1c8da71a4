#pragma once

#include <stdexcept>

namespace ftsp {

/// A built object failed its own re-verification; indicates a bug rather
/// than bad input, so callers map it to a distinct exit code.
struct verification_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A configured size or radius cap was exceeded; names the cap.
struct cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ftsp
