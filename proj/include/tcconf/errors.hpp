#pragma once

#include <stdexcept>
#include <string>

namespace tcconf {

/// Raised when a requested computation exceeds a configured size limit.
/// The message always names the bound that was hit and the estimate that hit it.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a computed object fails a check it is required to satisfy
/// (e.g. a constructed zero divisor that is not in the kernel of mu_s).
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tcconf
