#pragma once

#include <stdexcept>
#include <string>

namespace tabcom {

// Bad input: malformed documents, constraint violations, precondition failures.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration outgrew its configured cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal invariant violation (corrupted provenance, impossible state).
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

struct EnumLimits {
  long long max_tableaux = 1'000'000;
  long long max_faces = 10'000'000;
};

}  // namespace tabcom
