#pragma once

namespace ucc {

inline constexpr const char* kVersion = "0.1.0";

/// Version of the JSON report layout.  Bumped whenever an existing field
/// changes meaning; adding optional fields does not bump it.
inline constexpr int kReportSchemaVersion = 1;

}  // namespace ucc
