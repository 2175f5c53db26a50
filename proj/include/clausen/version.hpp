#pragma once

namespace clausen {

inline constexpr const char* library_version = "0.1.0";

/// Report schema identifier; bump on any change to emitted JSON shapes.
inline constexpr const char* report_schema = "clausen-sweep-report/1";

} // namespace clausen
