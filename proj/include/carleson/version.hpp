#pragma once

namespace carleson {

inline constexpr const char* kToolName = "carleson";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kSchemaVersion = "v1";
// Named, versioned PRNG recorded in generated-corpus metadata so corpora
// stay stable across releases.
inline constexpr const char* kPrngName = "mt19937_64-v1";

}  // namespace carleson
