#ifndef FQSYM_VERSION_HPP
#define FQSYM_VERSION_HPP

#include <cstdint>

namespace fqsym {

inline constexpr const char* kVersion = "0.1.0";

// Every randomized routine (equal-degree splitting, random scan inputs)
// derives its stream from this constant unless the caller overrides it.
inline constexpr std::uint64_t kDefaultSeed = 1729;

// Largest field the engine will construct; q - 1 must factor by trial
// division, so exhaustive desk-scale work stays cheap.
inline constexpr std::int64_t kMaxFieldSize = std::int64_t(1) << 20;

// Largest candidate space q^n the prime enumerator will sweep.
inline constexpr std::int64_t kMaxEnumSize = std::int64_t(1) << 24;

}  // namespace fqsym

#endif
