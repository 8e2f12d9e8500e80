#pragma once

namespace hurwitz {

inline constexpr const char* kLibraryVersion = "0.1.0";

}  // namespace hurwitz
