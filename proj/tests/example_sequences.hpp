#pragma once

// Reference values for the two published nu2(theta_{q,q+2i}) sequences
// (q = 39 and q = 46, i = 0..199) used by the acceptance suite.

#include <array>
#include <cstdint>

namespace padic::testdata {

inline constexpr std::array<std::uint64_t, 200> kNuSequenceQ39 = {{
    0, 1, 3, 5, 7, 8, 8, 8, 8, 9, 12, 15, 18, 18, 15, 12, 9, 8, 8, 8,
    8, 7, 5, 3, 1, 0, 3, 6, 9, 10, 9, 8, 7, 9, 12, 15, 18, 20, 21, 22,
    23, 25, 29, 33, 37, 37, 33, 29, 25, 23, 22, 21, 20, 18, 15, 12, 9, 7, 8, 9,
    10, 9, 6, 3, 0, 1, 3, 5, 7, 8, 8, 8, 8, 9, 12, 15, 18, 18, 15, 12,
    9, 8, 8, 8, 8, 7, 5, 3, 1, 0, 4, 8, 12, 14, 14, 14, 14, 17, 21, 25,
    29, 32, 34, 36, 38, 41, 46, 51, 56, 56, 51, 46, 41, 38, 36, 34, 32, 29, 25, 21,
    17, 14, 14, 14, 14, 12, 8, 4, 0, 1, 3, 5, 7, 8, 8, 8, 8, 9, 12, 15,
    18, 18, 15, 12, 9, 8, 8, 8, 8, 7, 5, 3, 1, 0, 3, 6, 9, 10, 9, 8,
    7, 9, 12, 15, 18, 20, 21, 22, 23, 25, 29, 33, 37, 37, 33, 29, 25, 23, 22, 21,
    20, 18, 15, 12, 9, 7, 8, 9, 10, 9, 6, 3, 0, 1, 3, 5, 7, 8, 8, 8
}};

inline constexpr std::array<std::uint64_t, 200> kNuSequenceQ46 = {{
    0, 4, 2, 5, 6, 10, 10, 13, 14, 19, 14, 13, 10, 10, 6, 5, 2, 4, 0, 3,
    4, 8, 8, 11, 12, 17, 14, 15, 14, 16, 14, 15, 14, 19, 18, 22, 24, 29, 30, 34,
    36, 42, 36, 34, 30, 29, 24, 22, 18, 19, 14, 15, 14, 16, 14, 15, 14, 17, 12, 11,
    8, 8, 4, 3, 0, 4, 2, 5, 6, 10, 10, 13, 14, 19, 14, 13, 10, 10, 6, 5,
    2, 4, 0, 4, 6, 11, 12, 16, 18, 24, 22, 24, 24, 27, 26, 28, 28, 34, 34, 39,
    42, 48, 50, 55, 58, 65, 58, 55, 50, 48, 42, 39, 34, 34, 28, 28, 26, 27, 24, 24,
    22, 24, 18, 16, 12, 11, 6, 4, 0, 4, 2, 5, 6, 10, 10, 13, 14, 19, 14, 13,
    10, 10, 6, 5, 2, 4, 0, 3, 4, 8, 8, 11, 12, 17, 14, 15, 14, 16, 14, 15,
    14, 19, 18, 22, 24, 29, 30, 34, 36, 42, 36, 34, 30, 29, 24, 22, 18, 19, 14, 15,
    14, 16, 14, 15, 14, 17, 12, 11, 8, 8, 4, 3, 0, 4, 2, 5, 6, 10, 10, 13
}};

}  // namespace padic::testdata
