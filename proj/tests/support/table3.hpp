#pragma once

// Non-empty cells of the published table of shortened RS (s,1)-codes:
// strength s, size exponent m and the printed (q, lambda, N).

#include <array>
#include <cstdint>

namespace sic::test {

struct Table3Cell {
  std::uint32_t s, m, q, lambda, N;
};

inline constexpr std::array<Table3Cell, 109> kTable3{{
    {3, 5, 7, 1, 28},
    {4, 5, 7, 1, 35},
    {5, 5, 7, 1, 42},
    {6, 5, 7, 1, 49},
    {2, 6, 4, 2, 20},
    {3, 6, 8, 1, 32},
    {4, 6, 8, 1, 40},
    {5, 6, 8, 1, 48},
    {6, 6, 8, 1, 56},
    {7, 6, 9, 1, 72},
    {8, 6, 11, 1, 99},
    {4, 7, 13, 1, 65},
    {5, 7, 13, 1, 78},
    {6, 7, 13, 1, 91},
    {7, 7, 13, 1, 104},
    {8, 7, 13, 1, 117},
    {2, 8, 7, 2, 35},
    {3, 8, 7, 2, 49},
    {5, 8, 16, 1, 96},
    {6, 8, 16, 1, 112},
    {7, 8, 16, 1, 128},
    {8, 8, 16, 1, 144},
    {2, 9, 8, 2, 40},
    {3, 9, 8, 2, 56},
    {4, 9, 8, 2, 72},
    {6, 9, 23, 1, 161},
    {7, 9, 23, 1, 184},
    {8, 9, 23, 1, 207},
    {3, 10, 11, 2, 77},
    {4, 10, 11, 2, 99},
    {5, 10, 11, 2, 121},
    {2, 11, 7, 3, 49},
    {4, 11, 13, 2, 117},
    {5, 11, 13, 2, 143},
    {6, 11, 13, 2, 169},
    {2, 12, 8, 3, 56},
    {3, 12, 9, 3, 90},
    {4, 12, 16, 2, 144},
    {5, 12, 16, 2, 176},
    {6, 12, 16, 2, 208},
    {7, 12, 16, 2, 240},
    {8, 12, 16, 2, 272},
    {3, 13, 11, 3, 110},
    {5, 13, 23, 2, 253},
    {6, 13, 23, 2, 299},
    {7, 13, 23, 2, 345},
    {8, 13, 23, 2, 391},
    {3, 14, 13, 3, 130},
    {4, 14, 13, 3, 169},
    {6, 14, 27, 2, 351},
    {7, 14, 27, 2, 405},
    {8, 14, 27, 2, 459},
    {2, 15, 8, 4, 72},
    {7, 15, 32, 2, 480},
    {8, 15, 32, 2, 544},
    {3, 16, 16, 3, 160},
    {4, 16, 16, 3, 208},
    {5, 16, 16, 3, 256},
    {6, 16, 19, 3, 361},
    {2, 17, 11, 4, 99},
    {2, 18, 13, 4, 117},
    {3, 18, 13, 4, 169},
    {5, 18, 23, 3, 368},
    {6, 18, 23, 3, 437},
    {7, 18, 23, 3, 506},
    {8, 18, 25, 3, 625},
    {5, 19, 27, 3, 432},
    {6, 19, 27, 3, 513},
    {7, 19, 27, 3, 594},
    {8, 19, 27, 3, 675},
    {2, 20, 11, 5, 121},
    {3, 20, 16, 4, 208},
    {4, 20, 16, 4, 272},
    {6, 20, 32, 3, 608},
    {7, 20, 32, 3, 704},
    {8, 20, 32, 3, 800},
    {4, 21, 19, 4, 323},
    {8, 21, 41, 3, 1025},
    {2, 22, 13, 5, 143},
    {4, 22, 23, 4, 391},
    {5, 22, 23, 4, 483},
    {4, 23, 25, 4, 425},
    {5, 23, 25, 4, 525},
    {6, 23, 25, 4, 625},
    {3, 24, 16, 5, 256},
    {5, 24, 27, 4, 609},
    {6, 24, 29, 4, 725},
    {7, 24, 29, 4, 841},
    {2, 25, 13, 6, 169},
    {3, 25, 19, 5, 304},
    {6, 25, 32, 4, 800},
    {7, 25, 32, 4, 928},
    {8, 25, 32, 4, 1056},
    {6, 26, 37, 4, 925},
    {7, 26, 37, 4, 1073},
    {8, 26, 37, 4, 1221},
    {4, 27, 23, 5, 483},
    {7, 27, 43, 4, 1247},
    {8, 27, 43, 4, 1419},
    {2, 28, 16, 6, 208},
    {4, 28, 27, 5, 702},
    {5, 28, 25, 5, 650},
    {8, 28, 49, 4, 1617},
    {3, 29, 19, 6, 361},
    {4, 29, 29, 5, 609},
    {5, 29, 29, 5, 754},
    {6, 29, 31, 5, 961},
    {5, 30, 32, 5, 832},
    {6, 30, 32, 5, 992},
}};

}  // namespace sic::test
