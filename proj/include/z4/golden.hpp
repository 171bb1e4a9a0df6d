// Reference classification counts for lengths 1..7, used by the `check`
// command and the acceptance suite to verify reproduced tables.
#pragma once

#include <cstdint>
#include <optional>

namespace z4::golden {

struct CellCount {
    int n, k1, k2;
    std::uint64_t n_prime;
};

// N'(n,k1,k2) for every cell with 1 <= n <= 7.
inline constexpr CellCount kCells[] = {
    {1, 0, 1, 1},  {1, 1, 0, 1},

    {2, 0, 1, 1},  {2, 0, 2, 1},  {2, 1, 0, 2},  {2, 1, 1, 2},  {2, 2, 0, 1},

    {3, 0, 1, 1},  {3, 0, 2, 2},  {3, 1, 0, 3},  {3, 0, 3, 1},  {3, 1, 1, 7},
    {3, 1, 2, 3},  {3, 2, 0, 5},  {3, 2, 1, 3},  {3, 3, 0, 1},

    {4, 0, 1, 1},  {4, 0, 2, 3},  {4, 1, 0, 4},  {4, 0, 3, 3},  {4, 1, 1, 17},
    {4, 0, 4, 1},  {4, 1, 2, 16}, {4, 2, 0, 18}, {4, 1, 3, 4},  {4, 2, 1, 23},
    {4, 2, 2, 6},  {4, 3, 0, 9},  {4, 3, 1, 4},  {4, 4, 0, 1},

    {5, 0, 1, 1},  {5, 0, 2, 4},  {5, 1, 0, 5},  {5, 0, 3, 6},  {5, 1, 1, 33},
    {5, 0, 4, 4},  {5, 1, 2, 54}, {5, 2, 0, 49}, {5, 0, 5, 1},  {5, 1, 3, 29},
    {5, 2, 1, 121},{5, 1, 4, 5},  {5, 2, 2, 67}, {5, 3, 0, 63}, {5, 2, 3, 10},
    {5, 3, 1, 55}, {5, 3, 2, 10}, {5, 4, 0, 14}, {5, 4, 1, 5},  {5, 5, 0, 1},

    {6, 0, 1, 1},  {6, 0, 2, 6},  {6, 1, 0, 6},  {6, 0, 3, 12}, {6, 1, 1, 58},
    {6, 0, 4, 11}, {6, 1, 2, 149},{6, 2, 0, 121},{6, 0, 5, 5},  {6, 1, 3, 134},
    {6, 2, 1, 499},{6, 0, 6, 1},  {6, 1, 4, 47}, {6, 2, 2, 500},{6, 3, 0, 381},
    {6, 1, 5, 6},  {6, 2, 3, 157},{6, 3, 1, 587},{6, 2, 4, 16}, {6, 3, 2, 212},
    {6, 4, 0, 179},{6, 3, 3, 22}, {6, 4, 1, 112},{6, 4, 2, 16}, {6, 5, 0, 20},
    {6, 5, 1, 6},  {6, 6, 0, 1},

    {7, 0, 1, 1},   {7, 0, 2, 7},   {7, 1, 0, 7},   {7, 0, 3, 21},  {7, 1, 1, 93},
    {7, 0, 4, 27},  {7, 1, 2, 359}, {7, 2, 0, 256}, {7, 0, 5, 17},  {7, 1, 3, 503},
    {7, 2, 1, 1728},{7, 0, 6, 6},   {7, 1, 4, 283}, {7, 2, 2, 2896},{7, 3, 0, 1955},
    {7, 0, 7, 1},   {7, 1, 5, 70},  {7, 2, 3, 1582},{7, 3, 1, 5184},{7, 1, 6, 7},
    {7, 2, 4, 319}, {7, 3, 2, 3247},{7, 4, 0, 2215},{7, 2, 5, 23},  {7, 3, 3, 648},
    {7, 4, 1, 2257},{7, 3, 4, 43},  {7, 4, 2, 565}, {7, 5, 0, 429}, {7, 4, 3, 43},
    {7, 5, 1, 204}, {7, 5, 2, 23},  {7, 6, 0, 27},  {7, 6, 1, 7},   {7, 7, 0, 1},
};

// index = n
inline constexpr std::uint64_t kNPrimeTotals[] = {0, 2, 7, 26, 110, 537, 3265, 25054};
inline constexpr std::uint64_t kNTotals[] = {0, 2, 9, 35, 145, 682, 3947, 29001};
inline constexpr int kMaxTable = 7;

inline std::optional<std::uint64_t> n_prime(int n, int k1, int k2) {
    for (const CellCount& c : kCells)
        if (c.n == n && c.k1 == k1 && c.k2 == k2) return c.n_prime;
    return std::nullopt;
}

} // namespace z4::golden
