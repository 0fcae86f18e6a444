#pragma once

// Reference tabulation for the modular group: the published 32-row table of
// norms, class counts, discriminants, li values and error diagnostics, kept
// verbatim at its printed precision (cells carry their own decimal counts).

#include <array>

namespace golden {

inline constexpr int kRows = 32;
inline constexpr int kCols = 11;

// columns: norm, multiplicity, discriminant, li, pi, li/pi, |li-pi|,
//          x^{3/4}/sqrt(log x), (7)/(8), sqrt(x), (7)/(10)
inline constexpr std::array<std::array<const char*, kCols>, kRows> kTable = {{
    {"6.85", "1", "5", "4.68", "1", "4.68", "3.68", "3.05", "1.21", "2.62", "1.41"},
    {"13.93", "2", "12", "7.75", "3", "2.58", "4.75", "4.44", "1.07", "3.73", "1.27"},
    {"22.96", "2", "21", "10.87", "5", "2.17", "5.87", "5.92", ".99", "4.79", "1.23"},
    {"33.97", "2", "32", "14.17", "7", "2.02", "7.17", "7.49", ".96", "5.83", "1.23"},
    {"33.97", "1", "8", "14.17", "8", "1.77", "6.17", "7.49", ".82", "5.83", "1.06"},
    {"46.98", "2", "45", "17.69", "10", "1.77", "7.69", "9.15", ".84", "6.85", "1.12"},
    {"61.98", "4", "60", "21.45", "14", "1.53", "7.45", "10.87", ".68", "7.87", "0.95"},
    {"78.99", "2", "77", "25.45", "16", "1.59", "9.45", "12.68", ".75", "8.89", "1.06"},
    {"97.99", "2", "24", "29.69", "18", "1.65", "11.69", "14.55", ".80", "9.9", "1.18"},
    {"97.99", "4", "96", "29.69", "22", "1.35", "7.69", "14.55", ".53", "9.9", "0.78"},
    {"118.99", "1", "13", "34.17", "23", "1.49", "11.17", "16.48", ".68", "10.91", "1.02"},
    {"118.99", "2", "117", "34.17", "25", "1.37", "9.17", "16.48", ".56", "10.91", "0.84"},
    {"141.99", "4", "140", "38.9", "29", "1.34", "9.9", "18.48", ".54", "11.92", "0.83"},
    {"166.99", "4", "165", "43.86", "33", "1.33", "10.86", "20.53", ".53", "12.92", "0.84"},
    {"193.99", "2", "48", "49.06", "35", "1.40", "14.06", "22.65", ".62", "13.93", "1.01"},
    {"193.99", "4", "192", "49.06", "39", "1.26", "10.06", "22.65", ".44", "13.93", "0.72"},
    {"223", "4", "221", "54.49", "43", "1.27", "11.49", "24.82", ".46", "14.93", "0.77"},
    {"254", "2", "28", "60.15", "45", "1.34", "15.15", "27.04", ".56", "15.94", "0.95"},
    {"254", "4", "252", "60.15", "49", "1.23", "11.15", "27.04", ".41", "15.94", "0.7"},
    {"287", "4", "285", "66.04", "53", "1.25", "13.04", "29.31", ".45", "16.94", "0.77"},
    {"322", "2", "80", "72.17", "55", "1.31", "17.17", "31.63", ".54", "17.94", "0.96"},
    {"322", "1", "20", "72.17", "56", "1.29", "16.17", "31.63", ".51", "17.94", "0.9"},
    {"322", "4", "320", "72.17", "60", "1.20", "12.17", "31.63", ".38", "17.94", "0.68"},
    {"359", "4", "357", "78.51", "64", "1.23", "14.51", "34", ".43", "18.95", "0.77"},
    {"398", "2", "44", "85.08", "66", "1.29", "19.08", "36.42", ".52", "19.95", "0.96"},
    {"398", "8", "396", "85.08", "74", "1.15", "11.08", "36.42", ".30", "19.95", "0.56"},
    {"439", "2", "437", "91.88", "76", "1.21", "15.88", "38.88", ".41", "20.95", "0.76"},
    {"482", "4", "120", "98.89", "80", "1.24", "18.89", "41.39", ".46", "21.95", "0.86"},
    {"482", "8", "480", "98.89", "88", "1.12", "10.89", "41.39", ".26", "21.95", "0.5"},
    {"527", "4", "525", "106.12", "92", "1.15", "14.12", "43.94", ".32", "22.96", "0.62"},
    {"574", "4", "572", "113.57", "96", "1.18", "17.57", "46.53", ".38", "23.96", "0.73"},
    {"623", "2", "69", "121.23", "98", "1.24", "23.23", "49.16", ".47", "24.96", "0.93"},
}};

}  // namespace golden
