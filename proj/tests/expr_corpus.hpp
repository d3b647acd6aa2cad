#pragma once

#include <array>
#include <string_view>

// Round-trip corpus: every grammar production appears at least once, for
// both algebras. Entries marked sta-only use e0/par.

namespace corpus {

inline constexpr std::array<std::string_view, 44> shared = {
    "1",
    "0.5",
    "2.25",
    "e1",
    "e2",
    "e3",
    "i",
    "K1",
    "K2",
    "K3",
    "J1",
    "J2",
    "J3",
    "Ep3",
    "Em3",
    "Dp3",
    "Dm3",
    "-e1",
    "-(-e1)",
    "e1~",
    "e1~~",
    "(e1 + e2)~",
    "e1 + e2",
    "e1 - e2",
    "e1 * e2",
    "e1 . e2",
    "e1 ^ e2",
    "e1 * e2 * e3",
    "e1 . e2 ^ e3",
    "e1 + e2 * e3",
    "(e1 + e2) * e3",
    "e1 * (e2 + e3)",
    "-(e1 + e2)",
    "rev(e1 * e2)",
    "exp(0)",
    "grade(Ep3, 2)",
    "grade(1 + K3, 0)",
    "rev(rev(e1))",
    "exp(J3 * 0.5)",
    "Ep3*Ep3 - Ep3",
    "Dp3 * Dp3",
    "i*i",
    "Ep3 * K1 - K1 * Em3",
    "1 - 2 * grade(exp(J1), 0)",
};

inline constexpr std::array<std::string_view, 8> sta_only = {
    "e0",
    "e0 * e0",
    "par(e1)",
    "par(Ep3) - Em3",
    "e0 . e3",
    "e0 ^ e1 ^ e2 ^ e3",
    "K3 - e3 * e0",
    "par(e0 * e1)",
};

inline constexpr std::array<std::string_view, 2> ga3_only = {
    "e1 * e2 - i * e3",
    "exp(e2 * e3 * 0.5)",
};

} // namespace corpus
