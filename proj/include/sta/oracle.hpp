#pragma once

#include <vector>

#include "sta/algebra.hpp"

// Brute-force blade product: concatenate the generator words, bubble-sort to
// canonical order counting one sign flip per transposition, then contract
// equal adjacent generators through the metric. Deliberately independent of
// the bit-twiddling sign table so the two paths can check each other.

namespace sta {

struct BladeOracleResult {
  unsigned blade = 0;
  int sign = 0;
};

inline BladeOracleResult blade_product_oracle(const std::vector<int>& blade1,
                                              const std::vector<int>& blade2,
                                              const Algebra& alg) {
  std::vector<int> word;
  word.reserve(blade1.size() + blade2.size());
  for (int g : blade1)
    word.push_back(g);
  for (int g : blade2)
    word.push_back(g);
  for (int g : word)
    if (g < 0 || g >= alg.dim())
      throw unsupported_algebra_error("generator index out of range");

  int sign = 1;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] > word[i + 1]) {
        std::swap(word[i], word[i + 1]);
        sign = -sign;
        swapped = true;
      }
    }
  }

  // Equal generators are now adjacent; contract them pairwise.
  std::vector<int> reduced;
  for (std::size_t i = 0; i < word.size();) {
    if (i + 1 < word.size() && word[i] == word[i + 1]) {
      sign *= alg.metric(word[i]);
      i += 2;
    } else {
      reduced.push_back(word[i]);
      i += 1;
    }
  }

  unsigned mask = 0;
  for (int g : reduced)
    mask |= 1u << g;
  return BladeOracleResult{mask, sign};
}

inline std::vector<int> blade_mask_to_sequence(unsigned mask, const Algebra& alg) {
  std::vector<int> seq;
  for (int g = 0; g < alg.dim(); ++g)
    if (mask & (1u << g))
      seq.push_back(g);
  return seq;
}

inline BladeOracleResult blade_product_oracle(unsigned mask1, unsigned mask2,
                                              const Algebra& alg) {
  return blade_product_oracle(blade_mask_to_sequence(mask1, alg),
                              blade_mask_to_sequence(mask2, alg), alg);
}

} // namespace sta
