#pragma once

// Enumeration of freely reduced words over {x, x^-1, y, y^-1} for exhaustive
// sweeps. Shared by the unit tests and the acceptance suite.

#include <vector>

#include "goeritz/f2core.hpp"

namespace testsupport {

// Calls fn(codes) for every freely reduced word with 0 <= length <= maxLen.
template <typename Fn>
void for_each_reduced_word(int maxLen, Fn&& fn) {
  std::vector<goeritz::LetterCode> w;
  fn(w);
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) return;
    for (goeritz::LetterCode c = 0; c < 4; ++c) {
      if (!w.empty() && goeritz::inverse_code(w.back()) == c) continue;
      w.push_back(c);
      fn(w);
      self(self, remaining - 1);
      w.pop_back();
    }
  };
  rec(rec, maxLen);
}

inline std::size_t count_reduced_words(int maxLen) {
  std::size_t n = 0;
  for_each_reduced_word(maxLen, [&](const auto&) { ++n; });
  return n;
}

}  // namespace testsupport
