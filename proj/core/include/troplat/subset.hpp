#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "troplat/error.hpp"

namespace troplat {

using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) { return (Mask{1} << n) - 1; }

inline std::vector<int> mask_indices(Mask m) {
  std::vector<int> out;
  for (int i = 0; m != 0; ++i, m >>= 1)
    if (m & 1) out.push_back(i);
  return out;
}

/// Serializes a subset as its sorted 1-based indices: "", "1", "13", "123".
/// Indices beyond 9 are comma-separated to stay unambiguous.
inline std::string subset_to_string(Mask m, int n) {
  std::string out;
  bool commas = n > 9;
  bool first = true;
  for (int i = 0; i < n; ++i) {
    if (!(m & (Mask{1} << i))) continue;
    if (!first && commas) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  return out;
}

inline Mask parse_subset(const std::string& text, int n) {
  Mask m = 0;
  bool commas = text.find(',') != std::string::npos;
  auto add = [&](long idx) {
    if (idx < 1 || idx > n)
      throw Error(errc::parse_error, "subset index out of range: " + std::to_string(idx));
    m |= Mask{1} << (idx - 1);
  };
  if (commas) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string::npos) next = text.size();
      add(std::stol(text.substr(pos, next - pos)));
      pos = next + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9')
        throw Error(errc::parse_error, std::string("bad subset character: ") + c);
      add(c - '0');
    }
  }
  return m;
}

}  // namespace troplat
