// Copyright 2026 The otut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "otut/base64.hpp"

#include <array>
#include <stdexcept>

namespace otut {

namespace {

constexpr char kAlphabet[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

std::array<int, 256> build_reverse() {
  std::array<int, 256> table;
  table.fill(-1);
  for (int i = 0; i < 64; ++i) {
    table[static_cast<unsigned char>(kAlphabet[i])] = i;
  }
  return table;
}

}  // namespace

std::string base64_encode(const std::uint8_t* data, std::size_t size) {
  std::string out;
  out.reserve((size + 2) / 3 * 4);
  std::size_t i = 0;
  for (; i + 3 <= size; i += 3) {
    std::uint32_t chunk = (static_cast<std::uint32_t>(data[i]) << 16) |
                          (static_cast<std::uint32_t>(data[i + 1]) << 8) |
                          data[i + 2];
    out.push_back(kAlphabet[(chunk >> 18) & 63]);
    out.push_back(kAlphabet[(chunk >> 12) & 63]);
    out.push_back(kAlphabet[(chunk >> 6) & 63]);
    out.push_back(kAlphabet[chunk & 63]);
  }
  std::size_t rest = size - i;
  if (rest == 1) {
    std::uint32_t chunk = static_cast<std::uint32_t>(data[i]) << 16;
    out.push_back(kAlphabet[(chunk >> 18) & 63]);
    out.push_back(kAlphabet[(chunk >> 12) & 63]);
    out.push_back('=');
    out.push_back('=');
  } else if (rest == 2) {
    std::uint32_t chunk = (static_cast<std::uint32_t>(data[i]) << 16) |
                          (static_cast<std::uint32_t>(data[i + 1]) << 8);
    out.push_back(kAlphabet[(chunk >> 18) & 63]);
    out.push_back(kAlphabet[(chunk >> 12) & 63]);
    out.push_back(kAlphabet[(chunk >> 6) & 63]);
    out.push_back('=');
  }
  return out;
}

std::vector<std::uint8_t> base64_decode(std::string_view text) {
  static const std::array<int, 256> reverse = build_reverse();
  if (text.size() % 4 != 0) {
    throw std::invalid_argument("base64: length not a multiple of 4");
  }
  std::vector<std::uint8_t> out;
  out.reserve(text.size() / 4 * 3);
  for (std::size_t i = 0; i < text.size(); i += 4) {
    int vals[4];
    int pad = 0;
    for (int j = 0; j < 4; ++j) {
      char c = text[i + j];
      if (c == '=') {
        // Padding may only appear in the last two slots of the last group.
        if (i + 4 != text.size() || j < 2) {
          throw std::invalid_argument("base64: misplaced padding");
        }
        vals[j] = 0;
        ++pad;
      } else {
        if (pad > 0) {
          throw std::invalid_argument("base64: data after padding");
        }
        int v = reverse[static_cast<unsigned char>(c)];
        if (v < 0) throw std::invalid_argument("base64: invalid character");
        vals[j] = v;
      }
    }
    std::uint32_t chunk = (static_cast<std::uint32_t>(vals[0]) << 18) |
                          (static_cast<std::uint32_t>(vals[1]) << 12) |
                          (static_cast<std::uint32_t>(vals[2]) << 6) |
                          static_cast<std::uint32_t>(vals[3]);
    out.push_back(static_cast<std::uint8_t>((chunk >> 16) & 0xFF));
    if (pad < 2) out.push_back(static_cast<std::uint8_t>((chunk >> 8) & 0xFF));
    if (pad < 1) out.push_back(static_cast<std::uint8_t>(chunk & 0xFF));
  }
  return out;
}

}  // namespace otut
