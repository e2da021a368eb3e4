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

#ifndef OTUT_BASE64_HPP_
#define OTUT_BASE64_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace otut {

// Standard base64 (RFC 4648 alphabet, '=' padding).
std::string base64_encode(const std::uint8_t* data, std::size_t size);

// Throws std::invalid_argument on characters outside the alphabet or bad
// padding.
std::vector<std::uint8_t> base64_decode(std::string_view text);

}  // namespace otut

#endif  // OTUT_BASE64_HPP_
