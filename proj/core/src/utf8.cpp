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

#include "otut/utf8.hpp"

#include <array>

namespace otut {

namespace {

constexpr CodePoint kReplacement = 0xFFFD;

int sequence_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) return 2;
  if ((lead & 0xF0) == 0xE0) return 3;
  if ((lead & 0xF8) == 0xF0) return 4;
  return 0;
}

}  // namespace

std::vector<DecodedChar> decode_utf8(std::string_view text) {
  std::vector<DecodedChar> out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char lead = static_cast<unsigned char>(text[i]);
    int len = sequence_length(lead);
    if (len == 1) {
      out.push_back({lead, i, 1});
      ++i;
      continue;
    }
    if (len == 0 || i + static_cast<std::size_t>(len) > text.size()) {
      out.push_back({kReplacement, i, 1});
      ++i;
      continue;
    }
    CodePoint cp = lead & (0x7F >> len);
    bool ok = true;
    for (int k = 1; k < len; ++k) {
      unsigned char cont = static_cast<unsigned char>(text[i + k]);
      if ((cont & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (cont & 0x3F);
    }
    if (!ok || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      out.push_back({kReplacement, i, 1});
      ++i;
      continue;
    }
    out.push_back({cp, i, static_cast<std::size_t>(len)});
    i += static_cast<std::size_t>(len);
  }
  return out;
}

std::string encode_utf8(CodePoint cp) {
  std::string s;
  if (cp < 0x80) {
    s.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    s.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    s.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    s.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    s.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    s.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    s.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    s.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    s.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    s.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return s;
}

bool is_space_cp(CodePoint cp) {
  switch (cp) {
    case 0x09:
    case 0x0A:
    case 0x0B:
    case 0x0C:
    case 0x0D:
    case 0x20:
    case 0x85:    // NEL
    case 0xA0:    // no-break space, common in subtitle files
    case 0x1680:  // ogham space
    case 0x2028:  // line separator
    case 0x2029:  // paragraph separator
    case 0x202F:  // narrow no-break space
    case 0x205F:  // medium mathematical space
    case 0x3000:  // ideographic space
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool is_digit_cp(CodePoint cp) {
  if (cp >= '0' && cp <= '9') return true;
  if (cp >= 0x0660 && cp <= 0x0669) return true;  // Arabic-Indic
  if (cp >= 0x06F0 && cp <= 0x06F9) return true;  // Extended Arabic-Indic
  if (cp >= 0x0966 && cp <= 0x096F) return true;  // Devanagari
  if (cp >= 0x09E6 && cp <= 0x09EF) return true;  // Bengali
  if (cp >= 0xFF10 && cp <= 0xFF19) return true;  // fullwidth
  return false;
}

bool is_punct_cp(CodePoint cp) {
  if (cp < 0x80) {
    return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
           (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
  }
  switch (cp) {
    case 0xA1:    // inverted exclamation
    case 0xBF:    // inverted question
    case 0xAB:    // left guillemet
    case 0xBB:    // right guillemet
    case 0xB7:    // middle dot
    case 0x2010:  // hyphen
    case 0x2011:
    case 0x2012:
    case 0x2013:  // en dash
    case 0x2014:  // em dash
    case 0x2015:
    case 0x2018:  // curly quotes
    case 0x2019:
    case 0x201A:
    case 0x201C:
    case 0x201D:
    case 0x201E:
    case 0x2022:  // bullet
    case 0x2026:  // horizontal ellipsis
    case 0x2032:
    case 0x2033:
    case 0x2039:
    case 0x203A:
    case 0x00A7:  // section
    case 0x00B6:  // pilcrow
    case 0x060C:  // Arabic comma
    case 0x061F:  // Arabic question mark
    case 0x0964:  // devanagari danda
    case 0x0965:
    case 0x3001:  // ideographic comma
    case 0x3002:  // ideographic full stop
    case 0x3008:
    case 0x3009:
    case 0x300A:
    case 0x300B:
    case 0x300C:
    case 0x300D:
    case 0x300E:
    case 0x300F:
    case 0x3010:
    case 0x3011:
    case 0xFF01:  // fullwidth !
    case 0xFF08:
    case 0xFF09:
    case 0xFF0C:  // fullwidth comma
    case 0xFF0E:  // fullwidth full stop
    case 0xFF1A:
    case 0xFF1B:
    case 0xFF1F:  // fullwidth ?
      return true;
    default:
      return false;
  }
}

bool is_letter_cp(CodePoint cp) {
  if (cp < 0x80) {
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
  }
  if (cp < 0xA0) return false;  // C1 controls
  if (cp <= 0xBF) {
    return cp == 0xAA || cp == 0xB5 || cp == 0xBA;  // Latin-1 symbol block
  }
  if (cp == 0xD7 || cp == 0xF7) return false;  // multiply / divide signs
  if (cp >= 0x2000 && cp <= 0x2BFF) return false;  // general punct + symbols
  if (cp >= 0x20A0 && cp <= 0x20CF) return false;  // currency signs
  if (cp >= 0x1F000) return false;                 // emoji and beyond
  return !is_space_cp(cp) && !is_digit_cp(cp) && !is_punct_cp(cp) &&
         cp != 0xFFFD;
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

}  // namespace otut
