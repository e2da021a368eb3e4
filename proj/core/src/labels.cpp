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

#include "otut/labels.hpp"

#include <stdexcept>

namespace otut {

std::string to_string(ClassLabel label) {
  switch (label) {
    case ClassLabel::NE:
      return "NE";
    case ClassLabel::OT:
      return "OT";
    case ClassLabel::UT:
      return "UT";
  }
  throw std::invalid_argument("invalid class label value");
}

std::string to_string(Granularity granularity) {
  switch (granularity) {
    case Granularity::none:
      return "none";
    case Granularity::subtle:
      return "subtle";
    case Granularity::gross:
      return "gross";
  }
  throw std::invalid_argument("invalid granularity value");
}

ClassLabel class_label_from_string(std::string_view name) {
  if (name == "NE") return ClassLabel::NE;
  if (name == "OT") return ClassLabel::OT;
  if (name == "UT") return ClassLabel::UT;
  throw std::invalid_argument("unknown class label \"" + std::string(name) +
                              "\" (expected NE, OT, or UT)");
}

Granularity granularity_from_string(std::string_view name) {
  if (name == "none") return Granularity::none;
  if (name == "subtle") return Granularity::subtle;
  if (name == "gross") return Granularity::gross;
  throw std::invalid_argument("unknown granularity \"" + std::string(name) +
                              "\" (expected none, subtle, or gross)");
}

}  // namespace otut
