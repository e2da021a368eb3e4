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

#ifndef OTUT_METRICS_HPP_
#define OTUT_METRICS_HPP_

#include <vector>

#include "otut/labels.hpp"

namespace otut {

// Fraction of exact matches. Throws std::invalid_argument on empty or
// unequal-length inputs (as do the other two metrics).
double accuracy(const std::vector<ClassLabel>& gold,
                const std::vector<ClassLabel>& pred);

// Per-class F1 averaged with weights proportional to gold-class support.
// Classes absent from gold get zero weight; a class with neither predicted
// nor gold positives scores 0.
double weighted_f1(const std::vector<ClassLabel>& gold,
                   const std::vector<ClassLabel>& pred);

// Among samples whose gold label is an error class, the fraction predicted
// as ANY error class; a gold OT predicted UT still counts as flagged.
// Throws std::invalid_argument when gold contains no error labels (the
// value is undefined).
double error_recall(const std::vector<ClassLabel>& gold,
                    const std::vector<ClassLabel>& pred);

}  // namespace otut

#endif  // OTUT_METRICS_HPP_
