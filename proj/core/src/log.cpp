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

#include "otut/log.hpp"

#include <atomic>
#include <iostream>
#include <stdexcept>

namespace otut {
namespace {

std::atomic<LogLevel> g_level{LogLevel::info};

const char* severity_name(LogLevel severity) {
  switch (severity) {
    case LogLevel::debug:
      return "debug";
    case LogLevel::info:
      return "info";
    case LogLevel::warning:
      return "warning";
    case LogLevel::error:
      return "error";
    case LogLevel::quiet:
      return "quiet";
  }
  return "?";
}

}  // namespace

LogLevel log_level_from_string(std::string_view name) {
  if (name == "debug") return LogLevel::debug;
  if (name == "info") return LogLevel::info;
  if (name == "warning") return LogLevel::warning;
  if (name == "error") return LogLevel::error;
  if (name == "quiet") return LogLevel::quiet;
  throw std::invalid_argument(
      "unknown log level \"" + std::string(name) +
      "\", expected debug|info|warning|error|quiet");
}

void set_log_level(LogLevel level) { g_level.store(level); }

LogLevel log_level() { return g_level.load(); }

void log(LogLevel severity, const std::string& message) {
  if (severity == LogLevel::quiet || severity < g_level.load()) return;
  std::cerr << "otut: " << severity_name(severity) << ": " << message
            << std::endl;
}

}  // namespace otut
