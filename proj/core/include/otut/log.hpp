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
//
// A stderr logger just big enough for the CLI: severity filtering and
// nothing else. Output lines look like "otut: warning: message".

#ifndef OTUT_LOG_HPP_
#define OTUT_LOG_HPP_

#include <string>
#include <string_view>

namespace otut {

enum class LogLevel { debug = 0, info, warning, error, quiet };

// Parses "debug" | "info" | "warning" | "error" | "quiet"; throws
// std::invalid_argument otherwise.
LogLevel log_level_from_string(std::string_view name);

// Process-wide threshold; messages below it are dropped. Defaults to info.
void set_log_level(LogLevel level);
LogLevel log_level();

void log(LogLevel severity, const std::string& message);

inline void log_debug(const std::string& m) { log(LogLevel::debug, m); }
inline void log_info(const std::string& m) { log(LogLevel::info, m); }
inline void log_warning(const std::string& m) { log(LogLevel::warning, m); }
inline void log_error(const std::string& m) { log(LogLevel::error, m); }

}  // namespace otut

#endif  // OTUT_LOG_HPP_
