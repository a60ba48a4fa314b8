// Copyright 2026 The mextree Authors
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

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mextree {

// Error categories surfaced to callers. The string form (error_name) is the
// machine-readable "error" field of CLI and HTTP error payloads.
enum class ErrorCode {
  kMalformedXml,
  kUnsupportedEntity,
  kNoContentMarkup,
  kContentRootMissing,
  kEmptyApply,
  kUnmappedPragmaticElement,
  kInvalidSpec,
  kSpecViolation,
  kInvalidOptions,
  kConverterUnconfigured,
  kConverterUnreachable,
  kConverterBadResponse,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> offset = std::nullopt)
      : std::runtime_error(message), code_(code), offset_(offset) {}

  ErrorCode code() const noexcept { return code_; }

  // Byte offset into the input, for parse errors.
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> offset_;
};

}  // namespace mextree
