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

#include "mextree/error.hpp"

namespace mextree {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedXml: return "MalformedXml";
    case ErrorCode::kUnsupportedEntity: return "UnsupportedEntity";
    case ErrorCode::kNoContentMarkup: return "NoContentMarkup";
    case ErrorCode::kContentRootMissing: return "ContentRootMissing";
    case ErrorCode::kEmptyApply: return "EmptyApply";
    case ErrorCode::kUnmappedPragmaticElement: return "UnmappedPragmaticElement";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kSpecViolation: return "SpecViolation";
    case ErrorCode::kInvalidOptions: return "InvalidOptions";
    case ErrorCode::kConverterUnconfigured: return "ConverterUnconfigured";
    case ErrorCode::kConverterUnreachable: return "ConverterUnreachable";
    case ErrorCode::kConverterBadResponse: return "ConverterBadResponse";
  }
  return "Unknown";
}

}  // namespace mextree
