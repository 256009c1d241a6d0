// Copyright 2026 The Cardgauge Authors.
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

#include "error.hpp"

namespace cardgauge {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo:
      return "IoError";
    case ErrorCode::kSchema:
      return "SchemaError";
    case ErrorCode::kDuplicateId:
      return "DuplicateId";
    case ErrorCode::kAliasCollision:
      return "AliasCollision";
    case ErrorCode::kDepthExceeded:
      return "DepthExceeded";
    case ErrorCode::kModuleCount:
      return "ModuleCountViolation";
    case ErrorCode::kParse:
      return "ParseError";
    case ErrorCode::kEmptyDocument:
      return "EmptyDocument";
    case ErrorCode::kUnknownModule:
      return "UnknownModule";
    case ErrorCode::kUnknownParameter:
      return "UnknownParameter";
    case ErrorCode::kEmptyModule:
      return "EmptyModule";
    case ErrorCode::kEmptyCorpus:
      return "EmptyCorpus";
    case ErrorCode::kDuplicateProject:
      return "DuplicateProject";
    case ErrorCode::kVersionMismatch:
      return "VersionMismatch";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace cardgauge
