// Copyright 2026 The chartqa Authors.
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

#include "chartqa/core/error.h"

namespace chartqa {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedArchive:
      return "MalformedArchive";
    case ErrorCode::kMissingMetadata:
      return "MissingMetadata";
    case ErrorCode::kMetadataParseError:
      return "MetadataParseError";
    case ErrorCode::kEmptyCorpus:
      return "EmptyCorpus";
    case ErrorCode::kIndexParseError:
      return "IndexParseError";
    case ErrorCode::kEmptyIndex:
      return "EmptyIndex";
    case ErrorCode::kFetchError:
      return "FetchError";
    case ErrorCode::kChecksumMismatch:
      return "ChecksumMismatch";
    case ErrorCode::kDuplicateSnapshot:
      return "DuplicateSnapshot";
    case ErrorCode::kStorageError:
      return "StorageError";
    case ErrorCode::kEngineUnavailable:
      return "EngineUnavailable";
    case ErrorCode::kRenderFailed:
      return "RenderFailed";
    case ErrorCode::kSpanLocationFailed:
      return "SpanLocationFailed";
    case ErrorCode::kAllZeroDifferences:
      return "AllZeroDifferences";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace chartqa
