// Copyright 2026 The UBA Beam Alignment Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "uba/error.hpp"

namespace uba {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidGeometry: return "invalid geometry";
    case ErrorCode::kDegenerateSpace: return "degenerate space";
    case ErrorCode::kModelViolation: return "model violation";
    case ErrorCode::kOrdering: return "ordering error";
    case ErrorCode::kIndex: return "index error";
    case ErrorCode::kDomain: return "domain error";
    case ErrorCode::kState: return "state error";
    case ErrorCode::kProtocolMisuse: return "protocol misuse";
    case ErrorCode::kConfig: return "config error";
    case ErrorCode::kExperiment: return "experiment error";
    case ErrorCode::kIo: return "I/O error";
  }
  return "error";
}

}  // namespace uba
