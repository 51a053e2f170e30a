// Copyright 2026 The stosszahl Authors
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

#pragma once

#include <string>

#include "stosszahl/common.hpp"

namespace stosszahl {

/// Complex matrices as JSON: an array of rows, each an array of [re, im] pairs.
std::string matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const std::string& text);

}  // namespace stosszahl
