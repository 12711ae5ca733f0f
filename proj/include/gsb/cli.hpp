/* Copyright 2026 The gsb Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gsb::cli {

enum ExitCode : int {
  kOk = 0,
  kPropertyFalse = 1,
  kBudget = 2,
  kInputError = 3,
};

/// Runs `gsb ARGS...` (without the program name), writing to out and err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gsb::cli
