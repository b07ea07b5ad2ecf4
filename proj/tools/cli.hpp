// Copyright 2023 The Authors.
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

#ifndef POSLAB_TOOLS_CLI_HPP_
#define POSLAB_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace poslab::cli {

// Exit codes beyond 0.
inline constexpr int kExitFailure = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitNotLe = 3;
inline constexpr int kExitBudget = 4;

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace poslab::cli

#endif  // POSLAB_TOOLS_CLI_HPP_
