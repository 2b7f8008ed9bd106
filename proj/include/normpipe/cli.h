// Copyright 2026 The Normpipe Authors.
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

#ifndef NORMPIPE_CLI_H_
#define NORMPIPE_CLI_H_

#include <istream>
#include <ostream>

namespace normpipe {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitRemote = 4;

// Entry point of the normpipe tool. Data goes to `out`, warnings and
// errors to `err`; `in` is read when no --in file is given. Returns the
// process exit code.
int RunCli(int argc, const char* const* argv, std::istream& in,
           std::ostream& out, std::ostream& err);

}  // namespace normpipe

#endif  // NORMPIPE_CLI_H_
