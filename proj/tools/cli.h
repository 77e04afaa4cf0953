// Copyright 2026 The Cliffred Authors
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

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cliffred::cli {

/// Exit statuses. Every failure also prints one line
/// "error: <code>: <message>" to the error stream.
enum class ExitCode : int {
    Ok = 0,
    Usage = 2,
    Io = 3,
    Parse = 4,
    CapExceeded = 5,
    AllZero = 6,
    NoThreshold = 7,
    TheoremViolation = 8,
    Undefined = 9,
    InvalidInput = 10,
};

const char *code_name(ExitCode code);

class CliError : public std::runtime_error {
   public:
    CliError(ExitCode code, const std::string &message) : std::runtime_error(message), code_(code) {}
    ExitCode code() const { return code_; }

   private:
    ExitCode code_;
};

/// 64-bit FNV-1a.
uint64_t fnv1a64(std::string_view bytes);
std::string digest(std::string_view bytes);

/// Runs one command. args excludes the program name. The report goes to out;
/// errors go to err. Thread count comes from CLIFFRED_THREADS.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace cliffred::cli
