/*
   Copyright 2026 The ffdigits Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FFDIGITS_CLI_HPP
#define FFDIGITS_CLI_HPP

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffdigits/poly.hpp"

namespace ffdigits {

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct CliConfig {
    std::string command;  // verify | search | period | certify | field
    std::string target;   // verify kind or period function
    u64 q = 0;            // 0 = command default
    u64 p = 0;
    unsigned s = 1;
    unsigned n_lo = 0, n_hi = 0;
    std::string weights;  // W syntax
    u64 c = 0;
    std::string relation = "eq";
    std::string poly;
    bool cross_check = false;
    std::string out;
    std::string format = "json";
    unsigned workers = 0;
    u64 seed = 0x5eed;
    u64 trials = 1000;
    std::optional<unsigned> cap_bits;

    /// Argument string that parses back to an equal config.
    std::string canonical() const;

    friend bool operator==(const CliConfig&, const CliConfig&) = default;
};

/// Throws UsageError on bad arguments.
CliConfig parse_cli(const std::vector<std::string>& args);

/// Splits on whitespace, honoring double quotes.
std::vector<std::string> split_args(const std::string& line);

/// Comma list of integers, ranges "a..b", and keywords all = [0,n], interior = [1,n-1].
WeightSet parse_weights(const std::string& text, unsigned n);

/// "a" or "a..b".
std::pair<unsigned, unsigned> parse_range(const std::string& text);

/// Exit code: 0 success or match, 1 NONE / inconclusive / mismatch, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ffdigits

#endif  // FFDIGITS_CLI_HPP
