// Copyright 2026 The exactq Authors
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

#ifndef EXACTQ_CLI_HPP
#define EXACTQ_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

#include "exactq/verify.hpp"

namespace exactq {

inline constexpr const char *kToolVersion = "0.1.0";

enum ExitCode { kExitOk = 0, kExitFailure = 1, kExitInvalid = 2 };

struct RunConfig {
    std::string command;
    std::string family;
    std::optional<int> n, k, l, d, u, w, g, k0, n_max;
    std::string a;
    std::string strategy = "sweep";
    double tol = 1e-9;
    double branch_tol = kBranchEpsilon;
    int parallel = 0;
    std::string format = "json";
    std::string out;
    bool verbose = false;
    bool appendix_a = false;
    bool literal_signs = false;
};

/// Parses argv and runs the command; returns the process exit code.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

int cmd_verify(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_gamma(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_poly(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_constants(const RunConfig &config, std::ostream &out, std::ostream &err);

nlohmann::ordered_json report_to_json(const VerificationReport &report, bool verbose);
VerificationReport report_from_json(const nlohmann::ordered_json &j);
/// RFC 4180; one summary row, or one row per input when verbose.
std::string report_to_csv(const VerificationReport &report, bool verbose);
std::string report_to_text(const VerificationReport &report, bool verbose);

/// Quotes a CSV field when it contains a comma, quote or line break.
std::string csv_field(const std::string &s);

}  // namespace exactq

#endif
