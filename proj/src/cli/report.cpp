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

#include <iomanip>
#include <sstream>

#include "exactq/cli.hpp"

namespace exactq {

using ojson = nlohmann::ordered_json;

nlohmann::ordered_json report_to_json(const VerificationReport &report, bool verbose) {
    ojson j;
    j["family"] = report.family;
    ojson params = ojson::object();
    for (const auto &[name, value] : report.params) {
        params[name] = value;
    }
    j["params"] = params;
    j["exact"] = report.exact;
    j["worst_case_queries"] = report.worst_case_queries;
    j["claimed_bound"] = report.claimed_bound;
    j["max_norm_residual"] = report.max_norm_residual;
    j["inputs_checked"] = report.inputs_checked;
    j["tool_version"] = kToolVersion;
    ojson ce = ojson::array();
    for (const auto &c : report.counterexamples) {
        ce.push_back({{"input", c.input}, {"output", c.output}, {"probability", c.probability}});
    }
    j["counterexamples"] = ce;
    if (verbose) {
        ojson rows = ojson::array();
        for (const auto &r : report.per_input) {
            rows.push_back(
                {{"input", r.input},
                 {"expected", r.expected},
                 {"accept", r.accept},
                 {"reject", r.reject},
                 {"worst_queries", r.worst_queries}});
        }
        j["per_input"] = rows;
    }
    return j;
}

VerificationReport report_from_json(const nlohmann::ordered_json &j) {
    VerificationReport r;
    r.family = j.at("family").get<std::string>();
    for (const auto &[name, value] : j.at("params").items()) {
        r.params[name] = value.get<double>();
    }
    r.exact = j.at("exact").get<bool>();
    r.worst_case_queries = j.at("worst_case_queries").get<int>();
    r.claimed_bound = j.at("claimed_bound").get<int>();
    r.max_norm_residual = j.at("max_norm_residual").get<double>();
    r.inputs_checked = j.value("inputs_checked", 0);
    for (const auto &c : j.value("counterexamples", ojson::array())) {
        r.counterexamples.push_back(
            {c.at("input").get<std::string>(), c.at("output").get<bool>(), c.at("probability").get<double>()});
    }
    for (const auto &p : j.value("per_input", ojson::array())) {
        r.per_input.push_back(
            {p.at("input").get<std::string>(), p.at("expected").get<bool>(), p.at("accept").get<double>(),
             p.at("reject").get<double>(), p.at("worst_queries").get<int>()});
    }
    return r;
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') {
            q += '"';
        }
        q += c;
    }
    return q + "\"";
}

namespace {

std::string num(double v) {
    std::ostringstream s;
    s << std::setprecision(17) << v;
    return s.str();
}

std::string params_string(const VerificationReport &r) {
    std::string s;
    for (const auto &[name, value] : r.params) {
        if (!s.empty()) {
            s += ";";
        }
        s += name + "=" + num(value);
    }
    return s;
}

}  // namespace

std::string report_to_csv(const VerificationReport &report, bool verbose) {
    std::ostringstream out;
    if (verbose) {
        out << "family,params,input,expected,accept,reject,worst_queries\r\n";
        for (const auto &r : report.per_input) {
            out << csv_field(report.family) << ',' << csv_field(params_string(report)) << ',' << r.input << ','
                << (r.expected ? 1 : 0) << ',' << num(r.accept) << ',' << num(r.reject) << ',' << r.worst_queries
                << "\r\n";
        }
        return out.str();
    }
    out << "family,params,exact,worst_case_queries,claimed_bound,max_norm_residual,inputs_checked,"
           "counterexamples,tool_version\r\n";
    out << csv_field(report.family) << ',' << csv_field(params_string(report)) << ',' << (report.exact ? "true" : "false")
        << ',' << report.worst_case_queries << ',' << report.claimed_bound << ',' << num(report.max_norm_residual)
        << ',' << report.inputs_checked << ',' << report.counterexamples.size() << ',' << kToolVersion << "\r\n";
    return out.str();
}

std::string report_to_text(const VerificationReport &report, bool verbose) {
    std::ostringstream out;
    out << "family:             " << report.family << "\n";
    out << "params:             " << params_string(report) << "\n";
    out << "exact:              " << (report.exact ? "yes" : "no") << "\n";
    out << "worst-case queries: " << report.worst_case_queries << " (claimed " << report.claimed_bound << ")\n";
    out << "inputs checked:     " << report.inputs_checked << "\n";
    out << "max norm residual:  " << report.max_norm_residual << "\n";
    for (const auto &c : report.counterexamples) {
        out << "counterexample:     x=" << c.input << " output " << c.output << " with probability " << c.probability
            << "\n";
    }
    if (verbose) {
        for (const auto &r : report.per_input) {
            out << r.input << " expected " << r.expected << " accept " << r.accept << " reject " << r.reject
                << " queries " << r.worst_queries << "\n";
        }
    }
    return out.str();
}

}  // namespace exactq
