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

#include "exactq/sym.hpp"

#include <algorithm>
#include <map>

#include "exactq/builders.hpp"
#include "exactq/error.hpp"

namespace exactq {

namespace {

using Config = std::string;

int live_of(const Config &c) {
    return static_cast<int>(c.size()) - 1;
}

Config strip_ends(const Config &c) {
    return c.substr(1, c.size() - 2);
}

Config star(Config c, int pos) {
    c[pos] = '*';
    return c;
}

PlanPtr make_plan(PlanInfo info, NodePtr root) {
    return std::make_shared<const Plan>(Plan{std::move(info), std::move(root)});
}

class SymBuilder {
   public:
    SymBuilder(const SymSpec &spec, SymStrategy strategy) : spec_(spec), strategy_(strategy) {
    }

    PlanPtr build() {
        Config a;
        for (auto v : spec_.a) {
            a += static_cast<char>('0' + v);
        }
        PlanInfo info{
            strategy_ == SymStrategy::CenterSweep ? "sym" : "sym-outward",
            {{"n", spec_.n()}, {"g", spec_.g}},
            spec_.n(),
            sym_query_bound(spec_, strategy_),
            false};
        if (auto done = decided(a)) {
            return make_plan(info, *done);
        }
        if (strategy_ == SymStrategy::Outward) {
            return make_plan(info, call_node("start", outward(a), remap_keep_all(), discard()));
        }
        Config padded = std::string(2 * spec_.g, '0') + a;
        return make_plan(info, call_node("pad", sweep(padded, 0), remap_keep_all(2 * spec_.g, 0), discard()));
    }

   private:
    static std::optional<NodePtr> decided(const Config &c) {
        if (c.find('0') == std::string::npos) {
            return output_node(true);
        }
        if (c.find('1') == std::string::npos) {
            return output_node(false);
        }
        return std::nullopt;
    }

    PlanPtr wrap(const Config &c, NodePtr root) {
        return make_plan(PlanInfo{"sym-stage", {}, live_of(c), 0, false, true}, std::move(root));
    }

    NodePtr finish(const Config &c) {
        int k = -1;
        for (int p = 0; p < static_cast<int>(c.size()); p++) {
            if (c[p] == '1') {
                if (k >= 0) {
                    throw Error(ErrorCode::InvalidArgument, "more than one candidate weight left: " + c);
                }
                k = p;
            }
        }
        return call_node("exact", build_exact_k(live_of(c), k), remap_keep_all(), discard());
    }

    PlanPtr sweep(const Config &c, int appended) {
        std::string key = c + "#" + std::to_string(appended);
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        PlanPtr plan = wrap(c, sweep_node(c, appended));
        memo_.emplace(key, plan);
        return plan;
    }

    NodePtr sweep_node(const Config &c, int appended) {
        if (auto done = decided(c)) {
            return *done;
        }
        const int n = live_of(c);
        for (int i = 0; 2 * i < n; i++) {
            int j = n - i;
            if (c[i] == '1' && c[j] == '1') {
                auto same = remap_keep_all();
                return attach(
                    "sweep step", unbalance_step(n, j - i),
                    {
                        call_node("drop pair", sweep(strip_ends(c), appended), remap_remove_pair(), discard()),
                        call_node("not j", sweep(star(c, j), appended), same, discard()),
                        call_node("not i", sweep(star(c, i), appended), same, discard()),
                    });
            }
        }
        if (appended <= 4 * spec_.g) {
            return call_node("append 0", sweep(c + "0", appended + 1), remap_keep_all(0, 1), discard());
        }
        return finish(c);
    }

    PlanPtr outward(const Config &c) {
        std::string key = "o" + c;
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        PlanPtr plan = wrap(c, outward_node(c));
        memo_.emplace(key, plan);
        return plan;
    }

    NodePtr outward_node(const Config &c) {
        if (auto done = decided(c)) {
            return *done;
        }
        const int n = live_of(c);
        int left = -1, right = -1, ones = 0;
        for (int p = 0; p <= n; p++) {
            if (c[p] != '1') {
                continue;
            }
            ones++;
            if (2 * p < n && left < 0) {
                left = p;
            }
            if (2 * p > n) {
                right = p;
            }
        }
        if (ones == 1) {
            return finish(c);
        }
        if (left >= 0 && right >= 0) {
            auto same = remap_keep_all();
            return attach(
                "outward step", uw_step(n, n - 2 * left, 2 * right - n),
                {
                    call_node("drop pair", outward(strip_ends(c)), remap_remove_pair(), discard()),
                    call_node("not left", outward(star(c, left)), same, discard()),
                    call_node("not right", outward(star(c, right)), same, discard()),
                });
        }
        if (right >= 0) {
            return call_node("append 0", outward(c + "0"), remap_keep_all(0, 1), discard());
        }
        return call_node("prepend 0", outward("0" + c), remap_keep_all(1, 0), discard());
    }

    SymSpec spec_;
    SymStrategy strategy_;
    std::map<std::string, PlanPtr> memo_;
};

}  // namespace

std::string SymSpec::str() const {
    std::string s;
    for (auto v : a) {
        s += static_cast<char>('0' + v);
    }
    return s;
}

SymSpec make_sym_spec(const std::string &a, int g) {
    if (a.empty()) {
        throw Error(ErrorCode::InconsistentSpec, "a must have n+1 >= 1 entries");
    }
    if (g < 0) {
        throw Error(ErrorCode::InconsistentSpec, "g must be non-negative");
    }
    SymSpec spec;
    spec.g = g;
    for (char ch : a) {
        if (ch != '0' && ch != '1') {
            throw Error(ErrorCode::InconsistentSpec, "a must be a 0/1 string");
        }
        spec.a.push_back(ch == '1');
    }
    const int n = spec.n();
    if (n < 1) {
        throw Error(ErrorCode::InconsistentSpec, "a must describe n >= 1 variables");
    }
    for (int i = 0; i <= n; i++) {
        if (spec.a[i] && std::abs(2 * i - n) > 2 * g) {
            throw Error(
                ErrorCode::InconsistentSpec,
                "a[" + std::to_string(i) + "] = 1 lies farther than g = " + std::to_string(g) + " from n/2");
        }
    }
    return spec;
}

PlanPtr build_sym(const SymSpec &spec, SymStrategy strategy) {
    make_sym_spec(spec.str(), spec.g);
    return SymBuilder(spec, strategy).build();
}

int sym_query_bound(const SymSpec &spec, SymStrategy strategy) {
    int half = spec.n() / 2;
    return strategy == SymStrategy::CenterSweep ? half + 7 * spec.g + 1 : half + 5 * spec.g;
}

}  // namespace exactq
