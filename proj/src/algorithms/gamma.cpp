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

#include "exactq/gamma.hpp"

#include <cmath>
#include <string>

#include "exactq/error.hpp"

namespace exactq {

namespace {

void check_step_args(int n, int d, double gamma_prev) {
    if (d < 1) {
        throw Error(ErrorCode::DomainError, "d must be positive");
    }
    if (n == d) {
        throw Error(ErrorCode::DegenerateCase, "n = d has no recursive step (n^2 - d^2 = 0)");
    }
    if (n < d || n < 3 || (n - d) % 2 != 0) {
        throw Error(ErrorCode::DomainError, "recursive step needs n > d, n >= 3 and n = d mod 2");
    }
    if (!(gamma_prev >= 0)) {
        throw Error(ErrorCode::DomainError, "gamma' must be non-negative");
    }
    if (gamma_prev >= 1) {
        throw Error(ErrorCode::DivergedChain, "gamma' = " + std::to_string(gamma_prev) + " >= 1");
    }
}

}  // namespace

double gamma_next(int n, int d, double gamma_prev) {
    check_step_args(n, d, gamma_prev);
    const double nn = n;
    const double dd = static_cast<double>(d) * d;
    const double denom = (nn * nn - dd) * (nn * nn - dd);
    return (nn * nn * (nn - 2) * (nn - 2) * gamma_prev / (1 - gamma_prev) + dd * dd) / denom;
}

ChainBase chain_base(int d) {
    switch (d) {
        case 1:
            return {0, 0.0, 0};
        case 2:
            return {0, 0.0, 0};
        case 3:
            return {1, 1.0 / 112.0, 2};
        default:
            throw Error(ErrorCode::NoChain, "no single chain is known for d = " + std::to_string(d));
    }
}

int decay_threshold(int d) {
    switch (d) {
        case 1:
            return 5;
        case 2:
            return 12;
        case 3:
            return 23;
        default:
            throw Error(ErrorCode::NoChain, "no decay threshold for d = " + std::to_string(d));
    }
}

GammaChain gamma_chain(int d, int k0, double gamma0, int n_max) {
    if (d < 1 || k0 < 0) {
        throw Error(ErrorCode::DomainError, "chain needs d >= 1 and k0 >= 0");
    }
    GammaChain chain;
    chain.d = d;
    chain.k0 = k0;
    int n = d + 2 * k0;
    double g = gamma0;
    chain.entries.emplace_back(n, g);
    while (n + 2 <= n_max) {
        n += 2;
        g = gamma_next(n, d, g);
        if (g >= 1) {
            throw Error(ErrorCode::DivergedChain, "gamma reaches " + std::to_string(g) + " at n = " + std::to_string(n));
        }
        chain.entries.emplace_back(n, g);
    }
    int threshold = d <= 3 ? decay_threshold(d) : n_max + 1;
    for (const auto &[m, gm] : chain.entries) {
        chain.valid = chain.valid && gm < 1;
        if (m >= threshold) {
            chain.decays = chain.decays && gm <= 1.0 / m;
        }
    }
    return chain;
}

GammaChain standard_chain(int d, int n_max) {
    ChainBase base = chain_base(d);
    return gamma_chain(d, base.k0, base.gamma0, n_max);
}

double decay_quartic(int n, int d) {
    const double x = n;
    const double d2 = static_cast<double>(d) * d;
    const double d4 = d2 * d2;
    return x * x * x * x + (-2 * d2 - 4) * x * x * x + (6 * d2 - d4) * x * x + 4 * d4 * x - 3 * d4;
}

StepConstants solve_step_constants(int n, int d, double gamma_prev) {
    check_step_args(n, d, gamma_prev);
    StepConstants k;
    k.n = n;
    k.d = d;
    k.gamma_prev = gamma_prev;
    const double nn = n;
    const double dd = static_cast<double>(d) * d;
    const double m = nn * nn - dd;
    auto &c = k.c;
    c[1] = -dd / m;
    c[3] = std::pow(nn, 1.5) / m;
    c[4] = dd / nn;
    c[2] = std::sqrt(gamma_prev * nn * nn * (nn - 2) * (nn - 2) / ((1 - gamma_prev) * m * m));
    c[5] = c[2] / std::sqrt(nn - 2);
    c[6] = c[3] / std::sqrt(nn);
    c[7] = dd;
    c[8] = c[3] / std::sqrt(nn);
    c[9] = c[5] / std::sqrt(nn - 2);
    c[10] = c[5] / std::sqrt(nn - 2);
    c[11] = std::sqrt(c[8] * c[8] + c[9] * c[9]);
    k.gamma = c[1] * c[1] + c[2] * c[2];
    if (k.gamma >= 1) {
        throw Error(ErrorCode::DivergedChain, "step gamma = " + std::to_string(k.gamma) + " >= 1");
    }
    return k;
}

std::array<double, 12> step_residuals(const StepConstants &k) {
    const double n = k.n;
    const double rn = std::sqrt(n);
    const double rm = std::sqrt(n - 2);
    const auto &c = k.c;
    return {
        c[1] * c[1] + c[2] * c[2] - k.gamma,
        c[3] * n - c[3] * c[4] - rn,
        c[3] * c[4] + c[1] * rn,
        c[2] - c[5] * rm,
        c[3] - c[6] * rn,
        c[5] - c[9] * rm,
        c[3] * c[4] * n - c[6] * c[7] * rn,
        c[3] - c[8] * rn,
        c[5] - c[10] * rm,
        c[8] * c[8] + c[9] * c[9] - c[11] * c[11],
        c[10] - c[11] * std::sqrt(k.gamma_prev),
        c[7] - static_cast<double>(k.d) * k.d,
    };
}

double max_step_residual(const StepConstants &k) {
    double worst = 0;
    for (double r : step_residuals(k)) {
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

}  // namespace exactq
