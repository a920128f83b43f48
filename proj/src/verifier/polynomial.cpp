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

#include "exactq/polynomial.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "exactq/error.hpp"
#include "exactq/verify.hpp"

namespace exactq {

namespace {

double binom(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    double r = 1;
    for (int i = 1; i <= k; i++) {
        r = r * (n - k + i) / i;
    }
    return r;
}

void check_size(int n) {
    if (n < 0 || n > 14) {
        throw Error(ErrorCode::InvalidArgument, "polynomial extraction is limited to n <= 14");
    }
}

/// Monomial coefficients of the polynomial through (s, values[s]), s = 0..n.
std::vector<amp_t> interpolate(const std::vector<amp_t> &values) {
    const int m = static_cast<int>(values.size());
    std::vector<amp_t> dd = values;
    for (int level = 1; level < m; level++) {
        for (int s = m - 1; s >= level; s--) {
            dd[s] = (dd[s] - dd[s - 1]) / static_cast<double>(level);
        }
    }
    std::vector<amp_t> coeffs(m, 0.0);
    for (int k = m - 1; k >= 0; k--) {
        // coeffs <- coeffs * (s - k) + dd[k]
        for (int p = m - 1; p >= 1; p--) {
            coeffs[p] = coeffs[p - 1] - static_cast<double>(k) * coeffs[p];
        }
        coeffs[0] = -static_cast<double>(k) * coeffs[0] + dd[k];
    }
    return coeffs;
}

std::optional<amp_t> leaf_value(const RunTree &tree, const std::vector<std::string> &path, const Label &label) {
    for (int leaf : tree.leaves()) {
        if (tree.path_to(leaf) == path) {
            return tree.nodes[leaf].amplitudes.amplitude(label);
        }
    }
    return std::nullopt;
}

}  // namespace

void walsh_hadamard(std::vector<amp_t> &v) {
    for (size_t h = 1; h < v.size(); h <<= 1) {
        for (size_t i = 0; i < v.size(); i += h << 1) {
            for (size_t j = i; j < i + h; j++) {
                amp_t a = v[j], b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
    }
}

MultilinearPoly MultilinearPoly::from_values(int n, std::vector<amp_t> values) {
    check_size(n);
    if (values.size() != (size_t{1} << n)) {
        throw Error(ErrorCode::InvalidArgument, "need 2^n values");
    }
    walsh_hadamard(values);
    const double scale = 1.0 / static_cast<double>(values.size());
    for (auto &v : values) {
        v *= scale;
    }
    return MultilinearPoly{n, std::move(values)};
}

std::vector<amp_t> MultilinearPoly::values() const {
    std::vector<amp_t> v = coeffs;
    walsh_hadamard(v);
    return v;
}

amp_t MultilinearPoly::evaluate(const std::vector<uint8_t> &x) const {
    uint32_t mask = 0;
    for (int i = 0; i < n; i++) {
        mask |= static_cast<uint32_t>(x[i] & 1) << i;
    }
    amp_t total = 0;
    for (uint32_t s = 0; s < coeffs.size(); s++) {
        total += (std::popcount(s & mask) & 1) ? -coeffs[s] : coeffs[s];
    }
    return total;
}

int MultilinearPoly::degree(double tolerance) const {
    double biggest = 0;
    for (const auto &c : coeffs) {
        biggest = std::max(biggest, std::abs(c));
    }
    int deg = 0;
    for (uint32_t s = 0; s < coeffs.size(); s++) {
        if (std::abs(coeffs[s]) > std::max(tolerance * biggest, 1e-12)) {
            deg = std::max(deg, std::popcount(s));
        }
    }
    return deg;
}

std::string MultilinearPoly::str(double tolerance) const {
    std::ostringstream out;
    bool first = true;
    for (uint32_t s = 0; s < coeffs.size(); s++) {
        if (std::abs(coeffs[s]) <= tolerance) {
            continue;
        }
        if (!first) {
            out << " + ";
        }
        first = false;
        out << coeffs[s].real();
        if (std::abs(coeffs[s].imag()) > tolerance) {
            out << (coeffs[s].imag() < 0 ? "-" : "+") << std::abs(coeffs[s].imag()) << "i";
        }
        for (int i = 0; i < n; i++) {
            if (s >> i & 1) {
                out << "*x" << (i + 1);
            }
        }
    }
    return first ? "0" : out.str();
}

PolySelector PolySelector::acceptance() {
    return PolySelector{};
}

PolySelector PolySelector::leaf(std::vector<std::string> path, Label label) {
    return PolySelector{Kind::LeafAmplitude, std::move(path), label};
}

MultilinearPoly extract_multilinear(const Plan &plan, const PolySelector &selector, const RunOptions &options) {
    const int n = plan.info.n;
    check_size(n);
    std::vector<amp_t> values(size_t{1} << n);
    if (selector.kind == PolySelector::Kind::Acceptance) {
        SummaryEngine engine(options.branch_epsilon);
        for (uint64_t code = 0; code < values.size(); code++) {
            values[code] = engine.run(plan, input_bits(code, n), options.entry).mass[1];
        }
    } else {
        RunOptions follow = options;
        follow.follow = selector.path;
        for (uint64_t code = 0; code < values.size(); code++) {
            RunTree tree = run_on_input(plan, input_bits(code, n), follow);
            values[code] = leaf_value(tree, selector.path, selector.label).value_or(0.0);
        }
    }
    return MultilinearPoly::from_values(n, std::move(values));
}

UnivariatePoly symmetrize_to_univariate(const MultilinearPoly &poly, double tolerance) {
    const int n = poly.n;
    std::vector<amp_t> level(n + 1, 0.0);
    for (uint32_t s = 0; s < poly.coeffs.size(); s++) {
        level[std::popcount(s)] += poly.coeffs[s];
    }
    for (int k = 0; k <= n; k++) {
        level[k] /= binom(n, k);
    }
    UnivariatePoly q;
    q.n = n;
    q.values.assign(n + 1, 0.0);
    for (int s = 0; s <= n; s++) {
        for (int k = 0; k <= n; k++) {
            double ek = 0;
            for (int j = 0; j <= std::min(s, k); j++) {
                ek += binom(s, j) * binom(n - s, k - j) * ((j & 1) ? -1.0 : 1.0);
            }
            q.values[s] += level[k] * ek;
        }
    }
    // Second route: average the function itself over each weight class.
    std::vector<amp_t> f = poly.values();
    std::vector<amp_t> avg(n + 1, 0.0);
    for (uint32_t x = 0; x < f.size(); x++) {
        avg[std::popcount(x)] += f[x];
    }
    double scale = 1;
    for (const auto &v : f) {
        scale = std::max(scale, std::abs(v));
    }
    for (int s = 0; s <= n; s++) {
        avg[s] /= binom(n, s);
        if (std::abs(avg[s] - q.values[s]) > tolerance * scale) {
            throw Error(
                ErrorCode::NotSymmetrizable, "weight class " + std::to_string(s) + " disagrees with the level averages");
        }
    }
    q.coeffs = interpolate(q.values);
    return q;
}

int root_count_lower_bound(const std::map<int, amp_t> &values, int claimed_nonzero, double tolerance) {
    auto it = values.find(claimed_nonzero);
    if (it == values.end() || std::abs(it->second) < tolerance) {
        throw Error(ErrorCode::ZeroWitnessMissing, "no nonzero value at s = " + std::to_string(claimed_nonzero));
    }
    int zeros = 0;
    for (const auto &[_, v] : values) {
        zeros += std::abs(v) < tolerance;
    }
    return zeros;
}

ZeroPatternResult zero_pattern_bound(const Plan &plan, int k, int l) {
    const int n = plan.info.n;
    if (k < 0 || l > n - k || k > l) {
        throw Error(ErrorCode::DomainError, "zero pattern needs 0 <= k <= l <= n - k");
    }
    const int m = n - k;
    check_size(m);
    auto full_input = [&](uint64_t code) {
        std::vector<uint8_t> x(n, 1);
        auto rest = input_bits(code, m);
        std::copy(rest.begin(), rest.end(), x.begin() + k);
        return x;
    };
    RunTree base = run_on_input(plan, full_input(0));
    ZeroPatternResult result;
    bool found = false;
    for (int leaf : base.leaves()) {
        const auto &node = base.nodes[leaf];
        if (!*node.output) {
            continue;
        }
        for (const auto &[label, a] : node.amplitudes) {
            if (std::abs(a) > 1e-6) {
                result.leaf_path = base.path_to(leaf);
                result.label = label;
                result.leaf_queries = node.queries;
                found = true;
                break;
            }
        }
        if (found) {
            break;
        }
    }
    if (!found) {
        throw Error(ErrorCode::ZeroWitnessMissing, "no accepting leaf is nonzero on the all-zero remainder");
    }
    RunOptions follow;
    follow.follow = result.leaf_path;
    std::vector<amp_t> values(size_t{1} << m);
    for (uint64_t code = 0; code < values.size(); code++) {
        RunTree tree = run_on_input(plan, full_input(code), follow);
        values[code] = leaf_value(tree, result.leaf_path, result.label).value_or(0.0);
    }
    MultilinearPoly poly = MultilinearPoly::from_values(m, std::move(values));
    result.leaf_degree = poly.degree();
    result.q = symmetrize_to_univariate(poly);
    std::map<int, amp_t> points;
    for (int s = 0; s <= m; s++) {
        points[s] = result.q.values[s];
    }
    result.bound = root_count_lower_bound(points, 0);
    return result;
}

}  // namespace exactq
