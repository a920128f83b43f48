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

#ifndef EXACTQ_POLYNOMIAL_HPP
#define EXACTQ_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "exactq/plan.hpp"
#include "exactq/runner.hpp"

namespace exactq {

/// Multilinear polynomial in xhat_i = (-1)^{x_i}; coefficient k belongs to the monomial
/// over the variable set encoded by the bits of k.
struct MultilinearPoly {
    int n = 0;
    std::vector<amp_t> coeffs;

    /// Fourier inversion of a function given on every input (bit i of the index is x_{i+1}).
    static MultilinearPoly from_values(int n, std::vector<amp_t> values);
    std::vector<amp_t> values() const;
    amp_t evaluate(const std::vector<uint8_t> &x) const;
    /// Largest |S| with |alpha_S| > max(tolerance * max |alpha|, 1e-12).
    int degree(double tolerance = 1e-9) const;
    std::string str(double tolerance = 1e-12) const;
};

/// In-place Walsh-Hadamard transform (unnormalized).
void walsh_hadamard(std::vector<amp_t> &v);

/// Which function of the input to extract.
struct PolySelector {
    enum class Kind { Acceptance, LeafAmplitude };
    Kind kind = Kind::Acceptance;
    /// Leaf path keys from the root (LeafAmplitude).
    std::vector<std::string> path;
    /// Label whose amplitude is read at the leaf.
    Label label;

    static PolySelector acceptance();
    static PolySelector leaf(std::vector<std::string> path, Label label);
};

/// n <= 14.
MultilinearPoly extract_multilinear(const Plan &plan, const PolySelector &selector, const RunOptions &options = {});

struct UnivariatePoly {
    int n = 0;
    /// q(0..n).
    std::vector<amp_t> values;
    /// q(s) = sum_k coeffs[k] s^k.
    std::vector<amp_t> coeffs;
};

/// Averages over variable permutations without enumerating them, then expresses the
/// result as a polynomial in the Hamming weight s. Throws NotSymmetrizable if the two
/// ways of computing the weight-class averages disagree.
UnivariatePoly symmetrize_to_univariate(const MultilinearPoly &poly, double tolerance = 1e-9);

/// Number of points with |value| < tolerance; a lower bound on the degree of any
/// nonzero polynomial through the values. Throws ZeroWitnessMissing if the value at
/// claimed_nonzero is zero or absent.
int root_count_lower_bound(const std::map<int, amp_t> &values, int claimed_nonzero, double tolerance = 1e-9);

/// Degree argument for EXACT_{k,l}^n with l <= n-k: fix the first k variables to 1, pick
/// an accepting leaf amplitude that is nonzero on the all-zero remainder, symmetrize it
/// over the remaining n-k variables and count its zeros.
struct ZeroPatternResult {
    std::vector<std::string> leaf_path;
    Label label;
    UnivariatePoly q;
    int bound = 0;
    int leaf_degree = 0;
    int leaf_queries = 0;
};
ZeroPatternResult zero_pattern_bound(const Plan &plan, int k, int l);

}  // namespace exactq

#endif
