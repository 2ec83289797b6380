// Copyright 2026 The lazywalk Authors
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

#ifndef LAZYWALK_VERIFY_H
#define LAZYWALK_VERIFY_H

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace lazywalk {

struct VerifyOptions {
    std::vector<std::size_t> n_values{4, 16, 64};
    std::vector<double> phis{0.0, 0.3, 0.9272952180016122};  // last is asin(0.8)
    std::size_t steps = 200;
    /// Negative control: feed eta = 0 wherever the corrected phase belongs.
    bool force_uncorrected_eta = false;
};

/// Worst deviation of one invariant over the whole (N, phi, eta) grid.
struct InvariantCheck {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;

    bool passed() const;
};

/// Runs unitarity, eigenvector, phase, matching, norm, symmetry, subspace and
/// full-vs-reduced checks. Throws std::invalid_argument on empty lists or
/// invalid N / phi.
std::vector<InvariantCheck> run_verification(const VerifyOptions &options);

std::string format_report(std::span<const InvariantCheck> checks);

}  // namespace lazywalk

#endif  // LAZYWALK_VERIFY_H
