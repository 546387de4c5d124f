// Copyright 2026 The latsec Authors
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

#ifndef LATSEC_SRC_SHORT_VECTORS_HPP_
#define LATSEC_SRC_SHORT_VECTORS_HPP_

#include <Eigen/Dense>

#include <functional>
#include <span>

namespace latsec::detail {

// Fincke-Pohst enumeration of every integer vector x (zero included) with
// x^T G x <= bound, up to a relative slack of 1e-9 on the bound. Callers that
// need an exact cut re-check the norm themselves. G must be positive definite.
void enumerate_short_vectors(const Eigen::MatrixXd& gram, double bound,
                             const std::function<void(std::span<const long long>)>& visit);

}  // namespace latsec::detail

#endif  // LATSEC_SRC_SHORT_VECTORS_HPP_
