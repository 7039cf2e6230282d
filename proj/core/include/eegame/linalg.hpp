// SPDX-License-Identifier: Apache-2.0
//
// eegame - energy-efficiency games on MIMO interference channels
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <Eigen/Dense>
#include <complex>

namespace eegame {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

/// (A + A^H)/2, suppresses round-off drift after products of Hermitian factors.
inline CMat hermitize(const CMat& a) { return 0.5 * (a + a.adjoint()); }

inline double frobenius(const CMat& a) { return a.norm(); }

/// Smallest eigenvalue of a Hermitian matrix; 0 for an empty matrix.
inline double min_eigenvalue(const CMat& a) {
    if (a.rows() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<CMat> es(a, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

/// Largest eigenvalue of a Hermitian matrix; 0 for an empty matrix. This
/// equals the spectral radius for PSD inputs.
inline double max_eigenvalue(const CMat& a) {
    if (a.rows() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<CMat> es(a, Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
}

/// Kronecker product of complex matrices.
inline CMat kronecker(const CMat& a, const CMat& b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

}  // namespace eegame
