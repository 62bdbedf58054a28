// Copyright 2026 The qagents Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Dense 2^N x 2^N operators assembled from Kronecker products.
 *
 * This is the verification path: it never touches the bit-indexed kernels,
 * so agreement between the two is a meaningful cross-check.
 */
#pragma once

#include <cstddef>
#include <map>

#include <Eigen/Dense>

#include "qagents/statevec.hpp"

namespace qagents {

inline constexpr std::size_t kDenseQubitLimit = 12;

class DenseMatrix {
  public:
    using Storage = Eigen::MatrixXcd;

    DenseMatrix() = default;
    explicit DenseMatrix(Storage m) : m_(std::move(m)) {}

    static DenseMatrix identity(std::size_t n_qubits);
    static DenseMatrix zero(std::size_t n_qubits);

    /// Kronecker product over all qubits, with `factors[q]` on qubit q and
    /// identity wherever no factor is given.
    static DenseMatrix embed(std::size_t n_qubits,
                             const std::map<std::size_t, Matrix2> &factors);

    [[nodiscard]] std::size_t dimension() const noexcept {
        return static_cast<std::size_t>(m_.rows());
    }
    [[nodiscard]] const Storage &storage() const noexcept { return m_; }
    [[nodiscard]] complex_t operator()(std::size_t r, std::size_t c) const {
        return m_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }

    DenseMatrix operator*(const DenseMatrix &rhs) const;
    DenseMatrix operator+(const DenseMatrix &rhs) const;
    DenseMatrix operator-(const DenseMatrix &rhs) const;
    DenseMatrix operator*(complex_t s) const;

    /// Largest entrywise modulus.
    [[nodiscard]] double max_abs() const;

  private:
    Storage m_;
};

/// Throws std::invalid_argument when n_qubits exceeds the dense limit.
void check_dense_guard(std::size_t n_qubits);

namespace dense {

/// Projector |i><j| on one qubit.
[[nodiscard]] Matrix2 transition(int i, int j);

[[nodiscard]] DenseMatrix local_rotation(std::size_t n_qubits,
                                         std::size_t qubit, double alpha);
/// P00 (x) T + P11 (x) 1 with T = lambda1 or i*lambda2.
[[nodiscard]] DenseMatrix qcnot(std::size_t n_qubits, std::size_t agent,
                                std::size_t env, GateType type);
[[nodiscard]] DenseMatrix operator_string(const OperatorString &string);

} // namespace dense

} // namespace qagents
