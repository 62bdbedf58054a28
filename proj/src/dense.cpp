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
#include "qagents/dense.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qagents {

namespace {

Eigen::Matrix2cd to_eigen(const Matrix2 &m) {
    Eigen::Matrix2cd out;
    out << m[0], m[1], m[2], m[3];
    return out;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

Matrix2 scaled(const Matrix2 &m, complex_t s) {
    return {m[0] * s, m[1] * s, m[2] * s, m[3] * s};
}

Matrix2 target_of(GateType type) {
    return type == GateType::Zero
               ? lambda_matrix(Lambda::L1)
               : scaled(lambda_matrix(Lambda::L2), complex_t{0.0, 1.0});
}

} // namespace

void check_dense_guard(std::size_t n_qubits) {
    if (n_qubits > kDenseQubitLimit) {
        throw std::invalid_argument("dense operators are limited to " +
                                    std::to_string(kDenseQubitLimit) +
                                    " qubits, got " + std::to_string(n_qubits));
    }
}

DenseMatrix DenseMatrix::identity(std::size_t n_qubits) {
    check_dense_guard(n_qubits);
    const auto dim = Eigen::Index{1} << n_qubits;
    return DenseMatrix(Storage::Identity(dim, dim));
}

DenseMatrix DenseMatrix::zero(std::size_t n_qubits) {
    check_dense_guard(n_qubits);
    const auto dim = Eigen::Index{1} << n_qubits;
    return DenseMatrix(Storage::Zero(dim, dim));
}

DenseMatrix DenseMatrix::embed(std::size_t n_qubits,
                               const std::map<std::size_t, Matrix2> &factors) {
    check_dense_guard(n_qubits);
    for (const auto &[q, _] : factors) {
        if (q >= n_qubits) {
            throw std::out_of_range("embed: qubit index out of range");
        }
    }
    Storage out = Storage::Identity(1, 1);
    for (std::size_t q = 0; q < n_qubits; ++q) {
        const auto it = factors.find(q);
        const Eigen::MatrixXcd factor = it == factors.end()
                                            ? Eigen::MatrixXcd(Eigen::Matrix2cd::Identity())
                                            : Eigen::MatrixXcd(to_eigen(it->second));
        out = kron(out, factor);
    }
    return DenseMatrix(std::move(out));
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix &rhs) const {
    return DenseMatrix(m_ * rhs.m_);
}
DenseMatrix DenseMatrix::operator+(const DenseMatrix &rhs) const {
    return DenseMatrix(m_ + rhs.m_);
}
DenseMatrix DenseMatrix::operator-(const DenseMatrix &rhs) const {
    return DenseMatrix(m_ - rhs.m_);
}
DenseMatrix DenseMatrix::operator*(complex_t s) const {
    return DenseMatrix(m_ * s);
}

double DenseMatrix::max_abs() const {
    return m_.size() == 0 ? 0.0 : m_.cwiseAbs().maxCoeff();
}

namespace dense {

Matrix2 transition(int i, int j) {
    Matrix2 m{};
    m[static_cast<std::size_t>(2 * i + j)] = 1.0;
    return m;
}

DenseMatrix local_rotation(std::size_t n_qubits, std::size_t qubit,
                           double alpha) {
    const DenseMatrix one = DenseMatrix::identity(n_qubits);
    const DenseMatrix l1 =
        DenseMatrix::embed(n_qubits, {{qubit, lambda_matrix(Lambda::L1)}});
    return one * complex_t{std::cos(alpha / 2.0), 0.0} -
           l1 * complex_t{0.0, std::sin(alpha / 2.0)};
}

DenseMatrix qcnot(std::size_t n_qubits, std::size_t agent, std::size_t env,
                  GateType type) {
    if (agent == env) {
        throw std::invalid_argument("qcnot: agent and env must differ");
    }
    return DenseMatrix::embed(n_qubits,
                              {{agent, transition(0, 0)}, {env, target_of(type)}}) +
           DenseMatrix::embed(n_qubits, {{agent, transition(1, 1)}});
}

DenseMatrix operator_string(const OperatorString &string) {
    std::map<std::size_t, Matrix2> factors;
    for (std::size_t q = 0; q < string.size(); ++q) {
        if (string[q] != Lambda::Identity) {
            factors.emplace(q, lambda_matrix(string[q]));
        }
    }
    return DenseMatrix::embed(string.size(), factors);
}

} // namespace dense

} // namespace qagents
