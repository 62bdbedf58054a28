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
 * Dense pure-state representation of an N-qubit network.
 *
 * Qubit q occupies bit (N - 1 - q) of the basis index, so qubit 0 is the most
 * significant bit (agent-major, big-endian). Agents come first, followed by
 * the environment ring sites 1..M.
 *
 * Single-qubit operators follow the network's own SU(2) convention, which
 * differs from the textbook Pauli matrices in two signs:
 *
 *     lambda1 =  sigma_x
 *     lambda2 = -sigma_y   (i(|0><1| - |1><0|))
 *     lambda3 = -sigma_z   (|1><1| - |0><0|, so lambda3|0> = -|0>)
 */
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qagents {

using complex_t = std::complex<double>;

/// Row-major 2x2 complex matrix: {m00, m01, m10, m11}.
using Matrix2 = std::array<complex_t, 4>;

/// Two-component single-qubit state (amplitudes of |0> and |1>).
using HeadState = std::array<complex_t, 2>;

enum class Lambda : std::uint8_t { Identity = 0, L1 = 1, L2 = 2, L3 = 3 };

[[nodiscard]] Matrix2 lambda_matrix(Lambda kind);

/// Agent type of the pair interaction: theta = 0 applies lambda1 to the site,
/// theta = pi applies i*lambda2. Both act only on the agent's |0> branch.
enum class GateType : std::uint8_t { Zero, Pi };

/// Eigenvalue sign of a tape site (+1 or -1).
enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

/// Which single-qubit operator's eigenbasis a sign tape is written in.
enum class TapeBasis : std::uint8_t { Lambda1, Lambda2 };

/// Normalized eigenvector of lambda1 (|+>, |->) or lambda2 with eigenvalue
/// sign.
[[nodiscard]] HeadState tape_eigenstate(Sign sign, TapeBasis basis);

/// Tensor product of per-qubit lambda operators, one entry per qubit.
class OperatorString {
  public:
    OperatorString() = default;
    explicit OperatorString(std::vector<Lambda> ops) : ops_(std::move(ops)) {}

    /// Identity on all qubits.
    static OperatorString identity(std::size_t n_qubits);
    /// Single lambda on one qubit, identity elsewhere.
    static OperatorString local(std::size_t n_qubits, std::size_t qubit,
                                Lambda kind);
    /// Parse a digit string such as "0312".
    static OperatorString parse(std::string_view digits);

    [[nodiscard]] std::size_t size() const noexcept { return ops_.size(); }
    [[nodiscard]] Lambda operator[](std::size_t q) const { return ops_[q]; }
    [[nodiscard]] const std::vector<Lambda> &ops() const noexcept {
        return ops_;
    }
    /// Number of non-identity factors.
    [[nodiscard]] std::size_t cluster_size() const noexcept;
    [[nodiscard]] std::string str() const;

  private:
    std::vector<Lambda> ops_;
};

class DenseMatrix;

class StateVector {
  public:
    /// |0...0> on n_qubits.
    explicit StateVector(std::size_t n_qubits);

    static StateVector basis(std::size_t n_qubits,
                             std::span<const int> bit_pattern);
    /// head (x) |s_1> (x) ... (x) |s_M>, each tape factor an eigenvector of
    /// lambda1 (default) or lambda2.
    static StateVector sign_tape(const HeadState &head,
                                 std::span<const Sign> signs,
                                 TapeBasis basis = TapeBasis::Lambda1);
    /// Takes ownership of explicit amplitudes; length must be a power of two
    /// and the vector normalized within 1e-10.
    static StateVector from_amplitudes(std::vector<complex_t> amplitudes);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t dimension() const noexcept {
        return amplitudes_.size();
    }
    [[nodiscard]] std::span<const complex_t> amplitudes() const noexcept {
        return amplitudes_;
    }
    [[nodiscard]] std::span<complex_t> amplitudes() noexcept {
        return amplitudes_;
    }
    [[nodiscard]] const complex_t &operator[](std::size_t i) const {
        return amplitudes_[i];
    }

    /// Basis index of a bit pattern under the declared layout.
    [[nodiscard]] static std::size_t index_of(std::span<const int> bits);

    [[nodiscard]] double norm_squared() const;

    /// 1cos(a/2) - i sin(a/2) lambda1 on one qubit.
    void apply_local_rotation(std::size_t qubit, double alpha);
    /// Controlled on the agent's |0> component: lambda1 (theta = 0) or
    /// i*lambda2 (theta = pi) on env; identity on the |1> component.
    void apply_qcnot(std::size_t agent, std::size_t env, GateType type);
    void apply_single(std::size_t qubit, const Matrix2 &matrix);
    /// Dense matrix-vector product, guarded to N <= 12. Oracle use only.
    void apply_full_unitary(const DenseMatrix &matrix);

    /// <psi|Q|psi>. Throws std::logic_error if the imaginary part exceeds
    /// 1e-10 (the operator is Hermitian, so that indicates a kernel bug).
    [[nodiscard]] double expectation(const OperatorString &string) const;

    /// Little-endian interleaved (re, im) doubles in basis-index order.
    void write_binary(std::ostream &out) const;
    static StateVector read_binary(std::istream &in, std::size_t n_qubits);

  private:
    StateVector(std::size_t n_qubits, std::vector<complex_t> amplitudes);
    void check_qubit(std::size_t qubit) const;

    std::size_t n_qubits_;
    std::vector<complex_t> amplitudes_;
};

/// Haar-like random pure state: i.i.d. Gaussian amplitudes, normalized.
[[nodiscard]] StateVector random_state(std::size_t n_qubits, std::mt19937_64 &rng);

/// Euclidean distance between two states of the same dimension.
[[nodiscard]] double distance(const StateVector &a, const StateVector &b);

/// 1 - |<a|b>|, insensitive to a global phase.
[[nodiscard]] double fidelity_defect(std::span<const complex_t> a,
                                     std::span<const complex_t> b);

} // namespace qagents
