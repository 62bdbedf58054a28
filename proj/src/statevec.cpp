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
#include "qagents/statevec.hpp"

#include <bit>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "qagents/dense.hpp"
#include "qagents/kernels.hpp"

namespace qagents {

namespace {

constexpr double kNormTolerance = 1e-10;
constexpr double kImagTolerance = 1e-10;
constexpr std::size_t kMaxQubits = 30;

void put_le(std::ostream &out, double x) {
    auto bits = std::bit_cast<std::uint64_t>(x);
    char bytes[8];
    for (char &b : bytes) {
        b = static_cast<char>(bits & 0xFFU);
        bits >>= 8U;
    }
    out.write(bytes, 8);
}

double get_le(std::istream &in) {
    unsigned char bytes[8];
    in.read(reinterpret_cast<char *>(bytes), 8);
    if (!in) {
        throw std::runtime_error("read_binary: truncated amplitude stream");
    }
    std::uint64_t bits = 0;
    for (int i = 7; i >= 0; --i) {
        bits = (bits << 8U) | bytes[i];
    }
    return std::bit_cast<double>(bits);
}

} // namespace

Matrix2 lambda_matrix(Lambda kind) {
    using namespace std::complex_literals;
    switch (kind) {
    case Lambda::Identity:
        return {1.0, 0.0, 0.0, 1.0};
    case Lambda::L1:
        return {0.0, 1.0, 1.0, 0.0};
    case Lambda::L2:
        return {0.0, 1i, -1i, 0.0};
    case Lambda::L3:
        return {-1.0, 0.0, 0.0, 1.0};
    }
    throw std::invalid_argument("lambda_matrix: unknown kind");
}

HeadState tape_eigenstate(Sign sign, TapeBasis basis) {
    const double h = std::numbers::sqrt2 / 2.0;
    const double s = sign == Sign::Plus ? 1.0 : -1.0;
    if (basis == TapeBasis::Lambda1) {
        return {complex_t{h, 0.0}, complex_t{s * h, 0.0}};
    }
    // lambda2 (1, -i s) = s (1, -i s)
    return {complex_t{h, 0.0}, complex_t{0.0, -s * h}};
}

OperatorString OperatorString::identity(std::size_t n_qubits) {
    return OperatorString(std::vector<Lambda>(n_qubits, Lambda::Identity));
}

OperatorString OperatorString::local(std::size_t n_qubits, std::size_t qubit,
                                     Lambda kind) {
    if (qubit >= n_qubits) {
        throw std::out_of_range("OperatorString::local: qubit out of range");
    }
    std::vector<Lambda> ops(n_qubits, Lambda::Identity);
    ops[qubit] = kind;
    return OperatorString(std::move(ops));
}

OperatorString OperatorString::parse(std::string_view digits) {
    std::vector<Lambda> ops;
    ops.reserve(digits.size());
    for (char c : digits) {
        if (c < '0' || c > '3') {
            throw std::invalid_argument("OperatorString::parse: expected digits 0-3");
        }
        ops.push_back(static_cast<Lambda>(c - '0'));
    }
    return OperatorString(std::move(ops));
}

std::size_t OperatorString::cluster_size() const noexcept {
    std::size_t c = 0;
    for (auto op : ops_) {
        c += op != Lambda::Identity ? 1 : 0;
    }
    return c;
}

std::string OperatorString::str() const {
    std::string s;
    s.reserve(ops_.size());
    for (auto op : ops_) {
        s.push_back(static_cast<char>('0' + static_cast<int>(op)));
    }
    return s;
}

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("StateVector: qubit count out of range");
    }
    amplitudes_.assign(std::size_t{1} << n_qubits, complex_t{0.0, 0.0});
    amplitudes_[0] = 1.0;
}

StateVector::StateVector(std::size_t n_qubits, std::vector<complex_t> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

std::size_t StateVector::index_of(std::span<const int> bits) {
    std::size_t index = 0;
    for (int b : bits) {
        if (b != 0 && b != 1) {
            throw std::invalid_argument("bit pattern entries must be 0 or 1");
        }
        index = (index << 1U) | static_cast<std::size_t>(b);
    }
    return index;
}

StateVector StateVector::basis(std::size_t n_qubits,
                               std::span<const int> bit_pattern) {
    if (bit_pattern.size() != n_qubits) {
        throw std::invalid_argument("basis: bit pattern length does not match qubit count");
    }
    StateVector psi(n_qubits);
    psi.amplitudes_[0] = 0.0;
    psi.amplitudes_[index_of(bit_pattern)] = 1.0;
    return psi;
}

StateVector StateVector::sign_tape(const HeadState &head,
                                   std::span<const Sign> signs,
                                   TapeBasis basis) {
    if (std::abs(std::norm(head[0]) + std::norm(head[1]) - 1.0) > kNormTolerance) {
        throw std::invalid_argument("sign_tape: head state is not normalized");
    }
    if (signs.empty()) {
        throw std::invalid_argument("sign_tape: empty tape");
    }
    std::vector<complex_t> amps{head[0], head[1]};
    for (Sign s : signs) {
        const HeadState site = tape_eigenstate(s, basis);
        std::vector<complex_t> next(amps.size() * 2);
        for (std::size_t i = 0; i < amps.size(); ++i) {
            next[2 * i] = amps[i] * site[0];
            next[2 * i + 1] = amps[i] * site[1];
        }
        amps = std::move(next);
    }
    return StateVector(signs.size() + 1, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<complex_t> amplitudes) {
    const std::size_t dim = amplitudes.size();
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw std::invalid_argument("from_amplitudes: length must be a power of two >= 2");
    }
    const double norm = kernels::serial::norm_squared(amplitudes);
    if (std::abs(norm - 1.0) > kNormTolerance) {
        throw std::invalid_argument("from_amplitudes: state is not normalized");
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(dim));
    return StateVector(n, std::move(amplitudes));
}

double StateVector::norm_squared() const {
    return kernels::omp::norm_squared(amplitudes_);
}

void StateVector::check_qubit(std::size_t qubit) const {
    if (qubit >= n_qubits_) {
        throw std::out_of_range("qubit index " + std::to_string(qubit) +
                                " out of range for " + std::to_string(n_qubits_) +
                                " qubits");
    }
}

void StateVector::apply_single(std::size_t qubit, const Matrix2 &matrix) {
    check_qubit(qubit);
    kernels::omp::apply_single(amplitudes_, n_qubits_, qubit, matrix);
}

void StateVector::apply_local_rotation(std::size_t qubit, double alpha) {
    const double c = std::cos(alpha / 2.0);
    const double s = std::sin(alpha / 2.0);
    apply_single(qubit, {complex_t{c, 0.0}, complex_t{0.0, -s},
                         complex_t{0.0, -s}, complex_t{c, 0.0}});
}

void StateVector::apply_qcnot(std::size_t agent, std::size_t env,
                              GateType type) {
    check_qubit(agent);
    check_qubit(env);
    if (agent == env) {
        throw std::invalid_argument("apply_qcnot: agent and env must differ");
    }
    // i*lambda2 = {{0, -1}, {1, 0}}
    const Matrix2 target = type == GateType::Zero
                               ? Matrix2{0.0, 1.0, 1.0, 0.0}
                               : Matrix2{0.0, -1.0, 1.0, 0.0};
    kernels::omp::apply_controlled_on_zero(amplitudes_, n_qubits_, agent, env,
                                           target);
}

void StateVector::apply_full_unitary(const DenseMatrix &matrix) {
    check_dense_guard(n_qubits_);
    if (matrix.dimension() != amplitudes_.size()) {
        throw std::invalid_argument("apply_full_unitary: dimension mismatch");
    }
    const Eigen::Map<const Eigen::VectorXcd> in(
        amplitudes_.data(), static_cast<Eigen::Index>(amplitudes_.size()));
    const Eigen::VectorXcd out = matrix.storage() * in;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        amplitudes_[i] = out(static_cast<Eigen::Index>(i));
    }
}

double StateVector::expectation(const OperatorString &string) const {
    if (string.size() != n_qubits_) {
        throw std::invalid_argument("expectation: operator string length does not match qubit count");
    }
    const complex_t value =
        kernels::omp::expectation(amplitudes_, kernels::string_masks(string));
    if (std::abs(value.imag()) > kImagTolerance) {
        throw std::logic_error("expectation: imaginary part " +
                               std::to_string(value.imag()) +
                               " exceeds tolerance for " + string.str());
    }
    return value.real();
}

void StateVector::write_binary(std::ostream &out) const {
    for (const auto &a : amplitudes_) {
        put_le(out, a.real());
        put_le(out, a.imag());
    }
}

StateVector StateVector::read_binary(std::istream &in, std::size_t n_qubits) {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("read_binary: qubit count out of range");
    }
    std::vector<complex_t> amps(std::size_t{1} << n_qubits);
    for (auto &a : amps) {
        const double re = get_le(in);
        const double im = get_le(in);
        a = {re, im};
    }
    return from_amplitudes(std::move(amps));
}

StateVector random_state(std::size_t n_qubits, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("random_state: qubit count out of range");
    }
    std::vector<complex_t> amps(std::size_t{1} << n_qubits);
    double norm = 0.0;
    for (auto &a : amps) {
        a = {gauss(rng), gauss(rng)};
        norm += std::norm(a);
    }
    const double scale = 1.0 / std::sqrt(norm);
    for (auto &a : amps) {
        a *= scale;
    }
    return StateVector::from_amplitudes(std::move(amps));
}

double distance(const StateVector &a, const StateVector &b) {
    if (a.dimension() != b.dimension()) {
        throw std::invalid_argument("distance: dimension mismatch");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        sum += std::norm(a[i] - b[i]);
    }
    return std::sqrt(sum);
}

double fidelity_defect(std::span<const complex_t> a,
                       std::span<const complex_t> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("fidelity_defect: dimension mismatch");
    }
    complex_t overlap{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        overlap += std::conj(a[i]) * b[i];
    }
    return 1.0 - std::abs(overlap);
}

} // namespace qagents
