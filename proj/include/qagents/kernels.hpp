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
 * Bit-indexed amplitude kernels.
 *
 * Two implementations with identical signatures: `serial` is the reference
 * kept for testing, `omp` is the OpenMP-parallel version used by
 * StateVector. Gate kernels write each amplitude pair exactly once, so both
 * produce bit-identical results. Reductions in `omp` sum fixed-size blocks
 * in parallel and then combine the block partials in order, so the result
 * does not depend on the thread count.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "qagents/statevec.hpp"

namespace qagents::kernels {

/// A lambda string folded into bit masks over basis indices:
///   Q|i> = phase(i) |i ^ flip>,
///   phase(i) = i^y_count * (-1)^popcount(~i & negate).
struct StringMasks {
    std::uint64_t flip = 0;
    std::uint64_t negate = 0;
    unsigned y_count = 0;
};

[[nodiscard]] StringMasks string_masks(const OperatorString &string);

/// Bit of qubit q in an N-qubit index.
[[nodiscard]] constexpr std::uint64_t qubit_mask(std::size_t n_qubits,
                                                 std::size_t qubit) noexcept {
    return std::uint64_t{1} << (n_qubits - 1 - qubit);
}

/// Insert a zero at bit position `shift` of k.
[[nodiscard]] constexpr std::uint64_t insert_zero(std::uint64_t k,
                                                  unsigned shift) noexcept {
    const std::uint64_t low = (std::uint64_t{1} << shift) - 1;
    return ((k & ~low) << 1U) | (k & low);
}

inline constexpr std::size_t kReductionBlock = 4096;

namespace serial {
void apply_single(std::span<complex_t> amps, std::size_t n_qubits,
                  std::size_t qubit, const Matrix2 &matrix);
/// Applies matrix to target on the control-|0> subspace only.
void apply_controlled_on_zero(std::span<complex_t> amps, std::size_t n_qubits,
                              std::size_t control, std::size_t target,
                              const Matrix2 &matrix);
[[nodiscard]] complex_t expectation(std::span<const complex_t> amps,
                                    const StringMasks &masks);
[[nodiscard]] double norm_squared(std::span<const complex_t> amps);
} // namespace serial

namespace omp {
void apply_single(std::span<complex_t> amps, std::size_t n_qubits,
                  std::size_t qubit, const Matrix2 &matrix);
void apply_controlled_on_zero(std::span<complex_t> amps, std::size_t n_qubits,
                              std::size_t control, std::size_t target,
                              const Matrix2 &matrix);
[[nodiscard]] complex_t expectation(std::span<const complex_t> amps,
                                    const StringMasks &masks);
[[nodiscard]] double norm_squared(std::span<const complex_t> amps);
} // namespace omp

} // namespace qagents::kernels
