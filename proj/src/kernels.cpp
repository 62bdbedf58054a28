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
#include "qagents/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace qagents::kernels {

namespace {

using index_t = std::int64_t;

// Plain product; std::complex operator* goes through the Annex G
// NaN-recovery path, which is several times slower.
inline complex_t mul(complex_t a, complex_t b) {
    return {a.real() * b.real() - a.imag() * b.imag(),
            a.real() * b.imag() + a.imag() * b.real()};
}

inline void rotate_pair(complex_t &a0, complex_t &a1, const Matrix2 &m) {
    const complex_t v0 = a0;
    const complex_t v1 = a1;
    a0 = mul(m[0], v0) + mul(m[1], v1);
    a1 = mul(m[2], v0) + mul(m[3], v1);
}

inline complex_t i_power(unsigned k) {
    switch (k % 4U) {
    case 0:
        return {1.0, 0.0};
    case 1:
        return {0.0, 1.0};
    case 2:
        return {-1.0, 0.0};
    default:
        return {0.0, -1.0};
    }
}

inline complex_t string_term(std::span<const complex_t> amps,
                             const StringMasks &masks, std::uint64_t i) {
    const complex_t t = mul(std::conj(amps[i ^ masks.flip]), amps[i]);
    return (std::popcount(~i & masks.negate) & 1) ? -t : t;
}

struct Pair {
    unsigned lo;
    unsigned hi;
};

inline Pair ordered_shifts(std::size_t n_qubits, std::size_t a,
                           std::size_t b) {
    const auto sa = static_cast<unsigned>(n_qubits - 1 - a);
    const auto sb = static_cast<unsigned>(n_qubits - 1 - b);
    return {std::min(sa, sb), std::max(sa, sb)};
}

} // namespace

StringMasks string_masks(const OperatorString &string) {
    StringMasks masks;
    const std::size_t n = string.size();
    for (std::size_t q = 0; q < n; ++q) {
        const std::uint64_t bit = qubit_mask(n, q);
        switch (string[q]) {
        case Lambda::Identity:
            break;
        case Lambda::L1:
            masks.flip |= bit;
            break;
        case Lambda::L2:
            // lambda2|1> = i|0>, lambda2|0> = -i|1>
            masks.flip |= bit;
            masks.negate |= bit;
            ++masks.y_count;
            break;
        case Lambda::L3:
            masks.negate |= bit;
            break;
        }
    }
    return masks;
}

namespace serial {

void apply_single(std::span<complex_t> amps, std::size_t n_qubits,
                  std::size_t qubit, const Matrix2 &matrix) {
    const auto shift = static_cast<unsigned>(n_qubits - 1 - qubit);
    const std::uint64_t mask = std::uint64_t{1} << shift;
    const std::uint64_t half = amps.size() / 2;
    for (std::uint64_t k = 0; k < half; ++k) {
        const std::uint64_t i0 = insert_zero(k, shift);
        rotate_pair(amps[i0], amps[i0 | mask], matrix);
    }
}

void apply_controlled_on_zero(std::span<complex_t> amps, std::size_t n_qubits,
                              std::size_t control, std::size_t target,
                              const Matrix2 &matrix) {
    const auto [lo, hi] = ordered_shifts(n_qubits, control, target);
    const std::uint64_t tmask = qubit_mask(n_qubits, target);
    const std::uint64_t quarter = amps.size() / 4;
    for (std::uint64_t k = 0; k < quarter; ++k) {
        const std::uint64_t i0 = insert_zero(insert_zero(k, lo), hi);
        rotate_pair(amps[i0], amps[i0 | tmask], matrix);
    }
}

complex_t expectation(std::span<const complex_t> amps,
                      const StringMasks &masks) {
    complex_t sum{0.0, 0.0};
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        sum += string_term(amps, masks, i);
    }
    return i_power(masks.y_count) * sum;
}

double norm_squared(std::span<const complex_t> amps) {
    double sum = 0.0;
    for (const auto &a : amps) {
        sum += std::norm(a);
    }
    return sum;
}

} // namespace serial

namespace omp {

// Pairs are visited in aligned runs of `run` consecutive pair indices. A run
// starts on a block boundary of the target stride and never crosses a gap of
// any other inserted bit, so its amplitudes form one contiguous slab.
constexpr std::uint64_t kRun = 1024;

inline void rotate_run(complex_t *p, std::uint64_t stride, std::uint64_t pairs,
                       const Matrix2 &m) {
    if (stride >= pairs) {
        for (std::uint64_t j = 0; j < pairs; ++j) {
            rotate_pair(p[j], p[j + stride], m);
        }
        return;
    }
    if (stride == 1) {
        for (std::uint64_t j = 0; j < pairs; ++j) {
            rotate_pair(p[2 * j], p[2 * j + 1], m);
        }
        return;
    }
    for (std::uint64_t b = 0; b < pairs; b += stride) {
        complex_t *q = p + 2 * b;
        for (std::uint64_t j = 0; j < stride; ++j) {
            rotate_pair(q[j], q[j + stride], m);
        }
    }
}

void apply_single(std::span<complex_t> amps, std::size_t n_qubits,
                  std::size_t qubit, const Matrix2 &matrix) {
    const auto shift = static_cast<unsigned>(n_qubits - 1 - qubit);
    const std::uint64_t mask = std::uint64_t{1} << shift;
    const std::uint64_t half = amps.size() / 2;
    const std::uint64_t run = std::min(half, kRun);
    const auto n_runs = static_cast<index_t>(half / run);
    complex_t *data = amps.data();
#pragma omp parallel for schedule(static) if (half > 2048)
    for (index_t r = 0; r < n_runs; ++r) {
        const std::uint64_t k0 = static_cast<std::uint64_t>(r) * run;
        rotate_run(data + insert_zero(k0, shift), mask, run, matrix);
    }
}

void apply_controlled_on_zero(std::span<complex_t> amps, std::size_t n_qubits,
                              std::size_t control, std::size_t target,
                              const Matrix2 &matrix) {
    const auto [lo, hi] = ordered_shifts(n_qubits, control, target);
    const std::uint64_t tmask = qubit_mask(n_qubits, target);
    const std::uint64_t quarter = amps.size() / 4;
    complex_t *data = amps.data();
    // Target below control: a run may span several target blocks as long as
    // it stays inside one control-zero region (2^(hi-1) pair indices).
    // Target above control: runs must stay between control gaps.
    const bool target_low = tmask == (std::uint64_t{1} << lo);
    const std::uint64_t limit = target_low ? (std::uint64_t{1} << (hi - 1))
                                           : (std::uint64_t{1} << lo);
    const std::uint64_t run = std::min({quarter, kRun, limit});
    const auto n_runs = static_cast<index_t>(quarter / run);
#pragma omp parallel for schedule(static) if (quarter > 2048)
    for (index_t r = 0; r < n_runs; ++r) {
        const std::uint64_t k0 = static_cast<std::uint64_t>(r) * run;
        complex_t *p = data + insert_zero(insert_zero(k0, lo), hi);
        if (target_low) {
            rotate_run(p, tmask, run, matrix);
        } else {
            for (std::uint64_t j = 0; j < run; ++j) {
                rotate_pair(p[j], p[j + tmask], matrix);
            }
        }
    }
}

complex_t expectation(std::span<const complex_t> amps,
                      const StringMasks &masks) {
    const std::size_t n_blocks =
        (amps.size() + kReductionBlock - 1) / kReductionBlock;
    std::vector<complex_t> partial(n_blocks);
#pragma omp parallel for schedule(static) if (n_blocks > 1)
    for (index_t b = 0; b < static_cast<index_t>(n_blocks); ++b) {
        const std::uint64_t begin = static_cast<std::uint64_t>(b) * kReductionBlock;
        const std::uint64_t end =
            std::min<std::uint64_t>(begin + kReductionBlock, amps.size());
        complex_t sum{0.0, 0.0};
        for (std::uint64_t i = begin; i < end; ++i) {
            sum += string_term(amps, masks, i);
        }
        partial[static_cast<std::size_t>(b)] = sum;
    }
    complex_t total{0.0, 0.0};
    for (const auto &p : partial) {
        total += p;
    }
    return i_power(masks.y_count) * total;
}

double norm_squared(std::span<const complex_t> amps) {
    const std::size_t n_blocks =
        (amps.size() + kReductionBlock - 1) / kReductionBlock;
    std::vector<double> partial(n_blocks);
#pragma omp parallel for schedule(static) if (n_blocks > 1)
    for (index_t b = 0; b < static_cast<index_t>(n_blocks); ++b) {
        const std::size_t begin = static_cast<std::size_t>(b) * kReductionBlock;
        const std::size_t end = std::min(begin + kReductionBlock, amps.size());
        double sum = 0.0;
        for (std::size_t i = begin; i < end; ++i) {
            sum += std::norm(amps[i]);
        }
        partial[static_cast<std::size_t>(b)] = sum;
    }
    double total = 0.0;
    for (double p : partial) {
        total += p;
    }
    return total;
}

} // namespace omp

} // namespace qagents::kernels
