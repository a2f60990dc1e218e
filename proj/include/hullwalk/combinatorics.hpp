#pragma once

#include <span>

#include "hullwalk/numbers.hpp"
#include "hullwalk/polynomial.hpp"

namespace hullwalk::comb {

/// Signless Stirling number of the first kind c(n, m): permutations of n
/// elements with exactly m cycles. Out-of-range m yields 0.
BigInt stirling_first(long n, long m);

/// Stirling number of the second kind S(n, m): partitions of an n-set into m
/// non-empty blocks. Out-of-range m yields 0.
BigInt stirling_second(long n, long m);

/// t(t+1)(t+2)...(t+n-1); the coefficient of t^j is stirling_first(n, j).
/// n = 0 gives the constant 1.
IntPolynomial rising_factorial_poly(unsigned n);

/// (t+1)(t+3)...(t+2n-1), the B-analogue generating polynomial; coefficient
/// of t^k is B(n, k). n = 0 gives the constant 1.
IntPolynomial b_poly(unsigned n);

/// The factor contributed by a gap of length g between consecutive marked
/// steps: (t+1)(t+2)...(t+g-1). A gap of length 1 contributes the constant 1.
IntPolynomial gap_poly(unsigned g);

/// Numerator polynomial for the probability that the marked steps of a
/// symmetric walk of length n span a face: two B-factors for the outer
/// stretches and one ascending-factorial factor per inner gap.
/// Requires 0 <= i_1 < ... < i_{k+1} <= n.
IntPolynomial walk_face_poly(int n, std::span<const int> indices);

/// Bridge analogue: one ascending-factorial factor per gap, where the gap
/// after the last index wraps around to n + i_1.
/// Requires 0 <= i_1 < ... < i_{k+1} < n.
IntPolynomial bridge_face_poly(int n, std::span<const int> indices);

/// Coefficient polynomial for the joint-hull absorption probability:
/// one B-factor per walk of length n_i, one ascending factor per bridge of
/// length m_j. Bridge lengths must be >= 2; the two lists may not both be
/// empty.
IntPolynomial joint_absorption_poly(std::span<const int> walk_lengths,
                                    std::span<const int> bridge_lengths);

/// c-hat numbers: sum_{k=1..N} (k-1)! S(N, k), N >= 1.
BigInt hat_c(int N);

/// Ordered Bell numbers: sum_k k! S(N, k), N >= 0.
BigInt ordered_bell(int N);

}  // namespace hullwalk::comb
