#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hullwalk/numbers.hpp"

namespace hullwalk::forms {

/// A face-count / face-probability query. `indices`, when present, is the
/// strictly increasing tuple of step indices naming a candidate face.
struct FaceQuery {
    int n = 0;
    int d = 1;
    int k = 0;
    std::optional<std::vector<int>> indices;
};

/// Checks a query against the walk (or bridge) preconditions before
/// dispatch: n >= d for expected-face queries, 0 <= k < d, and any index
/// tuple strictly increasing inside the model's valid range.
void validate_walk_query(const FaceQuery& q);
void validate_bridge_query(const FaceQuery& q);

/// Expected number of k-faces of the hull of an exchangeable walk of length
/// n in dimension d: (2 k!/n!) * sum_l c(n+1, d-2l) S(d-2l, k+1).
/// Requires n >= d > k >= 0.
BigRational expected_faces_walk(int n, int d, int k);

/// Same quantity evaluated the long way: sum of face_prob_walk over all
/// index tuples 0 <= i_1 < ... < i_{k+1} <= n. Independent evaluation path
/// used as an internal oracle; guarded to n <= 20.
BigRational expected_faces_walk_bigsum(int n, int d, int k);

/// Probability that the steps at `indices` span a k-face of a symmetric
/// walk's hull. Requires 0 <= i_1 < ... < i_{k+1} <= n and k+1 <= d.
BigRational face_prob_walk(int n, int d, std::span<const int> indices);

/// Discrete arcsine law: probability that the maximum of a one-dimensional
/// symmetric walk of length n sits at position i.
BigRational arcsine(int n, int i);

/// Probability that S_i is a vertex of the walk's hull.
BigRational vertex_prob_walk(int n, int d, int i);

/// Probability that the steps at `indices` span a k-face of an exchangeable
/// bridge's hull. Requires 0 <= i_1 < ... < i_{k+1} < n and k+1 <= d.
BigRational face_prob_bridge(int n, int d, std::span<const int> indices);

/// Probability that any fixed S_i (0 <= i < n) is a vertex of the bridge's
/// hull; independent of i by cyclic exchangeability.
BigRational vertex_prob_bridge(int n, int d);

/// Expected k-faces of a bridge via the sum over index tuples; n <= 20.
BigRational expected_faces_bridge(int n, int d, int k);

/// Shift-averaged probability that (S_i, S_{i+l_1}, ..., S_{i+l_k}) spans a
/// k-face, for a walk satisfying exchangeability only. Equals the bridge
/// face probability of length n+1 at indices (0, l_1, ..., l_k).
/// Requires 1 <= l_1 < ... < l_k <= n and k+1 <= d.
BigRational shift_avg_face_prob(int n, int d, std::span<const int> lags);

/// Probability that the origin lies in the joint hull of the given walks
/// and bridges in dimension d (bridge lengths >= 2, lists not both empty).
BigRational absorption_prob(int d, std::span<const int> walk_lengths,
                            std::span<const int> bridge_lengths);

/// Complementary probability; absorption + non-absorption = 1 exactly.
BigRational non_absorption_prob(int d, std::span<const int> walk_lengths,
                                std::span<const int> bridge_lengths);

/// Expected number of faces of all dimensions 0..d-1 together:
/// (2/n!) * sum_l c(n+1, d-2l) c-hat_{d-2l}. Requires n >= d.
BigRational total_expected_faces(int n, int d);

/// Leading-order growth of expected_faces_walk for fixed d, k:
/// (2 k!/(d-1)!) S(d, k+1) (ln n)^{d-1}. Requires n >= 2.
double asymptotic_expected_faces(int n, int d, int k);

}  // namespace hullwalk::forms
