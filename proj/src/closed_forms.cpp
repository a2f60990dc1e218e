#include "hullwalk/closed_forms.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hullwalk/combinatorics.hpp"
#include "hullwalk/polynomial.hpp"

namespace hullwalk::forms {

namespace {

using comb::stirling_first;
using comb::stirling_second;

constexpr int kBigSumCap = 20;

// Sum of coefficients at exponents j0, j0-2, j0-4, ... down to >= 0.
BigInt alternating_tail(const IntPolynomial& p, long j0) {
    BigInt acc = 0;
    for (long j = j0; j >= 0; j -= 2) acc += p.coeff(j);
    return acc;
}

// Sum of coefficients at exponents j0, j0+2, j0+4, ... up to the degree.
BigInt alternating_head(const IntPolynomial& p, long j0) {
    BigInt acc = 0;
    for (long j = std::max(j0, 0L); j <= p.degree(); j += 2) acc += p.coeff(j);
    return acc;
}

// Visits every strictly increasing `count`-tuple with entries in [lo, hi].
template <class Fn>
void for_each_index_tuple(int count, int lo, int hi, Fn&& fn) {
    if (count < 1 || lo + count - 1 > hi) return;
    std::vector<int> idx(static_cast<std::size_t>(count));
    std::iota(idx.begin(), idx.end(), lo);
    while (true) {
        fn(std::span<const int>(idx));
        int p = count - 1;
        while (p >= 0 && idx[static_cast<std::size_t>(p)] == hi - (count - 1 - p)) --p;
        if (p < 0) break;
        ++idx[static_cast<std::size_t>(p)];
        for (int q = p + 1; q < count; ++q)
            idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
    }
}

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

BigInt group_order(std::span<const int> walk_lengths, std::span<const int> bridge_lengths) {
    BigInt order = 1;
    for (int n : walk_lengths) order *= (BigInt(1) << n) * factorial(static_cast<unsigned>(n));
    for (int m : bridge_lengths) order *= factorial(static_cast<unsigned>(m));
    return order;
}

void validate_indices(const FaceQuery& q, int hi) {
    if (!q.indices) return;
    if (static_cast<int>(q.indices->size()) != q.k + 1)
        throw std::invalid_argument("FaceQuery: index tuple must have k+1 entries");
    int prev = -1;
    for (int i : *q.indices) {
        if (i <= prev || i > hi)
            throw std::invalid_argument("FaceQuery: indices must be strictly increasing in range");
        prev = i;
    }
}

}  // namespace

void validate_walk_query(const FaceQuery& q) {
    require(q.d >= 1 && q.k >= 0 && q.k < q.d, "FaceQuery: need 0 <= k < d");
    require(q.n >= q.d, "FaceQuery: need n >= d");
    validate_indices(q, q.n);
}

void validate_bridge_query(const FaceQuery& q) {
    require(q.n >= 2, "FaceQuery: bridge needs n >= 2");
    require(q.d >= 1 && q.k >= 0 && q.k < q.d, "FaceQuery: need 0 <= k < d");
    require(q.d <= q.n - 1, "FaceQuery: bridge needs d <= n-1");
    validate_indices(q, q.n - 1);
}

BigRational expected_faces_walk(int n, int d, int k) {
    require(d >= 1 && k >= 0, "expected_faces_walk: need d >= 1 and k >= 0");
    require(k < d, "expected_faces_walk: need k < d");
    require(n >= d, "expected_faces_walk: need n >= d");
    BigInt acc = 0;
    for (int m = d; m >= 1; m -= 2) acc += stirling_first(n + 1, m) * stirling_second(m, k + 1);
    return BigRational(2 * factorial(static_cast<unsigned>(k)) * acc,
                       factorial(static_cast<unsigned>(n)));
}

BigRational expected_faces_walk_bigsum(int n, int d, int k) {
    require(d >= 1 && k >= 0 && k < d, "expected_faces_walk_bigsum: need 0 <= k < d");
    require(n >= d, "expected_faces_walk_bigsum: need n >= d");
    require(n <= kBigSumCap, "expected_faces_walk_bigsum: n exceeds enumeration cap");
    BigRational acc = 0;
    for_each_index_tuple(k + 1, 0, n,
                         [&](std::span<const int> idx) { acc += face_prob_walk(n, d, idx); });
    return acc;
}

BigRational face_prob_walk(int n, int d, std::span<const int> indices) {
    require(d >= 1 && d <= n, "face_prob_walk: need 1 <= d <= n");
    require(static_cast<int>(indices.size()) <= d, "face_prob_walk: need k + 1 <= d");
    const IntPolynomial p = comb::walk_face_poly(n, indices);  // validates the tuple
    const int k = static_cast<int>(indices.size()) - 1;
    BigInt den = BigInt(1) << (indices.front() + n - indices.back());
    den *= factorial(static_cast<unsigned>(indices.front()));
    for (std::size_t l = 0; l + 1 < indices.size(); ++l)
        den *= factorial(static_cast<unsigned>(indices[l + 1] - indices[l]));
    den *= factorial(static_cast<unsigned>(n - indices.back()));
    return BigRational(2 * alternating_tail(p, d - k - 1), den);
}

BigRational arcsine(int n, int i) {
    require(n >= 0 && i >= 0 && i <= n, "arcsine: need 0 <= i <= n");
    return BigRational(binomial(static_cast<unsigned>(2 * i), static_cast<unsigned>(i)) *
                           binomial(static_cast<unsigned>(2 * (n - i)), static_cast<unsigned>(n - i)),
                       BigInt(1) << (2 * n));
}

BigRational vertex_prob_walk(int n, int d, int i) {
    require(i >= 0 && i <= n, "vertex_prob_walk: need 0 <= i <= n");
    const int idx[1] = {i};
    return face_prob_walk(n, d, idx);
}

BigRational face_prob_bridge(int n, int d, std::span<const int> indices) {
    require(n >= 2, "face_prob_bridge: need n >= 2");
    require(d >= 1 && d <= n - 1, "face_prob_bridge: need 1 <= d <= n-1");
    require(static_cast<int>(indices.size()) <= d, "face_prob_bridge: need k + 1 <= d");
    const IntPolynomial q = comb::bridge_face_poly(n, indices);  // validates the tuple
    const int k = static_cast<int>(indices.size()) - 1;
    BigInt den = 1;
    for (std::size_t l = 0; l + 1 < indices.size(); ++l)
        den *= factorial(static_cast<unsigned>(indices[l + 1] - indices[l]));
    den *= factorial(static_cast<unsigned>(n + indices.front() - indices.back()));
    return BigRational(2 * alternating_tail(q, d - k - 1), den);
}

BigRational vertex_prob_bridge(int n, int d) {
    require(n >= 2, "vertex_prob_bridge: need n >= 2");
    require(d >= 1 && d <= n - 1, "vertex_prob_bridge: need 1 <= d <= n-1");
    BigInt acc = 0;
    for (int m = d; m >= 1; m -= 2) acc += stirling_first(n, m);
    return BigRational(2 * acc, factorial(static_cast<unsigned>(n)));
}

BigRational expected_faces_bridge(int n, int d, int k) {
    require(n >= 2, "expected_faces_bridge: need n >= 2");
    require(d >= 1 && k >= 0 && k < d, "expected_faces_bridge: need 0 <= k < d");
    require(d <= n - 1, "expected_faces_bridge: need d <= n-1");
    require(n <= kBigSumCap, "expected_faces_bridge: n exceeds enumeration cap");
    BigRational acc = 0;
    for_each_index_tuple(k + 1, 0, n - 1,
                         [&](std::span<const int> idx) { acc += face_prob_bridge(n, d, idx); });
    return acc;
}

BigRational shift_avg_face_prob(int n, int d, std::span<const int> lags) {
    require(n >= 1, "shift_avg_face_prob: need n >= 1");
    require(d >= 1 && d <= n, "shift_avg_face_prob: need 1 <= d <= n");
    require(static_cast<int>(lags.size()) + 1 <= d, "shift_avg_face_prob: need k + 1 <= d");
    int prev = 0;
    for (int l : lags) {
        require(l > prev && l <= n, "shift_avg_face_prob: lags must satisfy 1 <= l_1 < ... <= n");
        prev = l;
    }
    std::vector<int> indices;
    indices.reserve(lags.size() + 1);
    indices.push_back(0);
    indices.insert(indices.end(), lags.begin(), lags.end());
    return face_prob_bridge(n + 1, d, indices);
}

BigRational absorption_prob(int d, std::span<const int> walk_lengths,
                            std::span<const int> bridge_lengths) {
    require(d >= 1, "absorption_prob: d must be >= 1");
    const IntPolynomial p = comb::joint_absorption_poly(walk_lengths, bridge_lengths);
    return BigRational(2 * alternating_head(p, d + 1),
                       group_order(walk_lengths, bridge_lengths));
}

BigRational non_absorption_prob(int d, std::span<const int> walk_lengths,
                                std::span<const int> bridge_lengths) {
    require(d >= 1, "non_absorption_prob: d must be >= 1");
    const IntPolynomial p = comb::joint_absorption_poly(walk_lengths, bridge_lengths);
    return BigRational(2 * alternating_tail(p, d - 1),
                       group_order(walk_lengths, bridge_lengths));
}

BigRational total_expected_faces(int n, int d) {
    require(d >= 1, "total_expected_faces: need d >= 1");
    require(n >= d, "total_expected_faces: need n >= d");
    BigInt acc = 0;
    for (int m = d; m >= 1; m -= 2) acc += stirling_first(n + 1, m) * comb::hat_c(m);
    return BigRational(2 * acc, factorial(static_cast<unsigned>(n)));
}

double asymptotic_expected_faces(int n, int d, int k) {
    require(n >= 2, "asymptotic_expected_faces: need n >= 2");
    require(d >= 1 && k >= 0 && k < d, "asymptotic_expected_faces: need 0 <= k < d");
    const double lead =
        2.0 * to_double(BigRational(factorial(static_cast<unsigned>(k)) *
                                        stirling_second(d, k + 1),
                                    factorial(static_cast<unsigned>(d - 1))));
    return lead * std::pow(std::log(static_cast<double>(n)), d - 1);
}

}  // namespace hullwalk::forms
