#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "hullwalk/numbers.hpp"
#include "hullwalk/sampling.hpp"

namespace hullwalk::mc {

struct Estimate {
    double p_hat = 0.0;
    double stderr_ = 0.0;
    long n_samples = 0;
    long n_discarded = 0;
    std::uint64_t seed = 0;
};

/// Side-by-side view of an exact rational and its Monte Carlo estimate.
/// z = (p_hat - exact) / stderr; a zero stderr gives z = 0 on exact agreement
/// and +/-inf otherwise.
struct ComparisonReport {
    BigRational exact;
    Estimate estimate;
    double z = 0.0;
    double threshold = 3.0;
    bool pass = false;
};

ComparisonReport compare(const BigRational& exact, const Estimate& est, double threshold = 3.0);

struct McOptions {
    long samples = 10000;
    std::uint64_t seed = 1;
    int workers = 0;  // 0 = available parallelism
    double eps = 1e-9;
};

/// Parallel mean of a per-sample statistic. `fn(stream)` evaluates one
/// sample drawn from the given stream id; DegenerateSample from it discards
/// the draw and retries the slot on stream (index + attempt * samples).
/// Sample slots are split into contiguous per-worker ranges and reduced in
/// index order, so a result depends only on (fn, samples, seed, workers).
Estimate run_mean(const McOptions& opt, bool binomial,
                  const std::function<double(std::uint64_t)>& fn);

/// Fraction of samples in which the steps at `indices` span a face.
Estimate estimate_face_prob(const sample::WalkSpec& spec, std::span<const int> indices,
                            const McOptions& opt);
Estimate estimate_face_prob(const sample::BridgeSpec& spec, std::span<const int> indices,
                            const McOptions& opt);

/// Mean number of k-faces per sampled hull.
Estimate estimate_expected_faces(const sample::WalkSpec& spec, int k, const McOptions& opt);
Estimate estimate_expected_faces(const sample::BridgeSpec& spec, int k, const McOptions& opt);

/// Fraction of samples whose joint hull (excluding every path's starting
/// point and the bridges' final return) contains the origin.
Estimate estimate_absorption(const sample::JointSpec& spec, const McOptions& opt);

enum class ShiftMode { cyclic, windowed };

/// Per-sample average over shifted index tuples (i, i+l_1, ..., i+l_k) of
/// the face indicator, then averaged across samples. Cyclic mode runs i over
/// 0..n wrapping indices modulo n+1; windowed mode runs i over 0..n-l_k.
Estimate estimate_shift_average(const sample::WalkSpec& spec, std::span<const int> lags,
                                ShiftMode mode, const McOptions& opt);

}  // namespace hullwalk::mc
