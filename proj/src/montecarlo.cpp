#include "hullwalk/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "hullwalk/geometry.hpp"

namespace hullwalk::mc {

namespace {

constexpr int kMaxAttempts = 64;

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 32u));
}

struct Accum {
    double sum = 0.0;
    double sumsq = 0.0;
    long discards = 0;
};

// Points of the joint hull: walk points past the start, bridge points past
// the start and before the final return to the origin.
geom::PointSet joint_hull_points(const sample::JointSpec& spec,
                                 const std::vector<geom::PointSet>& paths) {
    geom::PointSet hull{spec.d, {}};
    const std::size_t s = spec.walk_lengths.size();
    for (std::size_t p = 0; p < paths.size(); ++p) {
        const auto& pts = paths[p].points;
        const std::size_t last = p < s ? pts.size() : pts.size() - 1;
        for (std::size_t i = 1; i < last; ++i) hull.points.push_back(pts[i]);
    }
    if (hull.points.empty())
        throw std::invalid_argument("estimate_absorption: joint hull has no points");
    return hull;
}

}  // namespace

ComparisonReport compare(const BigRational& exact, const Estimate& est, double threshold) {
    ComparisonReport rep;
    rep.exact = exact;
    rep.estimate = est;
    rep.threshold = threshold;
    const double diff = est.p_hat - to_double(exact);
    if (est.stderr_ > 0.0) {
        rep.z = diff / est.stderr_;
    } else {
        rep.z = diff == 0.0 ? 0.0
                            : std::copysign(std::numeric_limits<double>::infinity(), diff);
    }
    rep.pass = std::abs(rep.z) < threshold;
    return rep;
}

Estimate run_mean(const McOptions& opt, bool binomial,
                  const std::function<double(std::uint64_t)>& fn) {
    if (opt.samples < 1) throw std::invalid_argument("run_mean: need samples >= 1");
    const int workers =
        static_cast<int>(std::min<long>(resolve_workers(opt.workers), opt.samples));
    std::vector<Accum> parts(static_cast<std::size_t>(workers));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));

    auto body = [&](int w) {
        Accum acc;
        const long lo = opt.samples * w / workers;
        const long hi = opt.samples * (w + 1) / workers;
        try {
            for (long s = lo; s < hi; ++s) {
                int attempt = 0;
                for (;;) {
                    const std::uint64_t stream =
                        static_cast<std::uint64_t>(s) +
                        static_cast<std::uint64_t>(attempt) * static_cast<std::uint64_t>(opt.samples);
                    try {
                        const double v = fn(stream);
                        acc.sum += v;
                        acc.sumsq += v * v;
                        break;
                    } catch (const geom::DegenerateSample&) {
                        ++acc.discards;
                        if (++attempt >= kMaxAttempts) throw;
                    }
                }
            }
        } catch (...) {
            errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
        parts[static_cast<std::size_t>(w)] = acc;
    };

    if (workers == 1) {
        body(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(body, w);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    Accum total;  // reduce in worker (= sample index) order
    for (const auto& p : parts) {
        total.sum += p.sum;
        total.sumsq += p.sumsq;
        total.discards += p.discards;
    }

    Estimate est;
    est.n_samples = opt.samples;
    est.n_discarded = total.discards;
    est.seed = opt.seed;
    if (static_cast<double>(total.discards) >= 1e-3 * static_cast<double>(opt.samples))
        throw geom::DegenerateSample("run_mean: discard rate exceeds 1e-3");
    const double n = static_cast<double>(opt.samples);
    est.p_hat = total.sum / n;
    if (binomial) {
        est.stderr_ = std::sqrt(std::max(0.0, est.p_hat * (1.0 - est.p_hat)) / n);
    } else if (opt.samples > 1) {
        const double var =
            std::max(0.0, (total.sumsq - n * est.p_hat * est.p_hat) / (n - 1.0));
        est.stderr_ = std::sqrt(var / n);
    }
    return est;
}

Estimate estimate_face_prob(const sample::WalkSpec& spec, std::span<const int> indices,
                            const McOptions& opt) {
    sample::validate(spec);
    std::vector<int> idx(indices.begin(), indices.end());
    return run_mean(opt, true, [&spec, idx, &opt](std::uint64_t stream) {
        const geom::PointSet ps = sample::sample_walk(spec, opt.seed, stream);
        const geom::FaceStatus st = geom::classify_face(ps, idx, opt.eps);
        if (st == geom::FaceStatus::degenerate)
            throw geom::DegenerateSample("estimate_face_prob: degenerate sample");
        return st == geom::FaceStatus::face ? 1.0 : 0.0;
    });
}

Estimate estimate_face_prob(const sample::BridgeSpec& spec, std::span<const int> indices,
                            const McOptions& opt) {
    sample::validate(spec);
    for (int i : indices)
        if (i >= spec.m)
            throw std::invalid_argument("estimate_face_prob: bridge indices must be < m");
    std::vector<int> idx(indices.begin(), indices.end());
    return run_mean(opt, true, [&spec, idx, &opt](std::uint64_t stream) {
        geom::PointSet ps = sample::sample_bridge(spec, opt.seed, stream);
        ps.points.pop_back();  // S_m duplicates S_0; faces live on S_0..S_{m-1}
        const geom::FaceStatus st = geom::classify_face(ps, idx, opt.eps);
        if (st == geom::FaceStatus::degenerate)
            throw geom::DegenerateSample("estimate_face_prob: degenerate sample");
        return st == geom::FaceStatus::face ? 1.0 : 0.0;
    });
}

Estimate estimate_expected_faces(const sample::WalkSpec& spec, int k, const McOptions& opt) {
    sample::validate(spec);
    return run_mean(opt, false, [&spec, k, &opt](std::uint64_t stream) {
        const geom::PointSet ps = sample::sample_walk(spec, opt.seed, stream);
        return static_cast<double>(geom::count_faces(ps, k, opt.eps));
    });
}

Estimate estimate_expected_faces(const sample::BridgeSpec& spec, int k, const McOptions& opt) {
    sample::validate(spec);
    return run_mean(opt, false, [&spec, k, &opt](std::uint64_t stream) {
        geom::PointSet ps = sample::sample_bridge(spec, opt.seed, stream);
        ps.points.pop_back();
        return static_cast<double>(geom::count_faces(ps, k, opt.eps));
    });
}

Estimate estimate_absorption(const sample::JointSpec& spec, const McOptions& opt) {
    sample::validate(spec);
    return run_mean(opt, true, [&spec, &opt](std::uint64_t stream) {
        const auto paths = sample::sample_joint(spec, opt.seed, stream);
        const geom::PointSet hull = joint_hull_points(spec, paths);
        return geom::origin_in_hull(hull, opt.eps) ? 1.0 : 0.0;
    });
}

Estimate estimate_shift_average(const sample::WalkSpec& spec, std::span<const int> lags,
                                ShiftMode mode, const McOptions& opt) {
    sample::validate(spec);
    int prev = 0;
    for (int l : lags) {
        if (l <= prev || l > spec.n)
            throw std::invalid_argument("estimate_shift_average: bad lag tuple");
        prev = l;
    }
    const int n = spec.n;
    const int lk = lags.empty() ? 0 : lags.back();
    std::vector<int> lag_vec(lags.begin(), lags.end());

    return run_mean(opt, false, [&spec, lag_vec, mode, n, lk, &opt](std::uint64_t stream) {
        const geom::PointSet ps = sample::sample_walk(spec, opt.seed, stream);
        const int last_shift = mode == ShiftMode::cyclic ? n : n - lk;
        long hits = 0;
        for (int i = 0; i <= last_shift; ++i) {
            std::vector<int> idx;
            idx.reserve(lag_vec.size() + 1);
            idx.push_back(i);
            for (int l : lag_vec) idx.push_back((i + l) % (n + 1));
            std::sort(idx.begin(), idx.end());
            const geom::FaceStatus st = geom::classify_face(ps, idx, opt.eps);
            if (st == geom::FaceStatus::degenerate)
                throw geom::DegenerateSample("estimate_shift_average: degenerate sample");
            if (st == geom::FaceStatus::face) ++hits;
        }
        return static_cast<double>(hits) / static_cast<double>(last_shift + 1);
    });
}

}  // namespace hullwalk::mc
