#include "hullwalk/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hullwalk::sample {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

}  // namespace

CounterRng::CounterRng(std::uint64_t master_seed, std::uint64_t stream) {
    key_ = mix64(mix64(master_seed + kGolden) ^ mix64(stream * kGolden + 1));
}

std::uint64_t CounterRng::next_u64() { return mix64(key_ + ++counter_ * kGolden); }

double CounterRng::next_unit() {
    // 52 random bits centered in the cell keep the value strictly inside (0,1).
    return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
}

double CounterRng::next_gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = next_unit();
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

void validate(const WalkSpec& spec) {
    if (spec.n < 1 || spec.d < 1) throw std::invalid_argument("WalkSpec: need n >= 1, d >= 1");
    if (spec.law == WalkLaw::shifted_gaussian) {
        if (static_cast<int>(spec.shift.size()) != spec.d)
            throw std::invalid_argument("WalkSpec: shift vector must have length d");
        if (!(spec.noise_scale > 0.0))
            throw std::invalid_argument("WalkSpec: noise scale must be > 0");
    }
}

void validate(const BridgeSpec& spec) {
    if (spec.m < 2 || spec.d < 1) throw std::invalid_argument("BridgeSpec: need m >= 2, d >= 1");
}

void validate(const JointSpec& spec) {
    if (spec.d < 1) throw std::invalid_argument("JointSpec: need d >= 1");
    if (spec.walk_lengths.empty() && spec.bridge_lengths.empty())
        throw std::invalid_argument("JointSpec: need at least one walk or bridge");
    for (int n : spec.walk_lengths)
        if (n < 1) throw std::invalid_argument("JointSpec: walk length must be >= 1");
    for (int m : spec.bridge_lengths)
        if (m < 2) throw std::invalid_argument("JointSpec: bridge length must be >= 2");
}

namespace {

geom::PointSet walk_from_rng(const WalkSpec& spec, CounterRng& rng) {
    geom::PointSet ps{spec.d, {}};
    ps.points.reserve(static_cast<std::size_t>(spec.n) + 1);
    std::vector<double> pos(static_cast<std::size_t>(spec.d), 0.0);
    ps.points.push_back(pos);
    for (int i = 0; i < spec.n; ++i) {
        for (int c = 0; c < spec.d; ++c) {
            double inc = rng.next_gaussian();
            if (spec.law == WalkLaw::shifted_gaussian)
                inc = spec.shift[static_cast<std::size_t>(c)] + spec.noise_scale * inc;
            pos[static_cast<std::size_t>(c)] += inc;
        }
        ps.points.push_back(pos);
    }
    return ps;
}

geom::PointSet bridge_from_rng(const BridgeSpec& spec, CounterRng& rng) {
    const std::size_t m = static_cast<std::size_t>(spec.m);
    const std::size_t d = static_cast<std::size_t>(spec.d);
    std::vector<std::vector<double>> inc(m, std::vector<double>(d));
    std::vector<double> mean(d, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t c = 0; c < d; ++c) {
            inc[i][c] = rng.next_gaussian();
            mean[c] += inc[i][c];
        }
    for (std::size_t c = 0; c < d; ++c) mean[c] /= static_cast<double>(m);

    geom::PointSet ps{spec.d, {}};
    ps.points.reserve(m + 1);
    std::vector<double> pos(d, 0.0);
    ps.points.push_back(pos);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        for (std::size_t c = 0; c < d; ++c) pos[c] += inc[i][c] - mean[c];
        ps.points.push_back(pos);
    }
    ps.points.emplace_back(d, 0.0);  // endpoint pinned to the exact origin
    return ps;
}

}  // namespace

geom::PointSet sample_walk(const WalkSpec& spec, std::uint64_t seed, std::uint64_t stream) {
    validate(spec);
    CounterRng rng(seed, stream);
    return walk_from_rng(spec, rng);
}

geom::PointSet sample_bridge(const BridgeSpec& spec, std::uint64_t seed, std::uint64_t stream) {
    validate(spec);
    CounterRng rng(seed, stream);
    return bridge_from_rng(spec, rng);
}

std::vector<geom::PointSet> sample_joint(const JointSpec& spec, std::uint64_t seed,
                                         std::uint64_t stream) {
    validate(spec);
    CounterRng rng(seed, stream);
    std::vector<geom::PointSet> out;
    out.reserve(spec.walk_lengths.size() + spec.bridge_lengths.size());
    for (int n : spec.walk_lengths)
        out.push_back(walk_from_rng(WalkSpec{n, spec.d, WalkLaw::symmetric_gaussian, {}, 1.0}, rng));
    for (int m : spec.bridge_lengths)
        out.push_back(bridge_from_rng(BridgeSpec{m, spec.d}, rng));
    return out;
}

geom::PointSet sample_nonsymmetric_walk(int n, int d, double t, std::uint64_t seed,
                                        std::uint64_t stream) {
    if (!(t > 0.0)) throw std::invalid_argument("sample_nonsymmetric_walk: need t > 0");
    WalkSpec spec{n, d, WalkLaw::shifted_gaussian,
                  std::vector<double>(static_cast<std::size_t>(d), 1.0), t};
    return sample_walk(spec, seed, stream);
}

std::vector<std::vector<double>> increment_matrix(const JointSpec& spec, std::uint64_t seed,
                                                  std::uint64_t stream) {
    validate(spec);
    CounterRng rng(seed, stream);
    const std::size_t d = static_cast<std::size_t>(spec.d);
    std::vector<std::vector<double>> rows(d);

    auto append_block = [&](int len, bool center) {
        std::vector<std::vector<double>> cols(static_cast<std::size_t>(len),
                                              std::vector<double>(d));
        for (auto& col : cols)
            for (std::size_t c = 0; c < d; ++c) col[c] = rng.next_gaussian();
        if (center) {
            for (std::size_t c = 0; c < d; ++c) {
                double mean = 0.0;
                for (const auto& col : cols) mean += col[c];
                mean /= static_cast<double>(len);
                for (auto& col : cols) col[c] -= mean;
            }
        }
        for (const auto& col : cols)
            for (std::size_t c = 0; c < d; ++c) rows[c].push_back(col[c]);
    };

    for (int n : spec.walk_lengths) append_block(n, false);
    for (int m : spec.bridge_lengths) append_block(m, true);
    return rows;
}

}  // namespace hullwalk::sample
