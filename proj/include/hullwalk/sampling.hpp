#pragma once

#include <cstdint>
#include <vector>

#include "hullwalk/geometry.hpp"

namespace hullwalk::sample {

/// Counter-based generator: the SplitMix64 output function applied to a key
/// derived from (master seed, stream id) plus a running counter. Stateless
/// across streams, so sample index i can always be assigned stream i and the
/// draw sequence is independent of worker scheduling.
class CounterRng {
  public:
    CounterRng(std::uint64_t master_seed, std::uint64_t stream);

    std::uint64_t next_u64();
    double next_unit();      // uniform on (0, 1), endpoints excluded
    double next_gaussian();  // standard normal via Box-Muller

  private:
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

enum class WalkLaw {
    symmetric_gaussian,  // i.i.d. standard normal increments
    shifted_gaussian,    // increments shift + noise_scale * standard normal
};

struct WalkSpec {
    int n = 1;
    int d = 1;
    WalkLaw law = WalkLaw::symmetric_gaussian;
    std::vector<double> shift;  // length d; used by shifted_gaussian
    double noise_scale = 1.0;
};

struct BridgeSpec {
    int m = 2;
    int d = 1;
};

struct JointSpec {
    std::vector<int> walk_lengths;
    std::vector<int> bridge_lengths;  // all >= 2
    int d = 1;
};

void validate(const WalkSpec& spec);
void validate(const BridgeSpec& spec);
void validate(const JointSpec& spec);

/// n+1 points starting at the exact origin.
geom::PointSet sample_walk(const WalkSpec& spec, std::uint64_t seed, std::uint64_t stream = 0);

/// m+1 points; the first and last are exactly the zero vector. Increments are
/// i.i.d. Gaussians recentered by their mean, which keeps them exchangeable.
geom::PointSet sample_bridge(const BridgeSpec& spec, std::uint64_t seed, std::uint64_t stream = 0);

/// All walks (in order) followed by all bridges, drawn from one stream.
std::vector<geom::PointSet> sample_joint(const JointSpec& spec, std::uint64_t seed,
                                         std::uint64_t stream = 0);

/// Example of an exchangeable but not symmetrically exchangeable walk:
/// increments all-ones + t * standard normal.
geom::PointSet sample_nonsymmetric_walk(int n, int d, double t, std::uint64_t seed,
                                        std::uint64_t stream = 0);

/// The d x n matrix whose columns are the increments of a joint
/// configuration, walk blocks first: walk columns i.i.d. standard normal,
/// bridge columns standard normal recentered to sum to zero per block.
std::vector<std::vector<double>> increment_matrix(const JointSpec& spec, std::uint64_t seed,
                                                  std::uint64_t stream = 0);

}  // namespace hullwalk::sample
