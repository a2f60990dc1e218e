#include <doctest.h>

#include <cmath>

#include "hullwalk/closed_forms.hpp"
#include "hullwalk/montecarlo.hpp"

using namespace hullwalk;
using namespace hullwalk::mc;

namespace {

double z_against(const BigRational& exact, const Estimate& est) {
    return compare(exact, est).z;
}

}  // namespace

TEST_CASE("face probability estimates match the closed forms") {
    McOptions opt;
    opt.samples = 20000;
    opt.seed = 101;

    const int mid[] = {1};
    const auto walk_est = estimate_face_prob(sample::WalkSpec{2, 1}, mid, opt);
    CHECK(std::abs(z_against(forms::face_prob_walk(2, 1, mid), walk_est)) < 3.0);
    CHECK(walk_est.n_discarded <= opt.samples / 1000);

    const int pair[] = {0, 2};
    const auto bridge_est = estimate_face_prob(sample::BridgeSpec{4, 2}, pair, opt);
    CHECK(std::abs(z_against(forms::face_prob_bridge(4, 2, pair), bridge_est)) < 3.0);

    // A one-step walk's start is always a vertex.
    const int start[] = {0};
    const auto sure = estimate_face_prob(sample::WalkSpec{1, 1}, start, opt);
    CHECK(sure.p_hat == 1.0);

    // Both spanning points of a two-step planar walk always form an edge.
    const auto edge = estimate_face_prob(sample::WalkSpec{2, 2}, pair, opt);
    CHECK(edge.p_hat == 1.0);
    CHECK(forms::face_prob_walk(2, 2, pair) == BigRational(1));

    // S_1 of a two-step planar walk is always a vertex.
    const auto v21 = estimate_face_prob(sample::WalkSpec{2, 2}, mid, opt);
    CHECK(v21.p_hat == 1.0);
    CHECK(forms::vertex_prob_walk(2, 2, 1) == BigRational(1));
}

TEST_CASE("estimates are reproducible and worker-count independent for counts") {
    McOptions opt;
    opt.samples = 4000;
    opt.seed = 7;
    const int mid[] = {2};

    opt.workers = 2;
    const auto a = estimate_face_prob(sample::WalkSpec{4, 2}, mid, opt);
    const auto b = estimate_face_prob(sample::WalkSpec{4, 2}, mid, opt);
    CHECK(a.p_hat == b.p_hat);
    CHECK(a.stderr_ == b.stderr_);
    CHECK(a.n_discarded == b.n_discarded);

    opt.workers = 1;
    const auto c = estimate_face_prob(sample::WalkSpec{4, 2}, mid, opt);
    CHECK(a.p_hat == c.p_hat);  // indicator sums are exact integers
}

TEST_CASE("time reversal leaves face probabilities unchanged") {
    McOptions opt;
    opt.samples = 20000;
    const int n = 5;
    const int fwd[] = {1, 2};
    const int rev[] = {n - 2, n - 1};
    opt.seed = 31;
    const auto a = estimate_face_prob(sample::WalkSpec{n, 2}, fwd, opt);
    opt.seed = 32;
    const auto b = estimate_face_prob(sample::WalkSpec{n, 2}, rev, opt);
    CHECK(forms::face_prob_walk(n, 2, fwd) == forms::face_prob_walk(n, 2, rev));
    const double z = (a.p_hat - b.p_hat) /
                     std::sqrt(a.stderr_ * a.stderr_ + b.stderr_ * b.stderr_);
    CHECK(std::abs(z) < 3.0);
}

TEST_CASE("expected face count estimates") {
    McOptions opt;
    opt.samples = 3000;
    opt.seed = 77;

    // One-dimensional hulls always have exactly two vertices.
    const auto ends = estimate_expected_faces(sample::WalkSpec{6, 1}, 0, opt);
    CHECK(ends.p_hat == 2.0);
    CHECK(ends.stderr_ == 0.0);

    const auto v = estimate_expected_faces(sample::WalkSpec{10, 2}, 0, opt);
    CHECK(std::abs(z_against(forms::expected_faces_walk(10, 2, 0), v)) < 3.0);

    const auto bridge_v = estimate_expected_faces(sample::BridgeSpec{5, 2}, 0, opt);
    CHECK(std::abs(z_against(forms::expected_faces_bridge(5, 2, 0), bridge_v)) < 3.0);
}

TEST_CASE("absorption estimates") {
    McOptions opt;
    opt.samples = 20000;
    opt.seed = 404;

    const int w2[] = {2};
    const auto walk2 = estimate_absorption(sample::JointSpec{{2}, {}, 1}, opt);
    CHECK(std::abs(z_against(forms::absorption_prob(1, w2, {}), walk2)) < 3.0);

    const int b3[] = {3};
    const auto bridge3 = estimate_absorption(sample::JointSpec{{}, {3}, 1}, opt);
    CHECK(std::abs(z_against(forms::absorption_prob(1, {}, b3), bridge3)) < 3.0);

    // A single point in the plane never absorbs the origin.
    const auto point = estimate_absorption(sample::JointSpec{{1}, {}, 2}, opt);
    CHECK(point.p_hat == 0.0);
}

TEST_CASE("shift averages match the bridge closed form in both modes") {
    McOptions opt;
    opt.samples = 20000;

    sample::WalkSpec nonsym{5, 2, sample::WalkLaw::shifted_gaussian, {1.0, 1.0}, 1.0};
    const int lags[] = {2};
    const BigRational exact = forms::shift_avg_face_prob(5, 2, lags);

    opt.seed = 1001;
    const auto cyc = estimate_shift_average(nonsym, lags, ShiftMode::cyclic, opt);
    CHECK(std::abs(z_against(exact, cyc)) < 3.0);

    opt.seed = 1002;
    const auto win = estimate_shift_average(nonsym, lags, ShiftMode::windowed, opt);
    CHECK(std::abs(z_against(exact, win)) < 3.0);

    const double z = (cyc.p_hat - win.p_hat) /
                     std::sqrt(cyc.stderr_ * cyc.stderr_ + win.stderr_ * win.stderr_);
    CHECK(std::abs(z) < 3.0);

    // Symmetric walk, no lags: the cyclic average is the vertex count over n+1.
    opt.seed = 1003;
    const auto sym = estimate_shift_average(sample::WalkSpec{4, 2}, {}, ShiftMode::cyclic, opt);
    BigRational vertex_avg = 0;
    for (int i = 0; i <= 4; ++i) vertex_avg += forms::vertex_prob_walk(4, 2, i);
    vertex_avg /= 5;
    CHECK(std::abs(z_against(vertex_avg, sym)) < 3.0);
}

TEST_CASE("nonsymmetric walk approaches the symmetric value at large noise scale") {
    McOptions opt;
    opt.samples = 10000;
    opt.seed = 2049;
    const int start[] = {0};
    sample::WalkSpec nearly_sym{5, 2, sample::WalkLaw::shifted_gaussian, {1.0, 1.0}, 100.0};
    const auto est = estimate_face_prob(nearly_sym, start, opt);
    CHECK(std::abs(z_against(forms::vertex_prob_walk(5, 2, 0), est)) < 4.0);
}

TEST_CASE("comparison reports") {
    Estimate est;
    est.p_hat = 0.5;
    est.stderr_ = 0.01;
    est.n_samples = 100;
    const auto ok = compare(BigRational(1, 2), est);
    CHECK(ok.pass);
    CHECK(ok.z == 0.0);

    const auto off = compare(BigRational(1, 4), est);
    CHECK_FALSE(off.pass);
    CHECK(off.z == doctest::Approx(25.0));

    est.stderr_ = 0.0;
    CHECK(compare(BigRational(1, 2), est).pass);
    CHECK_FALSE(compare(BigRational(1, 4), est).pass);
}

TEST_CASE("input validation") {
    McOptions opt;
    opt.samples = 0;
    const int mid[] = {1};
    CHECK_THROWS_AS(estimate_face_prob(sample::WalkSpec{2, 1}, mid, opt), std::invalid_argument);
    opt.samples = 1000;
    const int bad[] = {9};
    CHECK_THROWS_AS(estimate_face_prob(sample::BridgeSpec{4, 1}, bad, opt),
                    std::invalid_argument);
}
