#include "hullwalk/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hullwalk::geom {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kCostTol = 1e-12;
constexpr double kRankTol = 1e-10;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

void check_points(const PointSet& ps) {
    if (ps.dim < 1) throw std::invalid_argument("PointSet: dim must be >= 1");
    if (ps.points.empty()) throw std::invalid_argument("PointSet: no points");
    for (const auto& p : ps.points)
        if (static_cast<int>(p.size()) != ps.dim)
            throw std::invalid_argument("PointSet: inconsistent point dimension");
}

}  // namespace

double scale(const PointSet& ps) {
    double s = 0.0;
    for (const auto& p : ps.points) s = std::max(s, norm(p));
    return s;
}

Phase1Result phase1_simplex(const std::vector<std::vector<double>>& rows,
                            const std::vector<double>& rhs) {
    const int m = static_cast<int>(rows.size());
    const int n = m > 0 ? static_cast<int>(rows[0].size()) : 0;
    if (static_cast<int>(rhs.size()) != m)
        throw std::invalid_argument("phase1_simplex: rhs size mismatch");

    // Tableau columns: n structural, m artificial, 1 rhs. Row m is the
    // reduced-cost row for min(sum of artificials); its rhs cell holds minus
    // the current objective.
    const int cols = n + m + 1;
    std::vector<std::vector<double>> t(static_cast<std::size_t>(m) + 1,
                                       std::vector<double>(static_cast<std::size_t>(cols), 0.0));
    std::vector<int> basis(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const double flip = rhs[static_cast<std::size_t>(i)] < 0.0 ? -1.0 : 1.0;
        for (int j = 0; j < n; ++j)
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                flip * rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        t[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = 1.0;
        t[static_cast<std::size_t>(i)].back() = flip * rhs[static_cast<std::size_t>(i)];
        basis[static_cast<std::size_t>(i)] = n + i;
    }
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < m; ++i) s += t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        t[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] = -s;
    }
    {
        double s = 0.0;
        for (int i = 0; i < m; ++i) s += t[static_cast<std::size_t>(i)].back();
        t[static_cast<std::size_t>(m)].back() = -s;
    }

    const int max_iter = 200 + 50 * (m + n);
    int iter = 0;
    while (true) {
        // Bland: entering column = lowest index with negative reduced cost.
        int enter = -1;
        for (int j = 0; j < n + m; ++j) {
            if (t[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] < -kCostTol) {
                enter = j;
                break;
            }
        }
        if (enter < 0) break;

        int leave = -1;
        double best = 0.0;
        for (int i = 0; i < m; ++i) {
            const double a = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
            if (a > kPivotTol) {
                const double ratio = t[static_cast<std::size_t>(i)].back() / a;
                if (leave < 0 || ratio < best - kPivotTol ||
                    (ratio < best + kPivotTol &&
                     basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
                    leave = i;
                    best = ratio;
                }
            }
        }
        if (leave < 0) break;  // unbounded cannot happen in phase 1; stop defensively

        auto& prow = t[static_cast<std::size_t>(leave)];
        const double pivot = prow[static_cast<std::size_t>(enter)];
        for (double& v : prow) v /= pivot;
        for (int i = 0; i <= m; ++i) {
            if (i == leave) continue;
            auto& row = t[static_cast<std::size_t>(i)];
            const double f = row[static_cast<std::size_t>(enter)];
            if (f == 0.0) continue;
            for (int j = 0; j < cols; ++j)
                row[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
        }
        basis[static_cast<std::size_t>(leave)] = enter;

        if (++iter > max_iter)
            throw DegenerateSample("phase1_simplex: iteration cap reached");
    }

    return Phase1Result{std::max(0.0, -t[static_cast<std::size_t>(m)].back()), iter};
}

LPReport origin_in_hull_report(const PointSet& ps, double eps) {
    check_points(ps);
    if (eps <= 0.0) throw std::invalid_argument("origin_in_hull: eps must be > 0");

    const double s = scale(ps);
    if (s == 0.0) return LPReport{true, eps, 0};  // every point is the origin

    // Convex weights lambda >= 0: sum(lambda_i * p_i / s) = 0, sum(lambda) = 1.
    const int n = static_cast<int>(ps.size());
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(ps.dim) + 1,
                                          std::vector<double>(static_cast<std::size_t>(n)));
    std::vector<double> rhs(static_cast<std::size_t>(ps.dim) + 1, 0.0);
    for (int c = 0; c < ps.dim; ++c)
        for (int j = 0; j < n; ++j)
            rows[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)] =
                ps.points[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] / s;
    rows.back().assign(static_cast<std::size_t>(n), 1.0);
    rhs.back() = 1.0;

    const Phase1Result r = phase1_simplex(rows, rhs);
    const bool feasible = r.residual <= eps;
    return LPReport{feasible, feasible ? eps - r.residual : 0.0, r.iterations};
}

bool origin_in_hull(const PointSet& ps, double eps) {
    return origin_in_hull_report(ps, eps).feasible;
}

bool is_vertex(int idx, const PointSet& ps, double eps) {
    check_points(ps);
    if (idx < 0 || idx >= static_cast<int>(ps.size()))
        throw std::invalid_argument("is_vertex: index out of range");
    if (ps.size() == 1) return true;

    PointSet rel{ps.dim, {}};
    rel.points.reserve(ps.size() - 1);
    const auto& o = ps.points[static_cast<std::size_t>(idx)];
    for (std::size_t j = 0; j < ps.size(); ++j) {
        if (static_cast<int>(j) == idx) continue;
        std::vector<double> q(o.size());
        for (std::size_t c = 0; c < o.size(); ++c) q[c] = ps.points[j][c] - o[c];
        rel.points.push_back(std::move(q));
    }
    return !origin_in_hull(rel, eps);
}

std::vector<std::vector<double>> orthocomplement_basis(
    int dim, std::span<const std::vector<double>> vectors) {
    if (dim < 1) throw std::invalid_argument("orthocomplement_basis: dim must be >= 1");
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != dim)
            throw std::invalid_argument("orthocomplement_basis: vector dimension mismatch");

    std::vector<std::vector<double>> q;  // orthonormal span of the inputs
    auto orthogonalize = [&](std::vector<double>& w, const std::vector<std::vector<double>>& against) {
        for (int pass = 0; pass < 2; ++pass) {  // re-orthogonalization pass
            for (const auto& u : against) {
                const double c = dot(w, u);
                for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * u[i];
            }
        }
    };

    for (const auto& v : vectors) {
        std::vector<double> w = v;
        orthogonalize(w, q);
        const double r = norm(w);
        if (r <= kRankTol * std::max(1.0, norm(v)))
            throw DegenerateSample("orthocomplement_basis: rank-deficient input span");
        for (double& x : w) x /= r;
        q.push_back(std::move(w));
    }

    // Extend with the best-aligned coordinate vectors, largest residual first.
    std::vector<std::vector<double>> comp;
    const int want = dim - static_cast<int>(q.size());
    std::vector<std::vector<double>> all = q;
    for (int round = 0; round < want; ++round) {
        std::vector<double> best_w;
        double best_r = -1.0;
        for (int c = 0; c < dim; ++c) {
            std::vector<double> w(static_cast<std::size_t>(dim), 0.0);
            w[static_cast<std::size_t>(c)] = 1.0;
            orthogonalize(w, all);
            const double r = norm(w);
            if (r > best_r) {
                best_r = r;
                best_w = std::move(w);
            }
        }
        for (double& x : best_w) x /= best_r;
        comp.push_back(best_w);
        all.push_back(std::move(best_w));
    }
    return comp;
}

FaceStatus classify_face(const PointSet& ps, std::span<const int> indices, double eps) {
    check_points(ps);
    if (indices.empty()) throw std::invalid_argument("classify_face: empty index tuple");
    int prev = -1;
    for (int i : indices) {
        if (i <= prev || i >= static_cast<int>(ps.size()))
            throw std::invalid_argument("classify_face: indices must be strictly increasing");
        prev = i;
    }
    const int k = static_cast<int>(indices.size()) - 1;
    if (k >= ps.dim) throw std::invalid_argument("classify_face: face dimension must be < ambient dim");

    const auto& p0 = ps.points[static_cast<std::size_t>(indices[0])];
    std::vector<std::vector<double>> span_vecs;
    span_vecs.reserve(static_cast<std::size_t>(k));
    for (int l = 1; l <= k; ++l) {
        std::vector<double> v(p0.size());
        const auto& pl = ps.points[static_cast<std::size_t>(indices[static_cast<std::size_t>(l)])];
        for (std::size_t c = 0; c < p0.size(); ++c) v[c] = pl[c] - p0[c];
        span_vecs.push_back(std::move(v));
    }

    std::vector<std::vector<double>> basis;
    try {
        basis = orthocomplement_basis(ps.dim, span_vecs);
    } catch (const DegenerateSample&) {
        return FaceStatus::degenerate;  // affine hull has dimension < k
    }

    PointSet projected{static_cast<int>(basis.size()), {}};
    projected.points.reserve(ps.size() - indices.size());
    std::size_t next_sel = 0;
    for (std::size_t j = 0; j < ps.size(); ++j) {
        if (next_sel < indices.size() &&
            static_cast<int>(j) == indices[next_sel]) {
            ++next_sel;
            continue;
        }
        std::vector<double> y(basis.size());
        for (std::size_t c = 0; c < basis.size(); ++c) {
            double acc = 0.0;
            for (std::size_t t = 0; t < p0.size(); ++t)
                acc += basis[c][t] * (ps.points[j][t] - p0[t]);
            y[c] = acc;
        }
        projected.points.push_back(std::move(y));
    }

    if (projected.points.empty()) return FaceStatus::face;  // simplex spanning the whole set
    return origin_in_hull(projected, eps) ? FaceStatus::not_face : FaceStatus::face;
}

bool is_face(const PointSet& ps, std::span<const int> indices, double eps) {
    return classify_face(ps, indices, eps) == FaceStatus::face;
}

long count_faces(const PointSet& ps, int k, double eps) {
    check_points(ps);
    if (k < 0 || k >= ps.dim) throw std::invalid_argument("count_faces: need 0 <= k < dim");
    const int n = static_cast<int>(ps.size());
    const int r = k + 1;
    if (r > n) return 0;

    double subsets = 1.0;
    for (int i = 0; i < r; ++i) subsets = subsets * (n - i) / (i + 1);
    if (subsets > 1e6) throw std::invalid_argument("count_faces: subset cap exceeded");

    std::vector<int> idx(static_cast<std::size_t>(r));
    std::iota(idx.begin(), idx.end(), 0);
    long count = 0;
    while (true) {
        const FaceStatus st = classify_face(ps, idx, eps);
        if (st == FaceStatus::degenerate)
            throw DegenerateSample("count_faces: degenerate point subset");
        if (st == FaceStatus::face) ++count;
        int p = r - 1;
        while (p >= 0 && idx[static_cast<std::size_t>(p)] == n - (r - p)) --p;
        if (p < 0) break;
        ++idx[static_cast<std::size_t>(p)];
        for (int q2 = p + 1; q2 < r; ++q2)
            idx[static_cast<std::size_t>(q2)] = idx[static_cast<std::size_t>(q2 - 1)] + 1;
    }
    return count;
}

}  // namespace hullwalk::geom
