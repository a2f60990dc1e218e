#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hullwalk::geom {

/// Thrown when a numerical predicate cannot give a trustworthy answer on the
/// given input: simplex iteration cap reached, unexpected rank deficiency in
/// sampled data, and the like. Monte Carlo drivers treat this as "discard the
/// sample and redraw".
class DegenerateSample : public std::runtime_error {
  public:
    explicit DegenerateSample(const std::string& what) : std::runtime_error(what) {}
};

/// An ordered list of points sharing one ambient dimension.
struct PointSet {
    int dim = 0;
    std::vector<std::vector<double>> points;

    std::size_t size() const { return points.size(); }
};

/// Outcome of a feasibility LP. `margin` is how far below the feasibility
/// threshold the residual landed; it is meaningful only when `feasible`.
struct LPReport {
    bool feasible = false;
    double margin = 0.0;
    int iterations = 0;
};

/// Phase-1 simplex on  {x >= 0 : rows * x = rhs}  with Bland's rule.
/// Returns the minimal attainable sum of artificial variables (0 for a
/// feasible system, up to roundoff) and the pivot count. Throws
/// DegenerateSample if the iteration cap is reached.
struct Phase1Result {
    double residual = 0.0;
    int iterations = 0;
};
Phase1Result phase1_simplex(const std::vector<std::vector<double>>& rows,
                            const std::vector<double>& rhs);

/// True iff some convex combination of the points lands within
/// eps * scale(ps) of the origin, where scale is the largest point norm.
bool origin_in_hull(const PointSet& ps, double eps = 1e-9);
LPReport origin_in_hull_report(const PointSet& ps, double eps = 1e-9);

/// True iff points[idx] is a vertex of the hull of the whole set.
bool is_vertex(int idx, const PointSet& ps, double eps = 1e-9);

enum class FaceStatus {
    face,
    not_face,
    degenerate,  // selected points do not span an affine hull of full dimension
};

/// Decides whether the selected points span a (|indices|-1)-dimensional face
/// of the hull: project everything onto the orthogonal complement of their
/// affine hull and ask whether the shared image is a vertex of the projected
/// cloud. `indices` must be strictly increasing positions into ps.
FaceStatus classify_face(const PointSet& ps, std::span<const int> indices, double eps = 1e-9);
bool is_face(const PointSet& ps, std::span<const int> indices, double eps = 1e-9);

/// Number of (k+1)-subsets of the points that span a k-face. Guarded to at
/// most 10^6 subsets; throws DegenerateSample if any subset is degenerate.
long count_faces(const PointSet& ps, int k, double eps = 1e-9);

/// Orthonormal basis of the orthogonal complement of span(vectors) inside
/// R^dim, by modified Gram-Schmidt with re-orthogonalization. Throws
/// DegenerateSample if the input vectors are rank-deficient.
std::vector<std::vector<double>> orthocomplement_basis(
    int dim, std::span<const std::vector<double>> vectors);

/// Largest point norm; the reference scale for feasibility tolerances.
double scale(const PointSet& ps);

}  // namespace hullwalk::geom
