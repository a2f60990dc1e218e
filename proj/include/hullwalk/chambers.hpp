#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hullwalk/numbers.hpp"
#include "hullwalk/polynomial.hpp"

namespace hullwalk::chambers {

/// A direct product of sign-change/permutation blocks (one per walk, sizes
/// n_i >= 1) and permutation-only blocks (one per bridge, sizes m_j >= 2),
/// acting on R^n with n = sum n_i + sum m_j. Block coordinates are laid out
/// walk blocks first, then bridge blocks.
struct ArrangementSpec {
    std::vector<int> b_blocks;
    std::vector<int> a_blocks;

    int ambient() const;
    BigInt group_order() const;  // prod 2^{n_i} n_i! * prod m_j!
};

void validate(const ArrangementSpec& spec);

/// A hyperplane through the origin with integer normal, stored gcd-reduced
/// with the first nonzero entry positive.
struct Hyperplane {
    std::vector<std::int64_t> normal;

    static Hyperplane canonical(std::vector<std::int64_t> normal);
    bool operator==(const Hyperplane&) const = default;
};

/// The reflection hyperplanes of the product arrangement: per B block all
/// x_i = +-x_j and x_k = 0 inside the block, per A block all x_i = x_j.
std::vector<Hyperplane> reflection_hyperplanes(const ArrangementSpec& spec);

/// Characteristic polynomial via the closed product formula:
/// prod (t-1)(t-3)...(t-(2n_i-1)) * prod t(t-1)...(t-(m_j-1)).
IntPolynomial char_poly_product(const ArrangementSpec& spec);

/// Characteristic polynomial via the alternating subset sum
/// sum_{B subset A} (-1)^{|B|} t^{n - rank B}, rank by exact integer
/// elimination. Capped at 22 hyperplanes.
IntPolynomial char_poly_whitney(std::span<const Hyperplane> hyperplanes, int ambient_dim);

/// Number of open regions cut out by an arrangement in R^n with
/// characteristic polynomial chi: (-1)^n chi(-1).
BigInt zaslavsky_regions(const IntPolynomial& chi, int n);

/// Number of regions met by a generic linear subspace of the given
/// codimension: with chi(t) = sum (-1)^{n-k} a_k t^k this is
/// 2(a_{codim+1} + a_{codim+3} + ...). Requires 1 <= codim <= n-1.
BigInt predicted_intersect_count(const IntPolynomial& chi, int n, int codim);

/// One group element: per B block a permutation plus a sign for every
/// coordinate, per A block a permutation. It maps e_k to sign_k * e_{perm[k]}
/// within the block.
struct GroupElement {
    struct SignedPerm {
        std::vector<int> perm;
        std::uint32_t sign_mask = 0;  // bit k set => coordinate k is negated
    };
    std::vector<SignedPerm> b;
    std::vector<std::vector<int>> a;
};

/// Streams the group elements exactly once each. Order (documented so that
/// partial counts are reproducible): per B block sign masks ascend as
/// integers and permutations advance lexicographically, sign-major; A-block
/// permutations advance lexicographically; later blocks advance fastest.
class GroupEnumerator {
  public:
    explicit GroupEnumerator(ArrangementSpec spec, std::uint64_t cap = 1000000);

    /// Fills `out` with the next element; false once exhausted.
    bool next(GroupElement& out);

  private:
    ArrangementSpec spec_;
    GroupElement state_;
    bool done_ = false;

    bool advance();
};

/// Orthonormal vectors spanning a linear subspace of R^n.
using SubspaceBasis = std::vector<std::vector<double>>;

/// Orthonormal basis of Ker(A) intersected with the bridge sum-zero subspace
/// L, where A is the d x n matrix of increment columns laid out in block
/// order. Throws DegenerateSample unless the result has dimension n - d - r
/// (r = number of bridge blocks).
SubspaceBasis kernel_intersection_basis(const std::vector<std::vector<double>>& a_rows,
                                        const ArrangementSpec& spec);

/// Number of chambers g C-bar, g in G, meeting the subspace spanned by V in
/// a nonzero point. V must lie inside L. Per element this solves a small LP:
/// a point of g^{-1} V obeying the fundamental-chamber inequalities and the
/// normalization sum_B sum_k x_k + sum_A (y_last - y_first) = 1, a functional
/// strictly positive on (C-bar ∩ L) away from the origin.
long chamber_intersect_count(const ArrangementSpec& spec, const SubspaceBasis& v,
                             double eps = 1e-9);

}  // namespace hullwalk::chambers
