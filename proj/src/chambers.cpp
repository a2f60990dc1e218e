#include "hullwalk/chambers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hullwalk/geometry.hpp"

namespace hullwalk::chambers {

namespace {

constexpr int kWhitneyCap = 22;
constexpr double kIllConditionedBand = 1000.0;

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    while (b != 0) {
        const std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

// Offsets of each block within the ambient coordinates, B blocks first.
std::vector<int> block_offsets(const ArrangementSpec& spec) {
    std::vector<int> off;
    off.reserve(spec.b_blocks.size() + spec.a_blocks.size());
    int pos = 0;
    for (int n : spec.b_blocks) {
        off.push_back(pos);
        pos += n;
    }
    for (int m : spec.a_blocks) {
        off.push_back(pos);
        pos += m;
    }
    return off;
}

}  // namespace

void validate(const ArrangementSpec& spec) {
    if (spec.b_blocks.empty() && spec.a_blocks.empty())
        throw std::invalid_argument("ArrangementSpec: need at least one block");
    for (int n : spec.b_blocks)
        if (n < 1) throw std::invalid_argument("ArrangementSpec: B block size must be >= 1");
    for (int m : spec.a_blocks)
        if (m < 2) throw std::invalid_argument("ArrangementSpec: A block size must be >= 2");
}

int ArrangementSpec::ambient() const {
    int n = 0;
    for (int b : b_blocks) n += b;
    for (int a : a_blocks) n += a;
    return n;
}

BigInt ArrangementSpec::group_order() const {
    BigInt order = 1;
    for (int n : b_blocks) order *= (BigInt(1) << n) * factorial(static_cast<unsigned>(n));
    for (int m : a_blocks) order *= factorial(static_cast<unsigned>(m));
    return order;
}

Hyperplane Hyperplane::canonical(std::vector<std::int64_t> normal) {
    std::int64_t g = 0;
    for (std::int64_t x : normal) g = gcd64(g, x);
    if (g == 0) throw std::invalid_argument("Hyperplane: zero normal");
    for (std::int64_t x : normal) {
        if (x != 0) {
            if (x < 0) g = -g;
            break;
        }
    }
    for (std::int64_t& x : normal) x /= g;
    return Hyperplane{std::move(normal)};
}

std::vector<Hyperplane> reflection_hyperplanes(const ArrangementSpec& spec) {
    validate(spec);
    const int n = spec.ambient();
    const auto offsets = block_offsets(spec);
    std::vector<Hyperplane> out;

    auto push = [&](int i, std::int64_t ci, int j, std::int64_t cj) {
        std::vector<std::int64_t> normal(static_cast<std::size_t>(n), 0);
        normal[static_cast<std::size_t>(i)] = ci;
        if (j >= 0) normal[static_cast<std::size_t>(j)] = cj;
        out.push_back(Hyperplane::canonical(std::move(normal)));
    };

    std::size_t blk = 0;
    for (int nb : spec.b_blocks) {
        const int o = offsets[blk++];
        for (int i = 0; i < nb; ++i) {
            for (int j = i + 1; j < nb; ++j) {
                push(o + i, 1, o + j, -1);  // x_i = x_j
                push(o + i, 1, o + j, 1);   // x_i = -x_j
            }
            push(o + i, 1, -1, 0);  // x_i = 0
        }
    }
    for (int ma : spec.a_blocks) {
        const int o = offsets[blk++];
        for (int i = 0; i < ma; ++i)
            for (int j = i + 1; j < ma; ++j) push(o + i, 1, o + j, -1);
    }
    return out;
}

IntPolynomial char_poly_product(const ArrangementSpec& spec) {
    validate(spec);
    IntPolynomial chi = IntPolynomial::one();
    for (int n : spec.b_blocks)
        for (int i = 1; i <= n; ++i) chi *= IntPolynomial{-(2 * static_cast<long>(i) - 1), 1};
    for (int m : spec.a_blocks)
        for (int i = 0; i < m; ++i) chi *= IntPolynomial{-static_cast<long>(i), 1};
    return chi;
}

namespace {

// Row-echelon set over the integers; rows are gcd-reduced after updates so
// entries stay small for normals in {-1, 0, 1}.
struct Echelon {
    std::vector<std::vector<std::int64_t>> rows;  // each with leading nonzero at pivot()

    static int pivot(const std::vector<std::int64_t>& r) {
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i] != 0) return static_cast<int>(i);
        return -1;
    }

    // Reduces v against current rows; returns false if v drops to zero.
    bool reduce(std::vector<std::int64_t>& v) const {
        for (const auto& r : rows) {
            const int p = pivot(r);
            if (v[static_cast<std::size_t>(p)] == 0) continue;
            const std::int64_t a = r[static_cast<std::size_t>(p)];
            const std::int64_t b = v[static_cast<std::size_t>(p)];
            std::int64_t g = 0;
            for (std::size_t i = 0; i < v.size(); ++i) {
                v[i] = v[i] * a - r[i] * b;
                g = gcd64(g, v[i]);
            }
            if (g > 1)
                for (auto& x : v) x /= g;
        }
        return pivot(v) >= 0;
    }
};

void whitney_dfs(std::span<const Hyperplane> hs, std::size_t idx, int parity, Echelon& ech,
                 std::vector<std::int64_t>& acc, int ambient) {
    if (idx == hs.size()) {
        acc[static_cast<std::size_t>(ambient - static_cast<int>(ech.rows.size()))] += parity;
        return;
    }
    whitney_dfs(hs, idx + 1, parity, ech, acc, ambient);  // exclude hs[idx]
    std::vector<std::int64_t> v = hs[idx].normal;
    if (ech.reduce(v)) {
        ech.rows.push_back(std::move(v));
        whitney_dfs(hs, idx + 1, -parity, ech, acc, ambient);
        ech.rows.pop_back();
    } else {
        whitney_dfs(hs, idx + 1, -parity, ech, acc, ambient);  // rank unchanged
    }
}

}  // namespace

IntPolynomial char_poly_whitney(std::span<const Hyperplane> hyperplanes, int ambient_dim) {
    if (ambient_dim < 1) throw std::invalid_argument("char_poly_whitney: bad ambient dimension");
    if (static_cast<int>(hyperplanes.size()) > kWhitneyCap)
        throw std::invalid_argument("char_poly_whitney: hyperplane cap exceeded");
    for (const auto& h : hyperplanes)
        if (static_cast<int>(h.normal.size()) != ambient_dim)
            throw std::invalid_argument("char_poly_whitney: normal dimension mismatch");

    std::vector<std::int64_t> acc(static_cast<std::size_t>(ambient_dim) + 1, 0);
    Echelon ech;
    whitney_dfs(hyperplanes, 0, 1, ech, acc, ambient_dim);
    std::vector<BigInt> coeffs(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) coeffs[i] = acc[i];
    return IntPolynomial(std::move(coeffs));
}

BigInt zaslavsky_regions(const IntPolynomial& chi, int n) {
    const BigInt v = chi.eval(BigInt(-1));
    return n % 2 == 0 ? v : -v;
}

BigInt predicted_intersect_count(const IntPolynomial& chi, int n, int codim) {
    if (codim < 1 || codim > n - 1)
        throw std::invalid_argument("predicted_intersect_count: need 1 <= codim <= n-1");
    BigInt acc = 0;
    for (int k = codim + 1; k <= n; k += 2) {
        BigInt a = chi.coeff(k);
        if ((n - k) % 2 != 0) a = -a;
        if (a < 0) throw std::invalid_argument("predicted_intersect_count: not a characteristic polynomial");
        acc += a;
    }
    return 2 * acc;
}

GroupEnumerator::GroupEnumerator(ArrangementSpec spec, std::uint64_t cap) : spec_(std::move(spec)) {
    validate(spec_);
    if (spec_.group_order() > cap)
        throw std::invalid_argument("GroupEnumerator: group order exceeds cap");
    for (int n : spec_.b_blocks) {
        if (n > 20) throw std::invalid_argument("GroupEnumerator: B block too large");
        GroupElement::SignedPerm sp;
        sp.perm.resize(static_cast<std::size_t>(n));
        std::iota(sp.perm.begin(), sp.perm.end(), 0);
        state_.b.push_back(std::move(sp));
    }
    for (int m : spec_.a_blocks) {
        std::vector<int> perm(static_cast<std::size_t>(m));
        std::iota(perm.begin(), perm.end(), 0);
        state_.a.push_back(std::move(perm));
    }
}

bool GroupEnumerator::advance() {
    // Odometer, last component fastest: A permutations, then B permutations,
    // then B sign masks.
    for (std::size_t j = state_.a.size(); j-- > 0;) {
        if (std::next_permutation(state_.a[j].begin(), state_.a[j].end())) return true;
    }
    for (std::size_t i = state_.b.size(); i-- > 0;) {
        auto& blk = state_.b[i];
        if (std::next_permutation(blk.perm.begin(), blk.perm.end())) return true;
        if (blk.sign_mask + 1 < (1u << blk.perm.size())) {
            ++blk.sign_mask;
            return true;
        }
        blk.sign_mask = 0;
    }
    return false;
}

bool GroupEnumerator::next(GroupElement& out) {
    if (done_) return false;
    out = state_;
    done_ = !advance();
    return true;
}

SubspaceBasis kernel_intersection_basis(const std::vector<std::vector<double>>& a_rows,
                                        const ArrangementSpec& spec) {
    validate(spec);
    const int n = spec.ambient();
    for (const auto& row : a_rows)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("kernel_intersection_basis: row length mismatch");

    std::vector<std::vector<double>> rows = a_rows;
    const auto offsets = block_offsets(spec);
    for (std::size_t j = 0; j < spec.a_blocks.size(); ++j) {
        std::vector<double> ind(static_cast<std::size_t>(n), 0.0);
        const int o = offsets[spec.b_blocks.size() + j];
        for (int c = 0; c < spec.a_blocks[j]; ++c) ind[static_cast<std::size_t>(o + c)] = 1.0;
        rows.push_back(std::move(ind));
    }

    SubspaceBasis basis = geom::orthocomplement_basis(n, rows);
    const int expected = n - static_cast<int>(a_rows.size()) - static_cast<int>(spec.a_blocks.size());
    if (static_cast<int>(basis.size()) != expected)
        throw geom::DegenerateSample("kernel_intersection_basis: unexpected nullity");
    return basis;
}

namespace {

// g maps e_k to sign_k e_{perm[k]} blockwise, so (g^{-1} y)_k = sign_k y_{perm[k]}.
std::vector<double> apply_inverse(const ArrangementSpec& spec, const GroupElement& g,
                                  const std::vector<double>& y) {
    std::vector<double> out(y.size());
    const auto offsets = block_offsets(spec);
    std::size_t blk = 0;
    for (std::size_t i = 0; i < g.b.size(); ++i) {
        const int o = offsets[blk++];
        const auto& sp = g.b[i];
        for (std::size_t k = 0; k < sp.perm.size(); ++k) {
            const double s = (sp.sign_mask >> k) & 1u ? -1.0 : 1.0;
            out[static_cast<std::size_t>(o) + k] =
                s * y[static_cast<std::size_t>(o + sp.perm[k])];
        }
    }
    for (std::size_t j = 0; j < g.a.size(); ++j) {
        const int o = offsets[blk++];
        for (std::size_t k = 0; k < g.a[j].size(); ++k)
            out[static_cast<std::size_t>(o) + k] = y[static_cast<std::size_t>(o + g.a[j][k])];
    }
    return out;
}

}  // namespace

long chamber_intersect_count(const ArrangementSpec& spec, const SubspaceBasis& v, double eps) {
    validate(spec);
    const int n = spec.ambient();
    if (v.empty()) throw std::invalid_argument("chamber_intersect_count: empty basis");
    for (const auto& col : v) {
        if (static_cast<int>(col.size()) != n)
            throw std::invalid_argument("chamber_intersect_count: basis dimension mismatch");
    }
    // V must lie in the bridge sum-zero subspace L.
    const auto offsets = block_offsets(spec);
    for (const auto& col : v) {
        for (std::size_t j = 0; j < spec.a_blocks.size(); ++j) {
            const int o = offsets[spec.b_blocks.size() + j];
            double s = 0.0;
            for (int c = 0; c < spec.a_blocks[j]; ++c) s += col[static_cast<std::size_t>(o + c)];
            if (std::abs(s) > 1e-8)
                throw std::invalid_argument("chamber_intersect_count: basis not inside L");
        }
    }

    const int p = static_cast<int>(v.size());

    // Chamber inequalities as (coordinate, previous-coordinate-or-none) pairs.
    struct Ineq {
        int hi;
        int lo;  // -1 for plain x_hi >= 0
    };
    std::vector<Ineq> ineqs;
    std::size_t blk = 0;
    for (int nb : spec.b_blocks) {
        const int o = offsets[blk++];
        ineqs.push_back({o, -1});
        for (int i = 1; i < nb; ++i) ineqs.push_back({o + i, o + i - 1});
    }
    for (int ma : spec.a_blocks) {
        const int o = offsets[blk++];
        for (int i = 1; i < ma; ++i) ineqs.push_back({o + i, o + i - 1});
    }
    const int q = static_cast<int>(ineqs.size());

    long count = 0;
    long ill = 0;
    long total = 0;
    GroupEnumerator en(spec);
    GroupElement g;
    while (en.next(g)) {
        ++total;
        // Transform the basis into the fundamental chamber's frame.
        std::vector<std::vector<double>> w(static_cast<std::size_t>(p));
        for (int j = 0; j < p; ++j)
            w[static_cast<std::size_t>(j)] = apply_inverse(spec, g, v[static_cast<std::size_t>(j)]);

        // Feasibility in coefficients c (split into c+ - c-) with slack per
        // inequality and the normalization row pinned to 1.
        std::vector<std::vector<double>> rows(
            static_cast<std::size_t>(q) + 1,
            std::vector<double>(static_cast<std::size_t>(2 * p + q), 0.0));
        std::vector<double> rhs(static_cast<std::size_t>(q) + 1, 0.0);
        for (int r = 0; r < q; ++r) {
            for (int j = 0; j < p; ++j) {
                double a = w[static_cast<std::size_t>(j)][static_cast<std::size_t>(ineqs[r].hi)];
                if (ineqs[r].lo >= 0)
                    a -= w[static_cast<std::size_t>(j)][static_cast<std::size_t>(ineqs[r].lo)];
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = a;
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(p + j)] = -a;
            }
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(2 * p + r)] = -1.0;
        }
        for (int j = 0; j < p; ++j) {
            double f = 0.0;
            blk = 0;
            for (int nb : spec.b_blocks) {
                const int o = offsets[blk++];
                for (int c = 0; c < nb; ++c)
                    f += w[static_cast<std::size_t>(j)][static_cast<std::size_t>(o + c)];
            }
            for (int ma : spec.a_blocks) {
                const int o = offsets[blk++];
                f += w[static_cast<std::size_t>(j)][static_cast<std::size_t>(o + ma - 1)] -
                     w[static_cast<std::size_t>(j)][static_cast<std::size_t>(o)];
            }
            rows.back()[static_cast<std::size_t>(j)] = f;
            rows.back()[static_cast<std::size_t>(p + j)] = -f;
        }
        rhs.back() = 1.0;

        double residual;
        try {
            residual = geom::phase1_simplex(rows, rhs).residual;
        } catch (const geom::DegenerateSample&) {
            ++ill;
            continue;
        }
        if (residual <= eps) {
            ++count;
        } else if (residual <= kIllConditionedBand * eps) {
            ++ill;
        }
    }

    if (ill > 0 && static_cast<double>(ill) > 0.001 * static_cast<double>(total))
        throw geom::DegenerateSample("chamber_intersect_count: too many ill-conditioned elements");
    return count;
}

}  // namespace hullwalk::chambers
