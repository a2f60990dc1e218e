#include <doctest.h>

#include <set>
#include <string>

#include "hullwalk/chambers.hpp"
#include "hullwalk/closed_forms.hpp"
#include "hullwalk/sampling.hpp"

using namespace hullwalk;
using namespace hullwalk::chambers;

namespace {

std::string element_key(const GroupElement& g) {
    std::string key;
    for (const auto& sp : g.b) {
        key += "B" + std::to_string(sp.sign_mask) + ":";
        for (int p : sp.perm) key += std::to_string(p) + ",";
    }
    for (const auto& perm : g.a) {
        key += "A:";
        for (int p : perm) key += std::to_string(p) + ",";
    }
    return key;
}

long count_elements(const ArrangementSpec& spec, bool check_unique = true) {
    GroupEnumerator en(spec);
    GroupElement g;
    std::set<std::string> seen;
    long count = 0;
    while (en.next(g)) {
        ++count;
        if (check_unique) CHECK(seen.insert(element_key(g)).second);
    }
    return count;
}

}  // namespace

TEST_CASE("reflection hyperplane inventories") {
    CHECK(reflection_hyperplanes({{2}, {}}).size() == 4);   // x1=x2, x1=-x2, x1=0, x2=0
    CHECK(reflection_hyperplanes({{}, {3}}).size() == 3);   // pairs of three coordinates
    CHECK(reflection_hyperplanes({{1}, {3}}).size() == 4);  // disjoint union
    CHECK(reflection_hyperplanes({{3}, {}}).size() == 9);
}

TEST_CASE("characteristic polynomials from the product formula") {
    CHECK(char_poly_product({{2}, {}}) == IntPolynomial{3, -4, 1});
    CHECK(char_poly_product({{}, {3}}) == IntPolynomial{0, 2, -3, 1});
    // (t-1) * t(t-1)(t-2)
    CHECK(char_poly_product({{1}, {3}}) ==
          IntPolynomial{-1, 1} * IntPolynomial{0, 2, -3, 1});
    CHECK(char_poly_product({{1}, {3}}) == IntPolynomial{0, -2, 5, -4, 1});
}

TEST_CASE("Whitney sum agrees with the product formula") {
    const std::vector<ArrangementSpec> specs = {
        {{1}, {}}, {{2}, {}}, {{3}, {}}, {{4}, {}},
        {{}, {2}}, {{}, {3}}, {{}, {4}}, {{}, {5}}, {{}, {6}}, {{}, {7}},
        {{2}, {2}}, {{1}, {3}}, {{2}, {3}}, {{1, 1}, {2}},
    };
    for (const auto& spec : specs) {
        const auto planes = reflection_hyperplanes(spec);
        CHECK(char_poly_whitney(planes, spec.ambient()) == char_poly_product(spec));
    }
}

TEST_CASE("Whitney brute force on hand-built arrangements") {
    // Empty arrangement: chi = t^n.
    CHECK(char_poly_whitney({}, 2) == IntPolynomial{0, 0, 1});
    // A single hyperplane in the plane: chi = t^2 - t.
    const std::vector<Hyperplane> one = {Hyperplane::canonical({1, 0})};
    CHECK(char_poly_whitney(one, 2) == IntPolynomial{0, -1, 1});

    std::vector<Hyperplane> too_many(23, Hyperplane::canonical({1, 0}));
    CHECK_THROWS_AS(char_poly_whitney(too_many, 2), std::invalid_argument);
}

TEST_CASE("Zaslavsky region counts") {
    CHECK(zaslavsky_regions(char_poly_product({{2}, {}}), 2) == 8);
    CHECK(zaslavsky_regions(char_poly_product({{}, {3}}), 3) == 6);
    CHECK(zaslavsky_regions(IntPolynomial{0, 0, 1}, 2) == 1);  // empty arrangement

    // Chambers are exactly the regions for every reflection arrangement.
    const std::vector<ArrangementSpec> specs = {
        {{1}, {}}, {{2}, {}}, {{3}, {}}, {{4}, {}},
        {{}, {2}}, {{}, {4}}, {{}, {6}}, {{2}, {3}}, {{1, 2}, {2}},
    };
    for (const auto& spec : specs)
        CHECK(zaslavsky_regions(char_poly_product(spec), spec.ambient()) == spec.group_order());
}

TEST_CASE("predicted intersection counts") {
    const auto b2 = char_poly_product({{2}, {}});
    CHECK(predicted_intersect_count(b2, 2, 1) == 2);

    const auto a2 = char_poly_product({{}, {3}});
    CHECK(predicted_intersect_count(a2, 3, 2) == 2);
    CHECK(predicted_intersect_count(a2, 3, 1) == 6);  // 2 * a_2, a_2 = 3

    // Coefficients past the degree vanish by convention.
    CHECK(predicted_intersect_count(IntPolynomial{0, 0, 1}, 2, 1) == 2);
    CHECK_THROWS_AS(predicted_intersect_count(b2, 2, 2), std::invalid_argument);
}

TEST_CASE("group enumeration counts and uniqueness") {
    CHECK(count_elements({{2}, {}}) == 8);
    CHECK(count_elements({{}, {3}}) == 6);
    CHECK(count_elements({{1}, {3}}) == 12);
    CHECK(count_elements({{2}, {3}}) == 48);
    CHECK(ArrangementSpec{{3}, {3}}.group_order() == 288);
    CHECK_THROWS_AS(GroupEnumerator({{2}, {}}, 4), std::invalid_argument);  // cap
}

TEST_CASE("kernel intersection basis dimensions") {
    // One 2-step walk, d=1: nullity 1.
    {
        const sample::JointSpec joint{{2}, {}, 1};
        const ArrangementSpec spec{{2}, {}};
        const auto basis = kernel_intersection_basis(sample::increment_matrix(joint, 5), spec);
        CHECK(basis.size() == 1);
    }
    // One 3-step bridge, d=1: nullity 3 - 1 - 1 = 1.
    {
        const sample::JointSpec joint{{}, {3}, 1};
        const ArrangementSpec spec{{}, {3}};
        const auto basis = kernel_intersection_basis(sample::increment_matrix(joint, 6), spec);
        CHECK(basis.size() == 1);
        // The basis lies inside the sum-zero subspace L.
        CHECK(std::abs(basis[0][0] + basis[0][1] + basis[0][2]) < 1e-10);
    }
}

TEST_CASE("chamber intersection counts match the prediction") {
    struct Case {
        ArrangementSpec spec;
        int d;
    };
    const std::vector<Case> cases = {
        {{{2}, {}}, 1},
        {{{}, {3}}, 1},
        {{{1}, {3}}, 1},
        {{{3}, {}}, 1},
        {{{3}, {}}, 2},
    };
    for (const auto& c : cases) {
        const int n = c.spec.ambient();
        const int r = static_cast<int>(c.spec.a_blocks.size());
        const BigInt predicted =
            predicted_intersect_count(char_poly_product(c.spec), n, c.d + r);
        const sample::JointSpec joint{c.spec.b_blocks, c.spec.a_blocks, c.d};
        for (int trial = 0; trial < 25; ++trial) {
            const auto rows =
                sample::increment_matrix(joint, 2718, static_cast<std::uint64_t>(trial));
            const auto basis = kernel_intersection_basis(rows, c.spec);
            CHECK(BigInt(chamber_intersect_count(c.spec, basis)) == predicted);
        }
    }
}

TEST_CASE("chamber counts close the loop with the absorption probability") {
    struct Case {
        ArrangementSpec spec;
        int d;
    };
    const std::vector<Case> cases = {
        {{{2}, {}}, 1}, {{{}, {3}}, 1}, {{{1}, {3}}, 1}, {{{1}, {3}}, 2},
        {{{2}, {3}}, 1}, {{{2}, {3}}, 2}, {{{3}, {}}, 1}, {{{3}, {}}, 2},
    };
    for (const auto& c : cases) {
        const int n = c.spec.ambient();
        const int r = static_cast<int>(c.spec.a_blocks.size());
        const BigInt predicted =
            predicted_intersect_count(char_poly_product(c.spec), n, c.d + r);
        CHECK(BigRational(predicted, c.spec.group_order()) ==
              forms::absorption_prob(c.d, c.spec.b_blocks, c.spec.a_blocks));
    }
}

TEST_CASE("chamber intersection rejects a basis outside L") {
    const ArrangementSpec spec{{}, {3}};
    SubspaceBasis v = {{1.0, 0.0, 0.0}};
    CHECK_THROWS_AS(chamber_intersect_count(spec, v), std::invalid_argument);
}
