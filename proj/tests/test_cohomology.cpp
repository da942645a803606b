#include "ghm/cohomology.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace ghm;
using ghmtest::rv;
using ghmtest::periodic_cyclic;

namespace {

void check_against_oracle(const GModule& mod) {
    auto oracle = periodic_cyclic(mod);
    REQUIRE(CohomologyGroup(mod, 1).invariant_factors() == oracle.h1);
    REQUIRE(CohomologyGroup(mod, 2).invariant_factors() == oracle.h2);
}

CrystGroup one_gen_group(const IntMatrix& linear, const RatVector& u) {
    return CrystGroup::from_affine_generators(linear.rows(), {{linear, u}});
}

}  // namespace

TEST_CASE("bar complex is a complex", "[cohomology]") {
    auto g = FiniteMatrixGroup::from_generators(2, {IntMatrix::of({{0, -1}, {1, -1}})});
    auto mod = GModule::lattice(g);
    REQUIRE((bar::differential(mod, 1) * bar::differential(mod, 0)).is_zero());
    REQUIRE((bar::differential(mod, 2) * bar::differential(mod, 1)).is_zero());
}

TEST_CASE("cyclic cohomology matches the periodic resolution", "[cohomology]") {
    std::vector<IntMatrix> rotations = {
        IntMatrix::of({{-1, 0}, {0, -1}}),
        IntMatrix::of({{0, -1}, {1, -1}}),
        IntMatrix::of({{0, -1}, {1, 0}}),
        IntMatrix::of({{1, -1}, {1, 0}}),
    };
    for (const auto& r : rotations) {
        auto g = FiniteMatrixGroup::from_generators(2, {r});
        check_against_oracle(GModule::lattice(g));
        check_against_oracle(GModule::trivial(g, 1));
        check_against_oracle(GModule::scaled_lattice(g, Int(2)));
    }

    // classic values, frozen: H^2(Z/m, Z) = Z/m and H^1(Z/m, Z) = 0
    for (const auto& r : rotations) {
        auto g = FiniteMatrixGroup::from_generators(2, {r});
        auto mod = GModule::trivial(g, 1);
        REQUIRE(CohomologyGroup(mod, 1).invariant_factors().empty());
        REQUIRE(CohomologyGroup(mod, 2).invariant_factors() ==
                std::vector<Int>{Int(g.size())});
    }

    // sign action of the order two group on Z: H^1 = Z/2
    auto sign = FiniteMatrixGroup::from_generators(1, {IntMatrix::of({{-1}})});
    auto mod = GModule::lattice(sign);
    REQUIRE(CohomologyGroup(mod, 1).invariant_factors() == std::vector<Int>{2});
    check_against_oracle(mod);

    // diag(1,1,-1,-1) on Z^4: H^2 = (Z/2)^2 by the periodic resolution
    auto half = FiniteMatrixGroup::from_generators(
        4, {IntMatrix::of({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}})});
    auto lat = GModule::lattice(half);
    REQUIRE(CohomologyGroup(lat, 2).invariant_factors() == std::vector<Int>{2, 2});
    check_against_oracle(lat);
}

TEST_CASE("degenerate and invalid inputs", "[cohomology]") {
    auto triv = FiniteMatrixGroup::from_generators(2, std::vector<IntMatrix>{});
    auto mod = GModule::lattice(triv);
    REQUIRE(CohomologyGroup(mod, 1).invariant_factors().empty());
    REQUIRE(CohomologyGroup(mod, 2).invariant_factors().empty());
    REQUIRE_THROWS_AS(CohomologyGroup(mod, 3), std::invalid_argument);

    auto sign = FiniteMatrixGroup::from_generators(1, {IntMatrix::of({{-1}})});
    REQUIRE_THROWS_AS(GModule::from_generator_action(sign, 1, {}, {IntMatrix::of({{2}})}),
                      ActionMismatch);
}

TEST_CASE("extension classes have the expected orders", "[cohomology]") {
    auto fix_a = one_gen_group(
        IntMatrix::of({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}),
        rv({"1/2", "0", "0", "0"}));
    auto rep = extension_report(fix_a);
    REQUIRE(rep.order == 2);
    REQUIRE(rep.h2_invariants == std::vector<Int>{2, 2});
    REQUIRE_FALSE(CohomologyGroup(GModule::lattice(fix_a.point_group()), 2)
                      .group()
                      .coords_are_zero(rep.class_coords));
    REQUIRE(fix_a.minimal_denominator().d == rep.order);

    // the cocycle is closed: d2 eps = 0
    auto mod = GModule::lattice(fix_a.point_group());
    REQUIRE(is_zero(rat_vector(bar::differential(mod, 2).mul(rep.cocycle))));
    REQUIRE(CohomologyGroup(mod, 2).is_cocycle(rep.cocycle));

    auto pg = FiniteMatrixGroup::from_generators(2, {IntMatrix::of({{-1, 0}, {0, -1}})});
    auto fix_b = CrystGroup::from_vector_system(pg, {rv({"0", "0"}), rv({"0", "0"})});
    REQUIRE(extension_order(fix_b) == 1);

    struct Case {
        IntMatrix linear;
        RatVector u;
        long long order;
    };
    std::vector<Case> cases = {
        {IntMatrix::of({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, -1}}),
         rv({"1/3", "0", "0", "0"}), 3},
        {IntMatrix::of({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}),
         rv({"1/4", "0", "0", "0"}), 4},
        {IntMatrix::of({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, -1}, {0, 0, 1, 0}}),
         rv({"1/6", "0", "0", "0"}), 6},
    };
    for (const auto& c : cases) {
        auto g = one_gen_group(c.linear, c.u);
        REQUIRE(extension_order(g) == Int(c.order));
        REQUIRE(g.minimal_denominator().d == Int(c.order));
    }
}

TEST_CASE("splitting over overlattices, three routes agreeing", "[cohomology]") {
    auto fix_a = one_gen_group(
        IntMatrix::of({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}),
        rv({"1/2", "0", "0", "0"}));
    auto std_lat = Overlattice::standard(4);
    auto check = splitting_over(fix_a, std_lat);
    REQUIRE_FALSE(check.splits);
    REQUIRE_FALSE(check.origin_shift.has_value());

    auto wide = Overlattice::from_vectors(fix_a.point_group(), {rv({"1/2", "0", "0", "0"})});
    auto check2 = splitting_over(fix_a, wide);
    REQUIRE(check2.splits);
    REQUIRE(check2.origin_shift.has_value());
    for (std::size_t i = 0; i < fix_a.point_group().size(); ++i) {
        IntMatrix block = fix_a.point_group().element(i) - IntMatrix::identity(4);
        RatVector moved = add(block.mul(*check2.origin_shift), fix_a.translation_part(i));
        REQUIRE(wide.contains(moved));
    }

    auto narrow = Overlattice::from_vectors(fix_a.point_group(), {rv({"0", "1/2", "0", "0"})});
    REQUIRE_FALSE(splitting_over(fix_a, narrow).splits);

    auto pg = FiniteMatrixGroup::from_generators(2, {IntMatrix::of({{-1, 0}, {0, -1}})});
    auto shifted = CrystGroup::from_vector_system(pg, {rv({"0", "0"}), rv({"1/2", "1/2"})});
    auto split_check = splitting_over(shifted, Overlattice::standard(2));
    REQUIRE(split_check.splits);
    RatVector w = *split_check.origin_shift;
    for (std::size_t i = 0; i < 2; ++i) {
        IntMatrix block = pg.element(i) - IntMatrix::identity(2);
        REQUIRE(is_integral(add(block.mul(w), shifted.translation_part(i))));
    }

    // a fixed point exists exactly when the class dies over the overlattice
    auto fp = affine_fixed_point(fix_a, wide);
    REQUIRE(fp.has_value());
    REQUIRE_FALSE(affine_fixed_point(fix_a, std_lat).has_value());
}
