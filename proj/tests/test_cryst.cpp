#include "ghm/cryst.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "helpers.hpp"

using namespace ghm;
using ghmtest::rv;

namespace {

IntMatrix fix_a_linear() {
    return IntMatrix::of({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}});
}

CrystGroup fix_a() {
    return CrystGroup::from_affine_generators(4, {{fix_a_linear(), rv({"1/2", "0", "0", "0"})}});
}

}  // namespace

TEST_CASE("affine closure builds the full vector system", "[cryst]") {
    auto g = fix_a();
    REQUIRE(g.rank() == 4);
    REQUIRE(g.point_group().size() == 2);
    REQUIRE(g.translation_part(0) == rv({"0", "0", "0", "0"}));
    REQUIRE(g.translation_part(1) == rv({"1/2", "0", "0", "0"}));
    REQUIRE(g.validate().empty());

    auto klein = CrystGroup::from_affine_generators(
        2, {{IntMatrix::of({{1, 0}, {0, -1}}), rv({"1/2", "0"})}});
    REQUIRE(klein.validate().empty());
    REQUIRE(klein.translation_part(1) == rv({"1/2", "0"}));
}

TEST_CASE("inconsistent vector systems are reported pairwise", "[cryst]") {
    auto pg = FiniteMatrixGroup::from_generators(2, {IntMatrix::of({{1, 0}, {0, -1}})});
    auto g = CrystGroup::from_vector_system(pg, {rv({"0", "0"}), rv({"1/3", "0"})});
    auto defects = g.validate();
    REQUIRE_FALSE(defects.empty());
    bool found = false;
    for (const auto& d : defects) found = found || (d.g == 1 && d.h == 1);
    REQUIRE(found);
}

TEST_CASE("fixed point tests separate torsion from torsion freeness", "[cryst]") {
    auto a = fix_a();
    REQUIRE(a.torsion_status().torsion_free);
    REQUIRE(a.eigenvalue_one(1));  // the congruence test was genuinely needed

    auto pg = FiniteMatrixGroup::from_generators(2, {IntMatrix::of({{-1, 0}, {0, -1}})});
    auto b = CrystGroup::from_vector_system(pg, {rv({"0", "0"}), rv({"0", "0"})});
    auto rep = b.torsion_status();
    REQUIRE_FALSE(rep.torsion_free);
    REQUIRE(rep.elements.size() == 1);
    REQUIRE(rep.elements[0].fixed_point == rv({"0", "0"}));
    REQUIRE_FALSE(b.eigenvalue_one(1));  // -I has no eigenvalue one

    auto c = CrystGroup::from_vector_system(pg, {rv({"0", "0"}), rv({"1/2", "1/2"})});
    auto rep2 = c.torsion_status();
    REQUIRE_FALSE(rep2.torsion_free);
    const auto& w = rep2.elements[0];
    // the reported representative fixes the reported point exactly
    RatVector lhs = c.point_group().element(w.element).mul(w.fixed_point);
    for (std::size_t i = 0; i < 2; ++i)
        lhs[i] += c.translation_part(w.element)[i] + Rat(w.lattice_shift[i]);
    REQUIRE(lhs == w.fixed_point);
}

TEST_CASE("minimal denominators of the reference actions", "[cryst]") {
    struct Case {
        IntMatrix linear;
        RatVector u;
        long long d;
    };
    std::vector<Case> cases = {
        {fix_a_linear(), rv({"1/2", "0", "0", "0"}), 2},
        {IntMatrix::of({{1, 0, 0, 0},
                        {0, 1, 0, 0},
                        {0, 0, 0, -1},
                        {0, 0, 1, -1}}),
         rv({"1/3", "0", "0", "0"}), 3},
        {IntMatrix::of({{1, 0, 0, 0},
                        {0, 1, 0, 0},
                        {0, 0, 0, -1},
                        {0, 0, 1, 0}}),
         rv({"1/4", "0", "0", "0"}), 4},
        {IntMatrix::of({{1, 0, 0, 0},
                        {0, 1, 0, 0},
                        {0, 0, 1, -1},
                        {0, 0, 1, 0}}),
         rv({"1/6", "0", "0", "0"}), 6},
    };
    for (const auto& c : cases) {
        auto g = CrystGroup::from_affine_generators(4, {{c.linear, c.u}});
        auto rep = g.minimal_denominator();
        REQUIRE(rep.d == Int(c.d));
        REQUIRE(rep.realized.validate().empty());
        for (const auto& v : rep.realized.vector_system())
            for (const auto& entry : v) REQUIRE(in_scaled_lattice(entry, rep.d));
    }

    auto pg = FiniteMatrixGroup::from_generators(2, {IntMatrix::of({{-1, 0}, {0, -1}})});
    auto split = CrystGroup::from_vector_system(pg, {rv({"0", "0"}), rv({"1/2", "1/2"})});
    REQUIRE(split.minimal_denominator().d == 1);  // origin shift absorbs everything
}

TEST_CASE("change of origin preserves structure", "[cryst]") {
    auto g = fix_a();
    auto h = g.translate_conjugate(rv({"0", "0", "1/4", "1/4"}));
    REQUIRE(h.translation_part(1) == rv({"1/2", "0", "1/2", "1/2"}));
    REQUIRE(h.validate().empty());
    REQUIRE(h.minimal_denominator().d == 2);
    auto back = h.translate_conjugate(rv({"0", "0", "-1/4", "-1/4"}));
    REQUIRE(back.translation_part(1) == g.translation_part(1));
}

TEST_CASE("word translation matches the stored representative mod one", "[cryst]") {
    auto g = fix_a();
    REQUIRE(g.vector_of_word({1, 1}) == rv({"1", "0", "0", "0"}));
    REQUIRE(g.element_of_word({1, 1}) == 0);

    auto z4 = CrystGroup::from_affine_generators(
        4, {{IntMatrix::of({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}),
             rv({"1/4", "0", "0", "0"})}});
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::size_t> word(1 + rng() % 5);
        for (auto& w : word) w = rng() % z4.point_group().size();
        REQUIRE(mod1(z4.vector_of_word(word)) == z4.translation_part(z4.element_of_word(word)));
    }
}

TEST_CASE("overlattices canonicalize and test membership", "[cryst]") {
    auto g = fix_a();
    auto l = Overlattice::from_vectors(g.point_group(), {rv({"1/2", "0", "0", "0"})});
    REQUIRE(l.index() == 2);
    REQUIRE(l.contains(rv({"1/2", "0", "0", "0"})));
    REQUIRE(l.contains(rv({"3", "-2", "5", "0"})));
    REQUIRE_FALSE(l.contains(rv({"0", "1/2", "0", "0"})));
    auto v = rv({"7/2", "1", "0", "-2"});
    REQUIRE(l.from_coords(l.to_coords(v)) == v);
    REQUIRE(is_integral(l.to_coords(v)));

    auto rot = FiniteMatrixGroup::from_generators(2, {IntMatrix::of({{0, -1}, {1, 0}})});
    REQUIRE_THROWS_AS(Overlattice::from_vectors(rot, {rv({"1/2", "0"})}), NotInvariant);
    auto half = Overlattice::from_vectors(rot, {rv({"1/2", "1/2"})});
    REQUIRE(half.index() == 2);
}

TEST_CASE("fractional pure translations force a lattice rescale", "[cryst]") {
    std::vector<AffineGenerator> gens = {
        {IntMatrix::of({{1, 0}, {0, -1}}), rv({"1/4", "0"})}};
    bool threw = false;
    try {
        CrystGroup::from_affine_generators(2, gens);
    } catch (const NotCrystallographic& e) {
        threw = true;
        REQUIRE(e.lattice_too_small);
    }
    REQUIRE(threw);

    auto red = reduce_translations(2, gens);
    REQUIRE(red.translation_quotient.order() == Int(2));
    REQUIRE(red.group.validate().empty());
    REQUIRE(red.group.point_group().size() == 2);
    // in the rescaled coordinates the glide becomes the half translation
    std::size_t glide = red.group.point_group().index_of(IntMatrix::of({{1, 0}, {0, -1}}));
    REQUIRE(red.group.translation_part(glide) == rv({"1/2", "0"}));
    REQUIRE(red.group.torsion_status().torsion_free);
    REQUIRE(red.new_basis.mul(rv({"1", "0"})) == rv({"1/2", "0"}));

    auto pure = reduce_translations(2, {{IntMatrix::identity(2), rv({"1/2", "0"})}});
    REQUIRE(pure.group.point_group().size() == 1);
    REQUIRE(pure.translation_quotient.invariant_factors() == std::vector<Int>{2});
}
