#include "cgk/errors.hpp"
#include "cgk/reps.hpp"
#include "doctest.h"

using namespace cgk;

namespace {

DiffOp op(const std::string& text, const AlgebraSpec& spec) { return parse_diffop(text, coset_layout(spec)); }

CoefPoly one(const AlgebraSpec& spec) { return CoefPoly(coset_layout(spec), 1); }

}  // namespace

TEST_CASE("coset layouts") {
    CHECK(coset_layout({1, 3, Extension::Mass}).size() == 3);
    CHECK(coset_layout({2, 3, Extension::Mass}).size() == 5);
    CHECK(coset_layout({2, 2, Extension::Exotic}).size() == 4);
    CHECK(coset_layout({1, 2, Extension::None}).size() == 2);
}

TEST_CASE("right action examples") {
    const AlgebraSpec s13{1, 3, Extension::Mass};
    CHECK(right_action(s13, Gen::H()) == op("d/dt + x1*d/dx0", s13));
    const AlgebraSpec s21{2, 1, Extension::Mass};
    CHECK(right_action(s21, Gen::P(0, PSign::Plus)) == op("d/dx0", s21));
    const AlgebraSpec flat{1, 2, Extension::None};
    CHECK(right_action(flat, Gen::P(2)) == op("d/dx0", flat));
    CHECK_THROWS_AS(right_action(s13, Gen::C()), UnsupportedGenerator);
    CHECK_THROWS_AS(right_action(s13, Gen::D()), UnsupportedGenerator);
}

TEST_CASE("left action examples") {
    const AlgebraSpec heat{1, 1, Extension::Mass};
    CHECK(left_action(heat, Params::symbolic(), Gen::D()) == op("delta - 2*t*d/dt - x0*d/dx0", heat));
    for (int two_ell : {1, 3, 5}) {
        const AlgebraSpec s{1, two_ell, Extension::Mass};
        CHECK(left_action(s, Params::symbolic(), Gen::H()) == op("-d/dt", s));
    }
    const AlgebraSpec exo{2, 2, Extension::Exotic};
    CHECK(left_action(exo, Params::symbolic(), Gen::Theta()) == op("-theta", exo));
    CHECK_THROWS_AS(left_action({1, 2, Extension::None}, Params::symbolic(), Gen::H()), UnsupportedFamily);
}

TEST_CASE("left images are representations") {
    for (const auto& s : supported_specs(5)) {
        if (!s.has_center()) continue;
        CAPTURE(s.to_string());
        auto failures = rep_check(Algebra(s), left_images(s, Params::symbolic()));
        CHECK(failures.empty());
    }
    // [pi(P0), pi(P1)] at ell=1/2 is the central constant.
    const AlgebraSpec heat{1, 1, Extension::Mass};
    Params p = Params::symbolic();
    DiffOp bracket = commutator(left_action(heat, p, Gen::P(0)), left_action(heat, p, Gen::P(1)));
    CHECK(bracket.order() == 0);
    CHECK_FALSE(bracket.is_zero());
}

TEST_CASE("right images are representations of g+") {
    for (const auto& s : supported_specs(5)) {
        CAPTURE(s.to_string());
        CHECK(rep_check(Algebra(s), right_images(s)).empty());
    }
    const AlgebraSpec s13{1, 3, Extension::Mass};
    CHECK(commutator(right_action(s13, Gen::H()), right_action(s13, Gen::P(1))) ==
          right_action(s13, Gen::P(0)) * Scalar(-1));
}

TEST_CASE("fault injection names the broken pair") {
    const AlgebraSpec heat{1, 1, Extension::Mass};
    Algebra broken(heat);
    broken.override_bracket(Gen::D(), Gen::H(), GenCombo(Gen::H(), 3));
    auto failures = rep_check(broken, left_images(heat, Params::symbolic()));
    REQUIRE(failures.size() == 1);
    const bool named = (failures[0].x == Gen::D() && failures[0].y == Gen::H()) ||
                       (failures[0].x == Gen::H() && failures[0].y == Gen::D());
    CHECK(named);
    CHECK_FALSE(failures[0].residual.is_zero());
}

TEST_CASE("lowest weight realization") {
    for (const auto& s : supported_specs(5)) {
        CAPTURE(s.to_string());
        Algebra alg(s);
        for (const auto& [g, image] : right_images(s)) CHECK(apply(image, one(s)).is_zero());
        if (!s.has_center()) continue;
        VermaModule mod(s, Params::symbolic());
        for (const auto& z : alg.decomposition().zero) {
            CAPTURE(z.name());
            CHECK(apply(left_action(s, Params::symbolic(), z), one(s)) ==
                  CoefPoly(coset_layout(s), -mod.lowest_weight().at(z)));
        }
    }
}
