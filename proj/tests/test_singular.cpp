#include "cgk/errors.hpp"
#include "cgk/singular.hpp"
#include "doctest.h"

using namespace cgk;

namespace {

const Scalar delta = Scalar::symbol(Symbol::Delta);
const Scalar mu = Scalar::symbol(Symbol::Mu);
const Scalar theta = Scalar::symbol(Symbol::Theta);

PbwMonomial mono(int h, std::vector<int> a, std::vector<int> b = {}) { return PbwMonomial{h, std::move(a), std::move(b)}; }

Params with(Symbol s, const Scalar& v) {
    Params p = Params::symbolic();
    p.set(s, v);
    return p;
}

BasisSelector d_shift(int shift) {
    BasisSelector sel;
    sel.d_shift = shift;
    return sel;
}

BasisSelector level(int p) {
    BasisSelector sel;
    sel.level = p;
    return sel;
}

}  // namespace

TEST_CASE("closed-form singular vectors") {
    VermaModule heat({1, 1, Extension::Mass}, Params::symbolic());
    ModuleVector expected = ModuleVector(mono(1, {0}), Scalar(2) * mu) + ModuleVector(mono(0, {2}), 1);
    CHECK(singular_closed(heat, 1) == expected);
    CHECK(singular_closed(heat, 0) == heat.vacuum());

    VermaModule exo({2, 2, Extension::Exotic}, Params::symbolic());
    ModuleVector exo_expected = ModuleVector(mono(1, {0, 0}, {0}), theta) + ModuleVector(mono(0, {0, 1}, {1}), -1);
    CHECK(singular_closed(exo, 1) == exo_expected);

    VermaModule flat({1, 2, Extension::None}, with(Symbol::Kappa, 0));
    CHECK(singular_closed(flat, 3) == ModuleVector(mono(0, {3}), 1));

    VermaModule curved({1, 2, Extension::None}, with(Symbol::Kappa, 1));
    CHECK_THROWS_AS(singular_closed(curved, 1), ConditionNotSatisfied);
}

TEST_CASE("singular conditions") {
    CHECK(Scalar(singular_condition({1, 1, Extension::Mass}, 1)) == Scalar(2) * delta + Scalar(1));
    CHECK(Scalar(singular_condition({2, 2, Extension::Exotic}, 1)) == delta + Scalar(2));
    // delta - 2 + 1 + 1
    CHECK(Scalar(singular_condition({2, 1, Extension::Mass}, 2)) == delta);
    CHECK(condition_root({1, 1, Extension::Mass}, 1) == Rational(-1, 2));
    CHECK(condition_root({2, 2, Extension::Exotic}, 1) == Rational(-2));
    CHECK_THROWS_AS(singular_condition({1, 2, Extension::None}, 1), UnsupportedFamily);
}

TEST_CASE("verification at the root and away from it") {
    const AlgebraSpec spec{1, 1, Extension::Mass};
    VermaModule at_root(spec, with(Symbol::Delta, Rational(-1, 2)));
    auto good = verify_singular(at_root, singular_closed(at_root, 1));
    CHECK(good.is_singular);
    CHECK(good.weight.at(Gen::D()) == Scalar(Rational(5, 2)));

    VermaModule generic(spec, Params::symbolic());
    auto bad = verify_singular(generic, singular_closed(generic, 1));
    CHECK_FALSE(bad.is_singular);
    bool saw_c = false;
    for (const auto& r : bad.annihilators) {
        if (!(r.gen == Gen::C())) continue;
        saw_c = true;
        REQUIRE_FALSE(r.value.is_zero());
        for (const auto& [m, c] : r.value.terms()) {
            REQUIRE(c.is_polynomial());
            CHECK(divide_exact(c.numerator(), singular_condition(spec, 1)).has_value());
        }
    }
    CHECK(saw_c);

    CHECK(verify_singular(generic, generic.vacuum()).is_singular);
    CHECK_FALSE(verify_singular(generic, ModuleVector()).is_singular);
}

TEST_CASE("search recovers the heat singular vector") {
    Params p = with(Symbol::Delta, Rational(-1, 2));
    p.set(Symbol::Mu, 1);
    VermaModule mod({1, 1, Extension::Mass}, p);
    auto found = search_singular(mod, d_shift(2));
    REQUIRE(found.kernel.size() == 1);
    CHECK(proportional(found.kernel[0], ModuleVector(mono(1, {0}), 2) + ModuleVector(mono(0, {2}), 1)));
    CHECK(found.caveats.empty());

    // Symbolic delta: no kernel, and the condition shows up among the caveats.
    VermaModule generic({1, 1, Extension::Mass}, Params::symbolic());
    auto symbolic = search_singular(generic, d_shift(2));
    CHECK(symbolic.kernel.empty());
    bool has_condition = false;
    for (const auto& c : symbolic.caveats)
        has_condition = has_condition || divide_exact(c, singular_condition({1, 1, Extension::Mass}, 1)).has_value();
    CHECK(has_condition);
}

TEST_CASE("closed forms match search across families") {
    struct Case {
        AlgebraSpec spec;
        int q;
    };
    const Case cases[] = {{{1, 3, Extension::Mass}, 2}, {{2, 1, Extension::Mass}, 2}, {{2, 3, Extension::Mass}, 1},
                          {{2, 2, Extension::Exotic}, 2}, {{2, 4, Extension::Exotic}, 1}};
    for (const auto& c : cases) {
        CAPTURE(c.spec.to_string());
        CAPTURE(c.q);
        VermaModule mod(c.spec, with(Symbol::Delta, condition_root(c.spec, c.q)));
        ModuleVector v = singular_closed(mod, c.q);
        auto report = verify_singular(mod, v);
        CHECK(report.is_singular);
        CHECK(report.weight.at(Gen::D()) == Scalar(2 * c.q) - Scalar(condition_root(c.spec, c.q)));
        BasisSelector sel = d_shift(2 * c.q);
        if (c.spec.d == 2) sel.j_shift = 0;
        auto found = search_singular(mod, sel);
        REQUIRE(found.kernel.size() == 1);
        CHECK(proportional(found.kernel[0], v));
    }
}

TEST_CASE("d=2 mass normalization is tied to the central term") {
    // With [P+, P-] = s * I_m * M the singular element needs coefficient s * ((ell-1/2)!)^2.
    for (int two_ell : {1, 3, 5}) {
        CAPTURE(two_ell);
        const AlgebraSpec spec{2, two_ell, Extension::Mass};
        const int half = (two_ell - 1) / 2;
        const Scalar base = Scalar(Rational(factorial(half) * factorial(half)));
        auto singular_with = [&](int scale, const Scalar& coef) {
            VermaModule mod(Algebra(spec, Scalar(scale)), with(Symbol::Delta, condition_root(spec, 1)));
            UElement s{{coef * mu, {Gen::H()}},
                       {Scalar(1), {Gen::P(half, PSign::Plus), Gen::P(half, PSign::Minus)}}};
            return verify_singular(mod, apply_element(mod, s, mod.vacuum())).is_singular;
        };
        CHECK(singular_with(1, base));
        CHECK_FALSE(singular_with(1, Scalar(2) * base));
        CHECK(singular_with(2, Scalar(2) * base));
    }
}

TEST_CASE("centerless family") {
    const AlgebraSpec spec{1, 2, Extension::None};
    VermaModule flat(spec, with(Symbol::Kappa, 0));
    for (int p = 0; p <= 4; ++p) {
        auto found = search_singular(flat, level(p));
        REQUIRE(found.kernel.size() == 1);
        CHECK(found.kernel[0] == ModuleVector(mono(0, {p}), 1));
    }
    for (const Rational& kappa : {Rational(1), Rational(-2), Rational(7, 3)}) {
        VermaModule curved(spec, with(Symbol::Kappa, kappa));
        for (int p = 1; p <= 4; ++p) CHECK(search_singular(curved, level(p)).kernel.empty());
    }
    VermaModule generic(spec, Params::symbolic());
    auto symbolic = search_singular(generic, level(2));
    CHECK(symbolic.kernel.empty());
    REQUIRE(symbolic.caveats.size() == 1);
    CHECK(symbolic.caveats[0] == ParamPoly::symbol(Symbol::Kappa));
}

TEST_CASE("proportionality") {
    ModuleVector a = ModuleVector(mono(1, {0}), mu) + ModuleVector(mono(0, {2}), 1);
    CHECK(proportional(a, a * (Scalar(3) / delta)));
    CHECK_FALSE(proportional(a, ModuleVector(mono(1, {0}), mu)));
    CHECK_FALSE(proportional(a, ModuleVector()));
}

TEST_CASE("unbounded selections are rejected") {
    VermaModule mod({1, 1, Extension::Mass}, Params::symbolic());
    CHECK_THROWS_AS(search_singular(mod, BasisSelector{}), InfiniteSelection);
}
