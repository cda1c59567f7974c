#include <random>

#include "cgk/diffop.hpp"
#include "cgk/errors.hpp"
#include "doctest.h"

using namespace cgk;

namespace {

const VarLayout one{1, 0};  // t, x0
const Scalar mu = Scalar::symbol(Symbol::Mu);
const Scalar delta = Scalar::symbol(Symbol::Delta);

DiffOp op(const char* text, const VarLayout& layout = one) { return parse_diffop(text, layout); }

DiffOp random_op(std::mt19937& rng, const VarLayout& layout) {
    std::uniform_int_distribution<int> coef(-3, 3), pw(0, 2), count(1, 3), var(0, layout.size() - 1);
    DiffOp out(layout);
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
        MultiIndex beta(static_cast<std::size_t>(layout.size()), 0), e(beta);
        beta[static_cast<std::size_t>(var(rng))] = pw(rng);
        e[static_cast<std::size_t>(var(rng))] = pw(rng);
        CoefPoly c(layout);
        Scalar s = Scalar(coef(rng));
        if (i == 1) s = s * mu;
        c.add(e, s);
        out.add(beta, c);
    }
    return out;
}

}  // namespace

TEST_CASE("Leibniz base case and commutators") {
    CHECK(op("d/dx0") * op("x0") == op("x0*d/dx0 + 1"));
    CHECK(commutator(op("d/dx0"), op("x0")) == DiffOp(one, 1));

    DiffOp heat = op("2*mu*d/dt + (d/dx0)^2");
    CHECK(heat * heat == op("4*mu^2*(d/dt)^2 + 4*mu*d/dt*(d/dx0)^2 + (d/dx0)^4"));
    CHECK(commutator(heat, op("-d/dt")).is_zero());
    CHECK(commutator(heat, op("delta - 2*t*d/dt - x0*d/dx0")) == heat * Scalar(-2));
}

TEST_CASE("apply to polynomials") {
    CoefPoly x2 = parse_coefpoly("x0^2", one);
    CHECK(apply(op("d/dx0"), x2) == parse_coefpoly("2*x0", one));
    // heat kernel ansatz x^2 + c t: 2 mu c + 2 = 0
    CoefPoly ansatz = parse_coefpoly("x0^2 - t/mu", one);
    CHECK(apply(op("2*mu*d/dt + (d/dx0)^2"), ansatz).is_zero());
    CHECK(apply(op("t*(d/dt)^3 + x0"), CoefPoly(one)).is_zero());
}

TEST_CASE("layouts must match") {
    VarLayout two{2, 2};
    CHECK_THROWS_AS(op("d/dx0") * op("d/dx0", two), VariableMismatch);
    CHECK_THROWS_AS(apply(op("d/dx0"), CoefPoly(two)), VariableMismatch);
    CHECK_THROWS_AS(op("d/dx1"), ParseError);
}

TEST_CASE("ring laws on random operators") {
    std::mt19937 rng(11);
    VarLayout layout{2, 0};
    for (int trial = 0; trial < 200; ++trial) {
        DiffOp a = random_op(rng, layout), b = random_op(rng, layout), c = random_op(rng, layout);
        CHECK(a * (b * c) == (a * b) * c);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
        if (trial < 60) {
            DiffOp jac = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                         commutator(c, commutator(a, b));
            CHECK(jac.is_zero());
        }
    }
}

TEST_CASE("rendering round-trips through the parser") {
    std::mt19937 rng(5);
    VarLayout layout{2, 1};
    for (int trial = 0; trial < 100; ++trial) {
        DiffOp a = random_op(rng, layout) * ((delta + Scalar(1)) / mu);
        CHECK(parse_diffop(a.to_string(), layout) == a);
    }
    CHECK(op("2*mu*d/dt + (d/dx0)^2").to_string() == "2*mu*d/dt + (d/dx0)^2");
    CHECK(op("2*mu*d/dt + (d/dx0)^2").to_latex() == "2\\mu \\partial_{t} + \\partial_{x_{0}}^{2}");
    CHECK(op("(2*delta+1)*t").to_string() == "(2*delta+1)*t");
    CHECK(DiffOp(one).to_string() == "0");
}

TEST_CASE("scalar grammar") {
    CHECK(parse_scalar("(2*delta+1)/mu") == (Scalar(2) * delta + Scalar(1)) / mu);
    CHECK(parse_scalar("-1/2") == Scalar(Rational(-1, 2)));
    CHECK(parse_scalar("mu^-2") == Scalar(1) / (mu * mu));
    CHECK_THROWS_AS(parse_scalar("t"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
    CHECK_THROWS_AS(parse_scalar("(delta"), ParseError);
    CHECK_THROWS_AS(parse_diffop("x0/x0", one), ParseError);
    for (const char* text : {"delta", "-mu^2/3", "(delta+mu)/(r-theta)", "1/(2*kappa)"}) {
        Scalar s = parse_scalar(text);
        CHECK(parse_scalar(s.to_string()) == s);
    }
}
