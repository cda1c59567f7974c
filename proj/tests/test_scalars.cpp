#include <random>
#include <vector>

#include "cgk/algebra.hpp"
#include "cgk/errors.hpp"
#include "cgk/scalar.hpp"
#include "doctest.h"

using namespace cgk;

namespace {

const Scalar delta = Scalar::symbol(Symbol::Delta);
const Scalar mu = Scalar::symbol(Symbol::Mu);
const Scalar r = Scalar::symbol(Symbol::R);

// Univariate Euclid over Q on dense coefficient lists; independent of the
// multivariate primitive PRS used by the library.
using Dense = std::vector<Rational>;

void trim(Dense& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense dense_mod(Dense a, const Dense& b) {
    trim(a);
    while (a.size() >= b.size()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        trim(a);
    }
    return a;
}

Dense dense_gcd(Dense a, Dense b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Dense rem = dense_mod(a, b);
        a = b;
        b = rem;
    }
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
    return a;
}

ParamPoly from_dense(const Dense& d) {
    ParamPoly out;
    for (std::size_t k = 0; k < d.size(); ++k) {
        ParamPoly::Exponents e{};
        e[0] = static_cast<std::uint16_t>(k);
        out += ParamPoly::monomial(e, d[k]);
    }
    return out;
}

struct RandomScalars {
    std::mt19937 rng{20241019};

    ParamPoly poly(int max_terms, int max_deg) {
        std::uniform_int_distribution<int> coef(-4, 4), deg(0, max_deg), sym(0, 2), count(1, max_terms);
        ParamPoly p;
        int n = count(rng);
        for (int i = 0; i < n; ++i) {
            ParamPoly::Exponents e{};
            e[static_cast<std::size_t>(sym(rng))] = static_cast<std::uint16_t>(deg(rng));
            e[static_cast<std::size_t>(sym(rng))] += static_cast<std::uint16_t>(deg(rng) / 2);
            p += ParamPoly::monomial(e, Rational(coef(rng), 1 + (i % 3)));
        }
        return p;
    }

    Scalar scalar() {
        ParamPoly den;
        while (den.is_zero()) den = poly(2, 1);
        return Scalar::fraction(poly(3, 2), den);
    }
};

}  // namespace

TEST_CASE("scalar arithmetic examples") {
    CHECK((delta - delta).is_zero());
    CHECK((mu / delta) * delta == mu);
    Scalar two_delta_plus_one = Scalar(2) * delta + Scalar(1);
    Scalar q = (two_delta_plus_one / mu) / two_delta_plus_one;
    CHECK(q == Scalar(1) / mu);
    CHECK(q.numerator() == ParamPoly(1));
    CHECK(q.denominator() == ParamPoly::symbol(Symbol::Mu));
    CHECK_THROWS_AS(delta / Scalar(0), DivisionByZero);
}

TEST_CASE("rendering uses ascii symbol names") {
    Scalar s = (Scalar(2) * delta + Scalar(1)) / mu;
    CHECK(s.to_string() == "(2*delta+1)/mu");
    CHECK((Scalar(1) / (Scalar(2) * mu)).to_string() == "1/(2*mu)");
    CHECK((Scalar(Rational(-1, 2)) * mu * mu).to_string() == "-1/2*mu^2");
}

TEST_CASE("denominator is monic and in lowest terms") {
    Scalar s = (delta * delta - mu * mu) / (Scalar(3) * delta + Scalar(3) * mu);
    CHECK(s == (delta - mu) / Scalar(3));
    CHECK(s.is_polynomial());
    Scalar t = Scalar(1) / (Scalar(2) * delta * mu + Scalar(4) * mu);
    CHECK(t.denominator().leading_coefficient() == 1);
}

TEST_CASE("univariate gcd agrees with an independent Euclid routine") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        Dense common{Rational(coef(rng)), Rational(1)};
        Dense a{Rational(coef(rng)), Rational(coef(rng)), Rational(1 + trial % 3)};
        Dense b{Rational(coef(rng)), Rational(1 + trial % 2)};
        ParamPoly pa = from_dense(a) * from_dense(common);
        ParamPoly pb = from_dense(b) * from_dense(common);
        Dense da(pa.degree_in(Symbol::Delta) + 1), db(pb.degree_in(Symbol::Delta) + 1);
        for (const auto& [e, c] : pa.terms()) da[e[0]] = c;
        for (const auto& [e, c] : pb.terms()) db[e[0]] = c;
        CHECK(gcd(pa, pb) == from_dense(dense_gcd(da, db)));
    }
}

TEST_CASE("multivariate gcd recovers planted common factors") {
    RandomScalars gen;
    for (int trial = 0; trial < 150; ++trial) {
        ParamPoly g = gen.poly(3, 2);
        ParamPoly a = gen.poly(3, 2);
        ParamPoly b = gen.poly(3, 2);
        if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
        ParamPoly d = gcd(a * g, b * g);
        CHECK(divide_exact(d, monic(g)).has_value());
        CHECK(divide_exact(a * g, d).has_value());
        CHECK(divide_exact(b * g, d).has_value());
    }
}

TEST_CASE("field axioms hold exactly on random scalars") {
    RandomScalars gen;
    for (int trial = 0; trial < 1000; ++trial) {
        Scalar a = gen.scalar(), b = gen.scalar(), c = gen.scalar();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a / a == Scalar(1));
        CHECK(Scalar::fraction(a.numerator(), a.denominator()) == a);
    }
}

TEST_CASE("central constants") {
    CHECK(central_constant({1, 1, Extension::Mass}, 0) == -1);
    CHECK(central_constant({2, 2, Extension::Exotic}, 1) == -1);
    // (-1)^(3+2) * 0! * 3!
    CHECK(central_constant({2, 3, Extension::Mass}, 3) == -6);
    CHECK_THROWS_AS(central_constant({1, 2, Extension::None}, 0), UnsupportedFamily);

    for (int two_ell = 1; two_ell <= 9; two_ell += 2) {
        AlgebraSpec spec{1, two_ell, Extension::Mass};
        for (int m = 0; m <= two_ell; ++m)
            CHECK(central_constant(spec, two_ell - m) == -central_constant(spec, m));
    }
    for (int two_ell = 2; two_ell <= 8; two_ell += 2) {
        AlgebraSpec spec{2, two_ell, Extension::Exotic};
        for (int m = 0; m <= two_ell; ++m)
            CHECK(central_constant(spec, two_ell - m) == central_constant(spec, m));
    }
}
