// Closed-form action of the d=2 families on |h, a, b>.

#include <cstddef>

#include "cgk/errors.hpp"
#include "cgk/verma.hpp"

namespace cgk {

namespace {

struct Builder {
    ModuleVector out;

    void add(int h, const std::vector<int>& a, const std::vector<int>& b, const Scalar& c) {
        if (h < 0 || c.is_zero()) return;
        for (int x : a) if (x < 0) return;
        for (int x : b) if (x < 0) return;
        out.add(PbwMonomial{h, a, b}, c);
    }
};

std::vector<int> shifted(std::vector<int> v, int idx, int by) {
    v[static_cast<std::size_t>(idx)] += by;
    return v;
}

// i! C(h, i) C(n, i): the coefficient of ad(-H)^i moving P^(n) through H^h.
Scalar h_passage(int h, int n, int i) { return Scalar(Rational(factorial(i) * binomial(h, i) * binomial(n, i))); }

Scalar integer(const Integer& v) { return Scalar(Rational(v)); }

}  // namespace

ModuleVector VermaModule::act_closed_form(const Gen& x, const PbwMonomial& m) const {
    const auto& s = spec();
    if (s.d != 2) throw UnsupportedFamily("closed-form actions exist only for the d=2 families");
    if (!algebra_.contains(x)) throw UnknownGenerator(x.name() + " is not a generator of " + s.to_string());

    const bool exotic = s.ext == Extension::Exotic;
    const int top = s.twoEll;
    // Highest creation index in each P tower.
    const int a_top = exotic ? top / 2 : s.half_floor();
    const int b_top = exotic ? top / 2 - 1 : s.half_floor();
    const Scalar delta = params_.get(Symbol::Delta);
    const Scalar central = exotic ? params_.get(Symbol::Theta) : params_.get(Symbol::Mu);
    const auto& a = m.a;
    const auto& b = m.b;
    const int h = m.h;
    auto at = [](const std::vector<int>& v, int i) { return v[static_cast<std::size_t>(i)]; };
    auto I = [&](int k) { return integer(central_constant(s, k)); };

    int grade = 0;
    int charge = 0;
    for (int n = 0; n <= a_top; ++n) {
        grade += (top - 2 * n) * at(a, n);
        charge += at(a, n);
    }
    for (int n = 0; n <= b_top; ++n) {
        grade += (top - 2 * n) * at(b, n);
        charge -= at(b, n);
    }

    Builder r;
    switch (x.tag) {
        case GenTag::M: r.add(h, a, b, -central); break;
        case GenTag::Theta: r.add(h, a, b, central); break;
        case GenTag::D: r.add(h, a, b, -delta + Scalar(2 * h + grade)); break;
        case GenTag::J: r.add(h, a, b, -params_.get(Symbol::R) + Scalar(charge)); break;
        case GenTag::H: r.add(h + 1, a, b, 1); break;
        case GenTag::C: {
            r.add(h - 1, a, b, Scalar(h) * (-delta + Scalar(h - 1 + grade)));
            if (exotic) {
                const int l = top / 2;
                r.add(h, shifted(a, l, -1), shifted(b, l - 1, -1),
                      Scalar(l * at(a, l) * at(b, l - 1)) * I(l + 1) * central);
            } else {
                const int L = a_top;
                r.add(h, shifted(a, L, -1), shifted(b, L, -1),
                      -central * Scalar((L + 1) * at(a, L) * at(b, L)) * I(L + 1));
            }
            for (int n = 0; n < a_top; ++n)
                r.add(h, shifted(shifted(a, n, -1), n + 1, 1), b, Scalar((top - n) * at(a, n)));
            for (int n = 0; n < b_top; ++n)
                r.add(h, a, shifted(shifted(b, n, -1), n + 1, 1), Scalar((top - n) * at(b, n)));
            break;
        }
        case GenTag::P: {
            const int n = x.n;
            const bool plus = x.sign == PSign::Plus;
            // Creation part: P^(n-i) lands in the tower of its own sign.
            const int own_top = plus ? a_top : b_top;
            for (int i = 0; i <= h && i <= n; ++i) {
                if (n - i > own_top) continue;
                if (plus) r.add(h - i, shifted(a, n - i, 1), b, h_passage(h, n, i));
                else r.add(h - i, a, shifted(b, n - i, 1), h_passage(h, n, i));
            }
            // Central part: P^(n-i) in g- contracts with the opposite tower.
            const int other_top = plus ? b_top : a_top;
            for (int i = 0; i <= h && i <= n; ++i) {
                if (n - i <= own_top) continue;
                const int k = top - n + i;
                if (k < 0 || k > other_top) continue;
                Scalar coef = h_passage(h, n, i) * I(n - i) * central;
                if (exotic) {
                    if (plus) r.add(h - i, a, shifted(b, k, -1), coef * Scalar(at(b, k)));
                    else r.add(h - i, shifted(a, k, -1), b, -coef * Scalar(at(a, k)));
                } else {
                    if (plus) r.add(h - i, a, shifted(b, k, -1), -coef * Scalar(at(b, k)));
                    else r.add(h - i, shifted(a, k, -1), b, -coef * Scalar(at(a, k)));
                }
            }
            break;
        }
    }
    return r.out;
}

}  // namespace cgk
