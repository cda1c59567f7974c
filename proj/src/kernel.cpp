#include "cgk/kernel.hpp"

#include <algorithm>
#include <tuple>

namespace cgk {

namespace {

using PolyMatrix = std::vector<std::vector<ParamPoly>>;

ParamPoly lcm(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly g = gcd(a, b);
    return *divide_exact(a * b, g);
}

std::vector<ParamPoly> clear_row(const std::vector<Scalar>& row) {
    ParamPoly common(1);
    for (const auto& x : row)
        if (!x.denominator().is_constant()) common = lcm(common, x.denominator());
    std::vector<ParamPoly> out;
    out.reserve(row.size());
    for (const auto& x : row) {
        if (x.is_zero()) {
            out.emplace_back();
            continue;
        }
        ParamPoly factor = *divide_exact(common, x.denominator());
        out.push_back(x.numerator() * factor);
    }
    return out;
}

auto pivot_cost(const ParamPoly& p) { return std::make_tuple(p.total_degree(), p.terms().size()); }

}  // namespace

KernelResult nullspace(const ScalarMatrix& rows, std::size_t cols) {
    PolyMatrix m;
    for (const auto& row : rows) {
        auto cleared = clear_row(row);
        if (std::any_of(cleared.begin(), cleared.end(), [](const ParamPoly& p) { return !p.is_zero(); }))
            m.push_back(std::move(cleared));
    }

    KernelResult result;
    std::vector<std::size_t> pivot_cols;
    ParamPoly prev(1);
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < m.size(); ++col) {
        std::size_t best = m.size();
        for (std::size_t i = r; i < m.size(); ++i) {
            if (m[i][col].is_zero()) continue;
            if (best == m.size() || pivot_cost(m[i][col]) < pivot_cost(m[best][col])) best = i;
        }
        if (best == m.size()) continue;
        std::swap(m[r], m[best]);
        const ParamPoly& p = m[r][col];
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            const ParamPoly a = m[i][col];
            for (std::size_t j = col + 1; j < cols; ++j) {
                ParamPoly v = p * m[i][j] - a * m[r][j];
                // Exact in exact Bareiss; dividing by any nonzero factor keeps the kernel.
                if (!prev.is_constant() || prev.constant_term() != 1) {
                    if (auto q = divide_exact(v, prev)) v = std::move(*q);
                }
                m[i][j] = std::move(v);
            }
            m[i][col] = ParamPoly();
        }
        if (!p.is_constant()) {
            ParamPoly c = monic(p);
            if (std::find(result.caveats.begin(), result.caveats.end(), c) == result.caveats.end())
                result.caveats.push_back(c);
        }
        prev = p;
        pivot_cols.push_back(col);
        ++r;
    }

    for (std::size_t f = 0; f < cols; ++f) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), f) != pivot_cols.end()) continue;
        std::vector<Scalar> x(cols, Scalar(0));
        x[f] = Scalar(1);
        for (std::size_t k = pivot_cols.size(); k-- > 0;) {
            const std::size_t c = pivot_cols[k];
            Scalar s(0);
            for (std::size_t j = c + 1; j < cols; ++j)
                if (!m[k][j].is_zero() && !x[j].is_zero()) s += Scalar(m[k][j]) * x[j];
            x[c] = -s / Scalar(m[k][c]);
        }
        result.basis.push_back(std::move(x));
    }
    return result;
}

}  // namespace cgk
