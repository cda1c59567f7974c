#include "cgk/serialize.hpp"

#include "cgk/errors.hpp"

namespace cgk {

namespace {

std::vector<int> int_list(const Json& j, const char* key) {
    if (!j.contains(key)) return {};
    const Json& v = j.at(key);
    if (!v.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
    std::vector<int> out;
    for (const auto& x : v) {
        if (!x.is_number_integer() || x.get<int>() < 0)
            throw ParseError(std::string("\"") + key + "\" must hold non-negative integers");
        out.push_back(x.get<int>());
    }
    return out;
}

Json residual_list(const std::vector<Residual>& rs) {
    Json out = Json::array();
    for (const auto& r : rs) out.push_back({{"gen", r.gen.name()}, {"residual", to_json(r.value)}});
    return out;
}

}  // namespace

Json to_json(const PbwMonomial& m) { return {{"h", m.h}, {"a", m.a}, {"b", m.b}}; }

PbwMonomial monomial_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("monomial must be an object");
    PbwMonomial m;
    if (j.contains("h")) {
        if (!j.at("h").is_number_integer() || j.at("h").get<int>() < 0)
            throw ParseError("\"h\" must be a non-negative integer");
        m.h = j.at("h").get<int>();
    }
    m.a = int_list(j, "a");
    m.b = int_list(j, "b");
    return m;
}

Json to_json(const ModuleVector& v) {
    Json out = Json::array();
    for (const auto& [m, c] : v.terms()) out.push_back({{"monomial", to_json(m)}, {"coef", c.to_string()}});
    return out;
}

ModuleVector module_vector_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("module vector must be an array");
    ModuleVector v;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("monomial") || !term.contains("coef") || !term.at("coef").is_string())
            throw ParseError("module vector terms need \"monomial\" and a string \"coef\"");
        v.add(monomial_from_json(term.at("monomial")), parse_scalar(term.at("coef").get<std::string>()));
    }
    return v;
}

Json to_json(const DiffOp& op) {
    Json out = Json::array();
    const VarLayout& layout = op.layout();
    for (const auto& [beta, c] : op.terms()) {
        Json partials = Json::object();
        for (int i = 0; i < layout.size(); ++i)
            if (beta[static_cast<std::size_t>(i)] > 0) partials[layout.name(i)] = beta[static_cast<std::size_t>(i)];
        out.push_back({{"coef", c.to_string()}, {"partials", partials}});
    }
    return out;
}

DiffOp diffop_from_json(const Json& j, const VarLayout& layout) {
    if (!j.is_array()) throw ParseError("operator must be an array");
    DiffOp out(layout);
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("coef") || !term.at("coef").is_string())
            throw ParseError("operator terms need a string \"coef\"");
        MultiIndex beta(static_cast<std::size_t>(layout.size()), 0);
        if (term.contains("partials")) {
            for (const auto& [name, order] : term.at("partials").items()) {
                auto idx = layout.index_of(name);
                if (!idx) throw ParseError("unknown variable \"" + name + "\"");
                if (!order.is_number_integer() || order.get<int>() < 0)
                    throw ParseError("derivative orders must be non-negative integers");
                beta[static_cast<std::size_t>(*idx)] = order.get<int>();
            }
        }
        out.add(beta, parse_coefpoly(term.at("coef").get<std::string>(), layout));
    }
    return out;
}

Json to_json(const Weight& w) {
    Json out = Json::object();
    for (const auto& [g, s] : w) out[g.name()] = s.to_string();
    return out;
}

Json to_json(const SingularReport& r) {
    return {{"candidate", to_json(r.candidate)},
            {"annihilators", residual_list(r.annihilators)},
            {"eigen_residuals", residual_list(r.eigen_residuals)},
            {"weight", to_json(r.weight)},
            {"isSingular", r.is_singular}};
}

Json to_json(const SearchResult& r) {
    Json kernel = Json::array();
    for (const auto& v : r.kernel) kernel.push_back(to_json(v));
    Json caveats = Json::array();
    for (const auto& c : r.caveats) caveats.push_back(c.to_string());
    return {{"kernel", kernel}, {"caveats", caveats}};
}

Json to_json(const std::vector<RepFailure>& failures) {
    Json out = Json::array();
    for (const auto& f : failures)
        out.push_back({{"x", f.x.name()}, {"y", f.y.name()}, {"residual", f.residual.to_string()}});
    return out;
}

Json to_json(const std::vector<IntertwiningEntry>& entries) {
    Json out = Json::array();
    for (const auto& e : entries)
        out.push_back({{"gen", e.gen.name()}, {"pass", e.residual.is_zero()}, {"residual", e.residual.to_string()}});
    return out;
}

Json to_json(const std::vector<JacobiFailure>& failures) {
    Json out = Json::array();
    for (const auto& f : failures)
        out.push_back({{"triple", {f.x.name(), f.y.name(), f.z.name()}}, {"value", f.value.to_string()}});
    return out;
}

}  // namespace cgk
