#include "cgk/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "cgk/acceptance.hpp"
#include "cgk/errors.hpp"
#include "cgk/invariants.hpp"
#include "cgk/reps.hpp"
#include "cgk/serialize.hpp"
#include "cgk/singular.hpp"

namespace cgk {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

int default_level() {
    const char* env = std::getenv("CGK_CAPS_LEVEL");
    if (env == nullptr) return 4;
    try {
        int v = std::stoi(env);
        if (v >= 0) return v;
    } catch (const std::exception&) {
    }
    throw ParseError(std::string("CGK_CAPS_LEVEL must be a non-negative integer, got \"") + env + "\"");
}

struct Options {
    int d = 1;
    int two_ell = 1;
    std::string ext = "mass";
    int q = 1;
    std::string delta;
    std::string mu, r, theta, kappa;
    std::optional<int> level;
    std::optional<int> d_shift;
    std::optional<int> j_shift;
    std::string gen;
    std::string monomial;
    std::string render = "json";
    std::string out_file;
    std::string action;
};

class Runner {
public:
    explicit Runner(const Options& o) : o_(o) {
        auto ext = extension_from_name(o.ext);
        if (!ext) throw InvalidSpec("unknown extension \"" + o.ext + "\"");
        spec_ = {o.d, o.two_ell, *ext};
        spec_.validate();
    }

    /// Output text and exit code.
    std::pair<std::string, int> run(const std::string& command) {
        if (command == "algebra") return algebra();
        if (command == "verma") return verma();
        if (command == "singular") return singular();
        if (command == "reps") return reps();
        if (command == "pde") return pde();
        throw ParseError("unknown command \"" + command + "\"");
    }

private:
    static std::string dump(const Json& j) { return j.dump(2) + "\n"; }

    Params params() const {
        Params p = Params::symbolic();
        const std::pair<const std::string*, Symbol> given[] = {
            {&o_.mu, Symbol::Mu}, {&o_.r, Symbol::R}, {&o_.theta, Symbol::Theta}, {&o_.kappa, Symbol::Kappa}};
        for (const auto& [text, sym] : given)
            if (!text->empty()) p.set(sym, parse_scalar(*text));
        if (o_.delta == "auto")
            p.set(Symbol::Delta, Scalar(condition_root(spec_, o_.q)));
        else if (!o_.delta.empty())
            p.set(Symbol::Delta, parse_scalar(o_.delta));
        return p;
    }

    BasisSelector selector() const {
        BasisSelector sel;
        if (o_.d_shift || o_.j_shift) {
            sel.d_shift = o_.d_shift;
            sel.j_shift = o_.j_shift;
            if (o_.level) sel.level = o_.level;
        } else {
            sel.level = o_.level ? *o_.level : default_level();
        }
        return sel;
    }

    Gen gen() const {
        if (o_.gen.empty()) throw ParseError("--gen is required");
        return parse_gen(o_.gen);
    }

    PbwMonomial monomial(const VermaModule& mod) const {
        if (o_.monomial.empty()) return mod.vacuum_monomial();
        return monomial_from_json(Json::parse(o_.monomial));
    }

    std::string render(const DiffOp& op) const {
        if (o_.render == "latex") return op.to_latex() + "\n";
        if (o_.render == "text") return op.to_string() + "\n";
        Json j = {{"operator", op.to_string()}, {"terms", to_json(op)}};
        return dump(j);
    }

    std::pair<std::string, int> algebra() {
        Algebra alg(spec_);
        if (o_.action == "jacobi") {
            auto failures = alg.jacobi_check();
            Json j = {{"spec", spec_.to_string()}, {"failures", to_json(failures)}};
            return {dump(j), failures.empty() ? kOk : kFailed};
        }
        Json gens = Json::array();
        for (const auto& g : alg.generators()) gens.push_back(g.name());
        Json brackets = Json::array();
        const auto& all = alg.generators();
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t k = i + 1; k < all.size(); ++k) {
                const GenCombo& c = alg.bracket(all[i], all[k]);
                if (!c.is_zero()) brackets.push_back({all[i].name(), all[k].name(), c.to_string()});
            }
        auto names = [](const std::vector<Gen>& v) {
            Json out = Json::array();
            for (const auto& g : v) out.push_back(g.name());
            return out;
        };
        const Decomposition& dec = alg.decomposition();
        Json j = {{"spec", spec_.to_string()},
                  {"generators", gens},
                  {"brackets", brackets},
                  {"decomposition", {{"plus", names(dec.plus)}, {"zero", names(dec.zero)}, {"minus", names(dec.minus)}}}};
        return {dump(j), kOk};
    }

    std::pair<std::string, int> verma() {
        VermaModule mod(spec_, params());
        if (o_.action == "act") return {dump(to_json(mod.act(gen(), monomial(mod)))), kOk};
        if (o_.action == "basis") {
            Json j = Json::array();
            for (const auto& m : mod.level_basis(selector())) j.push_back(to_json(m));
            return {dump(j), kOk};
        }
        return {dump(to_json(mod.weight_of(monomial(mod)))), kOk};
    }

    std::pair<std::string, int> singular() {
        if (o_.action == "condition") {
            Json j = {{"condition", singular_condition(spec_, o_.q).to_string()},
                      {"root", condition_root(spec_, o_.q).get_str()}};
            return {dump(j), kOk};
        }
        VermaModule mod(spec_, params());
        if (o_.action == "search") return {dump(to_json(search_singular(mod, selector()))), kOk};
        ModuleVector v = singular_closed(mod, o_.q);
        if (o_.action == "closed") return {dump(to_json(v)), kOk};
        SingularReport report = verify_singular(mod, v);
        return {dump(to_json(report)), report.is_singular ? kOk : kFailed};
    }

    std::pair<std::string, int> reps() {
        if (o_.action == "left") return {render(left_action(spec_, params(), gen())), kOk};
        if (o_.action == "right") return {render(right_action(spec_, gen())), kOk};
        Algebra alg(spec_);
        Json j = Json::object();
        bool ok = true;
        if (spec_.has_center()) {
            auto left = rep_check(alg, left_images(spec_, params()));
            ok = ok && left.empty();
            j["left"] = to_json(left);
        }
        auto right = rep_check(alg, right_images(spec_));
        ok = ok && right.empty();
        j["right"] = to_json(right);
        return {dump(j), ok ? kOk : kFailed};
    }

    std::pair<std::string, int> pde() {
        if (o_.action == "emit") {
            DiffOp op = invariant_operator(spec_, params(), o_.q);
            if (o_.render == "json") {
                Json j = {{"q", o_.q}, {"operator", op.to_string()}, {"terms", to_json(op)}};
                return {dump(j), kOk};
            }
            return {render(op), kOk};
        }
        Options o = o_;
        if (o.delta.empty()) o.delta = "auto";
        Params p = Runner(o).params();
        const Scalar& delta = p.get(Symbol::Delta);
        auto entries = intertwining_residuals(spec_, p, o_.q);
        bool ok = std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.residual.is_zero(); });
        Json j = {{"spec", spec_.to_string()},
                  {"q", o_.q},
                  {"delta", delta.to_string()},
                  {"target_delta", shifted_delta(delta, o_.q).to_string()},
                  {"pass", ok},
                  {"generators", to_json(entries)}};
        return {dump(j), ok ? kOk : kFailed};
    }

    Options o_;
    AlgebraSpec spec_;
};

std::pair<std::string, int> selftest() {
    std::string text;
    bool ok = true;
    for (const auto& r : run_acceptance()) {
        text += format_line(r) + "\n";
        ok = ok && r.passed;
    }
    return {text, ok ? kOk : kFailed};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact algebra toolkit for conformal Galilei algebras", "cgk"};
    app.require_subcommand(1);
    app.add_option("--d", o.d, "space dimension (1 or 2)");
    app.add_option("--two-ell", o.two_ell, "2*ell");
    app.add_option("--ext", o.ext, "central extension")->check(CLI::IsMember({"none", "mass", "exotic"}));
    app.add_option("--q", o.q, "power of the singular element");
    app.add_option("--delta", o.delta, "delta as a scalar, or 'auto' for the singular-vector root");
    app.add_option("--mu", o.mu, "mass parameter");
    app.add_option("--r", o.r, "rotation weight");
    app.add_option("--theta", o.theta, "exotic central weight");
    app.add_option("--kappa", o.kappa, "centerless weight");
    app.add_option("--level", o.level, "PBW degree (default 4, or CGK_CAPS_LEVEL)");
    app.add_option("--d-shift", o.d_shift, "D eigenvalue shift above the vacuum");
    app.add_option("--j-shift", o.j_shift, "J eigenvalue shift");
    app.add_option("--gen", o.gen, "generator name, e.g. P1+");
    app.add_option("--monomial", o.monomial, "monomial as JSON {\"h\":..,\"a\":[..],\"b\":[..]}");
    app.add_option("--render", o.render, "output format")->check(CLI::IsMember({"json", "latex", "text"}));
    app.add_option("--out", o.out_file, "write output to this file");

    struct Command {
        const char* name;
        const char* help;
        std::vector<std::string> actions;
    };
    const std::vector<Command> commands = {
        {"algebra", "structure constants", {"show", "jacobi"}},
        {"verma", "lowest weight modules", {"act", "basis", "weight"}},
        {"singular", "singular vectors", {"closed", "verify", "search", "condition"}},
        {"reps", "vector-field representations", {"left", "right", "check"}},
        {"pde", "invariant equations", {"emit", "check"}},
    };
    for (const auto& c : commands) {
        auto* sub = app.add_subcommand(c.name, c.help);
        sub->fallthrough();
        auto* action = sub->add_option("action", o.action, "one of the listed actions")->check(CLI::IsMember(c.actions));
        if (std::string(c.name) == "algebra")
            o.action = "show";
        else
            action->required();
    }
    app.add_subcommand("selftest", "run the acceptance suite")->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    std::pair<std::string, int> result;
    try {
        auto* chosen = app.get_subcommands().front();
        if (chosen->get_name() == "selftest")
            result = selftest();
        else
            result = Runner(o).run(chosen->get_name());
    } catch (const ConditionNotSatisfied& e) {
        err << "cgk: " << e.what() << "\n";
        return kFailed;
    } catch (const Error& e) {
        err << "cgk: " << e.what() << "\n";
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        err << "cgk: bad JSON: " << e.what() << "\n";
        return kUsage;
    }

    if (o.out_file.empty()) {
        out << result.first;
    } else {
        std::ofstream file(o.out_file);
        if (!file) {
            err << "cgk: cannot write " << o.out_file << "\n";
            return kUsage;
        }
        file << result.first;
    }
    return result.second;
}

}  // namespace cgk
