#include "puiseux/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "puiseux/algebra_factor.hpp"
#include "puiseux/errors.hpp"
#include "puiseux/parser.hpp"

namespace puiseux::cli {

namespace {

using Json = nlohmann::ordered_json;

// Ordered key/value report; printed as lines or as one JSON object.
class Report {
public:
    void set(const std::string& key, Json value) { data_[key] = std::move(value); }
    void add(const std::string& key, Json value) {
        if (!data_.contains(key)) data_[key] = Json::array();
        data_[key].push_back(std::move(value));
    }
    void print(std::ostream& out, bool structured) const {
        if (structured) {
            out << data_.dump() << '\n';
            return;
        }
        for (const auto& [key, value] : data_.items()) {
            if (value.is_array()) {
                for (const auto& v : value) out << key << ": " << scalar(v) << '\n';
            } else {
                out << key << ": " << scalar(value) << '\n';
            }
        }
    }

private:
    static std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }
    Json data_ = Json::object();
};

struct Options {
    std::string field = "Q";
    unsigned long bound = kDefaultInflationBound;
    unsigned long depth = kDefaultDepth;
    bool structured = false;
    std::string monoid;
    std::vector<std::string> values;
    std::string p, m, z1, z2;
    std::size_t max_factorizations = 200000;
    bool integral = false;
};

std::string read_all(std::istream& in) {
    std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    return s;
}

ReducedRational parse_element(const std::string& text) {
    try {
        return ReducedRational::parse(text);
    } catch (const DomainError& e) {
        throw ParseError(e.what(), 0);
    }
}

BigInt parse_natural(const std::string& text, const char* what) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(std::string("expected a natural number for ") + what, 0);
    return BigInt(text);
}

std::string poly_text(const PuiseuxPoly& f) { return f.to_string(); }

Json factorization_json(const Factorization& z) {
    std::string s;
    // Additive notation: an atom used k times is written k times.
    for (const auto& [atom, k] : z)
        for (BigInt i = 0; i < k; ++i) s += (s.empty() ? "" : " + ") + atom.to_string();
    return s;
}

std::string verdict_name(IrreducibilityVerdict::Status s) {
    switch (s) {
    case IrreducibilityVerdict::Status::IrreducibleCertified: return "irreducible";
    case IrreducibilityVerdict::Status::Reducible: return "reducible";
    case IrreducibilityVerdict::Status::Unit: return "unit";
    case IrreducibilityVerdict::Status::Unknown: return "unknown";
    }
    return "unknown";
}

std::string outcome_name(FactorOutcome::Status s) {
    switch (s) {
    case FactorOutcome::Status::UnitElement: return "unit";
    case FactorOutcome::Status::UniqueFactorization: return "unique";
    case FactorOutcome::Status::NoAtomicFactorizationFound: return "no_atomic_factorization";
    case FactorOutcome::Status::CapExceeded: return "cap_exceeded";
    }
    return "unknown";
}

std::string kind_name(AtomsResult::Kind k) {
    switch (k) {
    case AtomsResult::Kind::Finite: return "finite";
    case AtomsResult::Kind::WithTail: return "with_tail";
    case AtomsResult::Kind::Antimatter: return "antimatter";
    }
    return "unknown";
}

std::vector<PuiseuxPoly> parse_poly_list(const std::string& text, const Field& field) {
    std::vector<PuiseuxPoly> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';'))
        if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_poly(item, field));
    return out;
}

int predicate(Report& r, const std::string& key, bool value) {
    r.set(key, value);
    return value ? kOk : kFalse;
}

using Handler = std::function<int(const Options&, Report&, std::istream&)>;

struct Command {
    std::string name;
    std::string help;
    bool needs_monoid;
    std::size_t min_values;
    std::size_t max_values;
    Handler handler;
};

std::vector<Command> commands() {
    auto poly_arg = [](const Options& o, std::size_t i, std::istream& in) {
        const std::string text = o.values.at(i) == "-" ? read_all(in) : o.values.at(i);
        return parse_poly(text, Field::parse(o.field));
    };
    auto monoid = [](const Options& o) { return parse_monoid(o.monoid); };

    return {
        {"member", "membership of a rational in M", true, 1, 1,
         [=](const Options& o, Report& r, std::istream&) {
             return predicate(r, "member", contains(monoid(o), parse_element(o.values[0])));
         }},
        {"decompose", "canonical digit decomposition n + sum(alpha_i * g_i)", true, 1, 1,
         [=](const Options& o, Report& r, std::istream&) {
             const ReducedRational x = parse_element(o.values[0]);
             const Decomposition d = decompose(monoid(o), x);
             r.set("element", x.to_string());
             r.set("integer_part", d.integer_part.get_str());
             r.set("digit", Json::array());
             for (const auto& dg : d.digits)
                 r.add("digit", dg.coefficient.get_str() + " * " + dg.generator.to_string() + " (mod " +
                                    dg.modulus.get_str() + ")");
             return kOk;
         }},
        {"atoms", "atom set of M", true, 0, 0,
         [=](const Options& o, Report& r, std::istream&) {
             const AtomsResult a = atoms(monoid(o));
             r.set("kind", kind_name(a.kind));
             r.set("atom", Json::array());
             for (const auto& q : a.atoms) r.add("atom", q.to_string());
             return kOk;
         }},
        {"divides", "whether y divides z in M", true, 2, 2,
         [=](const Options& o, Report& r, std::istream&) {
             return predicate(r, "divides", divides(monoid(o), parse_element(o.values[0]), parse_element(o.values[1])));
         }},
        {"factorizations", "all factorizations of x into atoms and its length set", true, 1, 1,
         [=](const Options& o, Report& r, std::istream&) {
             const FactorizationSet fs = factorizations(monoid(o), parse_element(o.values[0]), o.max_factorizations);
             r.set("element", fs.element.to_string());
             r.set("count", std::to_string(fs.factorizations.size()));
             std::string lengths;
             for (const auto& l : fs.lengths) lengths += (lengths.empty() ? "" : ", ") + l.get_str();
             r.set("lengths", "{" + lengths + "}");
             r.set("factorization", Json::array());
             for (const auto& z : fs.factorizations) r.add("factorization", factorization_json(z));
             return kOk;
         }},
        {"monoid-info", "structural predicates of M and of F[M]", true, 0, 0,
         [=](const Options& o, Report& r, std::istream&) {
             const MonoidSpec m = monoid(o);
             const bool cyclic = is_isomorphic_to_naturals(m);
             r.set("monoid", m.to_string());
             r.set("root_closed", is_root_closed(m));
             r.set("atomic", is_atomic(m));
             r.set("antimatter", is_antimatter(m));
             r.set("zero_limit_point", has_zero_limit_point(m));
             r.set("half_factorial_algebra", cyclic);
             r.set("pid_algebra", cyclic);
             r.set("gp_generator", difference_group_generator(m).to_string());
             return kOk;
         }},
        {"content", "gcd of the integer coefficients", false, 1, 1,
         [=](const Options& o, Report& r, std::istream& in) {
             r.set("content", content(poly_arg(o, 0, in)).get_str());
             return kOk;
         }},
        {"primitive", "whether the content is 1", false, 1, 1,
         [=](const Options& o, Report& r, std::istream& in) {
             return predicate(r, "primitive", is_primitive(poly_arg(o, 0, in)));
         }},
        {"eisenstein", "Eisenstein's criterion at the prime --p", false, 1, 1,
         [=](const Options& o, Report& r, std::istream& in) {
             if (o.p.empty()) throw ParseError("eisenstein needs --p", 0);
             return predicate(r, "applies", eisenstein_applies(poly_arg(o, 0, in), parse_natural(o.p, "--p")));
         }},
        {"inflate", "substitute X -> X^m", false, 1, 1,
         [=](const Options& o, Report& r, std::istream& in) {
             if (o.m.empty()) throw ParseError("inflate needs --m", 0);
             const DensePoly g = inflate(poly_arg(o, 0, in), parse_natural(o.m, "--m"));
             std::vector<Term> terms;
             for (std::size_t k = 0; k < g.coeffs.size(); ++k)
                 terms.push_back({ReducedRational(static_cast<unsigned long>(k)), g.coeffs[k]});
             r.set("inflated", poly_text(PuiseuxPoly::canonicalize(std::move(terms), g.field)));
             return kOk;
         }},
        {"irreducible", "bounded irreducibility test in F[M]", true, 1, 1,
         [=](const Options& o, Report& r, std::istream& in) {
             const PuiseuxPoly f = poly_arg(o, 0, in);
             const MonoidSpec m = monoid(o);
             const IrreducibilityVerdict v =
                 o.integral ? is_irreducible_integral(f, m, o.bound) : is_irreducible(f, m, o.bound);
             r.set("status", verdict_name(v.status));
             r.set("bound", std::to_string(v.bound));
             if (v.witness) {
                 r.set("witness_left", poly_text(v.witness->first));
                 r.set("witness_right", poly_text(v.witness->second));
                 r.set("witness_inflation", v.witness_inflation.get_str());
             }
             r.set("evidence", v.evidence);
             switch (v.status) {
             case IrreducibilityVerdict::Status::IrreducibleCertified: return kOk;
             case IrreducibilityVerdict::Status::Unknown: return kUndecided;
             default: return kFalse;
             }
         }},
        {"factor", "factorization into irreducibles in F[M]", true, 1, 1,
         [=](const Options& o, Report& r, std::istream& in) {
             const FactorOutcome out = factor_in_algebra(poly_arg(o, 0, in), monoid(o), {o.bound, o.depth});
             r.set("status", outcome_name(out.status));
             r.set("unit", rational_to_string(out.unit));
             r.set("factor", Json::array());
             for (const auto& g : out.factors) r.add("factor", poly_text(g));
             r.set("bound", std::to_string(out.bound));
             r.set("depth", std::to_string(out.depth));
             r.set("frobenius_certificate", out.frobenius_certificate);
             r.set("detail", out.detail);
             const bool undecided = out.status == FactorOutcome::Status::CapExceeded ||
                                    (out.status == FactorOutcome::Status::NoAtomicFactorizationFound &&
                                     !out.frobenius_certificate);
             return undecided ? kUndecided : kOk;
         }},
        {"frobenius-root", "p-th root over F_p", true, 1, 1,
         [=](const Options& o, Report& r, std::istream& in) {
             r.set("root", poly_text(frobenius_pth_root(poly_arg(o, 0, in), monoid(o))));
             return kOk;
         }},
        {"uufd-check", "compare two factor lists (--z1, --z2; ';'-separated) up to units and order", false, 1, 1,
         [=](const Options& o, Report& r, std::istream& in) {
             const PuiseuxPoly f = poly_arg(o, 0, in);
             const Field field = Field::parse(o.field);
             return predicate(r, "uufd", uufd_check(f, parse_poly_list(o.z1, field), parse_poly_list(o.z2, field)));
         }},
        {"chain-verify", "check q1 -> q2 -> ... is a proper divisibility chain", true, 1, 64,
         [=](const Options& o, Report& r, std::istream&) {
             std::vector<ReducedRational> chain;
             for (const auto& v : o.values) chain.push_back(parse_element(v));
             const ChainReport c = verify_divisibility_chain(monoid(o), chain);
             if (c.violation_step) r.set("violation_step", std::to_string(*c.violation_step));
             if (!c.reason.empty()) r.set("reason", c.reason);
             return predicate(r, "valid", c.valid);
         }},
    };
}

void error_report(std::ostream& out, std::ostream& err, bool structured, const std::string& kind,
                  const std::string& message) {
    if (structured) {
        Json j;
        j["error"] = kind;
        j["message"] = message;
        out << j.dump() << '\n';
    } else {
        err << "error: " << message << '\n';
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Puiseux monoids and their semigroup algebras", "puiseux_cli"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--field", o.field, "coefficient field: Q or Fp:<p>");
    app.add_option("--bound", o.bound, "inflation bound K");
    app.add_option("--depth", o.depth, "splitting depth D for factor");
    app.add_flag("--structured", o.structured, "print one JSON object");
    app.fallthrough();

    const std::vector<Command> table = commands();
    std::vector<std::pair<CLI::App*, const Command*>> subs;
    for (const auto& c : table) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        sub->fallthrough();
        if (c.needs_monoid) sub->add_option("monoid", o.monoid, "monoid spec")->required();
        auto* values = sub->add_option("values", o.values, "arguments");
        if (c.min_values > 0) values->required();
        if (c.name == "eisenstein") sub->add_option("--p", o.p, "prime");
        if (c.name == "inflate") sub->add_option("--m", o.m, "inflation exponent");
        if (c.name == "uufd-check") {
            sub->add_option("--z1", o.z1, "first factor list")->required();
            sub->add_option("--z2", o.z2, "second factor list")->required();
        }
        if (c.name == "factorizations") sub->add_option("--max", o.max_factorizations, "enumeration cap");
        if (c.name == "irreducible") sub->add_flag("--integral", o.integral, "test in Z[M] instead of Q[M]");
        subs.emplace_back(sub, &c);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        error_report(out, err, o.structured, "usage", e.what());
        return kUsage;
    }

    const Command* chosen = nullptr;
    for (const auto& [sub, c] : subs)
        if (sub->parsed()) chosen = c;
    if (o.values.size() < chosen->min_values || o.values.size() > chosen->max_values) {
        error_report(out, err, o.structured, "usage", chosen->name + ": wrong number of arguments");
        return kUsage;
    }

    try {
        Field::parse(o.field);
    } catch (const Error& e) {
        error_report(out, err, o.structured, "usage", e.what());
        return kUsage;
    }

    Report report;
    int code = kOk;
    try {
        code = chosen->handler(o, report, in);
    } catch (const ParseError& e) {
        error_report(out, err, o.structured, "parse", e.what());
        return kUsage;
    } catch (const ValidationError& e) {
        error_report(out, err, o.structured, "validation", e.what());
        return kUsage;
    } catch (const CapExceededError& e) {
        error_report(out, err, o.structured, "cap_exceeded", e.what());
        return kUndecided;
    } catch (const Error& e) {
        error_report(out, err, o.structured, "domain", e.what());
        return kDomain;
    }
    report.print(out, o.structured);
    return code;
}

} // namespace puiseux::cli
