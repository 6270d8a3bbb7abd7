#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <json.hpp>

#include "hhq/barcomplex.hpp"
#include "hhq/cup.hpp"
#include "hhq/hilbert.hpp"
#include "hhq/koszul.hpp"
#include "hhq/lambda.hpp"
#include "hhq/resolution.hpp"

using json = nlohmann::ordered_json;

namespace {

struct RunConfig {
    std::string field = "Q";
    std::string q_expr = "2";
    int max_n = 8;
    int cap = -1;        // ring-presentation degree cap; default derived from the case
    int oracle_cap = -1; // default 4 (3 over Q), overridable via HHQ_ORACLE_CAP
    unsigned max_deg = 12;
    std::string format = "human";
    std::string out_path;
    std::string suite = "all";
};

hhq::FieldContextPtr parse_field(const std::string& s) {
    if (s == "Q" || s == "rationals") return hhq::FieldContext::rationals();
    auto colon = s.find(':');
    if (colon != std::string::npos) {
        std::string head = s.substr(0, colon);
        unsigned long v = std::stoul(s.substr(colon + 1));
        if (head == "Fp" || head == "F") return hhq::FieldContext::prime_field(v);
        if (head == "Cyc" || head == "Cyclotomic")
            return hhq::FieldContext::cyclotomic(static_cast<unsigned>(v));
    }
    throw std::invalid_argument("unrecognized field '" + s + "' (use Q, Fp:<p> or Cyc:<r>)");
}

hhq::FieldScalar parse_q(const hhq::FieldContextPtr& ctx, const std::string& s) {
    if (s == "zeta") {
        if (ctx->kind() == hhq::FieldKind::Cyclotomic) return hhq::FieldScalar::zeta(ctx);
        if (ctx->kind() == hhq::FieldKind::Prime) {
            // smallest generator of the multiplicative group
            for (std::uint64_t g = 2; g < ctx->prime(); ++g) {
                auto q = hhq::FieldScalar::from_int(ctx, static_cast<long>(g));
                if (hhq::mult_order(q).is_finite(ctx->prime() - 1)) return q;
            }
            throw std::invalid_argument("no generator found (p = 2 has only q = 1)");
        }
        throw std::invalid_argument("'zeta' needs a cyclotomic or prime field");
    }
    auto slash = s.find('/');
    if (slash != std::string::npos)
        return hhq::FieldScalar::from_fraction(ctx, std::stol(s.substr(0, slash)),
                                               std::stol(s.substr(slash + 1)));
    return hhq::FieldScalar::from_int(ctx, std::stol(s));
}

json checks_to_json(const hhq::Report& rep) {
    json arr = json::array();
    for (const auto& c : rep.checks) {
        json item;
        item["name"] = c.name;
        item["status"] = c.status == hhq::CheckStatus::Pass ? "pass"
                         : c.status == hhq::CheckStatus::PassWithNote ? "pass-with-note"
                                                                     : "fail";
        item["note"] = c.note;
        arr.push_back(item);
    }
    return arr;
}

void emit(const RunConfig& cfg, const json& doc, const hhq::Report& rep) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!cfg.out_path.empty()) {
        file.open(cfg.out_path);
        if (!file) throw std::runtime_error("cannot open " + cfg.out_path);
        out = &file;
    }
    if (cfg.format == "json") {
        *out << doc.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        *out << "n,dim\n";
        if (doc.contains("dims"))
            for (std::size_t n = 0; n < doc["dims"].size(); ++n)
                *out << n << "," << doc["dims"][n].get<unsigned>() << "\n";
    } else {
        *out << "case: " << doc["case"].get<std::string>() << "  field: "
             << doc["field"].get<std::string>() << "  q: " << doc["q"].get<std::string>() << "\n";
        if (doc.contains("dims")) {
            *out << "dims:";
            for (const auto& d : doc["dims"]) *out << " " << d.get<unsigned>();
            *out << "\n";
        }
        if (doc.contains("bases"))
            for (const auto& b : doc["bases"]) *out << "  " << b.get<std::string>() << "\n";
        if (doc.contains("products"))
            for (const auto& p : doc["products"])
                *out << "  " << p["name"].get<std::string>() << " -> "
                     << p["value"].get<std::string>() << "\n";
        for (const auto& c : rep.checks) {
            const char* tag = c.status == hhq::CheckStatus::Pass ? "PASS"
                              : c.status == hhq::CheckStatus::PassWithNote ? "PASS*"
                                                                           : "FAIL";
            *out << "[" << tag << "] " << c.name;
            if (!c.note.empty()) *out << " -- " << c.note;
            *out << "\n";
        }
    }
}

json base_doc(const hhq::MinimalResolution& res) {
    json doc;
    doc["case"] = res.algebra().classify().name();
    doc["field"] = res.context()->describe();
    doc["q"] = res.q().to_string();
    return doc;
}

int default_ring_cap(const hhq::CaseDescriptor& cd) {
    if (cd.tag == hhq::CaseTag::OddRoot) return 4 * static_cast<int>(cd.r);
    if (cd.tag == hhq::CaseTag::EvenRootOrChar2) return std::max(6, 2 * static_cast<int>(cd.r));
    return 6;
}

int run_dims(const RunConfig& cfg) {
    auto ctx = parse_field(cfg.field);
    hhq::MinimalResolution res(hhq::LambdaAlgebra(ctx, parse_q(ctx, cfg.q_expr)));
    json doc = base_doc(res);
    json dims = json::array();
    json bases = json::array();
    for (int n = 0; n <= cfg.max_n; ++n) {
        dims.push_back(res.hh_dimension(n));
        const auto& space = res.hh_basis(n);
        std::string line = "HH^" + std::to_string(n) + ":";
        for (const auto& r : space.representatives) line += " " + r.to_string();
        if (space.representatives.empty()) line += " (0)";
        bases.push_back(line);
    }
    doc["dims"] = dims;
    doc["bases"] = bases;
    doc["checks"] = json::array();
    emit(cfg, doc, {});
    return 0;
}

int oracle_cap_for(const RunConfig& cfg, const hhq::FieldContextPtr& ctx) {
    int cap = cfg.oracle_cap;
    if (const char* env = std::getenv("HHQ_ORACLE_CAP"); env && cap < 0) cap = std::atoi(env);
    if (cap < 0) cap = ctx->kind() == hhq::FieldKind::Prime ? 4 : 3;
    if (cap > 5) throw std::invalid_argument("oracle cap must be at most 5");
    return cap;
}

int run_verify(const RunConfig& cfg) {
    auto ctx = parse_field(cfg.field);
    hhq::LambdaAlgebra alg(ctx, parse_q(ctx, cfg.q_expr));
    hhq::MinimalResolution res(alg);
    hhq::CaseDescriptor cd = alg.classify();
    hhq::Report rep;
    json doc = base_doc(res);

    bool all = cfg.suite == "all";
    if (all || cfg.suite == "complex") rep.merge(res.verify_complex(cfg.max_n));
    if (all || cfg.suite == "comultiplication") rep.merge(res.verify_comultiplication(cfg.max_n));
    if (all || cfg.suite == "minimality") rep.merge(res.verify_minimality(cfg.max_n));
    if (all || cfg.suite == "oracle") {
        int cap = oracle_cap_for(cfg, ctx);
        auto oracle = hhq::oracle_hh_dimensions(cap, alg);
        for (int n = 0; n <= cap; ++n) {
            unsigned direct = res.hh_dimension(n);
            bool ok = direct == oracle[n];
            rep.record("oracle dim HH^" + std::to_string(n), ok,
                       ok ? "" : "resolution " + std::to_string(direct) + ", bar oracle " +
                                     std::to_string(oracle[n]));
        }
    }
    if (all || cfg.suite == "ring") {
        int cap = cfg.cap > 0 ? cfg.cap : default_ring_cap(cd);
        rep.merge(hhq::verify_presentation(res, cap));
        json products = json::array();
        for (const auto& [name, value] : hhq::product_table(res, cap)) {
            json p;
            p["name"] = name;
            p["value"] = value;
            products.push_back(p);
        }
        doc["products"] = products;
    }
    if (all || cfg.suite == "centre") rep.merge(hhq::verify_centre_proposition(alg, cfg.max_deg));
    if (all || cfg.suite == "hilbert") rep.merge(hhq::compare_dims(res, cfg.max_n));

    doc["checks"] = checks_to_json(rep);
    emit(cfg, doc, rep);
    return rep.all_passed() ? 0 : 1;
}

int run_centre(const RunConfig& cfg) {
    auto ctx = parse_field(cfg.field);
    hhq::LambdaAlgebra alg(ctx, parse_q(ctx, cfg.q_expr));
    hhq::Report rep = hhq::verify_centre_proposition(alg, cfg.max_deg);
    json doc;
    doc["case"] = alg.classify().name();
    doc["field"] = ctx->describe();
    doc["q"] = alg.q().to_string();
    json monos = json::array();
    for (auto [a, b] : hhq::graded_centre_monomials(alg, cfg.max_deg))
        monos.push_back("x^" + std::to_string(a) + " y^" + std::to_string(b));
    doc["monomials"] = monos;
    doc["checks"] = checks_to_json(rep);
    emit(cfg, doc, rep);
    return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hochschild cohomology of Lambda_q = k<x,y>/(x^2, xy+q yx, y^2)"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--field", cfg.field, "Q, Fp:<p> or Cyc:<r>");
        sub->add_option("--q", cfg.q_expr, "integer, fraction a/b, or 'zeta'");
        sub->add_option("--format", cfg.format, "human, json or csv")
            ->check(CLI::IsMember({"human", "json", "csv"}));
        sub->add_option("--out", cfg.out_path, "write the report to a file");
    };

    CLI::App* dims = app.add_subcommand("dims", "dimension table for HH^0..HH^N");
    add_common(dims);
    dims->add_option("--max-n", cfg.max_n, "largest degree")->check(CLI::NonNegativeNumber);

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify);
    verify->add_option("--suite", cfg.suite, "complex, comultiplication, minimality, oracle, ring, centre, hilbert or all")
        ->check(CLI::IsMember({"complex", "comultiplication", "minimality", "oracle", "ring",
                               "centre", "hilbert", "all"}));
    verify->add_option("--max-n", cfg.max_n, "degree bound for complex/hilbert suites");
    verify->add_option("--cap", cfg.cap, "ring-presentation degree cap");
    verify->add_option("--oracle-cap", cfg.oracle_cap, "bar-oracle degree cap (max 5)");
    verify->add_option("--max-deg", cfg.max_deg, "graded-centre degree cutoff");

    CLI::App* centre = app.add_subcommand("centre", "graded centre of the Koszul dual");
    add_common(centre);
    centre->add_option("--max-deg", cfg.max_deg, "total degree cutoff");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand("dims")) return run_dims(cfg);
        if (app.got_subcommand("verify")) return run_verify(cfg);
        if (app.got_subcommand("centre")) return run_centre(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
