// opspec command-line front end. Exit codes: 0 success, 1 failed assertion or
// INCONSISTENT verdict, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "opspec/cline.hpp"
#include "opspec/drazin.hpp"
#include "opspec/dsl.hpp"
#include "opspec/error.hpp"
#include "opspec/json_io.hpp"
#include "opspec/spectra.hpp"
#include "opspec/svg.hpp"
#include "opspec/theorem.hpp"

using namespace opspec;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

bool is_input_error(const std::string& code) {
    return code == "syntax-error" || code == "unknown-spectrum" || code == "unknown-theorem" || code == "bad-json" ||
           code == "io-error" || code == "unknown-family" || code == "inconsistent-family" || code == "usage";
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string item; std::getline(in, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

void write_json(const Json& j, const std::string& path) {
    std::string text = j.dump(2) + "\n";
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) throw Error("io-error", "cannot write " + path);
}

Json read_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("io-error", "cannot read " + path);
    try {
        return Json::parse(f);
    } catch (const nlohmann::json::exception& e) {
        throw Error("bad-json", path + ": " + e.what());
    }
}

std::vector<NamedExpr> targets(const std::string& expr) {
    if (expr.empty()) return instance_library();
    return {{"expr", parse_expr(expr), expr}};
}

int cmd_compute(const std::string& expr, const std::string& names, const std::string& json_out,
                const std::string& svg_out) {
    SpectraEngine engine(parse_expr(expr));
    std::vector<std::string> wanted = names == "all" ? spectrum_names() : split(names);
    if (wanted.empty()) throw Error("usage", "no spectra requested");
    for (const auto& n : wanted)
        if (!is_spectrum_name(n)) throw Error("unknown-spectrum", n);
    Json spectra = Json::object();
    std::vector<NamedRegion> layers;
    for (const auto& n : wanted) {
        Region r = engine.spectrum(n);
        spectra[n] = region_to_json(r);
        layers.emplace_back(n, r);
    }
    write_json({{"expr", print_expr(*engine.expr())}, {"spectra", spectra}}, json_out);
    if (!svg_out.empty()) emit_svg(layers, svg_out);
    return kOk;
}

int cmd_check(const std::string& id, const std::string& expr, const std::string& json_out) {
    std::vector<std::string> ids = id == "all" ? theorem_ids() : std::vector<std::string>{id};
    for (const auto& t : ids)
        if (!is_theorem_id(t)) throw Error("unknown-theorem", t);
    auto reports = sweep(ids, targets(expr));
    std::size_t bad = count_inconsistent(reports);
    if (json_out.empty()) {
        for (const auto& r : reports) {
            std::cout << (r.consistent ? "consistent  " : "INCONSISTENT") << "  " << r.theorem << "  " << r.instance
                      << "  [";
            for (std::size_t i = 0; i < r.sides.size(); ++i) std::cout << (i ? " " : "") << (r.sides[i].value ? 'T' : 'F');
            std::cout << "]\n";
        }
    } else {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r));
        write_json(arr, json_out);
    }
    std::cout << reports.size() << " reports, " << bad << " inconsistent\n";
    return bad == 0 ? kOk : kFailed;
}

int cmd_drazin(const std::string& path) {
    ExactMatrix m = matrix_from_json(read_json(path));
    DrazinCertificate c = drazin(m);
    write_json(drazin_to_json(c), "");
    return c.ok() ? kOk : kFailed;
}

int cmd_cline(std::size_t k, const std::string& family, std::uint64_t seed, std::size_t trials,
              const std::string& json_out) {
    const auto& families = pair_families();
    if (std::find(families.begin(), families.end(), family) == families.end()) throw Error("unknown-family", family);
    Json arr = Json::array();
    std::size_t failures = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        ConstraintPair p = generate_pair(k, family, seed + t);
        Json item = {{"k", k}, {"family", family}, {"seed", seed + t}, {"size", p.a.rows()},
                     {"constraint", p.satisfies_constraint()}};
        bool ok = p.satisfies_constraint();
        try {
            GenClineResult g = gen_cline(p);
            item["gen_cline"] = {{"pass", true}, {"index_a", g.index_a}, {"index_bkak", g.index_bkak}};
        } catch (const Error& e) {
            item["gen_cline"] = {{"pass", false}, {"error", e.what()}};
            ok = false;
        }
        ExactMatrix t_a = drazin(p.a).inverse;
#ifdef OPSPEC_MUTANT
        // Planted fault for the exit-status contract: a corrupted inverse.
        t_a = t_a + ExactMatrix::identity(t_a.rows());
#endif
        auto run = [&](const char* key, auto construction) {
            try {
                IdentityReport r = construction();
                item[key] = identity_report_to_json(r);
                ok = ok && r.ok();
            } catch (const Error& e) {
                item[key] = {{"ok", false}, {"error", e.what()}};
                ok = false;
            }
        };
        run("forward", [&] { return gdm_forward(p, GDInverseData::from(p.a, t_a)); });
        run("converse", [&] { return gdm_converse(p, GDInverseData::from(p.bk_ak(), drazin(p.bk_ak()).inverse)); });
        item["pass"] = ok;
        failures += ok ? 0 : 1;
        if (json_out.empty())
            std::cout << (ok ? "pass" : "FAIL") << "  k=" << k << " family=" << family << " seed=" << seed + t
                      << " size=" << p.a.rows() << "\n";
        arr.push_back(item);
    }
    if (!json_out.empty()) write_json(arr, json_out);
    std::cout << trials << " pairs, " << failures << " failing\n";
    return failures == 0 ? kOk : kFailed;
}

int cmd_audit(const std::string& expr) {
    std::size_t failures = 0, total = 0;
    for (const auto& inst : targets(expr)) {
        for (const auto& c : inclusion_audit(inst.expr)) {
            ++total;
            if (c.holds) continue;
            ++failures;
            std::cout << "FAIL  " << inst.name << "  " << c.chain << "  at " << c.failed_link << "\n";
        }
    }
    std::cout << total << " chains, " << failures << " failing\n";
    return failures == 0 ? kOk : kFailed;
}

int cmd_instances() {
    for (const auto& inst : instance_library()) std::cout << inst.name << "\t" << inst.text << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral pictures, B-type spectra and Cline's formula"};
    app.require_subcommand(1);

    std::string expr, names = "all", json_out, svg_out, theorem, matrix_path, family;
    std::size_t k = 1, trials = 1;
    std::uint64_t seed = 0;
    bool library = false;

    auto* compute = app.add_subcommand("compute", "Named spectra of an operator expression");
    compute->add_option("expr", expr, "operator expression")->required();
    compute->add_option("--spectra", names, "comma-separated names or 'all'");
    compute->add_option("--json", json_out, "write JSON here instead of stdout");
    compute->add_option("--svg", svg_out, "write an SVG drawing");

    auto* check = app.add_subcommand("check", "Evaluate theorem biconditionals");
    check->add_option("theorem", theorem, "theorem id or 'all'")->required();
    auto* check_expr = check->add_option("--expr", expr, "single operator expression");
    check->add_flag("--library", library, "run over the instance library (default)")->excludes(check_expr);
    check->add_option("--json", json_out, "write JSON reports");

    auto* drazin_cmd = app.add_subcommand("drazin", "Drazin inverse of a JSON matrix");
    drazin_cmd->add_option("--matrix", matrix_path, "matrix JSON file")->required();

    auto* cline = app.add_subcommand("cline", "Generalized Cline identities on generated pairs");
    cline->add_option("--k", k, "exponent k")->required()->check(CLI::PositiveNumber);
    cline->add_option("--family", family, "solve_k1, invertible_root, nilpotent or mixed")->required();
    cline->add_option("--seed", seed, "first seed")->required();
    cline->add_option("--trials", trials, "number of consecutive seeds")->check(CLI::PositiveNumber);
    cline->add_option("--json", json_out, "write JSON reports");

    auto* audit = app.add_subcommand("audit", "Inclusion chains");
    auto* audit_expr = audit->add_option("--expr", expr, "single operator expression");
    audit->add_flag("--library", library, "run over the instance library (default)")->excludes(audit_expr);

    auto* instances = app.add_subcommand("instances", "List the instance library");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*compute) return cmd_compute(expr, names, json_out, svg_out);
        if (*check) return cmd_check(theorem, expr, json_out);
        if (*drazin_cmd) return cmd_drazin(matrix_path);
        if (*cline) return cmd_cline(k, family, seed, trials, json_out);
        if (*audit) return cmd_audit(expr);
        if (*instances) return cmd_instances();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_input_error(e.code()) ? kUsage : kFailed;
    }
    return kUsage;
}
