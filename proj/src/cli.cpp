#include "mulhopf/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mulhopf/hopfmodules.hpp"
#include "mulhopf/instances.hpp"
#include "mulhopf/sparse.hpp"

namespace mulhopf::cli {

namespace {

Field parse_field(const nlohmann::json& spec) {
    if (!spec.contains("field")) return Field::rationals();
    const auto& f = spec.at("field");
    const std::string kind = f.at("kind").get<std::string>();
    if (kind == "rational") return Field::rationals();
    if (kind == "prime") return Field::prime(f.at("p").get<std::uint64_t>());
    throw std::invalid_argument("unknown field kind: " + kind);
}

FiniteMonoidTable parse_table(const nlohmann::json& j) {
    if (j.is_string()) {
        const std::string name = j.get<std::string>();
        if (name == "E2") return idempotent_table();
        if (name.size() >= 2 && name[0] == 'Z') return cyclic_table(std::stoul(name.substr(1)));
        if (name.size() >= 2 && name[0] == 'S')
            return symmetric_table(std::stoul(name.substr(1)));
        throw std::invalid_argument("unknown table name: " + name);
    }
    FiniteMonoidTable t;
    t.name = j.value("name", "table");
    t.n = j.at("n").get<std::size_t>();
    t.mul = j.at("mul").get<std::vector<std::vector<std::size_t>>>();
    t.id = j.value("id", std::size_t{0});
    if (j.contains("inverse"))
        t.inverse = j.at("inverse").get<std::vector<std::size_t>>();
    if (j.contains("names"))
        t.element_names = j.at("names").get<std::vector<std::string>>();
    if (t.mul.size() != t.n) throw std::invalid_argument("table: mul has wrong row count");
    for (const auto& row : t.mul) {
        if (row.size() != t.n) throw std::invalid_argument("table: mul has wrong column count");
        for (std::size_t v : row)
            if (v >= t.n) throw std::invalid_argument("table: entry out of range");
    }
    return t;
}

Scalar parse_scalar(Field k, const nlohmann::json& j) {
    if (j.is_string()) return Scalar::parse(k, j.get<std::string>());
    if (j.is_number_integer()) return Scalar::integer(k, j.get<long long>());
    throw std::invalid_argument("matrix entries must be strings or integers");
}

LinMap parse_matrix(Field k, const nlohmann::json& j, const SpaceSignature& dom,
                    const SpaceSignature& cod, const std::string& what) {
    LinMap m(k, dom, cod);
    if (!j.is_array() || j.size() != m.rows())
        throw std::invalid_argument(what + ": expected " + std::to_string(m.rows()) + " rows");
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto& row = j.at(r);
        if (!row.is_array() || row.size() != m.cols())
            throw std::invalid_argument(what + ": expected " + std::to_string(m.cols()) +
                                        " columns");
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = parse_scalar(k, row.at(c));
    }
    return m;
}

nlohmann::ordered_json json_matrix(const LinMap& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

struct DenseInstance {
    AlgebraInstance inst;
};

DenseInstance build_dense(const nlohmann::json& spec, Field k) {
    if (spec.contains("builder")) {
        const auto& b = spec.at("builder");
        const std::string kind = b.at("kind").get<std::string>();
        if (kind == "function_algebra")
            return DenseInstance{function_algebra(parse_table(b.at("table")), k)};
        if (kind == "group_algebra")
            return DenseInstance{group_algebra(parse_table(b.at("table")), k)};
        throw std::invalid_argument("unknown builder kind: " + kind);
    }
    if (spec.contains("raw")) {
        const auto& rj = spec.at("raw");
        const std::size_t d = rj.at("dim").get<std::size_t>();
        SpaceSignature A = SpaceSignature::simple("A", d);
        AlgebraInstance inst;
        inst.name = "raw(dim=" + std::to_string(d) + "," + k.str() + ")";
        LinMap t1 = parse_matrix(k, rj.at("t1"), A * A, A * A, "t1");
        LinMap t2 = parse_matrix(k, rj.at("t2"), A * A, A * A, "t2");
        nlohmann::json ej = rj.at("e");
        if (ej.is_array() && !ej.empty() && !ej.at(0).is_array())
            ej = nlohmann::json::array({ej});
        LinMap e = parse_matrix(k, ej, A, SpaceSignature{}, "e");
        inst.bim = MultiplierBimonoid{A, std::move(t1), std::move(t2), std::move(e)};
        if (rj.contains("t3") && rj.contains("t4"))
            inst.regular =
                RegularStructure{parse_matrix(k, rj.at("t3"), A * A, A * A, "t3"),
                                 parse_matrix(k, rj.at("t4"), A * A, A * A, "t4")};
        inst.unit = find_unit(inst.semigroup());
        return DenseInstance{std::move(inst)};
    }
    throw std::invalid_argument("spec must contain a builder or a raw instance");
}

std::optional<RegularStructure> obtain_regular(const AlgebraInstance& inst) {
    if (inst.regular) return inst.regular;
    return infer_regular(inst.bim);
}

// Dense command pipeline; appends to `laws` and optionally to `derived`.
void run_dense(const std::string& command, const AlgebraInstance& inst, CheckReport& r,
               nlohmann::ordered_json& derived) {
    const MultiplierBimonoid& b = inst.bim;
    const Field k = b.field();

    auto need_regular = [&]() -> RegularStructure {
        auto reg = obtain_regular(inst);
        if (!reg) throw PreconditionUnmet("instance has no regular structure");
        return *reg;
    };

    auto hopf_suite = [&](bool want_derived) -> std::optional<Antipode> {
        HopfCheck hc = check_hopf(b);
        r.merge("", hc.report);
        if (!hc.antipode) return std::nullopt;
        r.merge("", check_remark_epi_chain(b, *hc.antipode));
        auto reg = obtain_regular(inst);
        r.merge("", check_antipode_is_morphism(b, *hc.antipode, reg));
        if (reg) {
            PrimedAntipode sp = compute_s_prime(b, *reg);
            r.merge("", sp.report);
            r.merge("", check_s_inverse(b, *reg, *hc.antipode, sp));
            PlainAntipode pa = extract_sbar(b, *hc.antipode, sp, inst.unit);
            r.merge("", pa.report);
            if (want_derived) {
                derived["sbar"] = json_matrix(pa.sbar);
                derived["sbar_prime"] = json_matrix(pa.sbar_prime);
            }
        }
        return hc.antipode;
    };

    if (command == "check-bimonoid") {
        r.merge("", check_bimonoid(b));
        return;
    }
    if (command == "check-regular") {
        r.merge("", check_regular(b, need_regular()));
        return;
    }
    if (command == "check-hopf") {
        hopf_suite(false);
        return;
    }
    if (command == "antipode") {
        hopf_suite(true);
        return;
    }
    // Dual and tensor comodule laws and the fthm tensor item live on spaces of
    // dimension (dim A)^4 and beyond; dense exact arithmetic stays tractable
    // only for small instances.
    const bool small = b.space.total() <= 4;

    if (command == "check-comodule") {
        RegularStructure reg = need_regular();
        Comodule rc = regular_comodule(b, reg);
        r.merge("comodule.regular", check_comodule(b, reg, rc));
        HopfCheck hc = check_hopf(b);
        if (hc.antipode) {
            CoactionInverse ci = coaction_inverse(*hc.antipode, rc);
            r.merge("", ci.report);
            if (small) {
                DualComodule dc = dual_comodule(b, *hc.antipode, rc);
                r.merge("", dc.report);
                r.merge("comodule.dual", check_comodule(b, reg, dc.com));
                TensorComodule tc = tensor_comodule(b, rc, rc);
                r.merge("comodule.tensor", tc.report);
                r.merge("comodule.tensor", check_comodule(b, reg, tc.com));
            }
        }
        return;
    }
    if (command == "check-module") {
        RegularStructure reg = need_regular();
        RegularModule rm = regular_module(b, reg);
        r.merge("module.regular", check_regular_module(b, reg, rm, inst.unit));
        TensorModule tm = tensor_module(b, rm.base, rm);
        r.merge("module.tensor", tm.report);
        HopfCheck hc = check_hopf(b);
        if (hc.antipode) {
            DualModule dm = dual_module(b, reg, *hc.antipode, rm.base);
            r.merge("", dm.report);
        }
        return;
    }
    auto need_hopf = [&]() {
        if (!check_hopf(b).antipode)
            throw PreconditionUnmet("t1 not invertible: not a multiplier Hopf monoid");
    };

    if (command == "check-hopfmodule") {
        RegularStructure reg = need_regular();
        need_hopf();
        HopfModule h = free_hopf_module(b, reg, SpaceSignature::simple("X", 1));
        r.merge("hopf_module.free", check_hopf_module(b, reg, h));
        Coinvariants coin = coinvariants(b, h);
        r.law_true("hopf_module.coinvariants.dim", coin.space.total() == 1,
                   "coinvariants have dimension " + std::to_string(coin.space.total()));
        IsoPair iso = iso_pair(b, reg, h, coin);
        r.merge("hopf_module", iso.report);
        return;
    }
    if (command == "fthm") {
        RegularStructure reg = need_regular();
        need_hopf();
        r.merge("", fthm_check(b, reg));
        return;
    }
    if (command == "all") {
        r.merge("", check_bimonoid(b));
        auto reg = obtain_regular(inst);
        if (reg) r.merge("", check_regular(b, *reg));
        std::optional<Antipode> s = hopf_suite(false);
        if (reg) {
            Comodule rc = regular_comodule(b, *reg);
            r.merge("comodule.regular", check_comodule(b, *reg, rc));
            RegularModule rm = regular_module(b, *reg);
            r.merge("module.regular", check_regular_module(b, *reg, rm, inst.unit));
            if (s) {
                CoactionInverse ci = coaction_inverse(*s, rc);
                r.merge("", ci.report);
                DualModule dm = dual_module(b, *reg, *s, rm.base);
                r.merge("", dm.report);
                if (small) {
                    DualComodule dc = dual_comodule(b, *s, rc);
                    r.merge("", dc.report);
                    r.merge("", fthm_check(b, *reg));
                }
            }
        }
        return;
    }
    throw std::invalid_argument("unknown command: " + command);
}

void run_sparse(const std::string& command, const nlohmann::json& builder, Field k,
                std::uint64_t seed, CheckReport& r, std::string& name) {
    const std::string gname = builder.at("group").get<std::string>();
    std::unique_ptr<ComputableGroup> g;
    if (gname == "integers")
        g = integers_group();
    else if (gname == "free2")
        g = free_group_2();
    else if (gname == "cyclic")
        g = cyclic_group(builder.at("n").get<std::size_t>());
    else if (gname == "symmetric")
        g = symmetric_group(builder.at("n").get<std::size_t>());
    else
        throw std::invalid_argument("unknown sparse group: " + gname);
    name = "sparse(" + g->name() + "," + k.str() + ")";
    const std::size_t trials = builder.value("trials", std::size_t{1000});

    if (command == "check-bimonoid" || command == "check-hopf" || command == "all") {
        SparseFunctionAlgebra alg(*g, k);
        r.merge("", sparse_randomized_suite(alg, seed, trials));
        if (command == "all") r.merge("", sparse_window_crosscheck(k));
        return;
    }
    throw PreconditionUnmet("sparse instances support check-bimonoid, check-hopf, all");
}

}  // namespace

nlohmann::ordered_json run_command(const nlohmann::json& spec, const std::string& command,
                                   std::uint64_t seed, const std::string& laws_filter) {
    const Field k = parse_field(spec);
    CheckReport r;
    std::string name;
    nlohmann::ordered_json derived = nlohmann::ordered_json::object();

    const bool sparse = spec.contains("builder") &&
                        spec.at("builder").at("kind").get<std::string>() == "sparse";
    if (sparse) {
        run_sparse(command, spec.at("builder"), k, seed, r, name);
    } else {
        DenseInstance d = build_dense(spec, k);
        name = d.inst.name;
        run_dense(command, d.inst, r, derived);
    }

    nlohmann::ordered_json out;
    out["instance"] = name;
    out["command"] = command;
    out["field"] = k.str();
    out["seed"] = seed;
    nlohmann::ordered_json laws = nlohmann::ordered_json::array();
    for (const auto& l : r.laws) {
        if (!laws_filter.empty() && l.id.find(laws_filter) == std::string::npos) continue;
        nlohmann::ordered_json lj;
        lj["id"] = l.id;
        lj["passed"] = l.passed;
        if (!l.passed && !l.witness.empty()) lj["witness"] = l.witness;
        laws.push_back(std::move(lj));
    }
    out["laws"] = std::move(laws);
    if (!derived.empty()) out["derived"] = std::move(derived);
    return out;
}

bool validate_report(const nlohmann::json& report, std::string* error) {
    auto fail = [&](const std::string& msg) {
        if (error) *error = msg;
        return false;
    };
    if (!report.is_object()) return fail("report must be an object");
    for (const char* key : {"instance", "command", "field"}) {
        if (!report.contains(key) || !report.at(key).is_string())
            return fail(std::string("missing string field: ") + key);
    }
    if (report.contains("seed") && !report.at("seed").is_number_unsigned())
        return fail("seed must be an unsigned integer");
    if (!report.contains("laws") || !report.at("laws").is_array())
        return fail("missing laws array");
    for (const auto& l : report.at("laws")) {
        if (!l.is_object()) return fail("law entries must be objects");
        if (!l.contains("id") || !l.at("id").is_string()) return fail("law without string id");
        if (!l.contains("passed") || !l.at("passed").is_boolean())
            return fail("law without boolean passed");
        if (l.contains("witness") && !l.at("witness").is_string())
            return fail("law witness must be a string");
    }
    if (report.contains("derived")) {
        const auto& d = report.at("derived");
        if (!d.is_object()) return fail("derived must be an object");
        for (const auto& [key, val] : d.items()) {
            if (!val.is_array()) return fail("derived." + key + " must be a matrix");
            for (const auto& row : val) {
                if (!row.is_array()) return fail("derived." + key + " must be a matrix");
                for (const auto& cell : row)
                    if (!cell.is_string())
                        return fail("derived." + key + " entries must be strings");
            }
        }
    }
    if (error) error->clear();
    return true;
}

std::string report_text(const nlohmann::ordered_json& report) {
    std::string out;
    out += "instance: " + report.at("instance").get<std::string>() + "\n";
    out += "command: " + report.at("command").get<std::string>() + "\n";
    out += "field: " + report.at("field").get<std::string>() + "\n";
    std::size_t failed = 0;
    for (const auto& l : report.at("laws")) {
        const bool passed = l.at("passed").get<bool>();
        if (!passed) ++failed;
        out += (passed ? "PASS " : "FAIL ") + l.at("id").get<std::string>() + "\n";
        if (l.contains("witness"))
            out += "  witness: " + l.at("witness").get<std::string>() + "\n";
    }
    out += "summary: " + std::to_string(report.at("laws").size() - failed) + "/" +
           std::to_string(report.at("laws").size()) + " laws passed\n";
    return out;
}

int report_status(const nlohmann::ordered_json& report) {
    for (const auto& l : report.at("laws"))
        if (!l.at("passed").get<bool>()) return 1;
    return 0;
}

int run(int argc, const char* const* argv) {
    CLI::App app{"Exact verifier for multiplier bimonoids, multiplier Hopf monoids, and their "
                 "(co)module categories"};
    app.name("mulhopf");
    std::string command, input, format = "json", laws_filter;
    std::optional<std::uint64_t> seed_opt;
    app.add_option("command", command,
                   "check-bimonoid | check-regular | check-hopf | antipode | check-comodule | "
                   "check-module | check-hopfmodule | fthm | all | validate-report")
        ->required();
    app.add_option("input", input, "instance spec (JSON), or a report for validate-report")
        ->required();
    app.add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", seed_opt, "seed for randomized sparse checks");
    app.add_option("--laws", laws_filter, "only emit laws whose id contains this substring");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::uint64_t seed = kDefaultSeed;
    if (const char* env = std::getenv("MULHOPF_SEED")) seed = std::strtoull(env, nullptr, 10);
    if (seed_opt) seed = *seed_opt;

    try {
        std::ifstream in(input);
        if (!in) {
            std::cerr << "error: cannot open " << input << "\n";
            return 2;
        }
        nlohmann::json doc = nlohmann::json::parse(in);

        if (command == "validate-report") {
            std::string err;
            if (validate_report(doc, &err)) {
                std::cout << (format == "json" ? "{\"valid\":true}" : "valid") << "\n";
                return 0;
            }
            std::cout << (format == "json"
                              ? nlohmann::json{{"valid", false}, {"error", err}}.dump()
                              : "invalid: " + err)
                      << "\n";
            return 1;
        }

        nlohmann::ordered_json report = run_command(doc, command, seed, laws_filter);
        if (format == "json")
            std::cout << report.dump(2) << "\n";
        else
            std::cout << report_text(report);
        return report_status(report);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionUnmet& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace mulhopf::cli
