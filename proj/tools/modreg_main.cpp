#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "modreg/describe.hpp"
#include "modreg/properties.hpp"
#include "modreg/theorems.hpp"

using namespace modreg;
namespace fs = std::filesystem;

namespace {

// exit codes: 0 ok, 1 theorem failure, 2 input error, 3 resource limit
constexpr int kOk = 0, kFailures = 1, kInputError = 2, kResourceLimit = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInputError("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json parse_doc(const std::string& bytes, const std::string& path) {
    json j = json::parse(bytes, nullptr, false);
    if (j.is_discarded()) throw InvalidInputError("malformed JSON in " + path);
    return j;
}

void apply_env_limits(Limits& lim) {
    const char* env = std::getenv("MODREG_LIMITS");
    if (!env || !*env) return;
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw InvalidInputError("MODREG_LIMITS: expected key=value, got \"" + item + "\"");
        std::string key = item.substr(0, eq);
        long long val = 0;
        try {
            val = std::stoll(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw InvalidInputError("MODREG_LIMITS: bad value in \"" + item + "\"");
        }
        if (key == "max_ring_order") lim.max_ring_order = static_cast<long>(val);
        else if (key == "max_module_order") lim.max_module_order = static_cast<long>(val);
        else if (key == "max_submodules") lim.max_submodules = static_cast<long>(val);
        else if (key == "max_endomorphisms") lim.max_endomorphisms = static_cast<long>(val);
        else if (key == "iso_node_budget") lim.iso_node_budget = val;
        else if (key == "hom_candidate_budget") lim.hom_candidate_budget = val;
        else throw InvalidInputError("MODREG_LIMITS: unknown key \"" + key + "\"");
    }
}

Limits make_limits(long limit_elements, long limit_submodules) {
    Limits lim = default_limits();
    apply_env_limits(lim);
    if (limit_elements > 0) {
        lim.max_ring_order = limit_elements;
        lim.max_module_order = limit_elements;
    }
    if (limit_submodules > 0) lim.max_submodules = limit_submodules;
    return lim;
}

json verdict_json(const Verdict& v) {
    return json{{"property", v.property}, {"value", v.value}, {"witness", v.witness}, {"note", v.note}};
}

json theorem_json(const TheoremVerdict& v) {
    json cs = json::array();
    for (const auto& c : v.clauses) cs.push_back(json{{"name", c.name}, {"value", c.value}});
    return json{{"theorem", v.theorem},
                {"instance", v.instance},
                {"status", name(v.status)},
                {"clauses", std::move(cs)},
                {"reason", v.reason}};
}

void print_verdict_text(const Verdict& v) {
    std::cout << v.property << " = " << (v.value ? "true" : "false");
    if (!v.witness.empty()) {
        std::cout << "  witness=[";
        for (size_t i = 0; i < v.witness.size(); ++i) std::cout << (i ? "," : "") << v.witness[i];
        std::cout << "]";
    }
    if (!v.note.empty()) std::cout << "  (" << v.note << ")";
    std::cout << "\n";
}

void print_theorem_text(const TheoremVerdict& v) {
    std::cout << v.theorem << " [" << name(v.status) << "] " << v.instance;
    if (!v.clauses.empty()) {
        std::cout << "  clauses:";
        for (const auto& c : v.clauses) std::cout << " " << c.name << "=" << (c.value ? "T" : "F");
    }
    if (!v.reason.empty()) std::cout << "  (" << v.reason << ")";
    std::cout << "\n";
}

json report_skeleton(const char* kind) {
    return json{{"schema", 1}, {"tool", tool_version()}, {"kind", kind}};
}

struct CheckArgs {
    std::string target;  // "ring" | "module"
    std::string file;
    std::string ring_file;
    std::string properties;
    bool all = false;
    std::string format = "text";
    long limit_elements = 0;
    long limit_submodules = 0;
};

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

int run_check(const CheckArgs& a) {
    Limits lim = make_limits(a.limit_elements, a.limit_submodules);
    auto t0 = std::chrono::steady_clock::now();

    json report = report_skeleton("check");
    json inputs = json::object();
    std::vector<Verdict> verdicts;
    std::string subject;

    std::string bytes = read_file(a.file);
    inputs[a.target] = json{{"path", a.file}, {"digest", content_digest(bytes)}};

    if (a.target == "ring") {
        NamedRing nr = parse_ring_description(parse_doc(bytes, a.file), lim);
        subject = nr.name;
        std::vector<RingProp> props;
        if (!a.properties.empty()) {
            for (const auto& s : split_csv(a.properties)) {
                auto p = ring_prop_from_name(s);
                if (!p) throw InvalidInputError("unknown ring property: " + s);
                props.push_back(*p);
            }
        } else {
            for (RingProp p : all_ring_props()) props.push_back(p);
        }
        for (RingProp p : props) verdicts.push_back(evaluate_ring_property(nr.ring, p, lim));
    } else {
        RingPtr R;
        if (!a.ring_file.empty()) {
            std::string rb = read_file(a.ring_file);
            inputs["ring"] = json{{"path", a.ring_file}, {"digest", content_digest(rb)}};
            R = parse_ring_description(parse_doc(rb, a.ring_file), lim).ring;
        }
        std::string base = fs::path(a.file).parent_path().string();
        NamedModule nm = parse_module_description(parse_doc(bytes, a.file), R, base, lim);
        subject = nm.name;
        std::vector<ModProp> props;
        bool explicit_list = !a.properties.empty();
        if (explicit_list) {
            for (const auto& s : split_csv(a.properties)) {
                auto p = mod_prop_from_name(s);
                if (!p) throw InvalidInputError("unknown module property: " + s);
                props.push_back(*p);
            }
        } else {
            bool comm = nm.module->ring()->commutative();
            for (ModProp p : all_mod_props())
                if (comm || !needs_commutative(p)) props.push_back(p);
        }
        PropertyEvaluator ev(nm.module, lim);
        for (ModProp p : props) verdicts.push_back(ev.evaluate(p));  // NotCommutative -> exit 2
    }

    report["inputs"] = std::move(inputs);
    report["subject"] = subject;
    json vs = json::array();
    for (const auto& v : verdicts) vs.push_back(verdict_json(v));
    report["verdicts"] = std::move(vs);
    report["timing"] = json{
        {"total_ms", std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                         .count()}};

    if (a.format == "json") {
        std::cout << canonical_json(report);
    } else {
        std::cout << subject << ":\n";
        for (const auto& v : verdicts) print_verdict_text(v);
    }
    return kOk;
}

struct VerifyArgs {
    std::string theorem;
    std::string ring_file;
    std::string module_file;
    std::string format = "text";
};

int run_verify(const VerifyArgs& a) {
    Limits lim = make_limits(0, 0);
    json report = report_skeleton("verify");
    json inputs = json::object();

    if (a.ring_file.empty() && a.module_file.empty())
        throw InvalidInputError("verify needs --ring and/or --module");

    RingPtr R;
    ModulePtr M;
    std::string ring_name, module_name;
    if (!a.ring_file.empty()) {
        std::string rb = read_file(a.ring_file);
        inputs["ring"] = json{{"path", a.ring_file}, {"digest", content_digest(rb)}};
        NamedRing nr = parse_ring_description(parse_doc(rb, a.ring_file), lim);
        R = nr.ring;
        ring_name = nr.name;
    }
    if (!a.module_file.empty()) {
        std::string mb = read_file(a.module_file);
        inputs["module"] = json{{"path", a.module_file}, {"digest", content_digest(mb)}};
        std::string base = fs::path(a.module_file).parent_path().string();
        NamedModule nm = parse_module_description(parse_doc(mb, a.module_file), R, base, lim);
        M = nm.module;
        module_name = nm.name;
        if (!R) {
            R = M->ring();
            ring_name = module_name + ".ring";
        }
    }

    std::vector<std::string> ids;
    if (a.theorem == "all") {
        for (const auto& t : theorem_registry())
            if (t.ring_only || M) ids.push_back(t.id);
    } else {
        if (!find_theorem(a.theorem)) {
            std::cerr << "unknown theorem id: " << a.theorem << "\nvalid ids:";
            for (const auto& t : theorem_registry()) std::cerr << " " << t.id;
            std::cerr << "\n";
            return kInputError;
        }
        ids.push_back(a.theorem);
    }

    std::vector<TheoremVerdict> verdicts;
    for (const auto& id : ids) {
        const TheoremInfo* info = find_theorem(id);
        if (!info->ring_only && !M)
            throw InvalidInputError(id + " needs --module");
        TheoremVerdict v = verify_theorem(id, R, info->ring_only ? nullptr : M, lim);
        v.instance = info->ring_only ? ring_name
                                     : (ring_name.empty() ? module_name : ring_name + " / " + module_name);
        verdicts.push_back(std::move(v));
    }

    long failed = 0;
    json vs = json::array();
    for (const auto& v : verdicts) {
        if (v.status == TheoremStatus::Fail) ++failed;
        vs.push_back(theorem_json(v));
    }
    report["inputs"] = std::move(inputs);
    report["verdicts"] = std::move(vs);
    report["finiteness_justification"] = kFinitenessJustification;

    if (a.format == "json") {
        std::cout << canonical_json(report);
    } else {
        for (const auto& v : verdicts) print_theorem_text(v);
    }
    return failed ? kFailures : kOk;
}

struct SweepArgs {
    std::string catalog = "default";
    std::string theorems;
    int jobs = 1;
    std::string out;
    std::string format = "text";
};

InstanceCatalog load_dir_catalog(const std::string& dir, const Limits& lim) {
    InstanceCatalog cat;
    std::vector<std::string> paths;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json") paths.push_back(e.path().string());
    std::sort(paths.begin(), paths.end());
    if (paths.empty()) return cat;
    for (const auto& p : paths) {
        json doc = parse_doc(read_file(p), p);
        if (!doc.is_object() || !doc.contains("kind"))
            throw InvalidInputError(p + ": expected a ring or module description");
        if (doc.at("kind") == "ring") {
            NamedRing nr = parse_ring_description(doc, lim);
            cat.rings.push_back({nr.name, nr.ring});
        } else {
            NamedModule nm = parse_module_description(doc, nullptr, dir, lim);
            cat.modules.push_back({"", nm.module->ring(), nm.name, nm.module});
        }
    }
    return cat;
}

int run_sweep(const SweepArgs& a) {
    Limits lim = make_limits(0, 0);
    InstanceCatalog cat = a.catalog == "default" ? generate_catalog(default_catalog_spec(lim), lim)
                                                 : load_dir_catalog(a.catalog, lim);
    SweepOptions opts;
    opts.jobs = a.jobs;
    for (const auto& id : split_csv(a.theorems)) {
        if (!find_theorem(id)) {
            std::cerr << "unknown theorem id: " << id << "\nvalid ids:";
            for (const auto& t : theorem_registry()) std::cerr << " " << t.id;
            std::cerr << "\n";
            return kInputError;
        }
        opts.theorems.push_back(id);
    }

    SweepReport rep = sweep(cat, opts, lim);

    json report = report_skeleton("sweep");
    report["catalog"] = a.catalog;
    report["finiteness_justification"] = kFinitenessJustification;
    report["summary"] = json{{"passed", rep.passed},
                             {"failed", rep.failed},
                             {"skipped", rep.skipped},
                             {"errors", rep.errors},
                             {"total", static_cast<long>(rep.verdicts.size())}};
    json vs = json::array();
    for (const auto& v : rep.verdicts) vs.push_back(theorem_json(v));
    report["verdicts"] = std::move(vs);
    report["timing"] = json{{"total_ms", rep.elapsed_ms}};

    if (!a.out.empty()) {
        std::ofstream out(a.out, std::ios::binary);
        if (!out) throw InvalidInputError("cannot write " + a.out);
        out << canonical_json(report);
        for (size_t k = 0; k < rep.failures.size(); ++k) {
            std::string path = a.out + ".failure-" + std::to_string(k) + ".json";
            std::ofstream f(path, std::ios::binary);
            if (!f) throw InvalidInputError("cannot write " + path);
            f << rep.failures[k].reproduction_json;
        }
    }

    if (a.format == "json" && a.out.empty()) {
        std::cout << canonical_json(report);
    } else {
        std::cout << "sweep: " << rep.passed << " passed, " << rep.failed << " failed, "
                  << rep.skipped << " skipped, " << rep.errors << " errors ("
                  << rep.verdicts.size() << " pairs)\n";
        for (size_t i = 0; i < rep.failures.size(); ++i)
            print_theorem_text(rep.verdicts[rep.failures[i].verdict_index]);
    }
    return rep.failed ? kFailures : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite ring/module property checker and theorem sweep harness"};
    app.require_subcommand(1);

    CheckArgs ca;
    auto* check = app.add_subcommand("check", "evaluate properties of a ring or module");
    check->require_subcommand(1);
    auto* check_ring = check->add_subcommand("ring", "check a ring description");
    check_ring->add_option("file", ca.file)->required();
    auto* check_module = check->add_subcommand("module", "check a module description");
    check_module->add_option("file", ca.file)->required();
    check_module->add_option("--ring", ca.ring_file, "ring description file");
    for (auto* sub : {check_ring, check_module}) {
        sub->add_option("--properties", ca.properties, "comma-separated property names");
        sub->add_flag("--all", ca.all, "evaluate every applicable property");
        sub->add_option("--format", ca.format)->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--limit-elements", ca.limit_elements);
        sub->add_option("--limit-submodules", ca.limit_submodules);
    }

    VerifyArgs va;
    SweepArgs sa;
    auto* verify = app.add_subcommand("verify", "check theorem instances");
    auto* sweep_cmd = verify->add_subcommand("sweep", "run a theorem sweep over a catalog");
    sweep_cmd->add_option("--catalog", sa.catalog, "\"default\" or a directory of descriptions");
    sweep_cmd->add_option("--theorem", sa.theorems, "comma-separated theorem ids (default: all)");
    sweep_cmd->add_option("--jobs", sa.jobs)->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--out", sa.out, "write the JSON report here");
    sweep_cmd->add_option("--format", sa.format)->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--theorem", va.theorem, "theorem id or \"all\"");
    verify->add_option("--ring", va.ring_file);
    verify->add_option("--module", va.module_file);
    verify->add_option("--format", va.format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (check->parsed()) {
            ca.target = check_ring->parsed() ? "ring" : "module";
            return run_check(ca);
        }
        if (sweep_cmd->parsed()) return run_sweep(sa);
        if (va.theorem.empty()) throw InvalidInputError("verify needs --theorem or the sweep subcommand");
        return run_verify(va);
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kResourceLimit;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
}
