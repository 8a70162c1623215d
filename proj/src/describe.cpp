#include "modreg/describe.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace modreg {

namespace {

void require_keys(const json& obj, std::initializer_list<const char*> allowed,
                  std::initializer_list<const char*> required, const std::string& where) {
    if (!obj.is_object()) throw InvalidInputError(where + ": expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) known = true;
        if (!known) throw InvalidInputError(where + ": unknown key \"" + it.key() + "\"");
    }
    for (const char* k : required)
        if (!obj.contains(k)) throw InvalidInputError(where + ": missing key \"" + k + "\"");
}

long get_long(const json& obj, const char* key, const std::string& where) {
    const auto& v = obj.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw InvalidInputError(where + ": \"" + key + "\" must be a non-negative integer");
    return v.get<long>();
}

std::vector<long> get_long_vec(const json& v, const std::string& where) {
    if (!v.is_array()) throw InvalidInputError(where + ": expected an array of integers");
    std::vector<long> out;
    for (const auto& e : v) {
        if (!e.is_number_integer() || e.get<long long>() < 0)
            throw InvalidInputError(where + ": entries must be non-negative integers");
        out.push_back(e.get<long>());
    }
    return out;
}

RingPtr build_ring(const json& construct, const Limits& limits, const std::string& where) {
    require_keys(construct, {"recipe", "n", "p", "monic", "parts", "q", "size",
                             "additive_orders", "mul_table", "one"},
                 {"recipe"}, where);
    const std::string recipe = construct.at("recipe").get<std::string>();
    auto only = [&](std::initializer_list<const char*> params) {
        std::vector<const char*> allowed{"recipe"};
        allowed.insert(allowed.end(), params.begin(), params.end());
        for (auto it = construct.begin(); it != construct.end(); ++it) {
            bool ok = false;
            for (const char* k : allowed)
                if (it.key() == k) ok = true;
            if (!ok)
                throw InvalidInputError(where + ": key \"" + it.key() + "\" does not belong to recipe " +
                                        recipe);
        }
        for (const char* k : params)
            if (!construct.contains(k)) throw InvalidInputError(where + ": missing key \"" + std::string(k) + "\"");
    };
    if (recipe == "zmod") {
        only({"n"});
        return FiniteRing::zmod(get_long(construct, "n", where), limits);
    }
    if (recipe == "poly_quotient") {
        only({"p", "monic"});
        return FiniteRing::poly_quotient(get_long(construct, "p", where),
                                         get_long_vec(construct.at("monic"), where), limits);
    }
    if (recipe == "product") {
        only({"parts"});
        const auto& parts = construct.at("parts");
        if (!parts.is_array()) throw InvalidInputError(where + ": \"parts\" must be an array");
        std::vector<RingPtr> rs;
        for (size_t i = 0; i < parts.size(); ++i)
            rs.push_back(build_ring(parts[i], limits, where + ".parts[" + std::to_string(i) + "]"));
        return FiniteRing::product(std::move(rs), limits);
    }
    if (recipe == "upper_triangular") {
        only({"q", "size"});
        return FiniteRing::upper_triangular(get_long(construct, "q", where),
                                            static_cast<int>(get_long(construct, "size", where)), limits);
    }
    if (recipe == "raw") {
        only({"additive_orders", "mul_table", "one"});
        const auto& mt = construct.at("mul_table");
        if (!mt.is_array()) throw InvalidInputError(where + ": \"mul_table\" must be an array");
        std::vector<std::vector<std::vector<long>>> table;
        for (const auto& row : mt) {
            if (!row.is_array()) throw InvalidInputError(where + ": mul_table rows must be arrays");
            std::vector<std::vector<long>> r;
            for (const auto& cell : row) r.push_back(get_long_vec(cell, where));
            table.push_back(std::move(r));
        }
        return FiniteRing::from_structure(get_long_vec(construct.at("additive_orders"), where),
                                          std::move(table), get_long_vec(construct.at("one"), where),
                                          limits);
    }
    throw InvalidInputError(where + ": unknown ring recipe \"" + recipe + "\"");
}

ModulePtr build_module(const json& construct, const RingPtr& R, const Limits& limits,
                       const std::string& where) {
    require_keys(construct,
                 {"recipe", "invariant_factors", "action", "ideal_gens", "parts"}, {"recipe"}, where);
    const std::string recipe = construct.at("recipe").get<std::string>();
    if (recipe == "regular") {
        for (auto it = construct.begin(); it != construct.end(); ++it)
            if (it.key() != "recipe")
                throw InvalidInputError(where + ": recipe regular takes no parameters");
        return FiniteModule::regular(R, limits);
    }
    if (recipe == "from_action") {
        if (!construct.contains("invariant_factors") || !construct.contains("action"))
            throw InvalidInputError(where + ": from_action needs invariant_factors and action");
        const auto& act = construct.at("action");
        if (!act.is_array()) throw InvalidInputError(where + ": \"action\" must be an array");
        std::vector<std::vector<std::vector<long>>> action;
        for (const auto& mat : act) {
            if (!mat.is_array()) throw InvalidInputError(where + ": action matrices must be arrays");
            std::vector<std::vector<long>> m;
            for (const auto& row : mat) m.push_back(get_long_vec(row, where));
            action.push_back(std::move(m));
        }
        return FiniteModule::from_action(R, get_long_vec(construct.at("invariant_factors"), where),
                                         std::move(action), limits);
    }
    if (recipe == "cyclic_quotient") {
        if (!construct.contains("ideal_gens"))
            throw InvalidInputError(where + ": cyclic_quotient needs ideal_gens");
        std::vector<Elem> gens;
        for (long g : get_long_vec(construct.at("ideal_gens"), where)) {
            if (g >= R->size()) throw InvalidInputError(where + ": ideal generator out of range");
            gens.push_back(static_cast<Elem>(g));
        }
        return cyclic_quotient(R, right_ideal_generated(*R, gens).elems, limits);
    }
    if (recipe == "direct_sum") {
        if (!construct.contains("parts")) throw InvalidInputError(where + ": direct_sum needs parts");
        const auto& parts = construct.at("parts");
        if (!parts.is_array() || parts.empty())
            throw InvalidInputError(where + ": \"parts\" must be a non-empty array");
        std::vector<ModulePtr> ms;
        for (size_t i = 0; i < parts.size(); ++i)
            ms.push_back(build_module(parts[i], R, limits, where + ".parts[" + std::to_string(i) + "]"));
        return FiniteModule::direct_sum(std::move(ms), limits);
    }
    throw InvalidInputError(where + ": unknown module recipe \"" + recipe + "\"");
}

}  // namespace

NamedRing parse_ring_description(const json& doc, const Limits& limits) {
    require_keys(doc, {"kind", "name", "construct"}, {"kind", "construct"}, "ring description");
    if (doc.at("kind") != "ring")
        throw InvalidInputError("ring description: kind must be \"ring\"");
    NamedRing out;
    out.name = doc.value("name", std::string("ring"));
    out.ring = build_ring(doc.at("construct"), limits, "ring construct");
    return out;
}

NamedModule parse_module_description(const json& doc, const RingPtr& ring,
                                     const std::string& base_dir, const Limits& limits) {
    require_keys(doc, {"kind", "name", "ring", "construct"}, {"kind", "construct"},
                 "module description");
    if (doc.at("kind") != "module")
        throw InvalidInputError("module description: kind must be \"module\"");
    RingPtr R = ring;
    if (!R) {
        if (!doc.contains("ring"))
            throw InvalidInputError("module description: no ring given (inline, path, or --ring)");
        const auto& rref = doc.at("ring");
        if (rref.is_string()) {
            std::string path = rref.get<std::string>();
            if (!path.empty() && path[0] != '/' && !base_dir.empty()) path = base_dir + "/" + path;
            R = parse_ring_description(load_json_file(path), limits).ring;
        } else {
            R = parse_ring_description(rref, limits).ring;
        }
    }
    NamedModule out;
    out.name = doc.value("name", std::string("module"));
    out.module = build_module(doc.at("construct"), R, limits, "module construct");
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    json j = json::parse(buf.str(), nullptr, false);
    if (j.is_discarded()) throw InvalidInputError("malformed JSON in " + path);
    return j;
}

json ring_description(const FiniteRing& R, const std::string& name) {
    json mul = json::array();
    for (int i = 0; i < R.gen_count(); ++i) {
        json row = json::array();
        for (int j = 0; j < R.gen_count(); ++j)
            row.push_back(R.coeffs(R.mul(R.basis_elem(i), R.basis_elem(j))));
        mul.push_back(std::move(row));
    }
    return json{{"kind", "ring"},
                {"name", name},
                {"construct", json{{"recipe", "raw"},
                                   {"additive_orders", R.additive_orders()},
                                   {"mul_table", std::move(mul)},
                                   {"one", R.coeffs(R.one())}}}};
}

json module_description(const FiniteModule& M, const std::string& name) {
    const FiniteRing& R = *M.ring();
    json action = json::array();
    for (int i = 0; i < R.gen_count(); ++i) {
        json mat = json::array();
        for (int p = 0; p < M.gen_count(); ++p)
            mat.push_back(M.coeffs(M.act_basis(M.gen_elem(p), i)));
        action.push_back(std::move(mat));
    }
    return json{{"kind", "module"},
                {"name", name},
                {"ring", ring_description(R, name + ".ring")},
                {"construct", json{{"recipe", "from_action"},
                                   {"invariant_factors", M.invariant_factors()},
                                   {"action", std::move(action)}}}};
}

std::string canonical_json(const json& j) { return j.dump(2) + "\n"; }

std::string content_digest(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

const char* tool_version() { return "modreg 1.0.0"; }

}  // namespace modreg
