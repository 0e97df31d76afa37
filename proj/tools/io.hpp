#pragma once

#include <set>
#include <string>

#include "json.hpp"
#include "toric_ci/hodge.hpp"

namespace toric_ci::io {

using ordered_json = nlohmann::ordered_json;

// ---- input ----------------------------------------------------------------

inline Int int_from_json(const ordered_json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) {
        try {
            return parse_int(j.get<std::string>());
        } catch (...) {
        }
    }
    throw invalid_input_error(where + ": expected an integer");
}

inline Fan fan_from_json(const ordered_json& j) {
    if (!j.is_object()) throw invalid_input_error("fan: expected an object");
    for (const char* key : {"lattice_rank", "rays", "max_cones"})
        if (!j.contains(key)) throw invalid_input_error(std::string("fan: missing \"") + key + "\"");

    Fan fan;
    if (!j["lattice_rank"].is_number_integer() || j["lattice_rank"].get<long long>() < 1)
        throw invalid_input_error("fan.lattice_rank: expected a positive integer");
    fan.lattice_rank = j["lattice_rank"].get<std::size_t>();

    if (!j["rays"].is_array() || j["rays"].empty())
        throw invalid_input_error("fan.rays: expected a nonempty array");
    for (std::size_t i = 0; i < j["rays"].size(); ++i) {
        const auto& row = j["rays"][i];
        std::string where = "fan.rays[" + std::to_string(i) + "]";
        if (!row.is_array() || row.size() != fan.lattice_rank)
            throw invalid_input_error(where + ": expected " + std::to_string(fan.lattice_rank) +
                                      " coordinates");
        IntVec ray;
        for (std::size_t c = 0; c < row.size(); ++c)
            ray.push_back(int_from_json(row[c], where + "[" + std::to_string(c) + "]"));
        fan.rays.push_back(std::move(ray));
    }

    if (!j["max_cones"].is_array() || j["max_cones"].empty())
        throw invalid_input_error("fan.max_cones: expected a nonempty array");
    for (std::size_t i = 0; i < j["max_cones"].size(); ++i) {
        const auto& row = j["max_cones"][i];
        std::string where = "fan.max_cones[" + std::to_string(i) + "]";
        if (!row.is_array() || row.empty()) throw invalid_input_error(where + ": expected ray indices");
        std::vector<int> cone;
        for (const auto& v : row) {
            if (!v.is_number_integer() || v.get<long long>() < 0 ||
                v.get<unsigned long long>() >= fan.rays.size())
                throw invalid_input_error(where + ": ray index out of range");
            cone.push_back(v.get<int>());
        }
        fan.max_cones.push_back(std::move(cone));
    }
    return fan;
}

struct Problem {
    Fan fan;
    std::shared_ptr<const RingSpec> ring;
    std::vector<std::string> names;
    std::vector<MultiPoly> polys;
    std::string method = "auto";   // auto | jacobian | colon
    std::string checks = "full";   // full | skip-smoothness
    std::string output = "table";  // table | json
};

// accepts either a problem file or a bare fan file (fan-only commands)
inline ordered_json fan_section(const ordered_json& j) {
    if (j.is_object() && j.contains("fan")) return j["fan"];
    return j;
}

inline Problem problem_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("fan"))
        throw invalid_input_error("problem: expected an object with a \"fan\" entry");
    Problem p;
    p.fan = fan_from_json(j["fan"]);

    if (!j.contains("hypersurfaces") || !j["hypersurfaces"].is_array() || j["hypersurfaces"].empty())
        throw invalid_input_error("problem.hypersurfaces: expected a nonempty array");

    p.ring = cox_ring_spec(p.fan, chow_degree_map(p.fan), "x");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < j["hypersurfaces"].size(); ++i) {
        const auto& h = j["hypersurfaces"][i];
        std::string where = "problem.hypersurfaces[" + std::to_string(i) + "]";
        if (!h.is_object() || !h.contains("polynomial") || !h["polynomial"].is_string())
            throw invalid_input_error(where + ": expected {\"name\", \"polynomial\"}");
        std::string name = h.contains("name") && h["name"].is_string()
                               ? h["name"].get<std::string>()
                               : "f" + std::to_string(i + 1);
        if (!seen.insert(name).second)
            throw invalid_input_error(where + ": duplicate name \"" + name + "\"");
        p.names.push_back(name);
        p.polys.push_back(parse_polynomial(p.ring, h["polynomial"].get<std::string>()));
    }

    if (j.contains("options")) {
        const auto& o = j["options"];
        if (!o.is_object()) throw invalid_input_error("problem.options: expected an object");
        auto pick = [&](const char* key, std::string& slot, std::initializer_list<const char*> allowed) {
            if (!o.contains(key)) return;
            if (!o[key].is_string())
                throw invalid_input_error(std::string("problem.options.") + key + ": expected a string");
            std::string v = o[key].get<std::string>();
            for (const char* a : allowed)
                if (v == a) {
                    slot = v;
                    return;
                }
            throw invalid_input_error(std::string("problem.options.") + key + ": unknown value \"" + v +
                                      "\"");
        };
        pick("method", p.method, {"auto", "jacobian", "colon"});
        pick("checks", p.checks, {"full", "skip-smoothness"});
        pick("output", p.output, {"table", "json"});
    }
    return p;
}

// ---- output ---------------------------------------------------------------

inline ordered_json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return ordered_json(v.get_si());
    return ordered_json(v.get_str());
}

inline ordered_json intvec_to_json(const IntVec& v) {
    ordered_json arr = ordered_json::array();
    for (const Int& x : v) arr.push_back(int_to_json(x));
    return arr;
}

inline ordered_json rat_to_json(const Rat& v) { return ordered_json(to_string(v)); }

inline ordered_json fan_to_json(const Fan& fan) {
    ordered_json j;
    j["lattice_rank"] = fan.lattice_rank;
    j["rays"] = ordered_json::array();
    for (const auto& r : fan.rays) j["rays"].push_back(intvec_to_json(r));
    j["max_cones"] = fan.max_cones;
    return j;
}

inline ordered_json validation_to_json(const ValidationReport& rep) {
    ordered_json j;
    j["valid"] = rep.valid;
    j["issues"] = ordered_json::array();
    for (const auto& issue : rep.issues)
        j["issues"].push_back({{"code", issue.code}, {"message", issue.message}});
    return j;
}

inline ordered_json group_element_to_json(const GroupElement& e) {
    ordered_json j;
    j["free"] = intvec_to_json(e.free);
    if (!e.torsion.empty()) j["torsion"] = intvec_to_json(e.torsion);
    return j;
}

inline std::string group_to_string(const AbelianGroup& g) {
    std::string out;
    if (g.free_rank == 1)
        out = "Z";
    else if (g.free_rank > 1)
        out = "Z^" + std::to_string(g.free_rank);
    for (const Int& m : g.torsion) out += (out.empty() ? "Z/" : " x Z/") + m.get_str();
    if (out.empty()) out = "0";
    return out;
}

inline std::string group_element_to_string(const GroupElement& e) {
    std::string out = "(";
    for (std::size_t i = 0; i < e.free.size(); ++i) out += (i ? ", " : "") + e.free[i].get_str();
    if (!e.torsion.empty()) {
        out += "; ";
        for (std::size_t i = 0; i < e.torsion.size(); ++i)
            out += (i ? ", " : "") + e.torsion[i].get_str();
    }
    return out + ")";
}

inline ordered_json chow_to_json(const ChowData& cd, const RingSpec& ring) {
    ordered_json j;
    j["group"] = group_to_string(cd.pres.group);
    j["free_rank"] = cd.pres.group.free_rank;
    j["torsion"] = intvec_to_json(cd.pres.group.torsion);
    j["degrees"] = ordered_json::object();
    for (std::size_t i = 0; i < ring.names.size(); ++i)
        j["degrees"][ring.names[i]] = group_element_to_json(cd.var_degrees[i]);
    return j;
}

inline ordered_json table_to_json(const VarHodgeTable& t) {
    ordered_json j;
    j["p_min"] = t.s;
    j["p_max"] = t.d;
    j["entries"] = t.entries;
    j["method"] = to_string(t.method);
    if (t.middle_p >= 0) {
        j["middle_p"] = t.middle_p;
        j["middle_correction"] = int_to_json(t.middle_correction);
    }
    return j;
}

inline ordered_json diamond_to_json(const HodgeDiamond& d) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : d.h) rows.push_back(intvec_to_json(row));
    return rows;
}

inline ordered_json checks_to_json(const HypothesisReport& hyp, const std::vector<std::string>& names) {
    ordered_json j;
    j["quasi_smooth"] = hyp.smoothness_checked ? to_string(hyp.quasi_smooth) : "Skipped";
    if (!hyp.qs_witness.empty()) j["quasi_smooth_witness"] = hyp.qs_witness;
    j["nondegenerate"] = hyp.nondegenerate;
    if (!hyp.nondegenerate) {
        j["degenerate_stratum"] = hyp.nd_cone;
        j["degenerate_subset"] = hyp.nd_subset;
    }
    j["ample"] = ordered_json::object();
    j["irrelevant_membership"] = ordered_json::object();
    for (std::size_t i = 0; i < names.size(); ++i) {
        j["ample"][names[i]] = bool(hyp.ample_each[i]);
        j["irrelevant_membership"][names[i]] = bool(hyp.in_b_each[i]);
    }
    return j;
}

inline ordered_json analysis_to_json(const Analysis& a, const std::vector<std::string>& names) {
    ordered_json j;
    j["dimension"] = long(a.cs.d) - long(a.cs.s);
    j["hypersurfaces"] = names;
    ordered_json degs = ordered_json::array();
    for (const auto& alpha : a.cs.alphas) degs.push_back(group_element_to_json(alpha));
    j["classes"] = degs;
    j["checks"] = checks_to_json(a.hyp, names);
    j["method"] = to_string(a.method);
    j["certified"] = a.certified;
    j["empty_intersection"] = a.empty_intersection;
    j["variable_table"] = a.table ? table_to_json(*a.table) : ordered_json(nullptr);
    j["hodge_diamond"] = a.diamond ? diamond_to_json(*a.diamond) : ordered_json(nullptr);
    j["euler_characteristic"] = a.euler ? int_to_json(*a.euler) : ordered_json(nullptr);
    j["structure"] = ordered_json::object();
    for (const auto& [name, ok] : a.structure) j["structure"][name] = ok;
    j["notes"] = a.notes;
    return j;
}

inline ordered_json error_to_json(const std::string& code, const std::string& message) {
    ordered_json j;
    j["error"] = {{"code", code}, {"message", message}};
    return j;
}

}  // namespace toric_ci::io
