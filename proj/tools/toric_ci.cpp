// Batch front end. Exit codes: 0 success, 2 invalid input, 3 theorem
// hypothesis violated without --assume-theorem-hypotheses, 4 internal
// inconsistency (e.g. a corrected entry dropping below zero).

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "io.hpp"

namespace tc = toric_ci;
using tc::io::ordered_json;

namespace {

int exit_for(const std::string& code) {
    if (code == "HypothesisViolated") return 3;
    if (code == "NegativeEntry" || code == "InternalInconsistency" || code == "NotHomogeneous")
        return 4;
    return 2;
}

ordered_json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw tc::invalid_input_error("cannot open " + path);
    ordered_json j = ordered_json::parse(in, nullptr, false);
    if (j.is_discarded()) throw tc::invalid_input_error(path + ": not valid JSON");
    return j;
}

void require_valid(const tc::Fan& fan) {
    tc::ValidationReport rep = tc::validate_fan(fan);
    if (!rep.valid)
        throw tc::invalid_input_error("invalid fan: " + rep.issues.front().code + ": " +
                                      rep.issues.front().message);
}

void emit(bool as_json, const ordered_json& j, const std::string& human) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << human;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---- subcommands -----------------------------------------------------------

int cmd_validate(const std::string& path, bool as_json) {
    ordered_json file = load_json(path);
    tc::Fan fan = tc::io::fan_from_json(tc::io::fan_section(file));
    tc::ValidationReport rep = tc::validate_fan(fan);

    ordered_json out = tc::io::validation_to_json(rep);
    std::string human = std::string("fan: ") + (rep.valid ? "valid" : "INVALID") + " (" +
                        std::to_string(fan.rays.size()) + " rays, " +
                        std::to_string(fan.max_cones.size()) + " maximal cones, rank " +
                        std::to_string(fan.lattice_rank) + ")\n";
    for (const auto& issue : rep.issues) human += "  " + issue.code + ": " + issue.message + "\n";

    if (rep.valid && file.is_object() && file.contains("hypersurfaces")) {
        tc::io::Problem p = tc::io::problem_from_json(file);
        as_json = as_json || p.output == "json";
        out["hypersurfaces"] = ordered_json::array();
        for (std::size_t i = 0; i < p.polys.size(); ++i) {
            tc::GroupElement deg = tc::degree_of(p.polys[i]);
            out["hypersurfaces"].push_back(
                {{"name", p.names[i]}, {"class", tc::io::group_element_to_json(deg)}});
            human += "  " + p.names[i] + ": class " + tc::io::group_element_to_string(deg) + "\n";
        }
    }
    emit(as_json, out, human);
    return rep.valid ? 0 : 2;
}

int cmd_chow(const std::string& path, bool as_json) {
    tc::Fan fan = tc::io::fan_from_json(tc::io::fan_section(load_json(path)));
    require_valid(fan);
    tc::ChowData cd = tc::chow_degree_map(fan);
    auto ring = tc::cox_ring_spec(fan, cd, "x");

    ordered_json out = tc::io::chow_to_json(cd, *ring);
    std::string human = "divisor class group: " + tc::io::group_to_string(cd.pres.group) + "\n";
    for (std::size_t i = 0; i < ring->names.size(); ++i)
        human += "  deg " + ring->names[i] + " = " +
                 tc::io::group_element_to_string(cd.var_degrees[i]) + "\n";
    emit(as_json, out, human);
    return 0;
}

int cmd_betti(const std::string& path, bool) {
    tc::Fan fan = tc::io::fan_from_json(tc::io::fan_section(load_json(path)));
    require_valid(fan);
    // compact array in both modes
    std::cout << tc::io::intvec_to_json(tc::toric_betti(fan)).dump() << "\n";
    return 0;
}

int cmd_irrelevant(const std::string& path, bool as_json) {
    tc::Fan fan = tc::io::fan_from_json(tc::io::fan_section(load_json(path)));
    require_valid(fan);
    auto ring = tc::cox_ring_spec(fan, tc::chow_degree_map(fan), "x");

    ordered_json gens = ordered_json::array();
    std::string human = "irrelevant ideal generators:\n";
    for (const tc::ExpVec& g : tc::irrelevant_generators(fan)) {
        std::string m = tc::monomial_to_string(*ring, g);
        gens.push_back(m);
        human += "  " + m + "\n";
    }
    emit(as_json, ordered_json{{"generators", gens}}, human);
    return 0;
}

int cmd_cayley(const std::string& path, bool as_json) {
    tc::io::Problem p = tc::io::problem_from_json(load_json(path));
    as_json = as_json || p.output == "json";
    tc::CayleySetup cs = tc::build_cayley(p.fan, p.polys);

    ordered_json out;
    out["s"] = cs.s;
    out["lattice_rank"] = cs.d + cs.s - 1;
    out["fan"] = cs.pe_fan ? tc::io::fan_to_json(*cs.pe_fan) : ordered_json(nullptr);
    out["grading_group"] = tc::io::group_to_string(cs.ring_R->group);
    out["degrees"] = ordered_json::object();
    for (std::size_t i = 0; i < cs.ring_R->names.size(); ++i)
        out["degrees"][cs.ring_R->names[i]] = tc::io::group_element_to_json(cs.ring_R->degrees[i]);
    out["F"] = tc::to_string(cs.F);
    out["beta"] = tc::io::group_element_to_json(cs.beta);
    out["beta0"] = tc::io::group_element_to_json(cs.beta0);

    std::string human;
    if (cs.pe_fan)
        human = "bundle fan: " + std::to_string(cs.pe_fan->rays.size()) + " rays, " +
                std::to_string(cs.pe_fan->max_cones.size()) + " maximal cones, rank " +
                std::to_string(cs.pe_fan->lattice_rank) + "\n";
    else
        human = "single hypersurface: grading extended by one level, no new fan\n";
    human += "grading group: " + tc::io::group_to_string(cs.ring_R->group) + "\n";
    for (std::size_t i = 0; i < cs.ring_R->names.size(); ++i)
        human += "  deg " + cs.ring_R->names[i] + " = " +
                 tc::io::group_element_to_string(cs.ring_R->degrees[i]) + "\n";
    human += "F = " + tc::to_string(cs.F) + "\n";
    human += "beta  = " + tc::io::group_element_to_string(cs.beta) + "\n";
    human += "beta0 = " + tc::io::group_element_to_string(cs.beta0) + "\n";
    emit(as_json, out, human);
    return 0;
}

int cmd_check_quasi_smooth(const std::string& path, bool as_json) {
    tc::io::Problem p = tc::io::problem_from_json(load_json(path));
    as_json = as_json || p.output == "json";
    require_valid(p.fan);
    tc::QuasiSmoothResult r = tc::quasi_smooth_check(p.fan, p.polys);

    ordered_json out;
    out["verdict"] = tc::to_string(r.verdict);
    if (!r.witness.empty()) out["witness"] = r.witness;
    std::string human = std::string("quasi-smooth: ") + tc::to_string(r.verdict) + "\n";
    if (!r.witness.empty()) human += "  singular locus meets the chart of " + r.witness + "\n";
    emit(as_json, out, human);
    return 0;
}

int cmd_check_nondegenerate(const std::string& path, bool as_json) {
    tc::io::Problem p = tc::io::problem_from_json(load_json(path));
    as_json = as_json || p.output == "json";
    require_valid(p.fan);
    tc::NondegenerateResult r = tc::nondegenerate_check(p.fan, p.polys);

    ordered_json out;
    out["nondegenerate"] = r.nondegenerate;
    if (!r.nondegenerate) {
        out["witness_cone"] = r.witness_cone;
        out["witness_subset"] = r.witness_subset;
    }
    std::string human = "nondegenerate: " + yes_no(r.nondegenerate) + "\n";
    if (!r.nondegenerate)
        human += "  degenerates on the stratum of rays " + tc::detail::index_list(r.witness_cone) +
                 " for hypersurface subset " + tc::detail::index_list(r.witness_subset) + "\n";
    emit(as_json, out, human);
    return 0;
}

int cmd_check_ample(const std::string& path, bool as_json) {
    tc::io::Problem p = tc::io::problem_from_json(load_json(path));
    as_json = as_json || p.output == "json";
    require_valid(p.fan);

    ordered_json rows = ordered_json::array();
    std::string human;
    for (std::size_t j = 0; j < p.polys.size(); ++j) {
        tc::GroupElement deg = tc::degree_of(p.polys[j]);
        const tc::ExpVec& rep = p.polys[j].terms.begin()->first;
        tc::IntVec divisor(rep.size());
        for (std::size_t i = 0; i < rep.size(); ++i) divisor[i] = tc::Int(rep[i]);
        tc::CartierOutcome co = tc::cartier_data(p.fan, divisor);

        ordered_json row;
        row["name"] = p.names[j];
        row["class"] = tc::io::group_element_to_json(deg);
        std::string status;
        if (!co.data) {
            status = "not Cartier";
            row["status"] = status;
            row["bad_cone"] = co.bad_cone;
        } else {
            status = tc::is_ample(p.fan, *co.data) ? "ample" : "not ample";
            row["status"] = status;
        }
        rows.push_back(row);
        human += "  " + p.names[j] + ": " + status + " (class " +
                 tc::io::group_element_to_string(deg) + ")\n";
    }
    emit(as_json, ordered_json{{"hypersurfaces", rows}}, human);
    return 0;
}

int cmd_check_membership(const std::string& path, bool as_json) {
    tc::io::Problem p = tc::io::problem_from_json(load_json(path));
    as_json = as_json || p.output == "json";
    require_valid(p.fan);
    auto gens = tc::irrelevant_generators(p.fan);

    ordered_json rows = ordered_json::array();
    std::string human;
    for (std::size_t j = 0; j < p.polys.size(); ++j) {
        bool in_b = tc::in_monomial_ideal(p.polys[j], gens);
        rows.push_back({{"name", p.names[j]}, {"in_irrelevant_ideal", in_b}});
        human += "  " + p.names[j] + ": " + (in_b ? "in" : "not in") + " the irrelevant ideal\n";
    }
    emit(as_json, ordered_json{{"hypersurfaces", rows}}, human);
    return 0;
}

std::string render_analysis(const tc::Analysis& a, const std::vector<std::string>& names) {
    std::string human;
    human += "ambient dimension " + std::to_string(a.cs.d) + ", codimension " +
             std::to_string(a.cs.s) + "\n";
    for (std::size_t j = 0; j < names.size(); ++j)
        human += "  " + names[j] + ": class " + tc::io::group_element_to_string(a.cs.alphas[j]) +
                 (a.hyp.ample_each[j] ? ", ample" : ", NOT ample") +
                 (a.hyp.in_b_each[j] ? ", in B" : ", NOT in B") + "\n";
    human += std::string("quasi-smooth: ") +
             (a.hyp.smoothness_checked ? tc::to_string(a.hyp.quasi_smooth) : "Skipped") + "\n";
    human += "nondegenerate: " + yes_no(a.hyp.nondegenerate) + "\n";
    human += std::string("method: ") + tc::to_string(a.method) + "\n";
    human += std::string("certified: ") + yes_no(a.certified) + "\n";

    if (a.empty_intersection) {
        human += "the intersection is empty\n";
        return human;
    }
    if (a.table) {
        human += "variable middle cohomology h^{p-s,d-p} for p in [" + std::to_string(a.table->s) +
                 ", " + std::to_string(a.table->d) + "]:\n";
        for (long p = a.table->s; p <= a.table->d; ++p)
            human += "  p=" + std::to_string(p) + "  " + std::to_string(a.table->entry(p)) + "\n";
        if (a.table->middle_p >= 0)
            human += "  (ambient correction " + a.table->middle_correction.get_str() +
                     " subtracted at p=" + std::to_string(a.table->middle_p) + ")\n";
    }
    if (a.diamond) {
        human += "Hodge diamond rows h[p][0..m]:\n";
        for (const auto& row : a.diamond->h) {
            human += " ";
            for (const tc::Int& v : row) human += " " + v.get_str();
            human += "\n";
        }
    }
    if (a.euler) human += "euler characteristic: " + a.euler->get_str() + "\n";
    for (const auto& [name, ok] : a.structure) human += "  " + name + ": " + yes_no(ok) + "\n";
    for (const auto& note : a.notes) human += "note: " + note + "\n";
    return human;
}

int cmd_hodge(const std::string& path, bool as_json, const std::string& method_flag, bool assume) {
    tc::io::Problem p = tc::io::problem_from_json(load_json(path));
    as_json = as_json || p.output == "json";

    std::string method = method_flag.empty() ? p.method : method_flag;
    tc::AnalysisOptions opt;
    if (method == "jacobian") opt.method = tc::Method::jacobian;
    if (method == "colon") opt.method = tc::Method::colon;
    opt.assume_hypotheses = assume;
    opt.skip_smoothness = p.checks == "skip-smoothness";

    tc::Analysis a = tc::analyze(p.fan, p.polys, opt);
    emit(as_json, tc::io::analysis_to_json(a, p.names), render_analysis(a, p.names));
    return 0;
}

int cmd_dim(const std::string& path, bool as_json, long pval, const std::string& ring_choice) {
    tc::io::Problem p = tc::io::problem_from_json(load_json(path));
    as_json = as_json || p.output == "json";
    tc::CayleySetup cs = tc::build_cayley(p.fan, p.polys);
    tc::GroupElement gamma = tc::hodge_degree(cs, pval);

    std::size_t dim = 0;
    if (ring_choice == "ambient")
        dim = tc::monomials_of_degree(*cs.ring_R, gamma).size();
    else if (ring_choice == "colon")
        dim = tc::colon_ring_dim(cs, gamma);
    else
        dim = tc::jacobian_ring_dim(cs, gamma);

    bool inside = pval >= long(cs.s) && pval <= long(cs.d);
    ordered_json out;
    out["p"] = pval;
    out["gamma"] = tc::io::group_element_to_json(gamma);
    out["ring"] = ring_choice;
    out["dimension"] = dim;
    if (!inside) out["note"] = "p outside [s, d]; not an entry of the variable table";

    std::string human = "dim at p=" + std::to_string(pval) + " (" + ring_choice +
                        " ring, degree " + tc::io::group_element_to_string(gamma) +
                        "): " + std::to_string(dim) + "\n";
    if (!inside)
        human += "  note: p outside [" + std::to_string(cs.s) + ", " + std::to_string(cs.d) +
                 "]; not an entry of the variable table\n";
    emit(as_json, out, human);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hodge numbers of complete intersections in toric varieties, in exact arithmetic"};
    app.require_subcommand(1);

    std::string input;
    bool as_json = false;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", input, "input JSON file (fan or problem)")->required();
        sub->add_flag("--json", as_json, "machine-readable JSON output");
    };

    int rc = 0;

    auto* validate = app.add_subcommand("validate", "check a fan or problem file");
    add_common(validate);
    validate->callback([&] { rc = cmd_validate(input, as_json); });

    auto* chow = app.add_subcommand("chow", "divisor class group and variable degrees");
    add_common(chow);
    chow->callback([&] { rc = cmd_chow(input, as_json); });

    auto* betti = app.add_subcommand("betti", "even Betti numbers of the toric variety");
    add_common(betti);
    betti->callback([&] { rc = cmd_betti(input, as_json); });

    auto* irrelevant = app.add_subcommand("irrelevant", "generators of the irrelevant ideal");
    add_common(irrelevant);
    irrelevant->callback([&] { rc = cmd_irrelevant(input, as_json); });

    auto* cayley = app.add_subcommand("cayley", "bundle fan, combined polynomial, and grading");
    add_common(cayley);
    cayley->callback([&] { rc = cmd_cayley(input, as_json); });

    auto* check = app.add_subcommand("check", "individual hypothesis checks");
    check->require_subcommand(1);
    auto* qs = check->add_subcommand("quasi-smooth", "singularities off the irrelevant locus");
    add_common(qs);
    qs->callback([&] { rc = cmd_check_quasi_smooth(input, as_json); });
    auto* nd = check->add_subcommand("nondegenerate", "transversality on every torus stratum");
    add_common(nd);
    nd->callback([&] { rc = cmd_check_nondegenerate(input, as_json); });
    auto* amp = check->add_subcommand("ample", "Cartier and ampleness of each class");
    add_common(amp);
    amp->callback([&] { rc = cmd_check_ample(input, as_json); });
    auto* mem = check->add_subcommand("membership", "irrelevant-ideal membership of each equation");
    add_common(mem);
    mem->callback([&] { rc = cmd_check_membership(input, as_json); });

    auto* hodge = app.add_subcommand("hodge", "full Hodge analysis of the intersection");
    add_common(hodge);
    std::string method;
    hodge->add_option("--method", method, "auto | jacobian | colon (default from the file)")
        ->check(CLI::IsMember({"auto", "jacobian", "colon"}));
    bool assume = false;
    hodge->add_flag("--assume-theorem-hypotheses", assume,
                    "compute past failed checks; output is stamped UNCERTIFIED");
    hodge->callback([&] { rc = cmd_hodge(input, as_json, method, assume); });

    auto* dim = app.add_subcommand("dim", "one graded piece of a quotient ring");
    add_common(dim);
    long pval = 0;
    dim->add_option("--p", pval, "index p of the degree (d+s-p)*beta - beta0")->required();
    std::string ring_choice = "jacobian";
    dim->add_option("--ring", ring_choice, "jacobian | colon | ambient")
        ->check(CLI::IsMember({"jacobian", "colon", "ambient"}));
    dim->callback([&] { rc = cmd_dim(input, as_json, pval, ring_choice); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << tc::io::error_to_json("InvalidUsage", e.what()).dump() << "\n";
        return 2;
    } catch (const tc::toric_error& e) {
        std::cerr << tc::io::error_to_json(e.code(), e.what()).dump() << "\n";
        return exit_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << tc::io::error_to_json("InternalInconsistency", e.what()).dump() << "\n";
        return 4;
    }
    return rc;
}
