#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fintop/fintop.hpp"

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw fintop::ValidationError(fintop::ErrorKind::bad_input,
                                      "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw fintop::ValidationError(fintop::ErrorKind::bad_input,
                                      path + ": " + e.what());
    }
    return j;
}

struct NamedSpace {
    std::vector<std::string> names;
    fintop::FiniteSpace space;
};

// Space files load directly; poset files load as their order topology.
NamedSpace load_space_like(const std::string& path) {
    const json j = load_json(path);
    switch (fintop::input_kind(j)) {
    case fintop::InputKind::space: {
        fintop::LabeledSpace ls = fintop::parse_space(j);
        return {std::move(ls.points), std::move(ls.space)};
    }
    case fintop::InputKind::poset: {
        fintop::LabeledPoset lp = fintop::parse_poset(j);
        return {std::move(lp.elements), fintop::order_topology(lp.poset)};
    }
    default:
        throw fintop::ValidationError(fintop::ErrorKind::bad_input,
                                      path + ": expected a space or poset");
    }
}

// Poset files load directly; space files must be T0.
fintop::LabeledPoset load_poset_like(const std::string& path) {
    const json j = load_json(path);
    switch (fintop::input_kind(j)) {
    case fintop::InputKind::poset:
        return fintop::parse_poset(j);
    case fintop::InputKind::space: {
        fintop::LabeledSpace ls = fintop::parse_space(j);
        if (!fintop::is_t0(ls.space))
            throw fintop::ValidationError(
                fintop::ErrorKind::bad_input,
                path + ": space is not T0; apply t0 first");
        fintop::LabeledPoset lp;
        lp.elements = std::move(ls.points);
        lp.poset = fintop::Poset(fintop::specialization_preorder(ls.space));
        return lp;
    }
    default:
        throw fintop::ValidationError(fintop::ErrorKind::bad_input,
                                      path + ": expected a poset or space");
    }
}

std::string cycle_string(const fintop::Perm& p,
                         const std::vector<std::string>& names) {
    const auto cycles = p.cycles();
    if (cycles.empty()) return "()";
    std::ostringstream out;
    for (const auto& cyc : cycles) {
        out << "(";
        for (std::size_t i = 0; i < cyc.size(); ++i)
            out << (i ? " " : "") << names[cyc[i]];
        out << ")";
    }
    return out.str();
}

json perm_images(const fintop::Perm& p) {
    json a = json::array();
    for (int i = 0; i < p.degree(); ++i) a.push_back(p[i]);
    return a;
}

json group_to_json(const fintop::PermGroup& g,
                   const std::vector<std::string>& names) {
    json j;
    j["order"] = g.order();
    j["degree"] = g.degree();
    j["names"] = names;
    json gens = json::array();
    for (const fintop::Perm& s : g.generators()) gens.push_back(perm_images(s));
    j["generators"] = std::move(gens);
    return j;
}

void print_group_text(const fintop::PermGroup& g,
                      const std::vector<std::string>& names, std::ostream& out) {
    out << "order " << g.order() << "\n";
    for (const fintop::Perm& s : g.generators())
        out << "generator " << cycle_string(s, names) << "\n";
}

std::vector<std::string> class_rep_names(const fintop::QuotientMap& q,
                                         const std::vector<std::string>& names) {
    std::vector<std::string> reps;
    for (const auto& cls : q.classes) reps.push_back(names[cls[0]]);
    return reps;
}

json poset_json(const fintop::Poset& p, const std::vector<std::string>& names) {
    return fintop::poset_to_json({names, p});
}

std::string open_set_string(std::uint32_t mask,
                            const std::vector<std::string>& names) {
    std::string s = "{";
    bool first = true;
    for (std::size_t x = 0; x < names.size(); ++x)
        if ((mask >> x) & 1u) {
            if (!first) s += ",";
            s += names[x];
            first = false;
        }
    return s + "}";
}

struct Output {
    bool as_json = false;
    void emit(const json& j, const std::string& text) const {
        if (as_json)
            std::cout << j.dump(2) << "\n";
        else
            std::cout << text;
    }
};

void cmd_t0(const Output& out, const std::string& file) {
    const NamedSpace ns = load_space_like(file);
    const auto [quotient, q] = fintop::t0_quotient(ns.space);
    const std::vector<std::string> reps = class_rep_names(q, ns.names);

    std::ostringstream text;
    text << "points " << ns.space.n() << "\n"
         << "classes " << q.classes.size() << "\n";
    for (std::size_t c = 0; c < q.classes.size(); ++c) {
        text << "class {";
        for (std::size_t i = 0; i < q.classes[c].size(); ++i)
            text << (i ? ", " : "") << ns.names[q.classes[c][i]];
        text << "} weight " << q.weights[c] << "\n";
    }
    for (const auto& [b, a] : fintop::cover_relations(quotient))
        text << "cover " << reps[b] << " < " << reps[a] << "\n";

    json j;
    json classes = json::array();
    for (const auto& cls : q.classes) {
        json one = json::array();
        for (int x : cls) one.push_back(ns.names[x]);
        classes.push_back(std::move(one));
    }
    j["classes"] = std::move(classes);
    j["weights"] = q.weights;
    j["quotient"] = poset_json(quotient, reps);
    out.emit(j, text.str());
}

void cmd_group(const Output& out, const std::string& file, const std::string& which) {
    const NamedSpace ns = load_space_like(file);
    fintop::PermGroup g;
    std::vector<std::string> names = ns.names;
    if (which == "homeo") {
        g = fintop::homeo_group(ns.space);
    } else if (which == "kernel") {
        g = fintop::kernel_subgroup(ns.space);
    } else {
        g = fintop::mod_group(ns.space);
        names = class_rep_names(fintop::indistinguishability_classes(ns.space),
                                ns.names);
    }
    std::ostringstream text;
    print_group_text(g, names, text);
    out.emit(group_to_json(g, names), text.str());
}

void cmd_check_thm1(const Output& out, const std::string& file) {
    const NamedSpace ns = load_space_like(file);
    const fintop::Theorem1Report r = fintop::theorem1_check(ns.space);
    const std::vector<std::string> reps =
        class_rep_names(fintop::indistinguishability_classes(ns.space), ns.names);

    std::ostringstream text;
    text << "mod order " << r.mod_x.order() << "\n"
         << "aut order " << r.aut_t0.order() << "\n"
         << "isomorphic " << (r.isomorphic ? "true" : "false") << "\n";
    if (r.witness) text << "witness " << cycle_string(*r.witness, reps) << "\n";

    json j;
    j["mod_order"] = r.mod_x.order();
    j["aut_order"] = r.aut_t0.order();
    j["isomorphic"] = r.isomorphic;
    j["classes"] = reps;
    j["witness"] = r.witness ? perm_images(*r.witness) : json();
    out.emit(j, text.str());
}

void cmd_sweep(const Output& out, int n, int witness_cap, int jobs) {
    const fintop::SweepReport r = fintop::sweep_theorem1(n, witness_cap, jobs);
    std::ostringstream text;
    text << "n " << r.n << "\n"
         << "total " << r.total_spaces << "\n"
         << "t0 " << r.t0_count << "\n"
         << "holds " << r.iso_holds << "\n"
         << "fails " << r.iso_fails << "\n";
    const std::vector<std::string> names =
        fintop::numbered_names(n);
    for (const auto& [space, rep] : r.fail_witnesses) {
        text << "fail opens";
        for (std::uint32_t m : space.opens())
            text << " " << open_set_string(m, names);
        text << " mod " << rep.mod_x.order() << " aut " << rep.aut_t0.order() << "\n";
    }

    json j;
    j["n"] = r.n;
    j["total"] = r.total_spaces;
    j["t0"] = r.t0_count;
    j["holds"] = r.iso_holds;
    j["fails"] = r.iso_fails;
    json fails = json::array();
    for (const auto& [space, rep] : r.fail_witnesses) {
        json one;
        one["space"] = fintop::space_to_json({names, space});
        one["mod_order"] = rep.mod_x.order();
        one["aut_order"] = rep.aut_t0.order();
        one["witness"] = rep.witness ? perm_images(*rep.witness) : json();
        fails.push_back(std::move(one));
    }
    j["fail_witnesses"] = std::move(fails);
    out.emit(j, text.str());
}

void cmd_realize(const Output& out, const std::string& group_file) {
    const fintop::GroupSpec g = fintop::parse_group(load_json(group_file));
    const fintop::Realization r = fintop::realize_group(g);
    const char* route =
        r.route == fintop::RealizeRoute::direct ? "direct" : "pipeline";

    std::ostringstream text;
    text << "group order " << g.order << "\n"
         << "route " << route << "\n"
         << "poset size " << r.poset.n() << "\n"
         << "aut order " << r.aut.order() << "\n"
         << "verified true\n";

    json j;
    j["group_order"] = g.order;
    j["route"] = route;
    j["aut_order"] = r.aut.order();
    j["poset"] = poset_json(r.poset, fintop::numbered_names(r.poset.n()));
    out.emit(j, text.str());
}

void cmd_core(const Output& out, const std::string& file) {
    const fintop::LabeledPoset lp = load_poset_like(file);
    const fintop::CoreResult r = fintop::core(lp.poset);
    std::vector<std::string> kept_names;
    for (int i : r.kept) kept_names.push_back(lp.elements[i]);

    std::ostringstream text;
    text << "core size " << r.core.n() << "\n" << "kept";
    for (const std::string& s : kept_names) text << " " << s;
    text << "\n";
    for (const auto& [b, a] : fintop::cover_relations(r.core))
        text << "cover " << kept_names[b] << " < " << kept_names[a] << "\n";

    json j;
    j["kept"] = kept_names;
    j["poset"] = poset_json(r.core, kept_names);
    out.emit(j, text.str());
}

void cmd_complex(const Output& out, const std::string& file) {
    const fintop::LabeledPoset lp = load_poset_like(file);
    const fintop::SimplicialComplex k = fintop::order_complex(lp.poset);
    const std::vector<long long> counts = k.face_counts();
    const long long chi = fintop::euler_characteristic(k);
    const std::vector<long long> betti = fintop::betti_gf2(k);

    std::ostringstream text;
    text << "dim " << k.dim() << "\n" << "faces";
    for (long long c : counts) text << " " << c;
    text << "\n" << "euler " << chi << "\n" << "betti";
    for (long long b : betti) text << " " << b;
    text << "\n";

    json j;
    j["dim"] = k.dim();
    j["face_counts"] = counts;
    j["euler"] = chi;
    j["betti"] = betti;
    out.emit(j, text.str());
}

void cmd_enumerate(const Output& out, int n, bool t0_only) {
    const std::vector<fintop::FiniteSpace> spaces =
        fintop::enumerate_topologies(n, t0_only);
    const long long unlabeled = fintop::count_unlabeled_spaces(spaces);

    std::ostringstream text;
    text << "n " << n << "\n"
         << "labeled " << spaces.size() << "\n"
         << "unlabeled " << unlabeled << "\n";

    json j;
    j["n"] = n;
    j["t0"] = t0_only;
    j["labeled"] = spaces.size();
    j["unlabeled"] = unlabeled;
    out.emit(j, text.str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-space mapping class group toolkit"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string file;
    int n = 0;
    int witness_cap = 10;
    int jobs = 1;
    bool t0_only = false;
    std::string group_file;

    CLI::App* t0 = app.add_subcommand("t0", "indistinguishability classes and quotient");
    t0->add_option("file", file)->required();
    CLI::App* homeo = app.add_subcommand("homeo", "homeomorphism group");
    homeo->add_option("file", file)->required();
    CLI::App* mod = app.add_subcommand("mod", "mapping class group");
    mod->add_option("file", file)->required();
    CLI::App* kernel = app.add_subcommand("kernel", "isotopically trivial subgroup");
    kernel->add_option("file", file)->required();
    CLI::App* thm1 = app.add_subcommand("check-thm1", "compare Mod with Aut of the quotient");
    thm1->add_option("file", file)->required();
    CLI::App* sweep = app.add_subcommand("sweep", "run the comparison over all spaces");
    sweep->add_option("--n", n, "point count")->required();
    sweep->add_option("--witness-cap", witness_cap, "max failures reported");
    sweep->add_option("--jobs", jobs, "worker threads");
    CLI::App* realize = app.add_subcommand("realize", "poset with prescribed mapping class group");
    realize->add_option("--group", group_file, "group file")->required();
    CLI::App* core = app.add_subcommand("core", "beat-point-free reduction");
    core->add_option("file", file)->required();
    CLI::App* complex = app.add_subcommand("complex", "order complex invariants");
    complex->add_option("file", file)->required();
    CLI::App* enumerate = app.add_subcommand("enumerate", "count labeled topologies");
    enumerate->add_option("--n", n, "point count")->required();
    enumerate->add_flag("--t0", t0_only, "only T0 topologies");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    Output out{format == "json"};
    try {
        if (*t0) cmd_t0(out, file);
        if (*homeo) cmd_group(out, file, "homeo");
        if (*mod) cmd_group(out, file, "mod");
        if (*kernel) cmd_group(out, file, "kernel");
        if (*thm1) cmd_check_thm1(out, file);
        if (*sweep) cmd_sweep(out, n, witness_cap, jobs);
        if (*realize) cmd_realize(out, group_file);
        if (*core) cmd_core(out, file);
        if (*complex) cmd_complex(out, file);
        if (*enumerate) cmd_enumerate(out, n, t0_only);
    } catch (const fintop::BoundError& e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
        return 2;
    } catch (const fintop::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
