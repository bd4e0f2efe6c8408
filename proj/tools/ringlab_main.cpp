// ringlab: exact arithmetic and verification for finite commutative rings.
//
// Subcommands: parse, analyze, lattice, cohn, verify, reproduce.
// Exit codes: 0 all confirmed, 2 counterexample found, 3 syntax/usage error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ringlab/ringlab.hpp"

using namespace ringlab;
using nlohmann::json;

namespace {

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path, std::ios::binary);
        out << j.dump(2) << "\n";
    }
}

std::vector<index_t> parse_gens(const RingPtr& R, const std::string& text) {
    std::vector<index_t> gens;
    if (text.empty()) return gens;
    // comma-split at depth zero, then resolve each literal
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) parts.push_back(cur);
    for (const auto& p : parts) {
        detail::Cursor c(p);
        gens.push_back(resolve_element(R, detail::parse_elem(c)));
    }
    return gens;
}

json lattice_json(const SubringLattice& lat) {
    json members = json::array();
    for (std::size_t i = 0; i < lat.members.size(); ++i) {
        json covers = json::array();
        for (std::size_t j = 0; j < lat.members.size(); ++j)
            if (lat.covers(i, j)) covers.push_back(j);
        json elems = json::array();
        for (index_t x : lat.members[i]) elems.push_back(lat.ambient->format_element(x));
        json node{{"index", i},
                  {"size", lat.members[i].size()},
                  {"elements", elems},
                  {"covers", covers}};
        members.push_back(node);
    }
    return json{{"ambient", lat.ambient->name()},
                {"base", lat.base_index},
                {"top", lat.top_index},
                {"members", members}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact finite-ring arithmetic and unit-group verification"};
    app.require_subcommand(1);

    Limits lim;

    // parse
    std::string parse_expr;
    auto* cmd_parse = app.add_subcommand("parse", "parse a ring expression");
    cmd_parse->add_option("expr", parse_expr, "ring expression")->required();

    // analyze
    std::string an_ambient, an_gens, an_json;
    auto* cmd_an = app.add_subcommand("analyze", "analyze a subring extension");
    cmd_an->add_option("--ambient", an_ambient, "ambient ring expression")->required();
    cmd_an->add_option("--sub-gens", an_gens, "subring generators (comma separated)");
    cmd_an->add_option("--json", an_json, "write the report to a file");

    // lattice
    std::string la_ambient, la_gens, la_json;
    std::size_t la_cap = default_limits().lattice_cap;
    auto* cmd_la = app.add_subcommand("lattice", "enumerate intermediate rings");
    cmd_la->add_option("--ambient", la_ambient, "ambient ring expression")->required();
    cmd_la->add_option("--sub-gens", la_gens, "subring generators");
    cmd_la->add_option("--max-size", la_cap, "lattice enumeration cap");
    cmd_la->add_option("--json", la_json, "write the lattice to a file");

    // cohn
    std::string co_ring, co_ideal = "J", co_json;
    int co_degree = 2;
    auto* cmd_co = app.add_subcommand("cohn", "verify a shifted-ring construction");
    cmd_co->add_option("--ring", co_ring, "base ring expression")->required();
    cmd_co->add_option("--ideal", co_ideal, "ideal generators, or 'J'");
    cmd_co->add_option("--degree", co_degree, "tail degree bound");
    cmd_co->add_option("--json", co_json, "write the report to a file");

    // verify
    std::string ve_suite = "all", ve_json;
    std::size_t ve_max = 32;
    std::uint64_t ve_seed = 7;
    int ve_jobs = 1;
    auto* cmd_ve = app.add_subcommand("verify", "run a verification suite");
    cmd_ve->add_option("--suite", ve_suite,
                       "stability | sl-characterization | lattice-closures | cohn | poly | "
                       "examples | all");
    cmd_ve->add_option("--max-size", ve_max, "corpus ring size bound");
    cmd_ve->add_option("--seed", ve_seed, "corpus seed");
    cmd_ve->add_option("--jobs", ve_jobs, "worker threads");
    cmd_ve->add_option("--json", ve_json, "write the report to a file");

    // reproduce
    std::string re_example;
    std::uint64_t re_p = 0;
    std::string re_json;
    auto* cmd_re = app.add_subcommand("reproduce", "rebuild a worked construction");
    cmd_re->add_option("--example", re_example, "7.4 | 7.5 | 7.6")->required();
    cmd_re->add_option("--p", re_p, "prime for the cyclotomic construction");
    cmd_re->add_option("--json", re_json, "write the report to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_parse) {
            auto ast = parse(parse_expr);
            auto ring = build(*ast, lim.ring_size_cap);
            emit(json{{"input", parse_expr},
                      {"canonical", pretty(*ast)},
                      {"size", ring->size()},
                      {"units", units(ring).units.size()}},
                 "");
            return 0;
        }
        if (*cmd_an) {
            auto ring = build(*parse(an_ambient), lim.ring_size_cap);
            auto ext = extension_generated(ring, parse_gens(ring, an_gens));
            auto rep = analyze(ext, lim);
            json j = extension_report_json(rep);
            j["sub_gens"] = an_gens;
            emit(j, an_json);
            return 0;
        }
        if (*cmd_la) {
            Limits l = lim;
            l.lattice_cap = la_cap;
            auto ring = build(*parse(la_ambient), l.ring_size_cap);
            auto ext = extension_generated(ring, parse_gens(ring, la_gens));
            auto lat = intermediate_rings(ext, l);
            json j = lattice_json(lat);
            // per-member classification of covering steps
            json steps = json::array();
            for (std::size_t i = 0; i < lat.members.size(); ++i)
                for (std::size_t k = 0; k < lat.members.size(); ++k)
                    if (lat.covers(i, k)) {
                        auto step = classify_minimal(ring, lat.members[i], lat.members[k]);
                        steps.push_back({{"lower", i},
                                         {"upper", k},
                                         {"kind", to_string(step.kind)},
                                         {"conductor_residue", step.conductor_residue}});
                    }
            j["minimal_steps"] = steps;
            emit(j, la_json);
            return 0;
        }
        if (*cmd_co) {
            auto ring = build(*parse(co_ring), lim.ring_size_cap);
            Ideal I = co_ideal == "J" ? jacobson(ring)
                                      : ideal_generated(ring, parse_gens(ring, co_ideal));
            auto SR = make_shifted(ring, I);
            auto rigid = verify_unit_rigidity(SR, std::min(co_degree, lim.tail_degree_pair),
                                              lim);
            auto cond = verify_conductor(SR);
            auto tcl = verify_t_closed(SR, co_degree, lim);
            json j{{"ring", ring->name()},
                   {"ideal", I.gens_str()},
                   {"degree", co_degree},
                   {"unit_rigidity", rigid.ok},
                   {"conductor_identity", cond.ok},
                   {"t_closed", tcl.ok}};
            auto CR = make_cohn(ring);
            auto zd = verify_zerodivisors(CR);
            j["cohn_zerodivisors"] = zd.ok;
            j["cohn_conductor"] = verify_conductor(CR).ok;
            bool all_ok = rigid.ok && cond.ok && tcl.ok && zd.ok;
            emit(j, co_json);
            return all_ok ? 0 : 2;
        }
        if (*cmd_ve) {
            auto run = run_suite(ve_suite, ve_max, ve_seed, lim, ve_jobs);
            emit(report_json(run, ve_seed, ve_max, lim), ve_json);
            return run.has_counterexample ? 2 : 0;
        }
        if (*cmd_re) {
            if (re_example == "7.5") {
                auto r = cyclotomic_sl_construction(3, lim, true);
                json j{{"example", "7.5"},
                       {"source", r.source->name()},
                       {"target", r.target->name()},
                       {"sl", r.sl},
                       {"injective_sl_morphisms", r.embedding_count}};
                json us = json::array(), ur = json::array();
                auto unitsS = units(RingPtr(r.target));
                auto unitsR = units(RingPtr(r.source));
                for (index_t u : unitsS.units.items())
                    us.push_back(r.target->format_element(u));
                for (index_t u : unitsR.units.items())
                    ur.push_back(r.source->format_element(u));
                j["target_units"] = us;
                j["source_units"] = ur;
                j["generator_image"] =
                    r.target->format_element(r.embedding(r.source->from_coeffs({0, 1})));
                emit(j, re_json);
                return r.sl && r.embedding_count == 2 ? 0 : 2;
            }
            if (re_example == "7.4") {
                std::uint64_t p = re_p ? re_p : 5;
                auto r = cyclotomic_sl_construction(p, lim);
                json j{{"example", "7.4"},
                       {"p", p},
                       {"source", r.source->name()},
                       {"target", r.target->name()},
                       {"sl", r.sl},
                       {"unit_count", units(RingPtr(r.source)).units.size()}};
                j["report"] = extension_report_json(r.report);
                emit(j, re_json);
                return r.sl ? 0 : 2;
            }
            if (re_example == "7.6") {
                auto R = re_p ? RingPtr(make_zmod(re_p)) : RingPtr(make_zmod(3));
                auto r = pad_construction(R, 1, 3, lim);
                json j{{"example", "7.6"},
                       {"source", r.source->name()},
                       {"target", r.target->name()},
                       {"sl", r.sl}};
                emit(j, re_json);
                return r.sl ? 0 : 2;
            }
            std::cerr << "unknown example '" << re_example << "'\n";
            return 3;
        }
    } catch (const error& e) {
        std::cerr << e.what() << "\n";
        return std::string(e.code()) == "syntax-error" ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 3;
}
