// Command-line front end: construction, composition, verification, search,
// linking systems, the best-known catalog, and golden-data reproduction.
//
// Exit codes: 0 success/verified, 1 verification-false, 2 usage error,
// 3 capacity or budget exhaustion.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "cdm/catalog.hpp"
#include "cdm/constructions.hpp"
#include "cdm/io.hpp"
#include "cdm/linking.hpp"
#include "cdm/reproduce.hpp"
#include "cdm/search.hpp"

namespace {

using nlohmann::json;

int g_exit = 0;

void emit(const cdm::ParsedDesign& d, const std::string& format) {
    if (format == "json") {
        std::cout << cdm::design_to_json(d).dump() << "\n";
    } else {
        std::cout << cdm::design_to_text(d);
    }
}

cdm::ParsedDesign wrap(cdm::DifferenceMatrix a) {
    cdm::ParsedDesign d;
    d.kind = cdm::ParsedDesign::Kind::dm;
    d.dm = std::move(a);
    return d;
}

cdm::ParsedDesign wrap(cdm::ContractedDifferenceMatrix m) {
    cdm::ParsedDesign d;
    d.kind = cdm::ParsedDesign::Kind::cdm;
    d.cdm = std::move(m);
    return d;
}

cdm::ParsedDesign wrap(cdm::LinkingSystem sys) {
    cdm::ParsedDesign d;
    d.kind = cdm::ParsedDesign::Kind::linking;
    d.linking = std::move(sys);
    return d;
}

json search_result_json(const cdm::SearchResult& r) {
    json j;
    switch (r.outcome) {
        case cdm::SearchResult::Outcome::found: j["outcome"] = "found"; break;
        case cdm::SearchResult::Outcome::exhausted_none: j["outcome"] = "exhausted_none"; break;
        case cdm::SearchResult::Outcome::budget_exceeded: j["outcome"] = "budget_exceeded"; break;
    }
    j["nodes_visited"] = r.nodes_visited;
    j["solutions_count"] = r.solutions_count;
    j["restrictions_applied"] = r.restrictions_applied;
    j["reductions_applied"] = r.reductions_applied;
    j["seed"] = r.seed;
    if (r.matrix) j["matrix"] = cdm::cdm_to_json(*r.matrix);
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"difference matrices and contracted difference matrices over abelian p-groups"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

    // ---- construct ----------------------------------------------------
    auto* construct = app.add_subcommand("construct", "build a design from a named construction");
    construct->require_subcommand(1);
    std::int64_t p = 2;
    int n = 2, e = 2, rows = 2;
    std::string group_text;
    std::int64_t lambda = 1, s = 0;
    bool contracted = false;

    auto* c_drake = construct->add_subcommand("drake", "field multiplication table");
    c_drake->add_option("--p", p)->required();
    c_drake->add_option("--n", n)->required();
    auto* c_cfield = construct->add_subcommand("cfield", "contracted field table");
    c_cfield->add_option("--p", p)->required();
    c_cfield->add_option("--n", n)->required();
    auto* c_pc = construct->add_subcommand("pan-chang", "four-row matrix over Z_{2^e} x Z_2");
    c_pc->add_option("--e", e)->required();
    auto* c_pcc = construct->add_subcommand("pan-chang-cdm", "two-row contracted matrix over Z_{2^e} x Z_2");
    c_pcc->add_option("--e", e)->required();
    auto* c_chain = construct->add_subcommand("chain", "subgroup-chain difference matrix");
    c_chain->add_option("--group", group_text)->required();
    auto* c_chainc = construct->add_subcommand("chain-cdm", "subgroup-chain contracted matrix");
    c_chainc->add_option("--group", group_text)->required();
    auto* c_nc2 = construct->add_subcommand("noncyclic2", "two-row contracted matrix, noncyclic 2-group");
    c_nc2->add_option("--group", group_text)->required();
    auto* c_best = construct->add_subcommand("best-known", "best-known contracted matrix for a target row count");
    c_best->add_option("--group", group_text)->required();
    c_best->add_option("--rows", rows)->required();
    auto* c_triv = construct->add_subcommand("trivial", "trivial design");
    c_triv->add_option("--group", group_text)->required();
    c_triv->add_option("--lambda", lambda);
    c_triv->add_option("--s", s);
    c_triv->add_flag("--cdm", contracted, "emit the one-row contracted form");

    // ---- compose ------------------------------------------------------
    auto* compose = app.add_subcommand("compose", "compose two designs");
    compose->require_subcommand(1);
    std::string host_text, cofactors_text, file_a, file_b;
    auto add_host_opts = [&](CLI::App* sc) {
        sc->add_option("--host", host_text, "host group literal")->required();
        sc->add_option("--cofactors", cofactors_text, "comma-separated subgroup cofactors")->required();
    };
    auto* k_sc = compose->add_subcommand("kronecker", "rowwise Kronecker product over a subgroup");
    add_host_opts(k_sc);
    k_sc->add_option("--a", file_a, "matrix over the subgroup")->required();
    k_sc->add_option("--b", file_b, "matrix over the quotient")->required();
    auto* cc_sc = compose->add_subcommand("concat", "contracted concatenation over a subgroup");
    add_host_opts(cc_sc);
    cc_sc->add_option("--a", file_a, "contracted matrix over the subgroup")->required();
    cc_sc->add_option("--b", file_b, "contracted matrix over the quotient")->required();
    auto* sum_sc = compose->add_subcommand("sum", "column concatenation over one group");
    sum_sc->add_option("--a", file_a)->required();
    sum_sc->add_option("--b", file_b)->required();
    auto* prod_sc = compose->add_subcommand("product", "pairwise-sum product over one group");
    prod_sc->add_option("--a", file_a)->required();
    prod_sc->add_option("--b", file_b)->required();

    // ---- expand ---------------------------------------------------------
    auto* expand = app.add_subcommand("expand", "p-expansion of a contracted matrix");
    std::string expand_file;
    expand->add_option("file", expand_file)->required();

    // ---- verify ---------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "verify a design file");
    verify->require_subcommand(1);
    std::string verify_file;
    bool full_route = false;
    auto* v_dm = verify->add_subcommand("dm", "difference matrix");
    v_dm->add_option("file", verify_file)->required();
    auto* v_cdm = verify->add_subcommand("cdm", "contracted difference matrix");
    v_cdm->add_option("file", verify_file)->required();
    v_cdm->add_flag("--full", full_route, "use the expansion route instead of the bilinear check");
    auto* v_ds = verify->add_subcommand("ds", "difference set");
    v_ds->add_option("file", verify_file)->required();
    auto* v_link = verify->add_subcommand("linking", "linking system");
    v_link->add_option("file", verify_file)->required();

    // ---- search ---------------------------------------------------------
    auto* search = app.add_subcommand("search", "search for a contracted matrix");
    auto* s_cdm = search->add_subcommand("cdm", "(G, k, s) contracted difference matrix");
    std::string s_group, s_mode = "exhaustive";
    int s_rows = 2, s_parts = 1;
    std::int64_t s_s = 0;
    std::uint64_t s_seed = 0, s_budget = 10'000'000;
    bool s_first_row = false, s_count_all = false, s_no_reductions = false;
    s_cdm->add_option("--group", s_group)->required();
    s_cdm->add_option("--rows", s_rows)->required();
    s_cdm->add_option("--s", s_s);
    s_cdm->add_option("--mode", s_mode)->check(CLI::IsMember({"exhaustive", "random"}));
    s_cdm->add_option("--seed", s_seed);
    s_cdm->add_option("--budget", s_budget);
    double s_time_budget = 0.0;
    s_cdm->add_option("--time-budget", s_time_budget, "wall-clock cap in seconds");
    s_cdm->add_option("--parts", s_parts);
    s_cdm->add_flag("--canonical-first-row", s_first_row,
                    "pin row 0 to its lexicographically first feasible value (restriction)");
    s_cdm->add_flag("--count-all", s_count_all, "count every solution (exhaustive)");
    s_cdm->add_flag("--no-reductions", s_no_reductions, "disable symmetry reductions");

    // ---- linking ----------------------------------------------------------
    auto* linking = app.add_subcommand("linking", "linking systems of difference sets");
    linking->require_subcommand(1);
    auto* l_build = linking->add_subcommand("build", "build from a difference matrix over G/E");
    std::string l_group, l_cof, l_dm_file, l_e_file;
    std::uint64_t l_seed = 0;
    bool l_seed_set = false;
    l_build->add_option("--group", l_group)->required();
    l_build->add_option("--E", l_cof, "comma-separated cofactors of E")->required();
    l_build->add_option("--dm", l_dm_file, "difference matrix file over G/E")->required();
    l_build->add_option("--e-matrix", l_e_file, "JSON file {\"rows\": [[elem,...],...]} of shifts in E");
    auto* l_seed_opt = l_build->add_option("--seed", l_seed, "sample the shifts uniformly from E");
    auto* l_verify = linking->add_subcommand("verify", "verify a linking-system file");
    std::string l_verify_file;
    l_verify->add_option("file", l_verify_file)->required();

    // ---- catalog ----------------------------------------------------------
    auto* catalog = app.add_subcommand("catalog", "best-known contracted matrices, order <= 64");
    catalog->require_subcommand(1);
    catalog->add_subcommand("list", "one line per group");
    auto* cat_get = catalog->add_subcommand("get", "entry for one group");
    std::string cat_group;
    cat_get->add_option("--group", cat_group)->required();
    catalog->add_subcommand("verify-all", "verify every catalog matrix");

    // ---- reproduce ----------------------------------------------------------
    auto* repro = app.add_subcommand("reproduce", "rebuild golden data and diff");
    std::string repro_target;
    bool repro_list = false;
    repro->add_option("target", repro_target, "target name or 'all'");
    repro->add_flag("--list", repro_list, "list target names");

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) {
            if (c_drake->parsed()) emit(wrap(cdm::drake_dm(p, n)), format);
            if (c_cfield->parsed()) emit(wrap(cdm::contracted_field_cdm(p, n)), format);
            if (c_pc->parsed()) emit(wrap(cdm::pan_chang_dm(e)), format);
            if (c_pcc->parsed()) emit(wrap(cdm::pan_chang_cdm(e)), format);
            if (c_chain->parsed()) emit(wrap(cdm::chain_dm(cdm::GroupSpec::parse(group_text))), format);
            if (c_chainc->parsed()) emit(wrap(cdm::chain_cdm(cdm::GroupSpec::parse(group_text))), format);
            if (c_nc2->parsed()) emit(wrap(cdm::noncyclic2_cdm(cdm::GroupSpec::parse(group_text))), format);
            if (c_best->parsed()) {
                auto m = cdm::best_known_cdm(cdm::GroupSpec::parse(group_text), rows);
                if (!m) {
                    std::cout << (format == "json" ? "{\"outcome\":\"unsatisfied\"}\n"
                                                   : "unsatisfied: no chain found (not a nonexistence proof)\n");
                    g_exit = 1;
                } else {
                    emit(wrap(*m), format);
                }
            }
            if (c_triv->parsed()) {
                const auto g = cdm::GroupSpec::parse(group_text);
                if (contracted) {
                    emit(wrap(cdm::trivial_cdm(g, s)), format);
                } else {
                    emit(wrap(cdm::trivial_dm(g, lambda)), format);
                }
            }
        } else if (compose->parsed()) {
            auto cofactors = [&] {
                std::vector<int> v;
                std::string tok;
                for (char ch : cofactors_text + ",") {
                    if (ch == ',') {
                        if (!tok.empty()) v.push_back(std::stoi(tok));
                        tok.clear();
                    } else {
                        tok += ch;
                    }
                }
                return v;
            };
            if (k_sc->parsed() || cc_sc->parsed()) {
                cdm::DiagonalSubgroup sub(cdm::GroupSpec::parse(host_text), cofactors());
                if (k_sc->parsed()) {
                    auto a = cdm::load_design_file(file_a);
                    auto b = cdm::load_design_file(file_b);
                    if (!a.dm || !b.dm) throw cdm::SchemaError("compose kronecker: need two dm files");
                    cdm::verify_dm(*a.dm);
                    cdm::verify_dm(*b.dm);
                    emit(wrap(cdm::kronecker_compose_dm(sub, *a.dm, *b.dm)), format);
                } else {
                    auto a = cdm::load_design_file(file_a);
                    auto b = cdm::load_design_file(file_b);
                    if (!a.cdm || !b.cdm) throw cdm::SchemaError("compose concat: need two cdm files");
                    cdm::verify_cdm_fast(*a.cdm);
                    cdm::verify_cdm_fast(*b.cdm);
                    emit(wrap(cdm::concat_compose_cdm(sub, *a.cdm, *b.cdm)), format);
                }
            } else {
                auto a = cdm::load_design_file(file_a);
                auto b = cdm::load_design_file(file_b);
                if (!a.dm || !b.dm) throw cdm::SchemaError("compose: need two dm files");
                cdm::verify_dm(*a.dm);
                cdm::verify_dm(*b.dm);
                if (sum_sc->parsed()) {
                    emit(wrap(cdm::sum_compose_dm(*a.dm, *b.dm)), format);
                } else {
                    emit(wrap(cdm::product_compose_dm(*a.dm, *b.dm)), format);
                }
            }
        } else if (expand->parsed()) {
            auto d = cdm::load_design_file(expand_file);
            if (!d.cdm) throw cdm::SchemaError("expand: need a cdm file");
            emit(wrap(cdm::p_expand(*d.cdm)), format);
        } else if (verify->parsed()) {
            auto d = cdm::load_design_file(verify_file);
            json out;
            bool ok = false;
            if (v_dm->parsed()) {
                if (!d.dm) throw cdm::SchemaError("verify dm: file is not a difference matrix");
                auto r = cdm::verify_dm(*d.dm);
                ok = r.ok;
                out["ok"] = r.ok;
                if (r.witness) {
                    out["witness"] = {{"row_a", r.witness->row_a},
                                      {"row_b", r.witness->row_b},
                                      {"element", r.witness->element},
                                      {"multiplicity", r.witness->multiplicity}};
                }
            } else if (v_cdm->parsed()) {
                if (!d.cdm) throw cdm::SchemaError("verify cdm: file is not a contracted matrix");
                if (full_route) {
                    auto r = cdm::verify_cdm_full(*d.cdm);
                    ok = r.ok;
                    out["ok"] = r.ok;
                } else {
                    auto r = cdm::verify_cdm_fast(*d.cdm);
                    ok = r.ok;
                    out["ok"] = r.ok;
                    if (r.witness) {
                        out["witness"]["a"] = r.witness->a;
                        if (r.witness->b) out["witness"]["b"] = *r.witness->b;
                        if (r.witness->element) out["witness"]["element"] = *r.witness->element;
                        if (r.witness->multiplicity) out["witness"]["multiplicity"] = *r.witness->multiplicity;
                    }
                }
            } else if (v_ds->parsed()) {
                if (!d.ds) throw cdm::SchemaError("verify ds: file is not a difference set");
                auto r = cdm::verify_difference_set(*d.ds);
                ok = r.ok;
                out["ok"] = r.ok;
                if (!r.ok && r.element) {
                    out["witness"] = {{"element", *r.element}, {"multiplicity", r.multiplicity}};
                }
            } else {
                if (!d.linking) throw cdm::SchemaError("verify linking: file is not a linking system");
                auto r = cdm::verify_linking(*d.linking);
                ok = r.ok;
                out["ok"] = r.ok;
                out["mu"] = r.mu;
                out["nu"] = r.nu;
                if (!r.ok) out["error"] = r.error;
            }
            if (format == "json") {
                std::cout << out.dump() << "\n";
            } else {
                std::cout << (ok ? "verified" : "NOT verified") << "\n";
            }
            g_exit = ok ? 0 : 1;
        } else if (search->parsed()) {
            cdm::SearchConfig cfg;
            cfg.group = cdm::GroupSpec::parse(s_group);
            cfg.k = s_rows;
            cfg.s = s_s;
            cfg.mode = s_mode == "random" ? cdm::SearchConfig::Mode::random
                                          : cdm::SearchConfig::Mode::exhaustive;
            cfg.seed = s_seed;
            cfg.node_budget = s_budget;
            cfg.time_budget_s = s_time_budget;
            cfg.canonical_first_row = s_first_row;
            cfg.count_all = s_count_all;
            if (s_no_reductions) {
                cfg.reduce_columns = cfg.reduce_negation = cfg.reduce_row_order = false;
            }
            const cdm::SearchResult r =
                s_parts > 1 ? cdm::search_cdm_partitioned(cfg, s_parts) : cdm::search_cdm(cfg);
            std::cout << search_result_json(r).dump() << "\n";
            if (r.outcome == cdm::SearchResult::Outcome::budget_exceeded) g_exit = 3;
        } else if (linking->parsed()) {
            if (l_build->parsed()) {
                const auto g = cdm::GroupSpec::parse(l_group);
                std::vector<int> cof;
                std::string tok;
                for (char ch : l_cof + ",") {
                    if (ch == ',') {
                        if (!tok.empty()) cof.push_back(std::stoi(tok));
                        tok.clear();
                    } else {
                        tok += ch;
                    }
                }
                cdm::DiagonalSubgroup e(g, cof);
                auto d = cdm::load_design_file(l_dm_file);
                if (!d.dm) throw cdm::SchemaError("linking build: --dm must be a difference matrix");
                cdm::verify_dm(*d.dm);
                std::optional<std::vector<std::vector<cdm::Elem>>> shifts;
                if (!l_e_file.empty()) {
                    std::ifstream in(l_e_file);
                    if (!in) throw cdm::SchemaError("linking build: cannot open '" + l_e_file + "'");
                    json ej = json::parse(in, nullptr, true, true);
                    std::vector<std::vector<cdm::Elem>> rows;
                    for (const auto& rj : ej.at("rows")) {
                        std::vector<cdm::Elem> row;
                        for (const auto& el : rj) row.push_back(g.reduce(el.get<cdm::Elem>()));
                        rows.push_back(std::move(row));
                    }
                    shifts = std::move(rows);
                }
                l_seed_set = l_seed_opt->count() > 0;
                if (l_seed_set && !shifts) {
                    std::mt19937_64 rng(l_seed);
                    const auto epts = cdm::enumerate_elements(e.subgroup());
                    std::vector<std::vector<cdm::Elem>> rows;
                    const std::size_t m = d.dm->row_count();
                    const std::size_t scols = d.dm->col_count() - 1;
                    std::uniform_int_distribution<std::size_t> dist(0, epts.size() - 1);
                    for (std::size_t i = 0; i + 1 < m; ++i) {
                        std::vector<cdm::Elem> row;
                        for (std::size_t j = 0; j < scols; ++j) row.push_back(e.embed(epts[dist(rng)]));
                        rows.push_back(std::move(row));
                    }
                    shifts = std::move(rows);
                }
                cdm::LinkingSystem sys = cdm::build_linking_system(e, *d.dm, shifts);
                const auto rep = cdm::verify_linking(sys);
                if (!rep.ok) g_exit = 1;
                emit(wrap(std::move(sys)), format);
            } else {
                auto d = cdm::load_design_file(l_verify_file);
                if (!d.linking) throw cdm::SchemaError("linking verify: file is not a linking system");
                auto r = cdm::verify_linking(*d.linking);
                json out{{"ok", r.ok}, {"mu", r.mu}, {"nu", r.nu}};
                if (!r.ok) out["error"] = r.error;
                std::cout << out.dump() << "\n";
                g_exit = r.ok ? 0 : 1;
            }
        } else if (catalog->parsed()) {
            if (cat_get->parsed()) {
                const auto entry = cdm::catalog_get(cdm::GroupSpec::parse(cat_group));
                if (!entry) {
                    std::cerr << "not found: " << cat_group << "\n";
                    g_exit = 1;
                } else if (format == "json") {
                    json j{{"group", cdm::group_to_json(entry->group)},
                           {"k", entry->best_known_k},
                           {"source", cdm::to_string(entry->source)},
                           {"maximality", cdm::to_string(entry->maximality)},
                           {"matrix", cdm::cdm_to_json(entry->matrix)}};
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << entry->group.text() << "  k=" << entry->best_known_k << "  source="
                              << cdm::to_string(entry->source)
                              << "  maximality=" << cdm::to_string(entry->maximality) << "\n"
                              << cdm::render_matrix_table(entry->group, entry->matrix.rows);
                }
            } else if (catalog->got_subcommand("list")) {
                for (const auto& entry : cdm::catalog_entries()) {
                    std::printf("%-22s k=%d  %-16s %s\n", entry.group.text().c_str(),
                                entry.best_known_k, cdm::to_string(entry.source).c_str(),
                                cdm::to_string(entry.maximality).c_str());
                }
            }
            if (catalog->got_subcommand("verify-all")) {
                const auto rep = cdm::catalog_verify_all();
                if (format == "json") {
                    json j{{"ok", rep.ok},
                           {"total", rep.total},
                           {"verified", rep.verified_ok},
                           {"k_matches", rep.k_matches},
                           {"failures", rep.failures}};
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << rep.verified_ok << "/" << rep.total << " verified, " << rep.k_matches
                              << "/" << rep.total << " k-consistent\n";
                    for (const auto& f : rep.failures) std::cout << "FAIL " << f << "\n";
                }
                g_exit = rep.ok ? 0 : 1;
            }
        } else if (repro->parsed()) {
            if (repro_list) {
                for (const auto& t : cdm::reproduce_targets()) std::cout << t << "\n";
            } else if (repro_target.empty()) {
                std::cerr << "reproduce: give a target name or 'all' (see --list)\n";
                g_exit = 2;
            } else {
                std::vector<cdm::ReproduceReport> reports;
                if (repro_target == "all") {
                    reports = cdm::reproduce_all();
                } else {
                    reports.push_back(cdm::reproduce(repro_target));
                }
                bool all_ok = true;
                for (const auto& r : reports) {
                    all_ok = all_ok && r.ok;
                    if (format == "json") {
                        std::cout << json{{"target", r.target}, {"ok", r.ok}, {"detail", r.detail}}.dump()
                                  << "\n";
                    } else {
                        std::printf("%-22s %s  %s\n", r.target.c_str(), r.ok ? "ok" : "FAIL",
                                    r.detail.c_str());
                    }
                }
                g_exit = all_ok ? 0 : 1;
            }
        }
    } catch (const cdm::CapacityError& ex) {
        std::cerr << "capacity: " << ex.what() << "\n";
        return 3;
    } catch (const cdm::SchemaError& ex) {
        std::cerr << "schema: " << ex.what() << "\n";
        return 2;
    } catch (const cdm::StructuralError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const cdm::VerificationError& ex) {
        std::cerr << "verification: " << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return g_exit;
}
