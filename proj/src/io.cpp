#include "cdm/io.hpp"

#include <fstream>
#include <sstream>

namespace cdm {

using nlohmann::json;

std::string render_element_text(const GroupSpec& g, const Elem& e) {
    g.check_element(e);
    std::string s;
    for (Coord c : e) {
        if (c < 10) {
            s += static_cast<char>('0' + c);
        } else {
            s += '(' + std::to_string(c) + ')';
        }
    }
    if (e.empty()) s = "0";
    return s;
}

Elem parse_element_text(const GroupSpec& g, std::string_view text) {
    Elem e;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == '(') {
            const std::size_t close = text.find(')', pos);
            if (close == std::string_view::npos) {
                throw SchemaError("element text: unterminated '(' in '" + std::string(text) + "'");
            }
            e.push_back(std::stoll(std::string(text.substr(pos + 1, close - pos - 1))));
            pos = close + 1;
        } else if (text[pos] >= '0' && text[pos] <= '9') {
            e.push_back(text[pos] - '0');
            ++pos;
        } else {
            throw SchemaError("element text: bad character in '" + std::string(text) + "'");
        }
    }
    if (g.trivial() && e == Elem{0}) e.clear();
    g.check_element(e);
    return e;
}

std::string render_rows_text(const GroupSpec& g, const MatrixRows& rows) {
    std::string s;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) s += "; ";
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j) s += ' ';
            s += render_element_text(g, rows[i][j]);
        }
    }
    return s;
}

MatrixRows parse_rows_text(const GroupSpec& g, std::string_view text) {
    MatrixRows rows;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        if (end == std::string_view::npos) end = text.size();
        std::istringstream iss{std::string(text.substr(start, end - start))};
        std::vector<Elem> row;
        std::string tok;
        while (iss >> tok) row.push_back(parse_element_text(g, tok));
        if (!row.empty()) rows.push_back(std::move(row));
        if (end == text.size()) break;
        start = end + 1;
    }
    return rows;
}

std::string render_matrix_table(const GroupSpec& g, const MatrixRows& rows) {
    std::string s;
    for (const auto& row : rows) {
        s += "[ ";
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) s += ' ';
            s += render_element_text(g, row[j]);
        }
        s += " ]\n";
    }
    return s;
}

json group_to_json(const GroupSpec& g) {
    return json{{"p", g.p()}, {"exponents", g.exponents()}};
}

namespace {

const json& need(const json& j, const char* field, const char* context) {
    auto it = j.find(field);
    if (it == j.end()) {
        throw SchemaError(std::string(context) + ": missing field '" + field + "'");
    }
    return *it;
}

MatrixRows rows_from_json(const GroupSpec& g, const json& j, const char* context) {
    if (!j.is_array() || j.empty()) {
        throw SchemaError(std::string(context) + ".rows: must be a nonempty array");
    }
    MatrixRows rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& rj = j[i];
        if (!rj.is_array()) {
            throw SchemaError(std::string(context) + ".rows[" + std::to_string(i) +
                              "]: must be an array");
        }
        std::vector<Elem> row;
        for (std::size_t k = 0; k < rj.size(); ++k) {
            const json& ej = rj[k];
            if (!ej.is_array()) {
                throw SchemaError(std::string(context) + ".rows[" + std::to_string(i) + "][" +
                                  std::to_string(k) + "]: element must be a coordinate array");
            }
            Elem e = ej.get<Elem>();
            e = g.reduce(std::move(e));
            row.push_back(std::move(e));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json rows_to_json(const MatrixRows& rows) {
    json out = json::array();
    for (const auto& row : rows) {
        json rj = json::array();
        for (const auto& e : row) rj.push_back(e);
        out.push_back(std::move(rj));
    }
    return out;
}

}  // namespace

GroupSpec group_from_json(const json& j) {
    if (j.is_string()) return GroupSpec::parse(j.get<std::string>());
    if (!j.is_object()) throw SchemaError("group: must be an object or literal string");
    const json& pj = need(j, "p", "group");
    const json& ej = need(j, "exponents", "group");
    if (!pj.is_number_integer()) throw SchemaError("group.p: must be an integer");
    if (!ej.is_array()) throw SchemaError("group.exponents: must be an array");
    return GroupSpec(pj.get<std::int64_t>(), ej.get<std::vector<int>>());
}

json dm_to_json(const DifferenceMatrix& a) {
    return json{{"group", group_to_json(a.group)},
                {"kind", "dm"},
                {"lambda", a.lambda},
                {"rows", rows_to_json(a.rows)}};
}

json cdm_to_json(const ContractedDifferenceMatrix& m) {
    return json{{"group", group_to_json(m.group)},
                {"kind", "cdm"},
                {"s", m.s},
                {"rows", rows_to_json(m.rows)}};
}

json ds_to_json(const DifferenceSet& d) {
    json elems = json::array();
    for (const auto& e : d.elements) elems.push_back(e);
    return json{{"group", group_to_json(d.group)},
                {"kind", "ds"},
                {"params",
                 json{{"v", d.params.v}, {"k", d.params.k}, {"lambda", d.params.lambda}, {"n", d.params.n}}},
                {"elements", std::move(elems)}};
}

json linking_to_json(const LinkingSystem& sys) {
    json sets = json::array();
    for (const auto& d : sys.sets) {
        json elems = json::array();
        for (const auto& e : d.elements) elems.push_back(e);
        sets.push_back(std::move(elems));
    }
    return json{{"group", group_to_json(sys.group)},
                {"kind", "linking"},
                {"params",
                 json{{"v", sys.params.v},
                      {"k", sys.params.k},
                      {"lambda", sys.params.lambda},
                      {"n", sys.params.n}}},
                {"mu", sys.mu},
                {"nu", sys.nu},
                {"sets", std::move(sets)}};
}

DifferenceMatrix dm_from_json(const json& j) {
    GroupSpec g = group_from_json(need(j, "group", "design"));
    const json& lj = need(j, "lambda", "design");
    if (!lj.is_number_integer()) throw SchemaError("design.lambda: must be an integer");
    return make_dm(g, lj.get<std::int64_t>(), rows_from_json(g, need(j, "rows", "design"), "design"));
}

ContractedDifferenceMatrix cdm_from_json(const json& j) {
    GroupSpec g = group_from_json(need(j, "group", "design"));
    const json& sj = need(j, "s", "design");
    if (!sj.is_number_integer()) throw SchemaError("design.s: must be an integer");
    return make_cdm(g, sj.get<std::int64_t>(), rows_from_json(g, need(j, "rows", "design"), "design"));
}

namespace {

DsParams params_from_json(const json& j) {
    return DsParams{need(j, "v", "params").get<std::int64_t>(),
                    need(j, "k", "params").get<std::int64_t>(),
                    need(j, "lambda", "params").get<std::int64_t>(),
                    need(j, "n", "params").get<std::int64_t>()};
}

std::vector<Elem> elems_from_json(const GroupSpec& g, const json& j, const char* context) {
    if (!j.is_array()) throw SchemaError(std::string(context) + ": must be an array");
    std::vector<Elem> out;
    for (const auto& ej : j) out.push_back(g.reduce(ej.get<Elem>()));
    return out;
}

}  // namespace

DifferenceSet ds_from_json(const json& j) {
    GroupSpec g = group_from_json(need(j, "group", "design"));
    DsParams p = params_from_json(need(j, "params", "design"));
    return make_difference_set(g, elems_from_json(g, need(j, "elements", "design"), "design.elements"), p);
}

LinkingSystem linking_from_json(const json& j) {
    GroupSpec g = group_from_json(need(j, "group", "design"));
    DsParams p = params_from_json(need(j, "params", "design"));
    LinkingSystem sys;
    sys.group = g;
    sys.params = p;
    if (auto it = j.find("mu"); it != j.end()) sys.mu = it->get<std::int64_t>();
    if (auto it = j.find("nu"); it != j.end()) sys.nu = it->get<std::int64_t>();
    const json& sets = need(j, "sets", "design");
    if (!sets.is_array() || sets.size() < 2) {
        throw SchemaError("design.sets: must list at least two member sets");
    }
    for (const auto& sj : sets) {
        sys.sets.push_back(make_difference_set(g, elems_from_json(g, sj, "design.sets[]"), p));
    }
    return sys;
}

ParsedDesign parse_design(const json& j) {
    if (!j.is_object()) throw SchemaError("design: top level must be an object");
    const json& kj = need(j, "kind", "design");
    const std::string kind = kj.get<std::string>();
    ParsedDesign out;
    if (kind == "dm") {
        out.kind = ParsedDesign::Kind::dm;
        out.dm = dm_from_json(j);
    } else if (kind == "cdm") {
        out.kind = ParsedDesign::Kind::cdm;
        out.cdm = cdm_from_json(j);
    } else if (kind == "ds") {
        out.kind = ParsedDesign::Kind::ds;
        out.ds = ds_from_json(j);
    } else if (kind == "linking") {
        out.kind = ParsedDesign::Kind::linking;
        out.linking = linking_from_json(j);
    } else {
        throw SchemaError("design.kind: unknown kind '" + kind + "'");
    }
    return out;
}

ParsedDesign parse_design_text(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("design: JSON parse error: ") + e.what());
    }
    return parse_design(j);
}

ParsedDesign load_design_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("design: cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_design_text(ss.str());
}

json design_to_json(const ParsedDesign& d) {
    switch (d.kind) {
        case ParsedDesign::Kind::dm: return dm_to_json(*d.dm);
        case ParsedDesign::Kind::cdm: return cdm_to_json(*d.cdm);
        case ParsedDesign::Kind::ds: return ds_to_json(*d.ds);
        case ParsedDesign::Kind::linking: return linking_to_json(*d.linking);
    }
    throw StructuralError("design: bad kind");
}

std::string design_to_text(const ParsedDesign& d) {
    std::string s;
    switch (d.kind) {
        case ParsedDesign::Kind::dm:
            s = "(" + d.dm->group.text() + ", " + std::to_string(d.dm->row_count()) + ", " +
                std::to_string(d.dm->lambda) + ") difference matrix\n" +
                render_matrix_table(d.dm->group, d.dm->rows);
            break;
        case ParsedDesign::Kind::cdm:
            s = "(" + d.cdm->group.text() + ", " + std::to_string(d.cdm->row_count()) + ", " +
                std::to_string(d.cdm->s) + ") contracted difference matrix\n" +
                render_matrix_table(d.cdm->group, d.cdm->rows);
            break;
        case ParsedDesign::Kind::ds: {
            const auto& ds = *d.ds;
            s = "(" + std::to_string(ds.params.v) + "," + std::to_string(ds.params.k) + "," +
                std::to_string(ds.params.lambda) + "," + std::to_string(ds.params.n) +
                ")-difference set in " + ds.group.text() + "\n{ ";
            for (std::size_t i = 0; i < ds.elements.size(); ++i) {
                if (i) s += ", ";
                s += render_element_text(ds.group, ds.elements[i]);
            }
            s += " }\n";
            break;
        }
        case ParsedDesign::Kind::linking: {
            const auto& sys = *d.linking;
            s = "reduced (" + std::to_string(sys.params.v) + "," + std::to_string(sys.params.k) +
                "," + std::to_string(sys.params.lambda) + "," + std::to_string(sys.params.n) +
                "; " + std::to_string(sys.sets.size()) + ")-linking system in " + sys.group.text() +
                " (mu=" + std::to_string(sys.mu) + ", nu=" + std::to_string(sys.nu) + ")\n";
            for (const auto& ds : sys.sets) {
                s += "{ ";
                for (std::size_t i = 0; i < ds.elements.size(); ++i) {
                    if (i) s += ", ";
                    s += render_element_text(ds.group, ds.elements[i]);
                }
                s += " }\n";
            }
            break;
        }
    }
    return s;
}

}  // namespace cdm
