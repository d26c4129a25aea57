#include "ctl/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace ctl {

namespace {

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

template <typename T>
T get_field(const Json& j, const std::string& key, const std::string& what) {
    if (!j.contains(key)) throw ParseError(what + " is missing field '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception& e) {
        throw ParseError(what + " field '" + key + "' has the wrong type: " + e.what());
    }
}

}  // namespace

std::shared_ptr<const Algebra> algebra_from_json(const Json& j,
                                                 std::optional<std::uint32_t> char_override,
                                                 int length_cap) {
    AlgebraPresentation pres;
    pres.characteristic = char_override
                              ? *char_override
                              : get_field<std::uint32_t>(j, "characteristic", "algebra file");
    pres.quiver.vertices = get_field<std::vector<std::string>>(j, "vertices", "algebra file");
    for (const Json& a : get_field<Json>(j, "arrows", "algebra file")) {
        Arrow arrow;
        arrow.name = get_field<std::string>(a, "name", "arrow");
        arrow.from = -1;
        arrow.to = -1;
        std::string from = get_field<std::string>(a, "from", "arrow");
        std::string to = get_field<std::string>(a, "to", "arrow");
        for (int v = 0; v < static_cast<int>(pres.quiver.vertices.size()); ++v) {
            if (pres.quiver.vertices[v] == from) arrow.from = v;
            if (pres.quiver.vertices[v] == to) arrow.to = v;
        }
        if (arrow.from < 0 || arrow.to < 0)
            throw ParseError("arrow '" + arrow.name + "' references an unknown vertex");
        pres.quiver.arrows.push_back(std::move(arrow));
    }
    if (j.contains("relations")) {
        for (const Json& rel : j.at("relations")) {
            Relation r;
            for (const Json& term : rel) {
                RelationTerm t;
                t.coeff = get_field<long long>(term, "coeff", "relation term");
                for (const std::string& name :
                     get_field<std::vector<std::string>>(term, "path", "relation term")) {
                    bool found = false;
                    for (int a = 0; a < static_cast<int>(pres.quiver.arrows.size()); ++a)
                        if (pres.quiver.arrows[a].name == name) {
                            t.arrows.push_back(a);
                            found = true;
                            break;
                        }
                    if (!found) throw ParseError("relation references unknown arrow '" + name + "'");
                }
                r.terms.push_back(std::move(t));
            }
            pres.relations.push_back(std::move(r));
        }
    }
    return Algebra::build(std::move(pres), length_cap);
}

std::shared_ptr<const Algebra> load_algebra(const std::string& path,
                                            std::optional<std::uint32_t> char_override,
                                            int length_cap) {
    return algebra_from_json(read_json_file(path), char_override, length_cap);
}

Representation module_from_json(const Json& j, std::shared_ptr<const Algebra> alg) {
    const Quiver& q = alg->quiver();
    std::vector<int> dims(alg->num_vertices(), 0);
    if (j.contains("dims"))
        for (const auto& [vname, d] : j.at("dims").items())
            dims[q.vertex_index(vname)] = d.get<int>();

    std::vector<FMatrix> maps;
    for (int a = 0; a < alg->num_arrows(); ++a)
        maps.emplace_back(dims[q.arrows[a].to], dims[q.arrows[a].from], alg->characteristic());
    if (j.contains("maps")) {
        for (const auto& [aname, rows] : j.at("maps").items()) {
            int a = q.arrow_index(aname);
            FMatrix m(dims[q.arrows[a].to], dims[q.arrows[a].from], alg->characteristic());
            int r = 0;
            for (const Json& row : rows) {
                if (r >= m.rows()) throw ParseError("too many rows for arrow '" + aname + "'");
                int c = 0;
                for (const Json& entry : row) {
                    if (c >= m.cols())
                        throw ParseError("too many columns for arrow '" + aname + "'");
                    m.set(r, c, entry.get<long long>());
                    ++c;
                }
                if (c != m.cols()) throw ParseError("short row for arrow '" + aname + "'");
                ++r;
            }
            if (r != m.rows()) throw ParseError("missing rows for arrow '" + aname + "'");
            maps[a] = std::move(m);
        }
    }
    std::string name = j.contains("name") ? j.at("name").get<std::string>() : "";
    try {
        return Representation(alg, std::move(dims), std::move(maps), std::move(name));
    } catch (const ShapeMismatch& e) {
        throw ParseError(std::string("module file rejected: ") + e.what());
    }
}

Representation load_module(const std::string& path, std::shared_ptr<const Algebra> alg) {
    return module_from_json(read_json_file(path), std::move(alg));
}

ModuleClass class_from_json(const Json& j) {
    ModuleClass cls;
    cls.name = get_field<std::string>(j, "name", "class file");
    for (const auto& m : get_field<std::vector<std::string>>(j, "members", "class file"))
        cls.members.insert(m);
    return cls;
}

ModuleClass load_class(const std::string& path) { return class_from_json(read_json_file(path)); }

Catalog load_catalog(const std::string& manifest_path, std::shared_ptr<const Algebra> alg) {
    Json j = read_json_file(manifest_path);
    auto dir = std::filesystem::path(manifest_path).parent_path();
    std::vector<Representation> members;
    for (const auto& rel : get_field<std::vector<std::string>>(j, "modules", "catalog manifest"))
        members.push_back(load_module((dir / rel).string(), alg));
    return Catalog(alg, std::move(members));
}

Json matrix_to_json(const FMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json module_to_json(const Representation& m) {
    const Quiver& q = m.algebra()->quiver();
    Json dims = Json::object();
    for (int v = 0; v < m.algebra()->num_vertices(); ++v)
        if (m.dim(v) > 0) dims[q.vertices[v]] = m.dim(v);
    Json maps = Json::object();
    for (int a = 0; a < m.algebra()->num_arrows(); ++a)
        if (m.map(a).rows() > 0 && m.map(a).cols() > 0)
            maps[q.arrows[a].name] = matrix_to_json(m.map(a));
    Json out;
    if (!m.name().empty()) out["name"] = m.name();
    out["dims"] = std::move(dims);
    out["maps"] = std::move(maps);
    return out;
}

Json map_to_json(const ModuleMap& f) {
    const Quiver& q = f.source().algebra()->quiver();
    Json comps = Json::object();
    for (int v = 0; v < f.source().algebra()->num_vertices(); ++v)
        if (f.component(v).rows() > 0 && f.component(v).cols() > 0)
            comps[q.vertices[v]] = matrix_to_json(f.component(v));
    return comps;
}

Json conflation_to_json(const Conflation& c) {
    Json out;
    out["sub"] = module_to_json(c.sub());
    out["mid"] = module_to_json(c.mid());
    out["quot"] = module_to_json(c.quot());
    out["inflation"] = map_to_json(c.inflation());
    out["deflation"] = map_to_json(c.deflation());
    return out;
}

Json bounds_to_json(const SearchBounds& b) {
    Json out;
    out["enum_cap"] = b.enum_cap;
    out["mult_cap"] = b.mult_cap;
    out["max_summands"] = b.max_summands;
    out["seed"] = b.seed;
    out["closure_rounds_cap"] = b.closure_rounds_cap;
    return out;
}

Json search_result_to_json(const SearchResult& r) {
    Json out;
    switch (r.status) {
        case SearchStatus::found: out["status"] = "found"; break;
        case SearchStatus::exhausted: out["status"] = "exhausted"; break;
        case SearchStatus::impossible: out["status"] = "impossible"; break;
    }
    if (r.witness) out["witness"] = conflation_to_json(*r.witness);
    if (!r.partner_multiset.empty()) out["partner"] = r.partner_multiset;
    if (!r.class_coeffs.empty()) out["class"] = r.class_coeffs;
    if (r.cap_hit) out["cap_hit"] = true;
    return out;
}

Json completeness_to_json(const CompletenessCert& c) {
    Json out;
    switch (c.status) {
        case Completeness::certified: out["status"] = "certified"; break;
        case Completeness::inconclusive: out["status"] = "inconclusive"; break;
        case Completeness::failed_witness: out["status"] = "failed_witness"; break;
    }
    out["bounds"] = bounds_to_json(c.bounds);
    out["note"] =
        "checked on catalog indecomposables; direct sums of conflations extend every witness "
        "to arbitrary finite-dimensional modules";
    Json w = Json::object();
    for (const auto& [name, mw] : c.witnesses) {
        Json entry;
        entry["precover"] = search_result_to_json(mw.precover);
        entry["preenvelope"] = search_result_to_json(mw.preenvelope);
        w[name] = std::move(entry);
    }
    out["witnesses"] = std::move(w);
    if (!c.failures.empty()) out["failures"] = c.failures;
    return out;
}

Json pair_check_to_json(const PairCheck& p) {
    Json out;
    out["is_pair"] = p.ok;
    out["right_orth_of_x"] = p.right_orth_of_x;
    out["left_orth_of_y"] = p.left_orth_of_y;
    if (p.counterexample) {
        Json cell;
        cell["x"] = p.counterexample->x;
        cell["y"] = p.counterexample->y;
        cell["ext1"] = p.counterexample->ext1;
        out["counterexample"] = std::move(cell);
    }
    return out;
}

Json catalog_report_to_json(const CatalogReport& r) {
    Json out;
    out["all_ok"] = r.all_ok;
    out["count"] = r.count;
    Json members = Json::object();
    for (const auto& m : r.members) {
        Json e;
        e["relations_ok"] = m.relations_ok;
        e["indecomposable"] = m.indecomposable;
        if (!m.isomorphic_to.empty()) e["isomorphic_to"] = m.isomorphic_to;
        members[m.name] = std::move(e);
    }
    out["members"] = std::move(members);
    return out;
}

Json theorem_report_to_json(const TheoremReport& r) {
    Json out;
    out["variant"] = r.variant == TheoremVariant::one ? "i" : "ii";
    out["pair1"] = r.pair1_name;
    out["pair2"] = r.pair2_name;
    out["hypothesis"] = r.hypothesis;
    out["conclusion_x"] = Json{{"name", r.conclusion_x.name}, {"members", r.conclusion_x.members}};
    out["conclusion_y"] = Json{{"name", r.conclusion_y.name}, {"members", r.conclusion_y.members}};
    out["closure_rounds"] = r.closure.rounds;
    out["pair_check"] = pair_check_to_json(r.conclusion_pair);
    out["complete"] = completeness_to_json(r.conclusion_complete);
    if (r.conclusion_hereditary) out["hereditary"] = *r.conclusion_hereditary;
    out["cross_oracle"] = r.cross_oracle;
    out["cross_oracle_equal"] = r.cross_oracle_equal;
    out["witnesses_audited"] = r.witnesses_audited;
    out["witnesses_ok"] = r.witnesses_ok;
    out["bounds"] = bounds_to_json(r.bounds);
    out["certified"] = r.certified();
    return out;
}

Json converse_report_to_json(const ConverseFailureReport& r) {
    Json out;
    out["pairs_complete"] = r.pairs_complete;
    out["witnesses"] = r.witnesses;
    out["violators_x1_outside_y2"] = r.violators_12;
    out["violators_x2_outside_y1"] = r.violators_21;
    out["ok"] = r.ok;
    return out;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

void render_value(std::ostringstream& out, const Json& j, int depth) {
    std::string pad(static_cast<std::size_t>(2 * depth), ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !v.empty() && v.front().is_structured())) {
                out << pad << "- **" << k << "**:\n";
                render_value(out, v, depth + 1);
            } else {
                out << pad << "- **" << k << "**: " << v.dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_structured()) {
                out << pad << "-\n";
                render_value(out, v, depth + 1);
            } else {
                out << pad << "- " << v.dump() << "\n";
            }
        }
    } else {
        out << pad << j.dump() << "\n";
    }
}

}  // namespace

std::string markdown_render(const Json& j, const std::string& title) {
    std::ostringstream out;
    out << "# " << title << "\n\n";
    for (const auto& [k, v] : j.items()) {
        out << "## " << k << "\n\n";
        if (v.is_structured()) {
            render_value(out, v, 0);
        } else {
            out << v.dump() << "\n";
        }
        out << "\n";
    }
    return out.str();
}

Workspace load_workspace(const std::string& root, std::optional<std::uint32_t> char_override) {
    namespace fs = std::filesystem;
    fs::path base(root);
    auto alg = load_algebra((base / "algebra.json").string(), char_override);
    Catalog cat = load_catalog((base / "catalog.json").string(), alg);

    std::map<std::string, ModuleClass> classes;
    fs::path cls_dir = base / "classes";
    if (fs::is_directory(cls_dir)) {
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(cls_dir))
            if (e.path().extension() == ".json") files.push_back(e.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
            ModuleClass c = load_class(f.string());
            for (const auto& m : c.members)
                if (!cat.contains(m))
                    throw ParseError("class '" + c.name + "' names unknown member '" + m + "'");
            classes[c.name] = std::move(c);
        }
    }
    return Workspace{alg, std::move(cat), std::move(classes)};
}

ModuleClass resolve_class(const Workspace& ws, const std::string& name) {
    if (name == "all") return class_of_all(ws.catalog);
    if (name == "proj") return class_of_projectives(ws.catalog);
    if (name == "inj") return class_of_injectives(ws.catalog);
    auto it = ws.classes.find(name);
    if (it == ws.classes.end()) throw UnknownName("unknown class '" + name + "'");
    return it->second;
}

}  // namespace ctl
