#pragma once

#include <json.hpp>

#include "ctl/cotorsion.hpp"

namespace ctl {

using Json = nlohmann::json;

/* Algebra file:
 * { "characteristic": p, "vertices": ["1", ...],
 *   "arrows": [{"name": "a", "from": "1", "to": "2"}, ...],
 *   "relations": [[{"coeff": 1, "path": ["a", "b"]}, ...], ...] }
 * Paths list arrow names in traversal order; the matrix of a path is the
 * product of the arrow matrices applied right to left. Coefficients are
 * integers reduced mod p. */
std::shared_ptr<const Algebra> algebra_from_json(const Json& j,
                                                 std::optional<std::uint32_t> char_override = {},
                                                 int length_cap = -1);
std::shared_ptr<const Algebra> load_algebra(const std::string& path,
                                            std::optional<std::uint32_t> char_override = {},
                                            int length_cap = -1);

/* Module file:
 * { "name": "P2", "dims": {"1": 1, "2": 1}, "maps": {"betap": [[1]]} }
 * Matrices are row-major and act on column coordinate vectors; missing
 * vertices have dimension 0 and maps with an empty side may be omitted;
 * integers are reduced mod p. */
Representation module_from_json(const Json& j, std::shared_ptr<const Algebra> alg);
Representation load_module(const std::string& path, std::shared_ptr<const Algebra> alg);

/* Class file: { "name": "D", "members": ["P1", ...] } */
ModuleClass class_from_json(const Json& j);
ModuleClass load_class(const std::string& path);

/* Catalog manifest: { "modules": ["modules/P1.json", ...] },
 * paths relative to the manifest's directory. */
Catalog load_catalog(const std::string& manifest_path, std::shared_ptr<const Algebra> alg);

Json matrix_to_json(const FMatrix& m);
Json module_to_json(const Representation& m);
Json map_to_json(const ModuleMap& f);
Json conflation_to_json(const Conflation& c);
Json bounds_to_json(const SearchBounds& b);
Json search_result_to_json(const SearchResult& r);
Json completeness_to_json(const CompletenessCert& c);
Json pair_check_to_json(const PairCheck& p);
Json catalog_report_to_json(const CatalogReport& r);
Json theorem_report_to_json(const TheoremReport& r);
Json converse_report_to_json(const ConverseFailureReport& r);

/* Canonical serialization: sorted keys, two-space indent, trailing newline.
 * Identical inputs produce byte-identical output. */
std::string canonical_dump(const Json& j);

/* Plain markdown rendering of a report object. */
std::string markdown_render(const Json& j, const std::string& title);

/* Everything the CLI needs from one fixture root:
 * algebra.json, catalog.json, classes/ *.json. */
struct Workspace {
    std::shared_ptr<const Algebra> algebra;
    Catalog catalog;
    std::map<std::string, ModuleClass> classes;
};
Workspace load_workspace(const std::string& root,
                         std::optional<std::uint32_t> char_override = {});

/* Class lookup: builtin names all/proj/inj or a class file from the root. */
ModuleClass resolve_class(const Workspace& ws, const std::string& name);

}  // namespace ctl
