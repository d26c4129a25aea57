#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "ctl/json_io.hpp"

using namespace ctl;

namespace {

/* exit codes: 0 ok/certified, 1 refuted or failed, 2 parse/usage error,
 * 3 non-terminating basis, 4 hypothesis violated, 5 inconclusive/caps */
constexpr int kOk = 0, kRefuted = 1, kParse = 2, kNonTerminating = 3, kHypothesis = 4,
              kInconclusive = 5;

struct Options {
    std::string fixtures;
    std::optional<std::uint32_t> characteristic;
    SearchBounds bounds;
    std::string out_dir;
    std::string format = "json";
};

std::string default_fixtures() {
    if (const char* env = std::getenv("CTL_FIXTURES")) {
        std::string root(env);
        if (std::filesystem::exists(std::filesystem::path(root) / "algebra.json")) return root;
        return (std::filesystem::path(root) / "condition").string();
    }
#ifdef CTL_FIXTURES_DIR
    return (std::filesystem::path(CTL_FIXTURES_DIR) / "condition").string();
#else
    return "fixtures/condition";
#endif
}

void emit(const Options& opt, const std::string& title, const Json& report) {
    if (opt.format == "md")
        std::cout << markdown_render(report, title);
    else
        std::cout << canonical_dump(report);
    if (!opt.out_dir.empty()) {
        std::filesystem::create_directories(opt.out_dir);
        std::ofstream j(std::filesystem::path(opt.out_dir) / (title + ".json"));
        j << canonical_dump(report);
        std::ofstream m(std::filesystem::path(opt.out_dir) / (title + ".md"));
        m << markdown_render(report, title);
    }
}

CertifiedPair certified_from_spec(const Workspace& ws, const std::string& spec,
                                  const SearchBounds& bounds, bool hereditary, bool complete) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw UnknownName("pair spec '" + spec + "' is not of the form X:Y");
    ModuleClass x = resolve_class(ws, spec.substr(0, colon));
    ModuleClass y = resolve_class(ws, spec.substr(colon + 1));
    return certify_pair(x, y, ws.catalog, bounds, hereditary, complete);
}

int cmd_check_algebra(const Options& opt) {
    Workspace ws = load_workspace(opt.fixtures, opt.characteristic);
    Json report;
    report["command"] = "check-algebra";
    report["characteristic"] = ws.algebra->characteristic();
    report["dimension"] = ws.algebra->dimension();
    report["global_dimension"] = global_dimension(*ws.algebra);
    Json counts = Json::object();
    const Quiver& q = ws.algebra->quiver();
    for (int i = 0; i < ws.algebra->num_vertices(); ++i) {
        Json row = Json::object();
        for (int j = 0; j < ws.algebra->num_vertices(); ++j) {
            int n = static_cast<int>(ws.algebra->basis_paths(i, j).size());
            if (n > 0) row[q.vertices[j]] = n;
        }
        counts[q.vertices[i]] = std::move(row);
    }
    report["path_counts"] = std::move(counts);
    report["catalog"] = catalog_report_to_json(catalog_verify(ws.catalog));
    emit(opt, "check-algebra", report);
    return report["catalog"]["all_ok"].get<bool>() ? kOk : kRefuted;
}

int cmd_ext_table(const Options& opt, int degree) {
    Workspace ws = load_workspace(opt.fixtures, opt.characteristic);
    Json report;
    report["command"] = "ext-table";
    report["degree"] = degree;
    report["order"] = ws.catalog.names();
    Json table = Json::array();
    for (int i = 0; i < ws.catalog.size(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < ws.catalog.size(); ++j)
            row.push_back(degree == 1
                              ? ws.catalog.ext1(i, j)
                              : ext_dim(ws.catalog.member(i), ws.catalog.member(j), degree));
        table.push_back(std::move(row));
    }
    report["table"] = std::move(table);
    emit(opt, "ext-table", report);
    return kOk;
}

int cmd_orth(const Options& opt, const std::string& cls_name, const std::string& side) {
    Workspace ws = load_workspace(opt.fixtures, opt.characteristic);
    ModuleClass cls = resolve_class(ws, cls_name);
    Json report;
    report["command"] = "orth";
    report["class"] = cls.name;
    report["members"] = cls.members;
    report["side"] = side;
    report["result"] = side == "left" ? left_orth(cls.members, ws.catalog)
                                      : right_orth(cls.members, ws.catalog);
    emit(opt, "orth", report);
    return kOk;
}

int cmd_verify_pair(const Options& opt, const std::string& x_name, const std::string& y_name,
                    bool complete, bool hereditary) {
    Workspace ws = load_workspace(opt.fixtures, opt.characteristic);
    ModuleClass x = resolve_class(ws, x_name);
    ModuleClass y = resolve_class(ws, y_name);
    CertifiedPair cp = certify_pair(x, y, ws.catalog, opt.bounds, hereditary, complete);
    Json report;
    report["command"] = "verify-pair";
    report["x"] = Json{{"name", x.name}, {"members", x.members}};
    report["y"] = Json{{"name", y.name}, {"members", y.members}};
    report["pair_check"] = pair_check_to_json(cp.pair);
    if (cp.hereditary) report["hereditary"] = *cp.hereditary;
    if (cp.complete) report["complete"] = completeness_to_json(*cp.complete);
    emit(opt, "verify-pair", report);
    if (!cp.pair.ok) return kRefuted;
    if (cp.hereditary && !*cp.hereditary) return kRefuted;
    if (cp.complete) {
        if (cp.complete->status == Completeness::failed_witness) return kRefuted;
        if (cp.complete->status == Completeness::inconclusive) return kInconclusive;
    }
    return kOk;
}

int cmd_theorem(const Options& opt, const std::string& variant, const std::string& pair1,
                const std::string& pair2) {
    Workspace ws = load_workspace(opt.fixtures, opt.characteristic);
    TheoremVariant v = variant == "ii" ? TheoremVariant::two : TheoremVariant::one;
    CertifiedPair p1 = certified_from_spec(ws, pair1, opt.bounds, true, true);
    CertifiedPair p2 = certified_from_spec(ws, pair2, opt.bounds, true, true);
    if (!p1.certified_complete() || !p2.certified_complete()) {
        Json report;
        report["command"] = "theorem";
        report["error"] = "input pairs are not certified complete cotorsion pairs";
        emit(opt, "theorem", report);
        return kRefuted;
    }
    TheoremReport rep = theorem_check(v, p1, p2, ws.catalog, opt.bounds);
    Json report = theorem_report_to_json(rep);
    report["command"] = "theorem";
    emit(opt, "theorem", report);
    if (rep.certified()) return kOk;
    if (rep.conclusion_complete.status == Completeness::inconclusive || !rep.cross_oracle_equal)
        return kInconclusive;
    return kRefuted;
}

int cmd_reproduce_paper(const Options& opt) {
    Workspace ws = load_workspace(opt.fixtures, opt.characteristic);
    Json golden = [&] {
        std::ifstream in(std::filesystem::path(opt.fixtures) / "golden" / "paper.json");
        if (!in) throw ParseError("golden file not found under the fixture root");
        Json g;
        in >> g;
        return g;
    }();

    Json report;
    report["command"] = "reproduce-paper";
    report["characteristic"] = ws.algebra->characteristic();
    report["bounds"] = bounds_to_json(opt.bounds);
    std::vector<std::string> diffs;

    /* 1. the catalog of indecomposables */
    CatalogReport cat_rep = catalog_verify(ws.catalog);
    report["catalog"] = catalog_report_to_json(cat_rep);
    if (!cat_rep.all_ok) diffs.push_back("catalog: verification failed");
    if (ws.catalog.names() != golden.at("catalog").get<std::vector<std::string>>())
        diffs.push_back("catalog: member list differs");
    if (!diffs.empty()) {
        /* everything downstream depends on a sound catalog */
        report["diffs"] = diffs;
        report["all_green"] = false;
        emit(opt, "reproduce-paper", report);
        return kRefuted;
    }

    /* 2. the orthogonal tables */
    Json orth = Json::object();
    for (const auto& [name, members] : golden.at("orthogonals").items()) {
        auto got = right_orth(resolve_class(ws, name).members, ws.catalog);
        orth[name] = got;
        if (got != members.get<std::set<std::string>>())
            diffs.push_back("orthogonal of " + name + " differs");
    }
    report["orthogonals"] = std::move(orth);

    /* 3. the named non-split sequences */
    Json seqs = Json::array();
    for (const Json& row : golden.at("sequences")) {
        const auto sub = row.at("sub").get<std::string>();
        const auto quot = row.at("quot").get<std::string>();
        const auto middle = row.at("middle").get<std::map<std::string, int>>();
        ExtSpace es = ext_space(ws.catalog.member(quot), ws.catalog.member(sub));
        Json entry;
        entry["sub"] = sub;
        entry["quot"] = quot;
        entry["ext_dim"] = es.dim();
        bool found = false;
        /* canonical class representatives, coordinate-lexicographic */
        std::vector<std::uint32_t> t(es.dim(), 0);
        const std::uint32_t p = ws.algebra->characteristic();
        while (!found) {
            bool more = false;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (++t[i] < p) {
                    more = true;
                    break;
                }
                t[i] = 0;
            }
            if (!more) break;
            bool canonical = false;
            for (std::uint32_t c : t) {
                if (c == 0) continue;
                canonical = c == 1;
                break;
            }
            if (!canonical) continue;
            Conflation conf = realize_extension(es, t);
            if (!is_split(conf) && decompose(conf.mid(), ws.catalog) == middle) {
                found = true;
                entry["class"] = t;
                entry["witness"] = conflation_to_json(conf);
            }
        }
        entry["realized"] = found;
        if (!found)
            diffs.push_back("sequence " + sub + " >--> ? -->> " + quot +
                            ": stated middle not realized");
        seqs.push_back(std::move(entry));
    }
    report["sequences"] = std::move(seqs);

    /* 4. completeness of the named pairs */
    Json pairs = Json::object();
    std::map<std::string, CertifiedPair> certified;
    for (const Json& name : golden.at("complete_pairs")) {
        const std::string x_name = name.get<std::string>();
        ModuleClass x = resolve_class(ws, x_name);
        ModuleClass y{x_name + "perp", right_orth(x.members, ws.catalog)};
        CertifiedPair cp = certify_pair(x, y, ws.catalog, opt.bounds, true, true);
        Json entry;
        entry["pair_check"] = pair_check_to_json(cp.pair);
        entry["hereditary"] = cp.hereditary.value_or(false);
        entry["complete"] = completeness_to_json(*cp.complete);
        pairs[x_name] = std::move(entry);
        if (!cp.pair.ok) diffs.push_back("pair (" + x_name + ", " + x_name + "perp) refuted");
        if (cp.complete->status != Completeness::certified)
            diffs.push_back("pair (" + x_name + ", " + x_name + "perp) not certified complete");
        certified.emplace(x_name, std::move(cp));
    }
    report["pairs"] = std::move(pairs);

    /* 5. converse failure */
    if (certified.size() == 3) {
        auto it = certified.begin();
        const CertifiedPair& d = it->second;  // "D"
        const CertifiedPair& d1 = (++it)->second;
        const CertifiedPair& d2 = (++it)->second;
        ConverseFailureReport conv = converse_failure_check(d, d1, d2, ws.catalog);
        report["converse"] = converse_report_to_json(conv);
        if (!conv.ok) diffs.push_back("converse-failure check did not pass");
        if (conv.witnesses != golden.at("converse_witnesses").get<std::vector<std::string>>())
            diffs.push_back("converse witnesses differ");
    }

    report["diffs"] = diffs;
    report["all_green"] = diffs.empty();
    emit(opt, "reproduce-paper", report);
    return diffs.empty() ? kOk : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cotorsion-pair toolkit for bound quiver algebras"};
    app.require_subcommand(1);

    Options opt;
    opt.fixtures = default_fixtures();
    std::uint32_t char_flag = 0;
    app.add_option("--fixtures", opt.fixtures, "fixture root (algebra.json, catalog.json, ...)");
    app.add_option("--char", char_flag, "characteristic override (prime)");
    app.add_option("--cap-enum", opt.bounds.enum_cap, "extension class enumeration cap");
    app.add_option("--cap-mult", opt.bounds.mult_cap,
                   "per-member multiplicity cap in search sums (-1 = auto)");
    app.add_option("--cap-summands", opt.bounds.max_summands, "total summand cap in search sums");
    app.add_option("--seed", opt.bounds.seed, "seed for randomized fallbacks");
    app.add_option("--out", opt.out_dir, "directory for report.json / report.md");
    app.add_option("--format", opt.format, "stdout format: json or md")
        ->check(CLI::IsMember({"json", "md"}));

    auto* check = app.add_subcommand("check-algebra", "path basis and catalog summary");

    int degree = 1;
    auto* ext = app.add_subcommand("ext-table", "ext dimension table over the catalog");
    ext->add_option("--degree", degree, "ext degree (>= 1)")->check(CLI::PositiveNumber);

    std::string cls_name, side = "right";
    auto* orth = app.add_subcommand("orth", "orthogonal class of a class");
    orth->add_option("--class", cls_name, "class name (file or all/proj/inj)")->required();
    orth->add_option("--side", side, "right or left")->check(CLI::IsMember({"right", "left"}));

    std::string x_name, y_name;
    bool want_complete = false, want_hereditary = false;
    auto* verify = app.add_subcommand("verify-pair", "certify a cotorsion pair");
    verify->add_option("--x", x_name, "left class")->required();
    verify->add_option("--y", y_name, "right class")->required();
    verify->add_flag("--complete", want_complete, "also certify completeness");
    verify->add_flag("--hereditary", want_hereditary, "also check the hereditary condition");

    std::string variant = "i", pair1, pair2;
    auto* theorem = app.add_subcommand("theorem", "intersection theorem check");
    theorem->add_option("--variant", variant, "i or ii")->check(CLI::IsMember({"i", "ii"}));
    theorem->add_option("--pair1", pair1, "first pair as X:Y")->required();
    theorem->add_option("--pair2", pair2, "second pair as X:Y")->required();

    auto* repro = app.add_subcommand("reproduce-paper",
                                     "reproduce every bundled-example claim and diff");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kParse;
    }

    if (char_flag) opt.characteristic = char_flag;

    try {
        if (check->parsed()) return cmd_check_algebra(opt);
        if (ext->parsed()) return cmd_ext_table(opt, degree);
        if (orth->parsed()) return cmd_orth(opt, cls_name, side);
        if (verify->parsed()) return cmd_verify_pair(opt, x_name, y_name, want_complete,
                                                     want_hereditary);
        if (theorem->parsed()) return cmd_theorem(opt, variant, pair1, pair2);
        if (repro->parsed()) return cmd_reproduce_paper(opt);
    } catch (const HypothesisViolated& e) {
        Json err;
        err["error"] = "hypothesis violated";
        err["detail"] = e.what();
        err["violators"] = e.violators;
        std::cout << canonical_dump(err);
        return kHypothesis;
    } catch (const NonTerminating& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNonTerminating;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInconclusive;
    } catch (const Inconclusive& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInconclusive;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const UnknownName& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kRefuted;
    }
    return kParse;
}
