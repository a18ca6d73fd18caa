// Command-line front end: generate graphs, build total simplicial complexes,
// and run the homology / Cohen-Macaulay / cover checks on them.
//
// Exit codes: 0 success, 2 input error, 3 a check asked for with --assert failed.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tsc/cohen_macaulay.hpp"
#include "tsc/covers.hpp"
#include "tsc/error.hpp"
#include "tsc/homology.hpp"
#include "tsc/io.hpp"
#include "tsc/total_complex.hpp"

namespace {

using tsc::io::json;

constexpr int kExitInput = 2;
constexpr int kExitAssert = 3;

struct Output {
    std::string format = "json";
    std::string out_path;

    bool text() const { return format == "text"; }

    void emit(const std::string& s) const
    {
        if (out_path.empty())
            std::cout << s;
        else
            tsc::io::write_file(out_path, s);
    }
};

void add_output_flags(CLI::App* cmd, Output& out)
{
    cmd->add_option("--format", out.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", out.out_path, "write to this file instead of stdout");
}

std::string tuple_text(const std::vector<std::int64_t>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + std::to_string(v[i]);
    return s + ")";
}

std::string set_text(const tsc::Face& f)
{
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i)
        s += (i ? "," : "") + std::to_string(f[i]);
    return s + "}";
}

tsc::SimplicialComplex load_complex(const std::string& path)
{
    return tsc::io::complex_from_json(tsc::io::parse(tsc::io::read_file(path)));
}

tsc::LabeledGraph load_graph(const std::string& path)
{
    return tsc::io::graph_from_json(tsc::io::parse(tsc::io::read_file(path)));
}

std::string cm_text(const std::string& name, const tsc::CmReport& r)
{
    std::string s = name + ": " + (r.verdict ? "true" : "false") + " (field " +
                    r.field.to_string() + ", pure " + (r.purity_ok ? "yes" : "no") + ")\n";
    if (r.witness)
        s += "witness: face " + set_text(r.witness->face) + ", reduced H_" +
             std::to_string(r.witness->r) + " of link has rank " +
             std::to_string(r.witness->betti) + "\n";
    return s;
}

struct FriendshipRow {
    int n = 0;
    json cells = json::object();
    bool pass = true;
};

std::int64_t cube_formula(int n, std::int64_t c3, std::int64_t c2, std::int64_t c1)
{
    const std::int64_t nn = n;
    return (c3 * nn * nn * nn + c2 * nn * nn + c1 * nn) / 3;
}

FriendshipRow verify_friendship_row(int n)
{
    FriendshipRow row;
    row.n = n;
    auto cell = [&](const std::string& name, const json& computed, const json& expected) {
        const bool ok = computed == expected;
        row.cells[name] = {{"computed", computed}, {"formula", expected}, {"status", ok ? "PASS" : "FAIL"}};
        row.pass = row.pass && ok;
    };

    const auto fg = tsc::gen_friendship(n);
    const auto complex = tsc::build_tsc(fg);
    const std::int64_t nn = n;

    cell("alpha", tsc::f_vector(complex),
         std::vector<std::int64_t>{5 * nn + 1, 10 * nn * nn + 5 * nn, cube_formula(n, 4, 42, 14)});

    const auto hq = tsc::homology_summary(complex, tsc::FieldSpec::rationals());
    const auto hp = tsc::homology_summary(complex, tsc::default_field());
    const std::vector<std::int64_t> betti_formula{1, 0, cube_formula(n, 4, 12, 14)};
    const std::vector<std::int64_t> rank_formula{5 * nn, 10 * nn * nn};
    cell("betti_q", hq.betti, betti_formula);
    cell("betti_gf", hp.betti, betti_formula);
    cell("ranks_q", std::vector<std::int64_t>{hq.rank_im[1], hq.rank_im[2]}, rank_formula);
    cell("ranks_gf", std::vector<std::int64_t>{hp.rank_im[1], hp.rank_im[2]}, rank_formula);
    cell("cm_shortcut", tsc::tsc_cm_shortcut(fg.graph, fg.labels), true);

    const auto covers = tsc::minimal_vertex_covers(complex);
    // distinct sizes; the claim is that there is exactly one, 3n+1
    std::vector<int> sizes = covers.cardinalities;
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    cell("cover_cardinalities", sizes, std::vector<int>{3 * n + 1});
    const auto count = static_cast<std::int64_t>(covers.covers.size());
    if (n >= 2) {
        cell("cover_count", count, tsc::friendship_cover_count(n));
    } else {
        row.cells["cover_count"] = {{"computed", count},
                                    {"formula", 10},
                                    {"analytic", 15},
                                    {"status", "open question"}};
    }
    return row;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Total simplicial complexes of graphs: homology, Cohen-Macaulay and cover checks"};
    app.require_subcommand(1);

    Output out;
    std::string field_text = tsc::default_field().to_string();
    bool assert_flag = false;

    // gen
    auto* gen = app.add_subcommand("gen", "write a labeled graph as JSON");
    std::string family;
    int n_param = 0, m_param = 0;
    std::vector<std::string> edge_args;
    gen->add_option("family", family, "friendship | c42 | edges")
        ->required()
        ->check(CLI::IsMember({"friendship", "c42", "edges"}));
    gen->add_option("--n", n_param, "number of triangles (friendship)");
    gen->add_option("--m", m_param, "vertex count (edges)");
    gen->add_option("--edge", edge_args, "edge u,v (edges; repeatable)");
    add_output_flags(gen, out);

    // tsc
    auto* tsc_cmd = app.add_subcommand("tsc", "build the total simplicial complex of a graph file");
    std::string input;
    tsc_cmd->add_option("graph", input, "graph JSON")->required();
    add_output_flags(tsc_cmd, out);

    auto* fvec = app.add_subcommand("fvector", "f-vector of a complex");
    fvec->add_option("complex", input, "complex JSON")->required();
    add_output_flags(fvec, out);

    auto* hom = app.add_subcommand("homology", "ranks and Betti numbers of a complex");
    std::string matrices_prefix;
    hom->add_option("complex", input, "complex JSON")->required();
    hom->add_option("--field", field_text, "q or gf:<p>");
    hom->add_option("--matrices", matrices_prefix,
                    "also write boundary matrices as <prefix>_d<r>.txt triplets");
    add_output_flags(hom, out);

    auto* check = app.add_subcommand("check", "Cohen-Macaulay style checks");
    std::string kind;
    int t_param = 1;
    check->add_option("kind", kind, "cm | buchsbaum | cmt | vertex-links | shortcut")
        ->required()
        ->check(CLI::IsMember({"cm", "buchsbaum", "cmt", "vertex-links", "shortcut"}));
    check->add_option("input", input, "complex JSON (graph JSON for shortcut)")->required();
    check->add_option("--t", t_param, "codimension for cmt");
    check->add_option("--field", field_text, "q or gf:<p>");
    check->add_flag("--assert", assert_flag, "exit 3 if the verdict is false");
    add_output_flags(check, out);

    auto* cov = app.add_subcommand("covers", "minimal vertex covers and unmixedness");
    cov->add_option("complex", input, "complex JSON")->required();
    cov->add_flag("--assert", assert_flag, "exit 3 if the complex is not unmixed");
    add_output_flags(cov, out);

    auto* dec = app.add_subcommand("decompose", "minimal primes of the facet ideal");
    dec->add_option("complex", input, "complex JSON")->required();
    dec->add_flag("--assert", assert_flag, "exit 3 if the complex is not unmixed");
    add_output_flags(dec, out);

    auto* vf = app.add_subcommand("verify-friendship",
                                  "recompute the friendship-family table for n = 1..n-max");
    int n_max = 3;
    vf->add_option("--n-max", n_max, "largest n (1..4)")->check(CLI::Range(1, 4));
    vf->add_flag("--assert", assert_flag, "exit 3 if any cell fails");
    add_output_flags(vf, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        const tsc::FieldSpec field = tsc::FieldSpec::parse(field_text);

        if (gen->parsed()) {
            tsc::LabeledGraph g = [&] {
                if (family == "friendship")
                    return tsc::gen_friendship(n_param);
                if (family == "c42")
                    return tsc::gen_c42();
                std::vector<std::pair<int, int>> pairs;
                for (const auto& e : edge_args) {
                    int u = 0, v = 0;
                    char comma = 0;
                    std::istringstream ss(e);
                    if (!(ss >> u >> comma >> v) || comma != ',' || !ss.eof())
                        throw tsc::InputError("bad --edge '" + e + "' (expected u,v)");
                    pairs.emplace_back(u, v);
                }
                auto graph = tsc::Graph::from_edges(m_param, pairs);
                return tsc::LabeledGraph{graph, tsc::default_labeling(graph)};
            }();
            out.emit(tsc::io::dump(tsc::io::to_json(g)));
            return 0;
        }

        if (tsc_cmd->parsed()) {
            const auto c = tsc::build_tsc(load_graph(input));
            if (out.text()) {
                std::string s;
                for (const auto& f : c.facets())
                    s += set_text(f) + "\n";
                out.emit(s);
            } else {
                out.emit(tsc::io::dump(tsc::io::to_json(c)));
            }
            return 0;
        }

        if (fvec->parsed()) {
            const auto f = tsc::f_vector(load_complex(input));
            out.emit(out.text() ? tuple_text(f) + "\n" : tsc::io::dump(json{{"f_vector", f}}));
            return 0;
        }

        if (hom->parsed()) {
            const auto c = load_complex(input);
            const auto h = tsc::homology_summary(c, field);
            if (!matrices_prefix.empty())
                for (int r = 1; r <= c.dimension(); ++r)
                    tsc::io::write_file(matrices_prefix + "_d" + std::to_string(r) + ".txt",
                                        tsc::export_triplets(tsc::boundary_matrix(c, r)));
            if (out.text())
                out.emit("field: " + h.field.to_string() + "\nalpha: " + tuple_text(h.alpha) +
                         "\nrank_im: " + tuple_text(h.rank_im) + "\nbetti: " +
                         tuple_text(h.betti) + "\nreduced_betti: " +
                         tuple_text(h.reduced_betti) + "\n");
            else
                out.emit(tsc::io::dump(tsc::io::to_json(h)));
            return 0;
        }

        if (check->parsed()) {
            bool verdict = false;
            if (kind == "shortcut" || kind == "vertex-links") {
                if (kind == "shortcut") {
                    const auto g = load_graph(input);
                    verdict = tsc::tsc_cm_shortcut(g.graph, g.labels, field);
                } else {
                    verdict = tsc::vertex_links_connected(load_complex(input));
                }
                out.emit(out.text() ? kind + ": " + (verdict ? "true" : "false") + "\n"
                                    : tsc::io::dump(json{{"verdict", verdict},
                                                         {"field", field.to_string()}}));
            } else {
                const auto c = load_complex(input);
                const tsc::CmReport r = kind == "cm"          ? tsc::is_cm(c, field)
                                        : kind == "buchsbaum" ? tsc::is_cm_t(c, 1, field)
                                                              : tsc::is_cm_t(c, t_param, field);
                verdict = r.verdict;
                out.emit(out.text() ? cm_text(kind, r) : tsc::io::dump(tsc::io::to_json(r)));
            }
            return assert_flag && !verdict ? kExitAssert : 0;
        }

        if (cov->parsed() || dec->parsed()) {
            const auto report = tsc::minimal_vertex_covers(load_complex(input));
            if (cov->parsed() && out.text()) {
                std::string s;
                for (const auto& c : report.covers)
                    s += set_text(c) + "\n";
                s += std::string("unmixed: ") + (report.unmixed ? "true" : "false") + "\n";
                out.emit(s);
            } else if (cov->parsed()) {
                out.emit(tsc::io::dump(json{{"covers", report.covers},
                                            {"cardinalities", report.cardinalities},
                                            {"unmixed", report.unmixed}}));
            } else if (out.text()) {
                std::vector<tsc::PrimeComponent> comps;
                for (const auto& c : report.covers)
                    comps.push_back({c});
                out.emit(tsc::to_string(comps) + "\n");
            } else {
                out.emit(tsc::io::dump(tsc::io::decomposition_json(report)));
            }
            return assert_flag && !report.unmixed ? kExitAssert : 0;
        }

        if (vf->parsed()) {
            bool all_pass = true;
            json rows = json::array();
            std::string text;
            for (int n = 1; n <= n_max; ++n) {
                const FriendshipRow row = verify_friendship_row(n);
                all_pass = all_pass && row.pass;
                rows.push_back({{"n", n}, {"cells", row.cells}});
                text += "n=" + std::to_string(n) + "\n";
                for (const auto& [name, c] : row.cells.items()) {
                    text += "  " + name + ": computed " + c["computed"].dump() + ", formula " +
                            c["formula"].dump();
                    if (c.contains("analytic"))
                        text += ", analytic " + c["analytic"].dump();
                    text += "  [" + c["status"].get<std::string>() + "]\n";
                }
            }
            out.emit(out.text() ? text : tsc::io::dump(json{{"rows", rows}}));
            return assert_flag && !all_pass ? kExitAssert : 0;
        }
    } catch (const tsc::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const tsc::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return 0;
}
