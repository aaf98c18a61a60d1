// perdel: command-line front end. JSON in, canonical JSON out.

#include "perdel/catalog.hpp"
#include "perdel/delaunay.hpp"
#include "perdel/error.hpp"
#include "perdel/graphs.hpp"
#include "perdel/io.hpp"
#include "perdel/moment.hpp"
#include "perdel/seccone.hpp"
#include "perdel/sheaf.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace perdel;

namespace {

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

bool long_tests_from_env() {
    const char* v = std::getenv("PERDEL_LONG_TESTS");
    return v && std::string(v) == "1";
}

// g = 2 tiling: every class drawn at the 3 x 3 translates (0..2)^2.
std::string svg(const PeriodicDecomposition& d) {
    if (d.dim() != 2 || d.fiber_rank() != 0) throw Error("NotPlanar", "svg renders polytopal g = 2 decompositions only");
    const double unit = 60, pad = 20;
    std::int64_t lo[2] = {0, 0}, hi[2] = {0, 0};
    for (const auto& c : d.cells())
        for (const auto& v : c.vertices())
            for (int k = 0; k < 2; ++k) {
                lo[k] = std::min(lo[k], v[k]);
                hi[k] = std::max(hi[k], v[k] + 2);
            }
    const double w = (hi[0] - lo[0]) * unit + 2 * pad, h = (hi[1] - lo[1]) * unit + 2 * pad;
    static const char* palette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462"};
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
    for (std::int64_t ty = 0; ty < 3; ++ty)
        for (std::int64_t tx = 0; tx < 3; ++tx)
            for (std::size_t i = 0; i < d.cells().size(); ++i) {
                auto vs = d.cells()[i].vertices();
                double cx = 0, cy = 0;
                for (const auto& v : vs) cx += v[0], cy += v[1];
                cx /= vs.size();
                cy /= vs.size();
                std::sort(vs.begin(), vs.end(), [&](const LatticeVector& a, const LatticeVector& b) {
                    return std::atan2(a[1] - cy, a[0] - cx) < std::atan2(b[1] - cy, b[0] - cx);
                });
                s << "  <polygon class=\"cell" << i << "\" fill=\"" << palette[i % 6]
                  << "\" stroke=\"black\" points=\"";
                for (std::size_t k = 0; k < vs.size(); ++k) {
                    double x = pad + (vs[k][0] + tx - lo[0]) * unit;
                    double y = h - pad - (vs[k][1] + ty - lo[1]) * unit;
                    s << (k ? " " : "") << x << "," << y;
                }
                s << "\"/>\n";
            }
    s << "</svg>\n";
    return s.str();
}

Json scan_row(const TorelliReport& r) {
    Json j = torelli_to_json(r);
    j.erase("kuratowski_witness");
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"perdel: periodic Delaunay decompositions, stratum dimensions and secondary cones"};
    app.require_subcommand(1);
    bool long_tests = false;
    app.add_flag("--long-tests", long_tests, "enable expensive cross-checks (also PERDEL_LONG_TESTS=1)");

    std::string form_path, decomp_path, out_path, graph_path, support_path, out_dir;
    std::string method = "auto", corpus = "builtin", format = "json", name;
    std::string window_scale = "1";
    std::size_t n = 0, max_genus = 4;
    bool report = false;

    auto* del = app.add_subcommand("delaunay", "Delaunay decomposition of a positive definite form");
    del->add_option("--form", form_path, "form JSON (default: stdin)");
    del->add_option("--out", out_path, "output path (default: stdout)");
    del->add_option("--window-scale", window_scale, "multiplier for the starting window, e.g. 2 or 3/2");

    auto* h0 = app.add_subcommand("h0", "stratum dimension h0 of a decomposition");
    h0->add_option("--decomp", decomp_path, "decomposition JSON (default: stdin)");
    h0->add_option("--method", method, "general | simplicial | auto")
        ->check(CLI::IsMember({"general", "simplicial", "auto"}));

    auto* cert = app.add_subcommand("certify", "witness form or Farkas certificate");
    cert->add_option("--decomp", decomp_path, "decomposition JSON (default: stdin)");

    auto* et = app.add_subcommand("et", "compare h0 with the Voronoi stratum dimension");
    et->add_option("--decomp", decomp_path, "decomposition JSON (default: stdin)");

    auto* graph = app.add_subcommand("graph", "dual graph invariants");
    graph->add_option("--in", graph_path, "graph JSON (default: stdin)");
    graph->add_flag("--report", report, "run the full Torelli pipeline");

    auto* scan = app.add_subcommand("scan", "Torelli pipeline over a graph corpus");
    scan->add_option("--corpus", corpus, "corpus name")->check(CLI::IsMember({"builtin"}));
    scan->add_option("--max-genus", max_genus, "largest betti number scanned")->check(CLI::Range(1, 5));
    scan->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));

    auto* cat = app.add_subcommand("catalog", "built-in forms and decompositions");
    cat->require_subcommand(1);
    cat->add_subcommand("list", "list catalog names");
    auto* cat_form = cat->add_subcommand("form", "write a catalog Gram matrix");
    cat_form->add_option("--name", name, "Zg | Dn | E8 | A2")->required();
    cat_form->add_option("--n", n, "dimension parameter");
    cat_form->add_option("--out", out_path, "output path (default: stdout)");
    auto* cat_rt = cat->add_subcommand("delta-rt", "write the decomposition Delta_RT");
    cat_rt->add_option("--out", out_path, "output path (default: stdout)");
    auto* cat_ref = cat->add_subcommand("rt-refinements", "write the four refinements of Delta_RT");
    cat_ref->add_option("--out-dir", out_dir, "output directory")->required();

    auto* mom = app.add_subcommand("moment", "weighted average of a finite support");
    mom->add_option("--support", support_path, "support JSON (default: stdin)");

    auto* sv = app.add_subcommand("svg", "draw a g = 2 decomposition");
    sv->add_option("--decomp", decomp_path, "decomposition JSON (default: stdin)");
    sv->add_option("--out", out_path, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << Json{{"error", "MalformedInput"}, {"detail", e.what()}}.dump() << "\n";
        return 2;
    }
    long_tests = long_tests || long_tests_from_env();

    try {
        if (*del) {
            auto q = form_from_json(parse_json(read_input(form_path)));
            DelaunayOptions opts;
            opts.window_scale = parse_rational(window_scale);
            write_output(out_path, dump(decomposition_to_json(delaunay_decomposition(q, opts))));
        } else if (*h0) {
            auto d = decomposition_from_json(parse_json(read_input(decomp_path)));
            StratumReport r;
            if (method == "general")
                r = h0_general(d);
            else if (method == "simplicial")
                r = h0_simplicial(d);
            else
                r = h0_auto(d, long_tests);
            write_output("", dump(report_to_json(r)));
        } else if (*cert) {
            auto d = decomposition_from_json(parse_json(read_input(decomp_path)));
            write_output("", dump(cone_to_json(secondary_cone(d))));
        } else if (*et) {
            auto d = decomposition_from_json(parse_json(read_input(decomp_path)));
            write_output("", dump(report_to_json(et_detect(d))));
        } else if (*graph) {
            auto g = graph_from_json(parse_json(read_input(graph_path)));
            if (report) {
                write_output("", dump(torelli_to_json(torelli_report(g))));
            } else {
                auto pv = planarity(g);
                Json j{{"betti", betti(g)}, {"planar", pv.planar}, {"stable", g.is_stable()}};
                j["graphic_form"] = betti(g) > 0 ? form_to_json(graphic_form(g)) : Json(nullptr);
                j["kuratowski_witness"] = pv.witness ? Json{{"kind", pv.witness->kind},
                                                            {"edges", pv.witness->edges},
                                                            {"branch_vertices", pv.witness->branch_vertices}}
                                                     : Json(nullptr);
                write_output("", dump(j));
            }
        } else if (*scan) {
            Json rows = Json::array();
            std::ostringstream text;
            text << "name       genus planar classes h0 cone stratum et  consistent\n";
            for (const auto& [gname, g] : builtin_corpus(max_genus)) {
                auto r = torelli_report(g, gname);
                rows.push_back(scan_row(r));
                char line[160];
                std::snprintf(line, sizeof line, "%-10s %5zu %6s %7zu %2zu %4zu %7zu %-3s %s\n", gname.c_str(), r.genus,
                              r.planar ? "yes" : "no", r.class_count, r.h0, r.cone_dim.value_or(0),
                              r.stratum_dim.value_or(0), r.et_flag.value_or(false) ? "yes" : "no",
                              r.conjecture_consistent ? "yes" : "no");
                text << line;
            }
            write_output("", format == "json" ? dump(rows) : text.str());
        } else if (*cat) {
            if (cat->got_subcommand("list")) {
                Json j = Json::object();
                for (const auto& [k, v] : catalog_names()) j[k] = v;
                write_output("", dump(j));
            } else if (*cat_form) {
                write_output(out_path, dump(form_to_json(gram(name, n))));
            } else if (*cat_rt) {
                write_output(out_path, dump(decomposition_to_json(delta_rt())));
            } else if (*cat_ref) {
                std::filesystem::create_directories(out_dir);
                for (const auto& r : rt_refinements()) {
                    std::string file = out_dir + "/rt_refinement_" + std::to_string(r.choice_a) +
                                       std::to_string(r.choice_b) + ".json";
                    write_output(file, dump(decomposition_to_json(r.decomposition)));
                }
            }
        } else if (*mom) {
            auto s = support_from_json(parse_json(read_input(support_path)));
            write_output("", dump(Json{{"point", vector_json(moment_point(s))}}));
        } else if (*sv) {
            auto d = decomposition_from_json(parse_json(read_input(decomp_path)));
            write_output(out_path, svg(d));
        }
    } catch (const InputError& e) {
        std::cerr << Json{{"error", "MalformedInput"}, {"detail", e.what()}}.dump() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << Json{{"error", e.code()}, {"detail", e.detail()}}.dump() << "\n";
        return 1;
    }
    return 0;
}
