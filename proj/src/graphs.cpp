#include "perdel/graphs.hpp"

#include "perdel/delaunay.hpp"
#include "perdel/error.hpp"
#include "perdel/seccone.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace perdel {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

void check_edges(const DualGraph& g) {
    for (const auto& [u, v] : g.edges)
        if (u >= g.vertex_count || v >= g.vertex_count) throw InputError("edge endpoint out of range");
}

bool connected(const DualGraph& g) {
    if (g.vertex_count == 0) return false;
    UnionFind uf(g.vertex_count);
    std::size_t comps = g.vertex_count;
    for (const auto& [u, v] : g.edges)
        if (uf.unite(u, v)) --comps;
    return comps == 1;
}

using Sig = std::vector<std::pair<std::size_t, std::size_t>>;

Sig relabeled(const DualGraph& g, const std::vector<std::size_t>& perm) {
    Sig s;
    for (const auto& [u, v] : g.edges) s.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

std::vector<std::size_t> DualGraph::degrees() const {
    std::vector<std::size_t> deg(vertex_count, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

bool DualGraph::is_stable() const {
    for (auto d : degrees())
        if (d < 3) return false;
    return true;
}

std::size_t betti(const DualGraph& graph) {
    check_edges(graph);
    if (!connected(graph)) throw Error("Disconnected", "dual graph is not connected");
    return graph.edges.size() - graph.vertex_count + 1;
}

QuadraticForm graphic_form(const DualGraph& graph, const std::vector<std::size_t>* edge_order) {
    const std::size_t g = betti(graph);
    if (g == 0) throw Error("Acyclic", "graph has no cycles");
    const std::size_t n = graph.vertex_count, m = graph.edges.size();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    if (edge_order) order = *edge_order;

    UnionFind uf(n);
    std::vector<bool> tree(m, false);
    for (auto e : order)
        if (uf.unite(graph.edges[e].first, graph.edges[e].second)) tree[e] = true;

    // root the tree at 0: parent vertex, parent edge, depth
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t e = 0; e < m; ++e)
        if (tree[e]) {
            adj[graph.edges[e].first].push_back(e);
            adj[graph.edges[e].second].push_back(e);
        }
    std::vector<std::size_t> parent(n, n), pedge(n, m), depth(n, 0), stack{0};
    std::vector<bool> seen(n, false);
    seen[0] = true;
    while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (auto e : adj[x]) {
            auto y = graph.edges[e].first == x ? graph.edges[e].second : graph.edges[e].first;
            if (seen[y]) continue;
            seen[y] = true;
            parent[y] = x;
            pedge[y] = e;
            depth[y] = depth[x] + 1;
            stack.push_back(y);
        }
    }
    // step from x to its parent: +1 if the edge is stored in that direction
    auto up = [&](std::size_t x) -> std::pair<std::size_t, int> {
        const auto& [a, b] = graph.edges[pedge[x]];
        (void)b;
        return {pedge[x], a == x ? 1 : -1};
    };

    std::vector<IntVec> b(m, IntVec(g, 0));
    std::size_t k = 0;
    for (std::size_t e = 0; e < m; ++e) {
        if (tree[e]) continue;
        auto [u, v] = graph.edges[e];
        b[e][k] = 1;  // u -> v along e, then back from v to u through the tree
        std::size_t x = v, y = u;
        while (x != y) {
            if (depth[x] >= depth[y]) {
                auto [te, s] = up(x);
                b[te][k] += s;
                x = parent[x];
            } else {
                auto [te, s] = up(y);
                b[te][k] -= s;  // traversed parent -> y
                y = parent[y];
            }
        }
        ++k;
    }
    Matrix q(g, g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            long s = 0;
            for (std::size_t e = 0; e < m; ++e) s += b[e][i] * b[e][j];
            q(i, j) = s;
        }
    return QuadraticForm(q);
}

bool verify_kuratowski(const DualGraph& graph, const KuratowskiWitness& w) {
    const std::size_t n = graph.vertex_count;
    std::set<std::size_t> used(w.edges.begin(), w.edges.end());
    if (used.size() != w.edges.size()) return false;
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto e : w.edges) {
        if (e >= graph.edges.size()) return false;
        auto [u, v] = graph.edges[e];
        if (u == v) return false;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::set<std::size_t> branch(w.branch_vertices.begin(), w.branch_vertices.end());
    if (branch.size() != w.branch_vertices.size()) return false;
    for (std::size_t x = 0; x < n; ++x) {
        if (adj[x].empty()) continue;
        if (branch.count(x) == 0 && adj[x].size() != 2) return false;
    }
    // follow each branch edge through subdivision vertices
    std::map<std::pair<std::size_t, std::size_t>, int> links;
    for (auto s : branch) {
        for (auto first : adj[s]) {
            std::size_t prev = s, cur = first;
            std::size_t steps = 0;
            while (!branch.count(cur)) {
                std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = next;
                if (++steps > n) return false;
            }
            if (cur == s) return false;
            ++links[{std::min(s, cur), std::max(s, cur)}];
        }
    }
    for (auto& [k, c] : links) c /= 2;  // each path was walked from both ends
    const auto& bv = w.branch_vertices;
    if (w.kind == "K5") {
        if (bv.size() != 5 || links.size() != 10) return false;
        for (const auto& [k, c] : links)
            if (c != 1) return false;
        for (auto s : bv)
            if (adj[s].size() != 4) return false;
        return true;
    }
    if (w.kind == "K33") {
        if (bv.size() != 6 || links.size() != 9) return false;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 3; j < 6; ++j) {
                auto it = links.find({std::min(bv[i], bv[j]), std::max(bv[i], bv[j])});
                if (it == links.end() || it->second != 1) return false;
            }
        for (auto s : bv)
            if (adj[s].size() != 3) return false;
        return true;
    }
    return false;
}

PlanarityVerdict planarity(const DualGraph& graph) {
    check_edges(graph);
    using G = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                    boost::property<boost::vertex_index_t, int>,
                                    boost::property<boost::edge_index_t, int>>;
    const std::size_t n = graph.vertex_count;
    G bg(n);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> simple;  // endpoints -> first edge index
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        auto [u, v] = graph.edges[e];
        if (u == v) continue;
        if (simple.emplace(std::make_pair(std::min(u, v), std::max(u, v)), e).second) boost::add_edge(u, v, bg);
    }
    PlanarityVerdict verdict;
    // Euler bound shortcut still needs a witness, so the full test always runs
    int idx = 0;
    boost::graph_traits<G>::edge_iterator ei, ee;
    for (boost::tie(ei, ee) = boost::edges(bg); ei != ee; ++ei) boost::put(boost::edge_index, bg, *ei, idx++);
    std::vector<boost::graph_traits<G>::edge_descriptor> kur;
    verdict.planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                         boost::boyer_myrvold_params::kuratowski_subgraph =
                                                             std::back_inserter(kur));
    if (verdict.planar) return verdict;

    KuratowskiWitness w;
    std::vector<std::pair<std::size_t, std::size_t>> sub;
    for (const auto& e : kur) sub.push_back({boost::source(e, bg), boost::target(e, bg)});
    // Boost's isolated subgraph is not always minimal (dangling paths, extra branches); delete
    // edges while the rest stays non-planar. A minimal non-planar graph is a K5/K33 subdivision.
    auto nonplanar = [&](const std::vector<std::pair<std::size_t, std::size_t>>& es) {
        G h(n);
        for (auto [u, v] : es) boost::add_edge(u, v, h);
        int k = 0;
        boost::graph_traits<G>::edge_iterator hi, he;
        for (boost::tie(hi, he) = boost::edges(h); hi != he; ++hi) boost::put(boost::edge_index, h, *hi, k++);
        return !boost::boyer_myrvold_planarity_test(h);
    };
    for (std::size_t i = sub.size(); i-- > 0;) {
        auto trial = sub;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
        if (nonplanar(trial)) sub = std::move(trial);
    }
    std::vector<std::size_t> deg(n, 0);
    for (auto [u, v] : sub) {
        w.edges.push_back(simple.at({std::min(u, v), std::max(u, v)}));
        ++deg[u];
        ++deg[v];
    }
    std::sort(w.edges.begin(), w.edges.end());
    for (std::size_t x = 0; x < n; ++x)
        if (deg[x] >= 3) w.branch_vertices.push_back(x);
    if (w.branch_vertices.size() == 5) {
        w.kind = "K5";
    } else {
        w.kind = "K33";
        // split by 2-colouring the branch graph: walk paths from the first branch vertex
        std::vector<std::vector<std::size_t>> adj(n);
        for (auto e : w.edges) {
            adj[graph.edges[e].first].push_back(graph.edges[e].second);
            adj[graph.edges[e].second].push_back(graph.edges[e].first);
        }
        std::set<std::size_t> branch(w.branch_vertices.begin(), w.branch_vertices.end());
        auto s = w.branch_vertices.front();
        std::set<std::size_t> other;
        for (auto first : adj[s]) {
            std::size_t prev = s, cur = first;
            while (!branch.count(cur)) {
                std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = next;
            }
            other.insert(cur);
        }
        std::vector<std::size_t> a, b;
        for (auto x : w.branch_vertices) (other.count(x) ? b : a).push_back(x);
        w.branch_vertices = a;
        w.branch_vertices.insert(w.branch_vertices.end(), b.begin(), b.end());
    }
    if (!verify_kuratowski(graph, w)) throw Error("KuratowskiUnverified", "planarity witness failed verification");
    verdict.witness = std::move(w);
    return verdict;
}

TorelliReport torelli_report(const DualGraph& graph, const std::string& name) {
    TorelliReport r;
    r.name = name;
    r.genus = betti(graph);
    if (r.genus == 0) throw Error("Acyclic", "graph has no cycles");
    if (r.genus > 8) throw Error("GenusTooLarge", "torelli_report is capped at genus 8");
    auto pv = planarity(graph);
    r.planar = pv.planar;
    r.witness = pv.witness;
    auto d = delaunay_decomposition(graphic_form(graph));
    r.class_count = d.cells().size();
    for (const auto& c : d.cells()) ++r.vertex_counts[c.vertices().size()];
    auto cone = secondary_cone(d);
    auto et = et_detect(d, cone);
    r.h0 = et.h0;
    r.cone_dim = cone.cone_dim;
    r.stratum_dim = cone.stratum_dim;
    r.et_flag = et.et_flag;
    r.conjecture_consistent = *r.et_flag == !r.planar;
    return r;
}

DualGraph canonical_graph(const DualGraph& graph) {
    std::vector<std::size_t> perm(graph.vertex_count);
    std::iota(perm.begin(), perm.end(), 0);
    Sig best = relabeled(graph, perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
        Sig s = relabeled(graph, perm);
        if (s < best) best = std::move(s);
    }
    return DualGraph{graph.vertex_count, best};
}

std::vector<DualGraph> stable_graphs(std::size_t max_genus) {
    std::set<std::pair<std::size_t, Sig>> seen;
    std::vector<DualGraph> out;
    auto add = [&](const DualGraph& g) {
        auto c = canonical_graph(g);
        if (seen.emplace(c.vertex_count, c.edges).second) {
            out.push_back(c);
            return true;
        }
        return false;
    };
    for (std::size_t genus = 2; genus <= max_genus; ++genus) {
        // trivalent graphs on 2g-2 vertices
        const std::size_t n = 2 * genus - 2;
        std::vector<int> rem(n, 3);
        Sig edges;
        std::vector<DualGraph> cubic;
        auto rec = [&](auto&& self) -> void {
            std::size_t i = 0;
            while (i < n && rem[i] == 0) ++i;
            if (i == n) {
                DualGraph g{n, edges};
                if (connected(g)) cubic.push_back(g);
                return;
            }
            for (std::size_t j = i; j < n; ++j) {
                if (j == i ? rem[i] < 2 : rem[j] == 0) continue;
                if (!edges.empty() && std::make_pair(i, j) < edges.back()) continue;
                rem[i] -= 1;
                rem[j] -= 1;
                edges.emplace_back(i, j);
                self(self);
                edges.pop_back();
                rem[i] += 1;
                rem[j] += 1;
            }
        };
        rec(rec);
        std::size_t start = out.size();
        for (const auto& g : cubic) add(g);
        // close under contracting non-loop edges
        for (std::size_t k = start; k < out.size(); ++k) {
            const DualGraph g = out[k];
            for (std::size_t e = 0; e < g.edges.size(); ++e) {
                auto [u, v] = g.edges[e];
                if (u == v) continue;
                DualGraph h{g.vertex_count - 1, {}};
                auto relabel = [&](std::size_t x) {
                    if (x == v) x = u;
                    return x > v ? x - 1 : x;
                };
                for (std::size_t f = 0; f < g.edges.size(); ++f)
                    if (f != e) h.edges.emplace_back(relabel(g.edges[f].first), relabel(g.edges[f].second));
                add(h);
            }
        }
    }
    return out;
}

std::vector<std::pair<std::string, DualGraph>> named_graphs() {
    std::vector<std::pair<std::string, DualGraph>> out;
    auto complete = [](std::size_t n) {
        DualGraph g{n, {}};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
        return g;
    };
    out.emplace_back("K4", complete(4));
    out.emplace_back("K5", complete(5));
    DualGraph k33{6, {}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 3; j < 6; ++j) k33.edges.emplace_back(i, j);
    out.emplace_back("K33", k33);
    for (std::size_t k = 3; k <= 5; ++k) {
        DualGraph t{2, {}};
        for (std::size_t e = 0; e < k; ++e) t.edges.emplace_back(0, 1);
        out.emplace_back("theta" + std::to_string(k), t);
    }
    for (std::size_t n = 3; n <= 4; ++n) {
        DualGraph c{n, {}};
        for (std::size_t i = 0; i < n; ++i) c.edges.emplace_back(i, (i + 1) % n);
        out.emplace_back("cycle" + std::to_string(n), c);
    }
    DualGraph cube{8, {}};
    for (std::size_t x = 0; x < 8; ++x)
        for (std::size_t bit : {1u, 2u, 4u})
            if (!(x & bit)) cube.edges.emplace_back(x, x | bit);
    out.emplace_back("Q3", cube);
    for (std::size_t n = 4; n <= 5; ++n) {
        DualGraph w{n + 1, {}};
        for (std::size_t i = 0; i < n; ++i) {
            w.edges.emplace_back(0, i + 1);
            w.edges.emplace_back(i + 1, (i + 1) % n + 1);
        }
        out.emplace_back("W" + std::to_string(n), w);
    }
    return out;
}

std::vector<std::pair<std::string, DualGraph>> builtin_corpus(std::size_t max_genus) {
    std::vector<std::pair<std::string, DualGraph>> out;
    std::map<Sig, std::string> names;
    for (auto& [name, g] : named_graphs()) {
        if (betti(g) > max_genus) continue;
        auto c = canonical_graph(g);
        names[c.edges] = name;
        out.emplace_back(name, g);
    }
    std::map<std::size_t, std::size_t> counter;
    for (const auto& g : stable_graphs(max_genus)) {
        if (names.count(g.edges)) continue;
        std::size_t genus = betti(g);
        out.emplace_back("g" + std::to_string(genus) + "_" + std::to_string(++counter[genus]), g);
    }
    return out;
}

}  // namespace perdel
