#pragma once

#include "perdel/form.hpp"
#include "perdel/sheaf.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace perdel {

/// Dual graph of a stable curve: multi-edges and loops allowed.
struct DualGraph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    bool is_stable() const;  // every vertex has degree >= 3, loops counting twice
    std::vector<std::size_t> degrees() const;
};

struct KuratowskiWitness {
    std::string kind;                         // "K5" or "K33"
    std::vector<std::size_t> edges;           // indices into DualGraph::edges
    std::vector<std::size_t> branch_vertices; // K5: 5 vertices; K33: side A then side B
};

struct PlanarityVerdict {
    bool planar = true;
    std::optional<KuratowskiWitness> witness;
};

/// E - V + 1. Throws Error("Disconnected").
std::size_t betti(const DualGraph& graph);

/// B^T B for the fundamental cycles of a spanning tree. The tree is grown by scanning edges in
/// `edge_order` (default: input order). Throws Error("Disconnected") or Error("Acyclic").
QuadraticForm graphic_form(const DualGraph& graph, const std::vector<std::size_t>* edge_order = nullptr);

/// Boyer-Myrvold planarity test; a non-planar verdict carries a Kuratowski subdivision that has
/// been checked independently (degree-2 suppression, then K5 / K33 recognition).
PlanarityVerdict planarity(const DualGraph& graph);

/// Checks that the witness edge set is a subdivision of K5 or K33 with the stated branch vertices.
bool verify_kuratowski(const DualGraph& graph, const KuratowskiWitness& w);

struct TorelliReport {
    std::string name;
    std::size_t genus = 0;
    bool planar = true;
    std::optional<KuratowskiWitness> witness;
    std::size_t class_count = 0;
    std::map<std::size_t, std::size_t> vertex_counts;  // vertices per class -> number of classes
    std::size_t h0 = 0;
    std::optional<std::size_t> cone_dim;
    std::optional<std::size_t> stratum_dim;
    std::optional<bool> et_flag;
    bool conjecture_consistent = false;
};

/// graphic_form -> Delaunay -> h0 -> secondary cone -> ET test. Genus capped at 8.
TorelliReport torelli_report(const DualGraph& graph, const std::string& name = "");

/// Canonical relabeling (minimum edge list over all vertex permutations); fine for <= 8 vertices.
DualGraph canonical_graph(const DualGraph& graph);

/// Stable multigraphs with all-rational components and betti in [2, max_genus], up to isomorphism.
std::vector<DualGraph> stable_graphs(std::size_t max_genus);

/// K4, K5, K33, theta_k, cycles, 3-cube, wheels W4 and W5.
std::vector<std::pair<std::string, DualGraph>> named_graphs();

/// Named graphs plus every stable graph with betti <= max_genus (named ones not duplicated).
std::vector<std::pair<std::string, DualGraph>> builtin_corpus(std::size_t max_genus = 4);

}  // namespace perdel
