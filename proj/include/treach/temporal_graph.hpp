#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "treach/errors.hpp"

namespace treach {

// Underlying static graph: dense vertex indices, sorted unique edge list with
// u < v. Used by the reduction sources and the decomposition machinery.
struct StaticGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // sorted, u < v, no duplicates

    int m() const { return static_cast<int>(edges.size()); }
    bool has_edge(int u, int v) const;
    std::vector<std::vector<int>> adjacency() const;
};

StaticGraph make_static_graph(int n, std::vector<std::pair<int, int>> edges);

// One labelled edge as supplied to build().
struct EdgeInput {
    std::string u;
    std::string v;
    std::vector<int> labels;
};

// The pair (edge, time): the deletable unit of the time-edge problem variant.
// `edge` indexes into the owning graph's edge list.
struct TimeEdge {
    int edge = -1;
    int time = 0;

    auto operator<=>(const TimeEdge&) const = default;
};

struct DegreeSummary {
    std::vector<int> per_vertex; // time-edges incident to each vertex
    int maximum = 0;
};

// A static graph plus a time-labelling: each edge carries a non-empty sorted
// set of positive time steps. Immutable after construction; the deletion
// operations return new values, so instances can be shared across threads.
class TemporalGraph {
  public:
    TemporalGraph() = default;

    // Validates and normalizes. Distinct error codes per failure mode:
    // unknown_endpoint, self_loop, duplicate_edge, empty_label_set, bad_label.
    static TemporalGraph build(std::vector<std::string> vertices,
                               const std::vector<EdgeInput>& edges);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int time_edge_count() const { return te_offset_.empty() ? 0 : te_offset_.back(); }
    int lifetime() const { return lifetime_; } // 0 on edgeless graphs

    // Vertex names are kept sorted, so index order == lexicographic order.
    const std::string& vertex_name(int v) const { return names_[v]; }
    const std::vector<std::string>& vertex_names() const { return names_; }
    int vertex_index(const std::string& name) const;        // -1 if absent
    int require_vertex(const std::string& name) const;      // throws unknown_vertex

    std::pair<int, int> edge_endpoints(int e) const { return edges_[e]; }
    int edge_index(int u, int v) const;                     // -1 if absent
    std::span<const int> labels(int e) const {
        return {labels_.data() + te_offset_[e],
                static_cast<std::size_t>(te_offset_[e + 1] - te_offset_[e])};
    }

    // Global time-edge ids, ordered by (edge, time).
    int te_id(int edge, int time) const;                    // -1 if absent
    TimeEdge te_from_id(int id) const;
    int te_offset(int e) const { return te_offset_[e]; }

    // CSR adjacency: for vertex v, entries are (neighbour, edge id) sorted by
    // neighbour index.
    std::span<const std::pair<int, int>> neighbours(int v) const {
        return {adj_.data() + adj_offset_[v],
                static_cast<std::size_t>(adj_offset_[v + 1] - adj_offset_[v])};
    }

    // Time-edges sorted by (time, edge); each entry is (time, edge id).
    const std::vector<std::pair<int, int>>& time_ordered() const { return by_time_; }

    TemporalGraph delete_edges(const std::vector<int>& edge_ids) const;
    TemporalGraph delete_time_edges(const std::vector<TimeEdge>& xs) const;

    StaticGraph underlying() const;

    bool operator==(const TemporalGraph& o) const {
        return names_ == o.names_ && edges_ == o.edges_ && labels_ == o.labels_ &&
               te_offset_ == o.te_offset_;
    }

  private:
    std::vector<std::string> names_;            // sorted
    std::vector<std::pair<int, int>> edges_;    // sorted, u < v
    std::vector<int> labels_;                   // concatenated per-edge sorted labels
    std::vector<int> te_offset_;                // size m+1
    std::vector<std::pair<int, int>> adj_;      // CSR payload
    std::vector<int> adj_offset_;               // size n+1
    std::vector<std::pair<int, int>> by_time_;  // (time, edge), sorted
    int lifetime_ = 0;

    void finalize();
};

DegreeSummary degree_summary(const TemporalGraph& g);

} // namespace treach
