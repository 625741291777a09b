#pragma once

#include <span>
#include <string>
#include <vector>

#include "mrgsum/relgraph.hpp"

namespace mrgsum {

// Which leaf-entropy normalization the structural-entropy formulas use.
// AsPrinted normalizes leaf terms by the root volume; Canonical conditions
// them on the enclosing cluster volume (the classic two-level form).
enum class SeMode { AsPrinted, Canonical };

std::string_view to_string(SeMode mode);

// Flat clustering: disjoint non-empty vertex sets covering V.
struct Partition {
  std::vector<std::vector<NodeId>> clusters;

  // Sorts members ascending and clusters by first member.
  void canonicalize();
  bool operator==(const Partition&) const = default;

  std::string to_json() const;  // {"clusters": [[ids...], ...]}
  static Partition from_json(const std::string& text);
  // One line per vertex: the index of its cluster. Vertices 0..node_count-1.
  std::string to_labels(int node_count) const;

  static Partition singletons(int node_count);
};

// A (sub)graph the encoding tree is built over. For whole-graph trees the
// external mass is zero; for batch subgraphs it carries the weight of edges
// leaving the view, which counts toward degrees and every cluster's cut.
struct SubgraphView {
  std::vector<NodeId> vertices;  // global ids, ascending
  std::vector<double> degree;    // full-graph degree per local index
  std::vector<double> external;  // boundary weight per local index
  std::vector<std::vector<std::pair<int, double>>> adjacency;  // local, internal edges
  double volume = 0.0;           // sum of degree

  int size() const { return static_cast<int>(vertices.size()); }
  int local_of(NodeId global) const;  // -1 when absent

  static SubgraphView whole(const IntegratedGraph& graph);
  static SubgraphView induced(const IntegratedGraph& graph, std::span<const NodeId> verts);
};

// Two-level encoding tree: root (height 2) -> cluster nodes (height 1) ->
// leaves (height 0, one graph vertex each). Construction computes all cached
// statistics directly from the graph; merge() maintains them incrementally.
class EncodingTree {
 public:
  EncodingTree(const SubgraphView& view, const Partition& seed, SeMode mode = SeMode::AsPrinted);
  static EncodingTree singletons(const SubgraphView& view, SeMode mode = SeMode::AsPrinted);

  SeMode mode() const { return mode_; }
  int root() const { return root_; }
  int cluster_count() const;
  // Height-1 node ids ordered by their smallest global vertex id.
  std::vector<int> height1() const;

  int height(int node) const;
  int parent(int node) const;
  const std::vector<int>& children(int node) const;
  double volume(int node) const;
  double cut(int node) const;
  std::vector<NodeId> vertex_set(int node) const;  // global ids, ascending
  int min_vertex(int node) const;                  // smallest global id under the node

  // True when vol(root) == 0 (edgeless graph); every entropy is 0 then.
  bool zero_volume() const;

  double leaf_entropy(int node) const;  // H^(1) of a height-1 node
  double node_se(int node) const;
  double tree_se() const;  // sum of node_se over height-1 nodes

  // Total edge weight between two height-1 vertex sets.
  double pair_weight(int a, int b) const;

  // Entropy change of merging two height-1 nodes, without mutating the tree.
  // Throws std::invalid_argument when a == b or either is not height 1.
  double delta_se(int a, int b) const;
  double delta_se(int a, int b, double pair_weight) const;

  // MERGE: new height-1 node adopts all children of a and b, both of which
  // are removed. Returns the new node id.
  int merge(int a, int b);
  int merge(int a, int b, double pair_weight);

  Partition partition() const;  // canonical, global ids

  // Recomputation from the graph, for cache-coherence checks.
  double recompute_volume(int node) const;
  double recompute_cut(int node) const;

 private:
  struct Node {
    int parent = -1;
    std::vector<int> children;
    int vertex = -1;  // local vertex for leaves
    int height = 0;
    bool alive = true;
    double volume = 0.0;
    double cut = 0.0;
    double dlogd = 0.0;  // sum over leaves of d * log2(d), 0*log0 := 0
    int min_vertex = -1;  // smallest global id
  };

  double h1_from(double vol_a, double dlogd_a) const;
  double se_from(double vol_a, double cut_a, double dlogd_a) const;
  void check_mergeable(int a, int b) const;

  const SubgraphView* view_ = nullptr;
  SeMode mode_ = SeMode::AsPrinted;
  std::vector<Node> nodes_;
  int root_ = -1;
  std::vector<int> cluster_of_vertex_;  // local vertex -> height-1 node id
};

}  // namespace mrgsum
