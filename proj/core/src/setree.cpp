#include "mrgsum/setree.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "mrgsum/errors.hpp"

namespace mrgsum {
namespace {

double log2_safe(double x) { return std::log2(x); }

// d * log2(d) with the 0*log0 := 0 convention.
double dlog2d(double d) { return d > 0.0 ? d * std::log2(d) : 0.0; }

}  // namespace

std::string_view to_string(SeMode mode) {
  return mode == SeMode::AsPrinted ? "as-printed" : "canonical";
}

void Partition::canonicalize() {
  for (auto& c : clusters) std::sort(c.begin(), c.end());
  std::sort(clusters.begin(), clusters.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

std::string Partition::to_json() const {
  nlohmann::ordered_json obj;
  obj["clusters"] = clusters;
  return obj.dump();
}

Partition Partition::from_json(const std::string& text) {
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("partition JSON: ") + e.what());
  }
  if (!obj.contains("clusters") || !obj["clusters"].is_array()) {
    throw FormatError("partition JSON: missing \"clusters\" array");
  }
  Partition p;
  p.clusters = obj["clusters"].get<std::vector<std::vector<NodeId>>>();
  for (const auto& c : p.clusters) {
    if (c.empty()) throw FormatError("partition JSON: empty cluster");
  }
  return p;
}

std::string Partition::to_labels(int node_count) const {
  std::vector<int> label(static_cast<std::size_t>(node_count), -1);
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    for (NodeId v : clusters[c]) {
      if (v < 0 || v >= node_count) throw FormatError("partition labels: vertex out of range");
      label[static_cast<std::size_t>(v)] = static_cast<int>(c);
    }
  }
  std::string out;
  for (int l : label) {
    out += std::to_string(l);
    out += '\n';
  }
  return out;
}

Partition Partition::singletons(int node_count) {
  Partition p;
  p.clusters.reserve(static_cast<std::size_t>(node_count));
  for (NodeId v = 0; v < node_count; ++v) p.clusters.push_back({v});
  return p;
}

int SubgraphView::local_of(NodeId global) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), global);
  if (it == vertices.end() || *it != global) return -1;
  return static_cast<int>(it - vertices.begin());
}

SubgraphView SubgraphView::whole(const IntegratedGraph& graph) {
  SubgraphView view;
  const int n = graph.node_count();
  view.vertices.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) view.vertices[static_cast<std::size_t>(v)] = v;
  view.degree.resize(static_cast<std::size_t>(n));
  view.external.assign(static_cast<std::size_t>(n), 0.0);
  view.adjacency.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    view.degree[static_cast<std::size_t>(v)] = graph.degree(v);
    view.adjacency[static_cast<std::size_t>(v)].assign(graph.neighbors(v).begin(),
                                                       graph.neighbors(v).end());
  }
  view.volume = graph.total_volume();
  return view;
}

SubgraphView SubgraphView::induced(const IntegratedGraph& graph, std::span<const NodeId> verts) {
  SubgraphView view;
  view.vertices.assign(verts.begin(), verts.end());
  std::sort(view.vertices.begin(), view.vertices.end());
  view.vertices.erase(std::unique(view.vertices.begin(), view.vertices.end()),
                      view.vertices.end());
  const std::size_t n = view.vertices.size();
  view.degree.resize(n);
  view.external.assign(n, 0.0);
  view.adjacency.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const NodeId v = view.vertices[i];
    view.degree[i] = graph.degree(v);
    view.volume += view.degree[i];
    for (const auto& [u, w] : graph.neighbors(v)) {
      const int lu = view.local_of(u);
      if (lu >= 0) {
        view.adjacency[i].emplace_back(lu, w);
      } else {
        view.external[i] += w;  // boundary edge, always cut
      }
    }
  }
  return view;
}

EncodingTree::EncodingTree(const SubgraphView& view, const Partition& seed, SeMode mode)
    : view_(&view), mode_(mode) {
  const int n = view.size();
  cluster_of_vertex_.assign(static_cast<std::size_t>(n), -1);
  nodes_.reserve(static_cast<std::size_t>(n) + seed.clusters.size() + 1);

  // Leaves, one per local vertex.
  for (int v = 0; v < n; ++v) {
    Node leaf;
    leaf.vertex = v;
    leaf.height = 0;
    leaf.volume = view.degree[static_cast<std::size_t>(v)];
    leaf.cut = leaf.volume;  // all incident weight crosses a single vertex
    leaf.dlogd = dlog2d(leaf.volume);
    leaf.min_vertex = view.vertices[static_cast<std::size_t>(v)];
    nodes_.push_back(std::move(leaf));
  }

  Node root;
  root.height = 2;
  root.volume = view.volume;
  root.dlogd = 0.0;
  root.cut = 0.0;
  root.min_vertex = n > 0 ? view.vertices.front() : -1;
  for (int v = 0; v < n; ++v) {
    root.dlogd += nodes_[static_cast<std::size_t>(v)].dlogd;
    root.cut += view.external[static_cast<std::size_t>(v)];
  }
  root_ = static_cast<int>(nodes_.size() + seed.clusters.size());

  // Height-1 cluster nodes from the seed partition.
  std::size_t covered = 0;
  for (const auto& members : seed.clusters) {
    if (members.empty()) throw std::invalid_argument("encoding tree: empty seed cluster");
    Node alpha;
    alpha.height = 1;
    alpha.parent = root_;
    const int id = static_cast<int>(nodes_.size());
    double internal = 0.0;
    for (NodeId g : members) {
      const int v = view.local_of(g);
      if (v < 0) throw std::invalid_argument("encoding tree: seed vertex outside the view");
      if (cluster_of_vertex_[static_cast<std::size_t>(v)] != -1) {
        throw std::invalid_argument("encoding tree: seed clusters overlap");
      }
      cluster_of_vertex_[static_cast<std::size_t>(v)] = id;
      nodes_[static_cast<std::size_t>(v)].parent = id;
      alpha.children.push_back(v);
      alpha.volume += view.degree[static_cast<std::size_t>(v)];
      alpha.dlogd += nodes_[static_cast<std::size_t>(v)].dlogd;
      alpha.min_vertex = alpha.min_vertex < 0
                             ? view.vertices[static_cast<std::size_t>(v)]
                             : std::min(alpha.min_vertex, view.vertices[static_cast<std::size_t>(v)]);
      ++covered;
    }
    for (NodeId g : members) {
      const int v = view.local_of(g);
      for (const auto& [u, w] : view.adjacency[static_cast<std::size_t>(v)]) {
        if (cluster_of_vertex_[static_cast<std::size_t>(u)] == id) internal += w;
      }
    }
    internal /= 2.0;  // every internal edge seen from both endpoints
    alpha.cut = alpha.volume - 2.0 * internal;
    nodes_.push_back(std::move(alpha));
  }
  if (covered != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("encoding tree: seed partition does not cover the view");
  }

  for (int id = n; id < root_; ++id) root.children.push_back(id);
  nodes_.push_back(std::move(root));
}

EncodingTree EncodingTree::singletons(const SubgraphView& view, SeMode mode) {
  Partition seed;
  seed.clusters.reserve(view.vertices.size());
  for (NodeId g : view.vertices) seed.clusters.push_back({g});
  return EncodingTree(view, seed, mode);
}

int EncodingTree::cluster_count() const {
  return static_cast<int>(nodes_[static_cast<std::size_t>(root_)].children.size());
}

std::vector<int> EncodingTree::height1() const {
  std::vector<int> ids = nodes_[static_cast<std::size_t>(root_)].children;
  std::sort(ids.begin(), ids.end(), [this](int a, int b) {
    return nodes_[static_cast<std::size_t>(a)].min_vertex <
           nodes_[static_cast<std::size_t>(b)].min_vertex;
  });
  return ids;
}

int EncodingTree::height(int node) const { return nodes_[static_cast<std::size_t>(node)].height; }
int EncodingTree::parent(int node) const { return nodes_[static_cast<std::size_t>(node)].parent; }
const std::vector<int>& EncodingTree::children(int node) const {
  return nodes_[static_cast<std::size_t>(node)].children;
}
double EncodingTree::volume(int node) const { return nodes_[static_cast<std::size_t>(node)].volume; }
double EncodingTree::cut(int node) const { return nodes_[static_cast<std::size_t>(node)].cut; }
int EncodingTree::min_vertex(int node) const {
  return nodes_[static_cast<std::size_t>(node)].min_vertex;
}

std::vector<NodeId> EncodingTree::vertex_set(int node) const {
  const Node& nd = nodes_[static_cast<std::size_t>(node)];
  std::vector<NodeId> out;
  if (nd.height == 0) {
    out.push_back(view_->vertices[static_cast<std::size_t>(nd.vertex)]);
    return out;
  }
  if (nd.height == 2) {
    out = view_->vertices;
    return out;
  }
  out.reserve(nd.children.size());
  for (int leaf : nd.children) {
    out.push_back(view_->vertices[static_cast<std::size_t>(
        nodes_[static_cast<std::size_t>(leaf)].vertex)]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool EncodingTree::zero_volume() const { return view_->volume <= 0.0; }

double EncodingTree::h1_from(double vol_a, double dlogd_a) const {
  const double vol = view_->volume;
  if (vol <= 0.0) return 0.0;
  if (mode_ == SeMode::AsPrinted) {
    return (vol_a * log2_safe(vol) - dlogd_a) / vol;
  }
  if (vol_a <= 0.0) return 0.0;
  return (vol_a * log2_safe(vol_a) - dlogd_a) / vol;
}

double EncodingTree::se_from(double vol_a, double cut_a, double dlogd_a) const {
  const double vol = view_->volume;
  if (vol <= 0.0) return 0.0;
  double se = h1_from(vol_a, dlogd_a);
  if (vol_a > 0.0) se -= (cut_a / vol) * log2_safe(vol_a / vol);
  return se;
}

double EncodingTree::leaf_entropy(int node) const {
  const Node& nd = nodes_[static_cast<std::size_t>(node)];
  if (nd.height < 1 || !nd.alive) throw std::invalid_argument("leaf_entropy: not a cluster node");
  return h1_from(nd.volume, nd.dlogd);
}

double EncodingTree::node_se(int node) const {
  const Node& nd = nodes_[static_cast<std::size_t>(node)];
  if (nd.height < 1 || !nd.alive) throw std::invalid_argument("node_se: not a cluster node");
  return se_from(nd.volume, nd.cut, nd.dlogd);
}

double EncodingTree::tree_se() const {
  double total = 0.0;
  for (int id : nodes_[static_cast<std::size_t>(root_)].children) {
    const Node& nd = nodes_[static_cast<std::size_t>(id)];
    total += se_from(nd.volume, nd.cut, nd.dlogd);
  }
  return total;
}

double EncodingTree::pair_weight(int a, int b) const {
  const Node& na = nodes_[static_cast<std::size_t>(a)];
  const Node& nb = nodes_[static_cast<std::size_t>(b)];
  const int from = na.children.size() <= nb.children.size() ? a : b;
  const int other = from == a ? b : a;
  double w = 0.0;
  for (int leaf : nodes_[static_cast<std::size_t>(from)].children) {
    const int v = nodes_[static_cast<std::size_t>(leaf)].vertex;
    for (const auto& [u, wt] : view_->adjacency[static_cast<std::size_t>(v)]) {
      if (cluster_of_vertex_[static_cast<std::size_t>(u)] == other) w += wt;
    }
  }
  return w;
}

void EncodingTree::check_mergeable(int a, int b) const {
  if (a == b) throw std::invalid_argument("merge: identical cluster nodes");
  const Node& na = nodes_[static_cast<std::size_t>(a)];
  const Node& nb = nodes_[static_cast<std::size_t>(b)];
  if (na.height != 1 || nb.height != 1 || !na.alive || !nb.alive) {
    throw std::invalid_argument("merge: operands must be live height-1 nodes");
  }
}

double EncodingTree::delta_se(int a, int b) const { return delta_se(a, b, pair_weight(a, b)); }

double EncodingTree::delta_se(int a, int b, double pair_weight) const {
  check_mergeable(a, b);
  const Node& na = nodes_[static_cast<std::size_t>(a)];
  const Node& nb = nodes_[static_cast<std::size_t>(b)];
  const double vol_n = na.volume + nb.volume;
  const double cut_n = na.cut + nb.cut - 2.0 * pair_weight;
  const double dlogd_n = na.dlogd + nb.dlogd;
  return se_from(vol_n, cut_n, dlogd_n) - se_from(na.volume, na.cut, na.dlogd) -
         se_from(nb.volume, nb.cut, nb.dlogd);
}

int EncodingTree::merge(int a, int b) { return merge(a, b, pair_weight(a, b)); }

int EncodingTree::merge(int a, int b, double pair_weight) {
  check_mergeable(a, b);
  Node& na = nodes_[static_cast<std::size_t>(a)];
  Node& nb = nodes_[static_cast<std::size_t>(b)];

  Node merged;
  merged.height = 1;
  merged.parent = root_;
  merged.volume = na.volume + nb.volume;
  merged.cut = na.cut + nb.cut - 2.0 * pair_weight;
  merged.dlogd = na.dlogd + nb.dlogd;
  merged.min_vertex = std::min(na.min_vertex, nb.min_vertex);
  merged.children.reserve(na.children.size() + nb.children.size());
  merged.children.insert(merged.children.end(), na.children.begin(), na.children.end());
  merged.children.insert(merged.children.end(), nb.children.begin(), nb.children.end());

  const int id = static_cast<int>(nodes_.size());
  for (int leaf : merged.children) {
    nodes_[static_cast<std::size_t>(leaf)].parent = id;
    cluster_of_vertex_[static_cast<std::size_t>(nodes_[static_cast<std::size_t>(leaf)].vertex)] =
        id;
  }
  na.alive = false;
  nb.alive = false;
  na.children.clear();
  nb.children.clear();

  auto& siblings = nodes_[static_cast<std::size_t>(root_)].children;
  siblings.erase(std::remove_if(siblings.begin(), siblings.end(),
                                [&](int c) { return c == a || c == b; }),
                 siblings.end());
  siblings.push_back(id);
  nodes_.push_back(std::move(merged));
  return id;
}

Partition EncodingTree::partition() const {
  Partition p;
  for (int id : height1()) p.clusters.push_back(vertex_set(id));
  p.canonicalize();
  return p;
}

double EncodingTree::recompute_volume(int node) const {
  const Node& nd = nodes_[static_cast<std::size_t>(node)];
  if (nd.height == 0) return view_->degree[static_cast<std::size_t>(nd.vertex)];
  double vol = 0.0;
  if (nd.height == 2) {
    for (double d : view_->degree) vol += d;
    return vol;
  }
  for (int leaf : nd.children) {
    vol += view_->degree[static_cast<std::size_t>(nodes_[static_cast<std::size_t>(leaf)].vertex)];
  }
  return vol;
}

double EncodingTree::recompute_cut(int node) const {
  const Node& nd = nodes_[static_cast<std::size_t>(node)];
  if (nd.height == 2) {
    double cut = 0.0;
    for (double e : view_->external) cut += e;
    return cut;
  }
  std::vector<int> members;
  if (nd.height == 0) {
    members.push_back(nd.vertex);
  } else {
    for (int leaf : nd.children) {
      members.push_back(nodes_[static_cast<std::size_t>(leaf)].vertex);
    }
  }
  double cut = 0.0;
  for (int v : members) {
    cut += view_->external[static_cast<std::size_t>(v)];
    for (const auto& [u, w] : view_->adjacency[static_cast<std::size_t>(v)]) {
      const int cu = cluster_of_vertex_[static_cast<std::size_t>(u)];
      const int cv = cluster_of_vertex_[static_cast<std::size_t>(v)];
      if (nd.height == 0 ? u != v : cu != cv) cut += w;
    }
  }
  return cut;
}

}  // namespace mrgsum
