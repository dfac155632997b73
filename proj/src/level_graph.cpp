#include "cantor/level_graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace cantor {

std::string to_string(ThetaSpec t) { return t == ThetaSpec::Zeros ? "zeros" : "dense"; }

ThetaSpec parse_theta(const std::string& name) {
  if (name == "zeros") return ThetaSpec::Zeros;
  if (name == "dense" || name == "dense-seq") return ThetaSpec::DenseSeq;
  throw std::invalid_argument("unknown theta '" + name + "' (expected zeros or dense)");
}

Word theta_word(ThetaSpec t, std::size_t n) {
  return t == ThetaSpec::Zeros ? Word::zeros(n) : dense_seq(n);
}

namespace {

void require_same_length(const Word& e, const Word& f) {
  if (e.size() != f.size()) throw std::invalid_argument("level relation needs words of equal length");
}

}  // namespace

std::optional<std::size_t> edge_coordinate(ThetaSpec t, const Word& e, const Word& f) {
  require_same_length(e, f);
  const std::size_t k = common_prefix(e, f);
  if (k == e.size()) return std::nullopt;
  if (e[k] != 0 || f[k] != 1) return std::nullopt;
  for (std::size_t i = k + 1; i < e.size(); ++i)
    if (e[i] != f[i]) return std::nullopt;
  if (e.prefix(k) != theta_word(t, k)) return std::nullopt;
  return k;
}

bool related(ThetaSpec t, const Word& e, const Word& f) {
  require_same_length(e, f);
  return e == f || edge_coordinate(t, e, f).has_value();
}

bool s_related(ThetaSpec t, const Word& e, const Word& f) {
  return related(t, e, f) || related(t, f, e);
}

std::vector<Word> neighbors(ThetaSpec t, const Word& e) {
  std::vector<Word> out;
  for (std::size_t k = 0; k < e.size(); ++k)
    if (e.prefix(k) == theta_word(t, k)) out.push_back(e.flipped(k));
  return out;
}

std::vector<std::pair<Word, Word>> level_edges(ThetaSpec t, std::size_t n) {
  std::vector<std::pair<Word, Word>> out;
  for (std::size_t k = 0; k < n; ++k) {
    const Word th = theta_word(t, k);
    for (const Word& w : words_of_length(n - k - 1))
      out.emplace_back(th.appended(0) + w, th.appended(1) + w);
  }
  return out;
}

BfsTree::BfsTree(ThetaSpec t, Word root) : root_(std::move(root)) {
  std::deque<Word> queue{root_};
  dist_[root_] = 0;
  while (!queue.empty()) {
    Word v = std::move(queue.front());
    queue.pop_front();
    order_.push_back(v);
    for (Word& u : neighbors(t, v)) {
      if (dist_.count(u)) continue;
      dist_[u] = dist_[v] + 1;
      parent_.emplace(u, v);
      queue.push_back(std::move(u));
    }
  }
}

Path BfsTree::path_to_root(const Word& v) const {
  if (!reaches(v)) throw std::invalid_argument("vertex not reachable from root");
  Path p{v};
  while (p.back() != root_) p.push_back(parent_.at(p.back()));
  return p;
}

Path unique_path(ThetaSpec t, const Word& e, const Word& f) {
  require_same_length(e, f);
  Path p = BfsTree(t, f).path_to_root(e);
  return p;
}

TreeReport check_tree_level(ThetaSpec t, std::size_t n, std::size_t path_check_limit) {
  TreeReport r;
  r.level = n;
  const auto edges = level_edges(t, n);
  r.edges = edges.size();
  r.edge_count_ok = edges.size() + 1 == (std::size_t{1} << n);

  // Connectivity from the edge list alone, via union-find over indices.
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::size_t> parent(count);
  for (std::size_t i = 0; i < count; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = count;
  for (const auto& [a, b] : edges) {
    const auto ra = find(psi_inv(a) - psi_inv(Word::zeros(n)));
    const auto rb = find(psi_inv(b) - psi_inv(Word::zeros(n)));
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  r.connected = components == 1;

  if (n > path_check_limit) return r;
  r.path_structure_checked = true;
  const auto vertices = words_of_length(n);
  for (const Word& target : vertices) {
    BfsTree tree(t, target);
    for (const Word& source : vertices) {
      if (source == target) continue;
      ++r.pairs_checked;
      std::size_t l = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (source[i] != target[i]) l = i;
      const Path p = tree.path_to_root(source);
      std::size_t changes_at_l = 0;
      bool above = false;
      for (std::size_t j = 0; j + 1 < p.size(); ++j) {
        const std::size_t c = common_prefix(p[j], p[j + 1]);
        if (c == l) ++changes_at_l;
        if (c > l) above = true;
      }
      if (changes_at_l != 1 || above) {
        r.path_structure_ok = false;
        std::ostringstream os;
        os << "path " << source.str() << " -> " << target.str() << " changes coordinate " << l << ' '
           << changes_at_l << " times" << (above ? " and a higher one" : "");
        r.counterexample = os.str();
        return r;
      }
    }
  }
  return r;
}

LevelOrdering level_ordering(ThetaSpec t, std::size_t p) {
  const Word th = theta_word(t, p);
  const Word t0 = th.appended(0);
  const Word t1 = th.appended(1);
  BfsTree tree(t, t0);
  std::vector<std::vector<Word>> layers;
  for (const Word& v : tree.order()) {
    const auto d = tree.distance(v);
    if (layers.size() <= d) layers.resize(d + 1);
    layers[d].push_back(v);
  }
  LevelOrdering out;
  for (std::size_t k = 0; k < layers.size(); ++k) {
    auto& layer = layers[k];
    std::sort(layer.begin(), layer.end());
    if (k == 1) std::stable_partition(layer.begin(), layer.end(), [&](const Word& w) { return w == t1; });
    out.layer_sizes.push_back(layer.size());
    out.order.insert(out.order.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace cantor
