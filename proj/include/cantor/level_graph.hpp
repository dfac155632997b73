#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cantor/words.hpp"

namespace cantor {

enum class ThetaSpec { Zeros, DenseSeq };

std::string to_string(ThetaSpec t);
ThetaSpec parse_theta(const std::string& name);

Word theta_word(ThetaSpec t, std::size_t n);

// e R e' iff e = e' or (e, e') = (theta_n 0 w, theta_n 1 w).
bool related(ThetaSpec t, const Word& e, const Word& f);
bool s_related(ThetaSpec t, const Word& e, const Word& f);
// Coordinate k of a non-trivial edge (theta_k 0 w, theta_k 1 w), if (e, f) is one.
std::optional<std::size_t> edge_coordinate(ThetaSpec t, const Word& e, const Word& f);

std::vector<Word> neighbors(ThetaSpec t, const Word& e);
// Edges of s(R) at level n, one pair (theta_k 0 w, theta_k 1 w) per (k, w).
std::vector<std::pair<Word, Word>> level_edges(ThetaSpec t, std::size_t n);

using Path = std::vector<Word>;

// Breadth-first tree of the level containing `root`.
class BfsTree {
 public:
  BfsTree(ThetaSpec t, Word root);
  const Word& root() const noexcept { return root_; }
  std::size_t distance(const Word& v) const { return dist_.at(v); }
  bool reaches(const Word& v) const { return dist_.count(v) != 0; }
  // Path from v back to the root (v first).
  Path path_to_root(const Word& v) const;
  // Vertices in breadth-first order.
  const std::vector<Word>& order() const noexcept { return order_; }

 private:
  Word root_;
  std::map<Word, Word> parent_;
  std::map<Word, std::size_t> dist_;
  std::vector<Word> order_;
};

// The unique s(R)-path from e to f; throws if the words have different lengths.
Path unique_path(ThetaSpec t, const Word& e, const Word& f);

struct TreeReport {
  std::size_t level = 0;
  std::size_t edges = 0;
  bool edge_count_ok = false;
  bool connected = false;
  bool path_structure_checked = false;
  bool path_structure_ok = true;
  std::size_t pairs_checked = 0;
  std::optional<std::string> counterexample;
  bool ok() const noexcept {
    return edge_count_ok && connected && path_structure_ok && !counterexample;
  }
};

// Tree property at level n; the max-coordinate path condition is checked for
// all pairs when n <= path_check_limit.
TreeReport check_tree_level(ThetaSpec t, std::size_t n, std::size_t path_check_limit = 7);

struct LevelOrdering {
  std::vector<Word> order;              // t_0, t_1, ... over 2^{p+1}
  std::vector<std::size_t> layer_sizes;  // |H_0|, |H_1|, ...
};

// t_0 = theta_p 0, then H_1 with theta_p 1 first, then H_2, ...; each H_k
// (the words at path distance k from t_0) in lexicographic order otherwise.
LevelOrdering level_ordering(ThetaSpec t, std::size_t p);

}  // namespace cantor
