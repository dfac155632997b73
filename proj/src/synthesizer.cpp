#include "cantor/synthesizer.hpp"

#include <algorithm>
#include <deque>
#include <iomanip>
#include <memory>
#include <sstream>

namespace cantor {

std::string SynthesisInstance::describe() const {
  std::ostringstream os;
  os << (family == FamilyKind::AS ? "AS(" + (s ? s->describe() : std::string("?")) + ")" : std::string("A1"))
     << " B=N_\"" << restriction.address.str() << "\" d=" << depth;
  return os.str();
}

std::optional<std::uint64_t> least_dense_extension(const Word& c, std::uint64_t lower) {
  lower = std::max<std::uint64_t>(lower, c.size());
  std::optional<std::size_t> last_one;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) last_one = i;
  // psi(n) has length L exactly for n in [2^L - 1, 2^{L+1} - 2].
  for (std::size_t L = 0; L < 62; ++L) {
    const std::uint64_t top = (std::uint64_t{2} << L) - 2;
    if (top < lower) continue;
    if (L <= c.size()) {
      if (last_one && *last_one >= L) continue;
      const std::uint64_t n = psi_inv(c.prefix(L));
      if (n >= lower) return n;
    } else {
      const std::uint64_t lo = psi_inv(c + Word::zeros(L - c.size()));
      const std::uint64_t hi = psi_inv(c + Word::ones(L - c.size()));
      const std::uint64_t n = std::max(lo, lower);
      if (n <= hi) return n;
    }
  }
  return std::nullopt;
}

namespace {

std::unique_ptr<FlipFamily> make_family(const SynthesisInstance& inst) {
  std::unique_ptr<FlipFamily> f;
  if (inst.family == FamilyKind::AS)
    f = std::make_unique<ASFamily>(*inst.s);
  else
    f = std::make_unique<A1Family>();
  f->restrict_to(inst.restriction);
  return f;
}

// Some x in N_a with f_q(x) in N_b.
bool graph_meets(const FlipFamily& f, std::size_t q, const Word& a, const Word& b) {
  Word b0 = b;
  if (b.size() > q) {
    if (b[q] != 1) return false;
    b0.set(q, 0);
  }
  if (!a.comparable_with(b0)) return false;
  const Word m = a.size() >= b0.size() ? a : b0;
  const std::vector<Word> probes = m.size() > q ? std::vector<Word>{m} : [&] {
    std::vector<Word> out;
    for (const Word& t : words_of_length(q + 1 - m.size())) out.push_back(m + t);
    return out;
  }();
  for (const Word& x : probes) {
    const Word deep = x.size() >= f.restriction().depth() ? x : x + f.restriction().address.drop(x.size());
    if (!deep.comparable_with(f.restriction().address)) continue;
    const auto img = f.image(q, deep);
    if (img && img->comparable_with(b)) return true;
  }
  return false;
}

class LevelBuilder {
 public:
  LevelBuilder(const SynthesisInstance& inst, const FlipFamily& f, const ReductionTable& table, std::size_t p)
      : inst_(inst), f_(f), table_(table), p_(p), order_(level_ordering(inst.theta(), p).order) {
    for (std::size_t i = 0; i < order_.size(); ++i) index_[order_[i]] = i;
  }

  const std::vector<Word>& order() const noexcept { return order_; }

  // Step across the tree edge between t_from and t_to.
  Word step(std::size_t from, std::size_t to, const Word& u) const {
    const Word& a = order_[from];
    const Word& b = order_[to];
    std::optional<Word> out;
    if (auto k = edge_coordinate(inst_.theta(), a, b))
      out = f_.image(table_.phi.at(*k), u);
    else if (auto k2 = edge_coordinate(inst_.theta(), b, a))
      out = f_.preimage(table_.phi.at(*k2), u);
    else
      throw InvariantViolation("no tree edge between " + a.str() + " and " + b.str());
    if (!out) throw InvariantViolation("map undefined on U for edge " + a.str() + " -- " + b.str());
    return *out;
  }

  // Fills U^n_q for every q <= n by induction on the path length to t_n.
  void propagate_from(std::size_t n, std::vector<Word>& cur, std::size_t limit) const {
    const BfsTree tree(inst_.theta(), order_[n]);
    std::vector<std::size_t> by_distance;
    for (std::size_t q = 0; q <= limit; ++q)
      if (q != n) by_distance.push_back(q);
    std::stable_sort(by_distance.begin(), by_distance.end(), [&](std::size_t x, std::size_t y) {
      return tree.distance(order_[x]) < tree.distance(order_[y]);
    });
    for (std::size_t q : by_distance) {
      const std::size_t m = index_.at(tree.path_to_root(order_[q])[1]);
      if (m > limit) throw InvariantViolation("tree path leaves the constructed prefix");
      cur[q] = step(m, q, cur[m]);
    }
  }

  // First pair (k, l), both <= n and not related, whose cylinders meet the
  // diagonal or a graph f_q with q <= p.
  std::optional<std::pair<std::size_t, std::size_t>> acyclicity_violation(const std::vector<Word>& cur,
                                                                          std::size_t n) const {
    for (std::size_t k = 0; k <= n; ++k)
      for (std::size_t l = 0; l <= n; ++l) {
        if (k == l || related(inst_.theta(), order_[k], order_[l])) continue;
        if (cur[k].comparable_with(cur[l])) return std::pair{k, l};
        for (std::size_t q = 0; q <= p_; ++q)
          if (graph_meets(f_, q, cur[k], cur[l])) return std::pair{k, l};
      }
    return std::nullopt;
  }

  std::size_t index(const Word& w) const { return index_.at(w); }

 private:
  const SynthesisInstance& inst_;
  const FlipFamily& f_;
  const ReductionTable& table_;
  std::size_t p_;
  std::vector<Word> order_;
  std::map<Word, std::size_t> index_;
};

}  // namespace

SynthesisResult synthesize(const SynthesisInstance& inst, const Bounds& b) {
  if (inst.family == FamilyKind::AS && !inst.s) throw std::invalid_argument("AS synthesis needs a set S");
  const auto family = make_family(inst);
  const FlipFamily& f = *family;

  SynthesisResult res;
  ReductionTable& table = res.table;
  table.u[Word()] = inst.restriction.address;

  for (std::size_t p = 0; p < inst.depth; ++p) {
    LevelBuilder level(inst, f, table, p);
    const auto& order = level.order();
    const Word c = table.u.at(order[0].prefix(p));
    const std::uint64_t lower = p == 0 ? 0 : table.phi.back() + 1;

    Word u00;
    if (inst.family == FamilyKind::AS) {
      const HWitness h = h_witness(*inst.s, ClopenSet::of(Cylinder{c}), lower, p, b, HStrategy::LeastIndex);
      if (h.status != Outcome::Pass) {
        res.status = Outcome::Inconclusive;
        res.note = "witness search failed at level " + std::to_string(p + 1) + ": " + h.note;
        return res;
      }
      table.phi.push_back(h.n);
      table.theta.push_back(h.card);
      u00 = h.cylinder.address;
    } else {
      // C has depth >= p+1 so that C^2 misses every graph f_q with q <= p,
      // and contains an edge of f_{n0}.
      const auto n0 = least_dense_extension(c, std::max<std::uint64_t>(lower, p + 1));
      if (!n0 || *n0 > b.n_max) {
        res.status = Outcome::Inconclusive;
        res.note = "no dense index within n_max at level " + std::to_string(p + 1);
        return res;
      }
      table.phi.push_back(*n0);
      u00 = dense_seq(*n0).appended(0);
    }

    std::vector<Word> cur(order.size());
    cur[0] = u00;
    // Case 1: t_1 = theta_p 1.
    if (order.size() > 1) {
      if (order[1] != theta_word(inst.theta(), p).appended(1)) throw InvariantViolation("level ordering broken");
      cur[1] = level.step(0, 1, cur[0]);
      cur[0] = level.step(1, 0, cur[1]);
    }
    for (std::size_t n = 2; n < order.size(); ++n) {
      const std::vector<Word> prev = cur;
      const BfsTree to_root(inst.theta(), order[0]);
      const std::size_t r = level.index(to_root.path_to_root(order[n])[1]);
      if (r >= n) throw InvariantViolation("ordering does not keep prefixes connected");
      if (order[n].prefix(p) == order[r].prefix(p)) throw InvariantViolation("Case 1 reached with n > 1");
      if (inst.family == FamilyKind::AS && !related(inst.theta(), order[r], order[n]))
        throw InvariantViolation("Case 2.2 cannot hold for the zero sequence");
      cur[n] = level.step(r, n, prev[r]);
      level.propagate_from(n, cur, n);
      for (std::size_t q = 0; q < n; ++q)
        if (!prev[q].is_prefix_of(cur[q])) throw InvariantViolation("U^n_q is not inside U^{n-1}_q");

      if (inst.family == FamilyKind::A1) {
        // Shrink until no unrelated pair meets the diagonal or a low graph.
        for (std::size_t guard = 0;; ++guard) {
          const auto bad = level.acyclicity_violation(cur, n);
          if (!bad) break;
          if (guard > 64) throw InvariantViolation("acyclicity shrinkage did not terminate");
          const std::size_t k = bad->first;
          cur[k] = cur[k].appended(0);
          level.propagate_from(k, cur, n);
          ++res.shrink_steps;
        }
      }
    }
    for (std::size_t k = 0; k < order.size(); ++k) table.u[order[k]] = cur[k];
    table.depth = p + 1;
  }
  res.note = "complete";
  return res;
}

Word extract_u(const ReductionTable& table, const Word& x) {
  const auto it = table.u.find(x);
  if (it == table.u.end()) throw std::out_of_range("word '" + x.str() + "' is deeper than the table");
  return it->second;
}

std::string table_digest(const ReductionTable& table) {
  std::ostringstream os;
  os << "d=" << table.depth << ";phi=";
  for (auto v : table.phi) os << v << ',';
  os << ";theta=";
  for (auto v : table.theta) os << v << ',';
  for (const auto& [s, a] : table.u) os << ";" << s.str() << "->" << a.str();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : os.str()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::ostringstream hex;
  hex << std::hex << std::setw(16) << std::setfill('0') << h;
  return hex.str();
}

}  // namespace cantor
