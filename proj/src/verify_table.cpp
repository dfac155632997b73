// Table verification deliberately avoids the flip-family, level-graph and
// witness code used to build tables; it reimplements what it needs from the
// definitions.
#include <algorithm>
#include <optional>
#include <string>

#include "cantor/synthesizer.hpp"

namespace cantor {

namespace {

enum class Bit : char { Zero, One, Free };

class Checker {
 public:
  explicit Checker(const SynthesisInstance& inst)
      : inst_(inst), b_(inst.restriction.address.str()) {
    if (inst.family == FamilyKind::AS) member_.emplace(*inst.s);
  }

  // The k-th word of the dense sequence.
  static std::string theta_prefix(std::size_t k) {
    // Length-lexicographic enumeration: binary of k+1 without its leading 1.
    std::string bin;
    for (std::uint64_t v = k + 1; v > 1; v >>= 1) bin.insert(bin.begin(), static_cast<char>('0' + (v & 1)));
    bin.resize(k, '0');
    return bin;
  }

  bool in_s(std::uint64_t n) { return (*member_)(n); }

  // Source relation: some point of N_{u0} is sent into N_{u1} by the k-th map.
  bool source_edge(const std::string& u) {
    if (inst_.family == FamilyKind::AS) return in_s(static_cast<std::uint64_t>(std::count(u.begin(), u.end(), '1')));
    return u == theta_prefix(u.size());
  }

  bool window(std::uint64_t c, std::uint64_t p) {
    for (std::uint64_t i = 0; i <= p; ++i)
      if (in_s(i) != in_s(c + i)) return false;
    return true;
  }

  // Does f_q send the whole cylinder N_w to N_{w with bit q raised}?
  bool flips_cylinder(std::size_t q, const std::string& w) {
    if (w.size() <= q || w[q] != '0' || q < b_.size() || w.compare(0, b_.size(), b_) != 0) return false;
    return source_edge(w.substr(0, q));
  }

  // Some x extending a with f_q(x) extending b.
  bool graph_hits(std::size_t q, const std::string& a, const std::string& b) {
    if (q < b_.size()) return false;
    const std::size_t len = std::max({a.size(), b.size(), b_.size(), q + 1});
    std::vector<Bit> x(len, Bit::Free);
    auto pin = [&](std::size_t i, char c) {
      const Bit want = c == '1' ? Bit::One : Bit::Zero;
      if (x[i] != Bit::Free && x[i] != want) return false;
      x[i] = want;
      return true;
    };
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!pin(i, a[i])) return false;
    for (std::size_t i = 0; i < b_.size(); ++i)
      if (!pin(i, b_[i])) return false;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i == q) {
        if (b[i] != '1') return false;
      } else if (!pin(i, b[i])) {
        return false;
      }
    }
    if (!pin(q, '0')) return false;
    if (inst_.family == FamilyKind::A1) {
      const std::string need = theta_prefix(q);
      for (std::size_t i = 0; i < q; ++i)
        if (!pin(i, need[i])) return false;
      return true;
    }
    std::uint64_t ones = 0, free = 0;
    for (std::size_t i = 0; i < q; ++i) {
      if (x[i] == Bit::One) ++ones;
      if (x[i] == Bit::Free) ++free;
    }
    for (std::uint64_t c = ones; c <= ones + free; ++c)
      if (in_s(c)) return true;
    return false;
  }

 private:
  const SynthesisInstance& inst_;
  std::string b_;
  std::optional<SMembership> member_;
};

std::vector<std::string> all_words(std::size_t n) {
  std::vector<std::string> out{std::string()};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const auto& w : out) {
      next.push_back(w + '0');
      next.push_back(w + '1');
    }
    out = std::move(next);
  }
  return out;
}

bool starts_with(const std::string& w, const std::string& p) {
  return w.size() >= p.size() && w.compare(0, p.size(), p) == 0;
}

std::size_t ones_in(const std::string& w, std::size_t n) {
  return static_cast<std::size_t>(std::count(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n), '1'));
}

}  // namespace

TableReport verify_table(const SynthesisInstance& inst, const ReductionTable& table) {
  TableReport rep;
  const std::size_t d = table.depth;
  const bool as_mode = inst.family == FamilyKind::AS;
  if (table.phi.size() != d || (as_mode && table.theta.size() != d) || (as_mode && !inst.s)) {
    rep.precondition_ok = false;
    rep.violations.push_back({"precondition", Word(), Word(), "phi/theta do not match the table depth"});
    return rep;
  }
  for (std::size_t i = 1; i < d; ++i)
    if (table.phi[i] <= table.phi[i - 1]) {
      rep.precondition_ok = false;
      rep.violations.push_back({"precondition", Word(), Word(), "phi is not strictly increasing"});
      return rep;
    }

  std::map<std::string, std::string> u;
  for (std::size_t n = 0; n <= d; ++n)
    for (const auto& s : all_words(n)) {
      const auto it = table.u.find(Word(s));
      if (it == table.u.end()) {
        rep.precondition_ok = false;
        rep.violations.push_back({"precondition", Word(s), Word(), "missing entry"});
        return rep;
      }
      u[s] = it->second.str();
    }

  Checker chk(inst);
  auto report = [&](const char* cond, const std::string& s, const std::string& t, std::string detail) {
    rep.violations.push_back({cond, Word(s), Word(t), std::move(detail)});
  };

  const std::string b = inst.restriction.address.str();
  if (!starts_with(u[""], b)) report("i", "", "", "U of the empty word leaves B");
  for (const auto& [s, a] : u) {
    if (!s.empty() && !starts_with(a, u[s.substr(0, s.size() - 1)])) report("i", s, "", "not inside its parent");
    if (a.size() < s.size()) report("ii", s, "", "cylinder shallower than the word");
  }

  for (std::size_t n = 1; n <= d; ++n) {
    const auto words = all_words(n);
    for (const auto& s : words)
      for (const auto& t : words) {
        if (s == t) continue;
        ++rep.pairs_checked;
        const std::string& us = u[s];
        const std::string& ut = u[t];
        std::size_t k = 0;
        while (s[k] == t[k]) ++k;
        const bool one_coordinate = s.compare(k + 1, std::string::npos, t, k + 1, std::string::npos) == 0;
        const bool edge = one_coordinate && s[k] == '0' && chk.source_edge(s.substr(0, k));

        if (edge) {
          const std::size_t q = table.phi[k];
          if (!chk.flips_cylinder(q, us)) {
            report("iii", s, t, "f_" + std::to_string(q) + " is not defined on all of U_s");
          } else {
            std::string img = us;
            img[q] = '1';
            if (img != ut) report("iii", s, t, "U_t is not the image of U_s under f_" + std::to_string(q));
          }
        } else {
          if (starts_with(us, ut) || starts_with(ut, us)) report("iv", s, t, "cylinders meet the diagonal");
          for (std::size_t q = 0; q < n; ++q)
            if (chk.graph_hits(q, us, ut)) report("iv", s, t, "cylinders meet the graph of f_" + std::to_string(q));
        }

        if (as_mode && one_coordinate && s[k] == '0') {
          const std::size_t q = table.phi[k];
          const std::uint64_t want = table.theta[k] + ones_in(s, k);
          if (us.size() < q)
            report("card", s, t, "U_s too shallow to fix the card");
          else if (ones_in(us, q) != want)
            report("card", s, t, "card of z up to phi(k) differs from theta(k) + card(s up to k)");
        }
      }
  }

  if (as_mode)
    for (std::size_t k = 0; k < d; ++k) {
      if (!chk.in_s(table.theta[k]) || !chk.window(table.theta[k], k))
        report("theta", std::string(k, '0'), "", "theta(" + std::to_string(k) + ") fails the window identity");
    }
  return rep;
}

}  // namespace cantor
