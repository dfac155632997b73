#include "cantor/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cantor/io.hpp"
#include "cantor/kst.hpp"
#include "cantor/level_graph.hpp"
#include "cantor/sampling.hpp"
#include "cantor/structures.hpp"
#include "cantor/synthesizer.hpp"
#include "json.hpp"

namespace cantor {

namespace {

using nlohmann::json;

CheckResult make_check(std::string name, bool ok, std::map<std::string, std::string> params, std::string detail = {}) {
  CheckResult c;
  c.name = std::move(name);
  c.status = ok ? Outcome::Pass : Outcome::Refuted;
  c.params = std::move(params);
  c.detail = std::move(detail);
  return c;
}

std::string str(std::uint64_t v) { return std::to_string(v); }

std::vector<CheckResult> group_words(std::mt19937_64&, const Bounds&) {
  std::vector<CheckResult> out;
  constexpr std::size_t max_len = 12;
  bool bijective = true;
  std::uint64_t expected = 0;
  for (std::size_t len = 0; len <= max_len; ++len)
    for (const Word& w : words_of_length(len)) {
      // Length-lexicographic order means consecutive indices.
      if (psi_inv(w) != expected || psi(expected) != w) bijective = false;
      ++expected;
    }
  out.push_back(make_check("psi-bijection", bijective, {{"max_len", str(max_len)}}));

  constexpr std::uint64_t n_dense = 1 << 12;
  bool lengths = true;
  for (std::uint64_t n = 0; n <= n_dense; ++n) lengths = lengths && dense_seq(n).size() == n;
  out.push_back(make_check("dense-length", lengths, {{"n_max", str(n_dense)}}));

  constexpr std::size_t density_len = 8;
  bool dense = true;
  for (std::size_t len = 0; len <= density_len; ++len)
    for (const Word& w : words_of_length(len)) dense = dense && w.is_prefix_of(dense_seq(density_witness(w)));
  out.push_back(make_check("density", dense, {{"max_len", str(density_len)}}));

  const std::vector<std::string> listed{"", "0", "1", "00", "01", "10", "11"};
  bool values = true;
  for (std::uint64_t i = 0; i < listed.size(); ++i) values = values && psi(i) == Word(listed[i]);
  out.push_back(make_check("psi-values", values, {{"count", str(listed.size())}}));
  return out;
}

std::vector<CheckResult> group_graph(std::mt19937_64&, const Bounds&) {
  std::vector<CheckResult> out;
  for (ThetaSpec t : {ThetaSpec::Zeros, ThetaSpec::DenseSeq}) {
    bool ok = true;
    std::string detail;
    std::size_t pairs = 0;
    for (std::size_t n = 1; n <= 10; ++n) {
      const TreeReport r = check_tree_level(t, n, 7);
      pairs += r.pairs_checked;
      if (!r.ok() && ok) {
        ok = false;
        detail = "level " + std::to_string(n) + (r.counterexample ? ": " + *r.counterexample : std::string());
      }
    }
    out.push_back(make_check("tree-" + to_string(t), ok, {{"n_max", "10"}, {"path_pairs", str(pairs)}}, detail));
  }
  return out;
}

std::vector<CheckResult> group_ruler(std::mt19937_64& rng, const Bounds&) {
  std::vector<CheckResult> out;
  std::uint64_t failures = 0;
  for (std::uint64_t n = 1; n <= 10; ++n)
    for (std::uint64_t i = 0; i + 1 < (std::uint64_t{1} << n); ++i)
      for (std::uint64_t l = 0; l <= 32; ++l)
        if (ruler_val((l << n) + i) != ruler_val(i)) ++failures;
  out.push_back(make_check("ruler-block-periodicity", failures == 0,
                           {{"n_max", "10"}, {"l_max", "32"}, {"failures", str(failures)}}));

  bool palindromes = true;
  std::string detail;
  for (int s = 0; s < 10; ++s) {
    const AlphaSpec alpha = random_point(rng, 4, 4);
    for (std::size_t n = 1; n <= 10; ++n)
      if (!is_symmetric(beta_alpha_prefix(alpha, (std::size_t{1} << n) - 1)) && palindromes) {
        palindromes = false;
        detail = "alpha " + alpha.to_string() + ", n=" + std::to_string(n);
      }
  }
  out.push_back(make_check("beta-palindromes", palindromes, {{"samples", "10"}, {"n_max", "10"}}, detail));
  return out;
}

CheckResult replayed(std::string name, WitnessCert cert) {
  CheckResult c;
  c.name = std::move(name);
  c.status = cert.status;
  if (!replay_certificate(cert)) {
    c.status = Outcome::Refuted;
    c.detail = "certificate does not replay";
  }
  c.certificates.push_back(std::move(cert));
  return c;
}

std::vector<CheckResult> group_conditions(std::mt19937_64& rng, const Bounds& b) {
  std::vector<CheckResult> out;
  Outcome m_status = Outcome::Pass;
  std::size_t sets = 0;
  for (std::uint64_t m = 1; m <= 4; ++m)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
      std::vector<std::uint64_t> f;
      for (std::uint64_t r = 1; r < m; ++r)
        if (mask >> (r - 1) & 1U) f.push_back(r);
      m_status = combine(m_status, check_M(SSpec::modular(m, f), b).status);
      ++sets;
    }
  CheckResult mc;
  mc.name = "M-modular";
  mc.status = m_status;
  mc.params = {{"m_max", "4"}, {"sets", str(sets)}, {"p_max", str(b.p_max)}};
  out.push_back(mc);

  for (int i = 0; i < 3; ++i) {
    const AlphaSpec alpha = random_point(rng, 3, 3);
    out.push_back(replayed("MM-louveau-" + std::to_string(i), mm_witness(alpha, 8, b)));
  }

  out.push_back(replayed("perpperp-reference",
                         perpperp_witness(DescribedPoint::parse("0"), DescribedPoint::parse("1|0"), b)));
  for (int i = 0; i < 3;) {
    const AlphaSpec a = random_point(rng, 3, 3);
    const AlphaSpec a2 = random_point(rng, 3, 3);
    if (!first_difference(a, a2)) continue;
    out.push_back(replayed("perpperp-" + std::to_string(i), perpperp_witness(a, a2, b)));
    ++i;
  }

  out.push_back(replayed("H-greedy",
                         certify_h(SSpec::modular(2, {}), ClopenSet::full(), 0, 2, b, HStrategy::Greedy)));
  for (std::uint64_t n = 0; n <= 2; ++n)
    out.push_back(replayed("shift-" + std::to_string(n), certify_shift(n, 50, rng())));
  return out;
}

std::vector<CheckResult> group_synth(std::mt19937_64&, const Bounds& b) {
  std::vector<CheckResult> out;
  const std::vector<std::pair<std::string, SSpec>> specs{{"omega", SSpec::omega()},
                                                         {"mod2", SSpec::modular(2, {})},
                                                         {"mod3-1", SSpec::modular(3, {1})},
                                                         {"louveau-0", SSpec::louveau(DescribedPoint::parse("0"))}};
  auto run = [&](const std::string& name, const SynthesisInstance& inst) {
    const SynthesisResult res = synthesize(inst, b);
    const TableReport rep = verify_table(inst, res.table);
    CheckResult c;
    c.name = name;
    c.status = res.status == Outcome::Pass && !rep.ok() ? Outcome::Refuted : res.status;
    c.params = {{"depth", str(res.table.depth)}, {"digest", table_digest(res.table)},
                {"violations", str(rep.violations.size())}};
    if (!rep.violations.empty()) c.detail = rep.violations.front().condition + " " + rep.violations.front().detail;
    out.push_back(c);
  };
  for (const auto& [name, s] : specs)
    for (const std::string addr : {"", "1", "11"}) {
      SynthesisInstance inst;
      inst.family = FamilyKind::AS;
      inst.s = s;
      inst.restriction = Cylinder{Word(addr)};
      inst.depth = 6;
      run("AS-" + name + "-B" + (addr.empty() ? std::string("full") : addr), inst);
    }
  for (const std::string addr : {"", "0"}) {
    SynthesisInstance inst;
    inst.family = FamilyKind::A1;
    inst.restriction = Cylinder{Word(addr)};
    inst.depth = 5;
    run("A1-B" + (addr.empty() ? std::string("full") : addr), inst);
  }
  return out;
}

std::vector<CheckResult> group_struct(std::mt19937_64&, const Bounds&) {
  std::vector<CheckResult> out;
  bool profiles = true, embedding = true;
  std::size_t relations = 0;
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
      const FiniteRelation a = FiniteRelation::from_mask(n, mask);
      ++relations;
      const Profile r = check_properties(transform(TransformKind::R, a));
      const Profile rp = check_properties(transform(TransformKind::RPrime, a));
      const Profile s = check_properties(transform(TransformKind::S, a));
      const Profile sp = check_properties(transform(TransformKind::SPrime, a));
      profiles = profiles && r[0] && r[3] && r[4] && rp[1] && rp[3] && rp[4] && s[0] && s[2] && sp[1] && sp[2];
      for (TransformKind k : {TransformKind::R, TransformKind::RPrime, TransformKind::S, TransformKind::SPrime}) {
        const FiniteRelation t = transform(k, a);
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y)
            embedding = embedding && a.has(x, y) == t.has(doubled(x, 0), doubled(y, 1));
      }
    }
  out.push_back(make_check("transform-profiles", profiles, {{"relations", str(relations)}}));
  out.push_back(make_check("embedding", embedding, {{"relations", str(relations)}}));

  bool verdicts = true;
  std::map<std::string, std::string> counts;
  std::map<std::string, std::size_t> tally;
  for (unsigned bits = 0; bits < 32; ++bits) {
    const Profile sigma(bits);
    const SigmaVerdict v = classify_sigma(sigma);
    ++tally[to_string(v)];
    if (v == SigmaVerdict::EmptyClass) verdicts = verdicts && confirm_empty(sigma);
    if (v == SigmaVerdict::DiagonalOnly) verdicts = verdicts && confirm_diagonal(sigma);
  }
  for (const auto& [k, v] : tally) counts[k] = str(v);
  out.push_back(make_check("sigma-classes", verdicts, counts));
  return out;
}

std::vector<CheckResult> group_kst(std::mt19937_64& rng, const Bounds&) {
  std::vector<CheckResult> out;
  const Pow2Family fam;
  const FamilyReport fr = check_family(fam, 8, 1 << 12);
  out.push_back(make_check("family-invariants", fr.pass(), {{"n_max", "8"}, {"horizon", "4096"}}));

  std::size_t determined = 0, disagreements = 0;
  for (std::uint64_t n = 1; n <= 6; ++n)
    for (std::uint64_t m = 0; m < n; ++m) {
      const CompositionReport r = composition_law_check(fam, m, n, 256, 100, rng);
      determined += r.determined_positions;
      disagreements += r.disagreements;
    }
  out.push_back(make_check("composition-law", disagreements == 0,
                           {{"n_max", "6"}, {"horizon", "256"}, {"determined", str(determined)}}));

  const StabilityReport st = cylinder_stability_check(fam, 2, Word("101"), 128, 20, rng);
  out.push_back(make_check("cylinder-stability", st.pass, {{"n", "2"}, {"s", "101"}}));
  return out;
}

std::vector<CheckResult> group_control(std::mt19937_64&, const Bounds& b) {
  const PerpReport r = check_perp(SSpec::omega(), SSpec::omega(), 2, b);
  CheckResult c;
  c.name = "perp-self";
  c.status = r.status;
  c.params = {{"p", "2"}};
  if (r.refuting_c) c.params["refuting_c"] = str(*r.refuting_c);
  c.detail = "deliberate negative control";
  return {c};
}

using GroupFn = std::function<std::vector<CheckResult>(std::mt19937_64&, const Bounds&)>;

const std::map<std::string, GroupFn>& registry() {
  static const std::map<std::string, GroupFn> groups{
      {"words", group_words},         {"graph", group_graph}, {"ruler", group_ruler},
      {"conditions", group_conditions}, {"synth", group_synth}, {"struct", group_struct},
      {"kst", group_kst},             {"control", group_control}};
  return groups;
}

std::uint64_t group_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : name) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return seed ^ h;
}

GroupResult run_group(const std::string& name, std::uint64_t seed, const Bounds& b) {
  const auto start = std::chrono::steady_clock::now();
  GroupResult g;
  g.name = name;
  std::mt19937_64 rng(group_seed(seed, name));
  try {
    g.checks = registry().at(name)(rng, b);
  } catch (const InvariantViolation& e) {
    g.checks.push_back(CheckResult{"invariant", Outcome::Refuted, {}, {}, e.what()});
  } catch (const std::exception& e) {
    g.checks.push_back(CheckResult{"error", Outcome::Inconclusive, {}, {}, e.what()});
  }
  for (const auto& c : g.checks) g.status = combine(g.status, c.status);
  g.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return g;
}

}  // namespace

const std::vector<std::string>& all_groups() {
  static const std::vector<std::string> names{"words", "graph", "ruler", "conditions",
                                              "synth", "struct", "kst",   "control"};
  return names;
}

const std::vector<std::string>& default_groups() {
  static const std::vector<std::string> names(all_groups().begin(), all_groups().end() - 1);
  return names;
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  cfg.bounds.validate();
  for (const auto& g : cfg.groups)
    if (!registry().count(g)) throw std::invalid_argument("unknown check group '" + g + "'");
  std::vector<std::string> selected;
  for (const auto& g : all_groups())
    if (std::find(cfg.groups.begin(), cfg.groups.end(), g) != cfg.groups.end()) selected.push_back(g);

  std::vector<std::future<GroupResult>> pending;
  for (const auto& g : selected)
    pending.push_back(std::async(std::launch::async, run_group, g, cfg.seed, cfg.bounds));

  SuiteReport r;
  r.seed = cfg.seed;
  r.bounds = cfg.bounds;
  for (auto& f : pending) {
    r.groups.push_back(f.get());
    r.status = combine(r.status, r.groups.back().status);
  }
  return r;
}

std::string report_to_json(const SuiteReport& r, bool timing) {
  json j;
  j["schema"] = "cantor-lab/report";
  j["version"] = kReportVersion;
  j["seed"] = r.seed;
  j["bounds"] = json::parse(bounds_to_json(r.bounds));
  j["status"] = to_string(r.status);
  j["groups"] = json::array();
  for (const auto& g : r.groups) {
    json jg{{"name", g.name}, {"status", to_string(g.status)}, {"checks", json::array()}};
    if (timing) jg["seconds"] = g.seconds;
    for (const auto& c : g.checks) {
      json jc{{"name", c.name}, {"status", to_string(c.status)}, {"params", c.params}};
      if (!c.detail.empty()) jc["detail"] = c.detail;
      if (!c.certificates.empty()) {
        jc["certificates"] = json::array();
        for (const auto& cert : c.certificates) jc["certificates"].push_back(json::parse(certificate_to_json(cert)));
      }
      jg["checks"].push_back(std::move(jc));
    }
    j["groups"].push_back(std::move(jg));
  }
  return j.dump(2) + "\n";
}

std::string report_to_text(const SuiteReport& r) {
  std::ostringstream os;
  os << "seed " << r.seed << '\n';
  for (const auto& g : r.groups) {
    os << g.name << ": " << to_string(g.status) << '\n';
    for (const auto& c : g.checks) {
      os << "  " << c.name << ": " << to_string(c.status);
      for (const auto& [k, v] : c.params) os << ' ' << k << '=' << v;
      if (!c.detail.empty()) os << " (" << c.detail << ')';
      os << '\n';
    }
  }
  os << "overall: " << to_string(r.status) << '\n';
  return os.str();
}

int exit_code(Outcome o) noexcept {
  switch (o) {
    case Outcome::Pass: return 0;
    case Outcome::Refuted: return 1;
    case Outcome::Inconclusive: return 2;
  }
  return 2;
}

}  // namespace cantor
