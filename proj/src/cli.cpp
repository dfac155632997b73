#include "cantor/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "cantor/io.hpp"
#include "cantor/kst.hpp"
#include "cantor/level_graph.hpp"
#include "cantor/structures.hpp"
#include "cantor/suite.hpp"
#include "cantor/synthesizer.hpp"
#include "json.hpp"

namespace cantor::cli {

namespace {

using nlohmann::json;

constexpr int kUsage = 3;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// "@path" reads the file; anything else is taken literally.
std::string inline_or_file(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  const std::string path = arg.substr(1);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::istringstream is(text);
  for (std::string item; std::getline(is, item, sep);) out.push_back(item);
  return out;
}

std::uint64_t effective_seed(std::uint64_t configured) {
  const char* env = std::getenv("CANTOR_LAB_SEED");
  if (!env || !*env) return configured;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used, 0);
    if (used != std::char_traits<char>::length(env)) throw std::invalid_argument(env);
    return v;
  } catch (const std::logic_error&) {
    throw UsageError(std::string("CANTOR_LAB_SEED is not a natural number: ") + env);
  }
}

std::string print(const json& j) { return j.dump(2) + "\n"; }

json table_json(const ReductionTable& t) {
  json u = json::object();
  for (const auto& [s, a] : t.u) u[s.str()] = a.str();
  json j{{"depth", t.depth}, {"phi", t.phi}, {"U", u}, {"digest", table_digest(t)}};
  if (!t.theta.empty()) j["theta"] = t.theta;
  return j;
}

FiniteRelation relation_from_json(const std::string& text) {
  const json j = json::parse(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("pairs"))
    throw UsageError("relation must look like {\"n\":2,\"pairs\":[[0,1]]}");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2) throw UsageError("each pair must be a two-element array");
    pairs.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
  }
  return FiniteRelation(j.at("n").get<std::size_t>(), pairs);
}

json relation_json(const FiniteRelation& r) {
  json pairs = json::array();
  for (const auto& [x, y] : r.pairs()) pairs.push_back({x, y});
  return json{{"n", r.size()}, {"pairs", pairs}};
}

json profile_json(const Profile& p) {
  json out = json::array();
  for (std::size_t i = 0; i < 5; ++i)
    if (p[i]) out.push_back(i);
  return out;
}

int run_app(CLI::App& app, int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"cantor-lab: finite combinatorics of Cantor-space reductions"};
  app.require_subcommand(1);
  std::function<int()> action;
  std::string bounds_text;
  auto bounds = [&] { return bounds_text.empty() ? Bounds{} : bounds_from_json(inline_or_file(bounds_text)); };

  // words
  auto* words = app.add_subcommand("words", "Length-lexicographic enumeration and the dense sequence");
  words->require_subcommand(1);
  std::uint64_t n_arg = 0;
  std::string word_arg;
  words->add_subcommand("psi", "n-th word")->add_option("n", n_arg)->required();
  words->add_subcommand("index", "position of a word")->add_option("word", word_arg)->required();
  words->add_subcommand("dense", "s_n")->add_option("n", n_arg)->required();
  words->add_subcommand("witness", "psi index of the word, whose s_n extends it")->add_option("word", word_arg)->required();
  words->callback([&] {
    action = [&] {
      json j;
      if (words->got_subcommand("psi")) j = {{"n", n_arg}, {"psi", psi(n_arg).str()}};
      if (words->got_subcommand("index")) j = {{"word", word_arg}, {"index", psi_inv(Word(word_arg))}};
      if (words->got_subcommand("dense")) j = {{"n", n_arg}, {"s", dense_seq(n_arg).str()}};
      if (words->got_subcommand("witness")) {
        const auto n = density_witness(Word(word_arg));
        j = {{"word", word_arg}, {"n", n}, {"s", dense_seq(n).str()}};
      }
      out << print(j);
      return 0;
    };
  });

  // graph
  auto* graph = app.add_subcommand("graph", "Level graphs of the tree relation");
  graph->require_subcommand(1);
  std::string theta_name = "zeros", from_arg, to_arg;
  std::size_t level = 0;
  auto* g_edges = graph->add_subcommand("edges", "edges on words of length n");
  auto* g_path = graph->add_subcommand("path", "unique path between two words");
  auto* g_tree = graph->add_subcommand("tree", "connectivity, edge count and path structure at level n");
  auto* g_order = graph->add_subcommand("order", "synthesizer vertex ordering on words of length p+1");
  auto* g_check = graph->add_subcommand("check", "tree property at every level up to --max-level");
  std::string graph_format = "json";
  g_check->add_option("--max-level", level)->required();
  g_check->add_option("--format", graph_format, "json or text");
  for (auto* sub : {g_edges, g_path, g_tree, g_order, g_check}) sub->add_option("--theta", theta_name, "zeros or dense");
  g_edges->add_option("--n", level)->required();
  g_tree->add_option("--n", level)->required();
  g_order->add_option("--p", level)->required();
  g_path->add_option("--from", from_arg)->required();
  g_path->add_option("--to", to_arg)->required();
  graph->callback([&] {
    action = [&]() -> int {
      const ThetaSpec t = parse_theta(theta_name);
      if (graph->got_subcommand(g_check)) {
        if (graph_format != "json" && graph_format != "text") throw UsageError("format must be json or text");
        bool all_ok = true;
        json levels = json::array();
        for (std::size_t n = 0; n <= level; ++n) {
          const TreeReport r = check_tree_level(t, n);
          all_ok = all_ok && r.ok();
          levels.push_back({{"n", n}, {"edges", r.edges}, {"connected", r.connected},
                            {"pairs_checked", r.pairs_checked}, {"status", r.ok() ? "pass" : "refuted"}});
          if (graph_format == "text")
            out << "level " << n << ": " << (r.ok() ? "pass" : "refuted") << " edges=" << r.edges << "\n";
        }
        if (graph_format == "json")
          out << print({{"theta", to_string(t)}, {"levels", levels}, {"status", all_ok ? "pass" : "refuted"}});
        return all_ok ? 0 : 1;
      }
      if (graph->got_subcommand(g_edges)) {
        json edges = json::array();
        for (const auto& [e, f] : level_edges(t, level)) edges.push_back({e.str(), f.str()});
        out << print({{"theta", to_string(t)}, {"n", level}, {"edges", edges}});
      } else if (graph->got_subcommand(g_path)) {
        json path = json::array();
        for (const Word& w : unique_path(t, Word(from_arg), Word(to_arg))) path.push_back(w.str());
        out << print({{"theta", to_string(t)}, {"path", path}});
      } else if (graph->got_subcommand(g_tree)) {
        const TreeReport r = check_tree_level(t, level);
        json j{{"theta", to_string(t)}, {"n", level},           {"edges", r.edges},
               {"connected", r.connected}, {"edge_count_ok", r.edge_count_ok},
               {"path_structure_checked", r.path_structure_checked}, {"pairs_checked", r.pairs_checked},
               {"status", r.ok() ? "pass" : "refuted"}};
        if (r.counterexample) j["counterexample"] = *r.counterexample;
        out << print(j);
        return r.ok() ? 0 : 1;
      } else {
        const LevelOrdering o = level_ordering(t, level);
        json order = json::array();
        for (const Word& w : o.order) order.push_back(w.str());
        out << print({{"theta", to_string(t)}, {"p", level}, {"order", order}, {"layer_sizes", o.layer_sizes}});
      }
      return 0;
    };
  });

  // ruler
  auto* ruler = app.add_subcommand("ruler", "Ruler-based sequences and index sets");
  ruler->require_subcommand(1);
  std::string alpha_text, s_text, s2_text;
  std::size_t length = 32;
  auto* r_gamma = ruler->add_subcommand("gamma", "prefix of gamma_alpha");
  auto* r_beta = ruler->add_subcommand("beta", "prefix of beta_alpha");
  auto* r_set = ruler->add_subcommand("set", "first elements of an index set S");
  for (auto* sub : {r_gamma, r_beta}) {
    sub->add_option("--alpha", alpha_text, "pre|period")->required();
    sub->add_option("--len", length);
  }
  r_set->add_option("--s,--S", s_text, "index set as JSON")->required();
  r_set->add_option("--count", length);
  ruler->callback([&] {
    action = [&] {
      if (ruler->got_subcommand(r_set)) {
        const SSpec s = sspec_from_json(inline_or_file(s_text));
        out << print({{"S", s.describe()}, {"elements", s.first_elements(length)}});
        return 0;
      }
      const AlphaSpec a = alpha_from_json(alpha_text);
      if (ruler->got_subcommand(r_beta)) {
        out << print({{"alpha", a.to_string()}, {"beta", beta_alpha_prefix(a, length).str()}});
      } else {
        std::string g;
        for (std::size_t i = 0; i < length; ++i) g.push_back(static_cast<char>('0' + gamma_alpha(a, i)));
        out << print({{"alpha", a.to_string()}, {"gamma", g}});
      }
      return 0;
    };
  });

  // cyl
  auto* cyl = app.add_subcommand("cyl", "Cylinders, flip maps and relations on described points");
  cyl->require_subcommand(1);
  std::string kind_text, x_text, y_text, v_text, eps_text;
  bool inverse = false;
  std::size_t depth = 0;
  auto* c_rel = cyl->add_subcommand("relation", "decide x R y on eventually periodic points");
  c_rel->add_option("--kind", kind_text, "AS, A1, C1, E0, L0, Delta or Pf")->required();
  c_rel->add_option("--x", x_text)->required();
  c_rel->add_option("--y", y_text);
  c_rel->add_option("--s,--S", s_text);
  auto* c_img = cyl->add_subcommand("image", "image of a cylinder under f^S_n");
  c_img->add_option("--s,--S", s_text)->required();
  c_img->add_option("--n", n_arg)->required();
  c_img->add_option("--word", word_arg)->required();
  c_img->add_flag("--inverse", inverse);
  auto* c_fix = cyl->add_subcommand("fixed-points", "no fixed points along a composition of f^1 maps");
  c_fix->add_option("--v", v_text, "indices, comma separated, applied first to last")->required();
  c_fix->add_option("--eps", eps_text, "signs (+ or -), comma separated")->required();
  c_fix->add_option("--depth", depth)->required();
  cyl->callback([&] {
    action = [&]() -> int {
      if (cyl->got_subcommand(c_rel)) {
        const RelationKind k = parse_relation(kind_text);
        std::optional<SSpec> s;
        if (k == RelationKind::AS) {
          if (s_text.empty()) throw UsageError("relation AS needs --s");
          s = sspec_from_json(inline_or_file(s_text));
        }
        const DescribedPoint x = DescribedPoint::parse(x_text);
        const DescribedPoint y = y_text.empty() ? x : DescribedPoint::parse(y_text);
        const bool r = decide_relation(k, x, y, s ? &*s : nullptr);
        out << print({{"kind", to_string(k)}, {"x", x.to_string()}, {"y", y.to_string()}, {"related", r}});
        return 0;
      }
      if (cyl->got_subcommand(c_img)) {
        ASFamily f(sspec_from_json(inline_or_file(s_text)));
        const auto img = inverse ? f.preimage(n_arg, Word(word_arg)) : f.image(n_arg, Word(word_arg));
        json j{{"n", n_arg}, {"word", word_arg}, {"inverse", inverse}};
        j["image"] = img ? json(img->str()) : json(nullptr);
        out << print(j);
        return 0;
      }
      std::vector<std::size_t> v;
      std::vector<int> eps;
      for (const auto& t : split(v_text, ',')) v.push_back(std::stoul(t));
      for (const auto& t : split(eps_text, ',')) {
        if (t != "+" && t != "-") throw UsageError("signs must be + or -");
        eps.push_back(t == "+" ? 1 : -1);
      }
      const FixedPointReport r = fixed_point_check(v, eps, depth);
      json j{{"reduced", r.reduced}, {"domain_cylinders", r.domain_cylinders}, {"status", r.pass ? "pass" : "refuted"}};
      if (r.counterexample) j["counterexample"] = *r.counterexample;
      out << print(j);
      return r.pass ? 0 : 1;
    };
  });

  // cond
  auto* cond = app.add_subcommand("cond", "Index-set conditions and witness certificates");
  cond->require_subcommand(1);
  cond->add_option("--bounds", bounds_text, "bounds as JSON");
  std::string alpha2_text, c_text, strategy = "greedy", cert_path;
  std::uint64_t p_arg = 0, l_arg = 0, big_p = 8;
  std::size_t samples = 100;
  std::uint64_t seed = kDefaultSeed;
  std::string cert_out;
  cond->add_option("--out", cert_out, "write the certificate to this file");
  auto* k_m = cond->add_subcommand("m", "condition (M) for p up to p_max");
  k_m->alias("M");
  k_m->add_option("--s,--S", s_text)->required();
  auto* k_perp = cond->add_subcommand("perp", "orthogonality window test at p");
  k_perp->add_option("--s,--S", s_text)->required();
  k_perp->add_option("--s2,--S2", s2_text)->required();
  k_perp->add_option("--p", p_arg)->required();
  k_perp->add_flag("--inverse", inverse);
  auto* k_h = cond->add_subcommand("h", "witness for hypothesis (H)");
  k_h->add_option("--s,--S", s_text)->required();
  k_h->add_option("--C", c_text, "clopen set as comma separated addresses (empty: whole space)");
  k_h->add_option("--l", l_arg);
  k_h->add_option("--p", p_arg);
  k_h->add_option("--strategy", strategy, "greedy or least");
  auto* k_mm = cond->add_subcommand("mm", "periodicity witness for a Louveau set");
  k_mm->add_option("--alpha", alpha_text)->required();
  k_mm->add_option("--P", big_p);
  auto* k_pp = cond->add_subcommand("perpperp", "non-occurrence witness for two alphas");
  k_pp->add_option("--alpha", alpha_text)->required();
  k_pp->add_option("--alpha2", alpha2_text)->required();
  auto* k_shift = cond->add_subcommand("shift", "shift family reduction check");
  k_shift->add_option("--n", n_arg)->required();
  k_shift->add_option("--samples", samples);
  k_shift->add_option("--seed", seed);
  auto* k_replay = cond->add_subcommand("replay", "recompute a certificate and compare");
  k_replay->add_option("cert", cert_path, "certificate file")->required();
  cond->callback([&] {
    action = [&]() -> int {
      const Bounds b = bounds();
      WitnessCert cert;
      if (cond->got_subcommand(k_m)) {
        cert = certify_M(sspec_from_json(inline_or_file(s_text)), b);
      } else if (cond->got_subcommand(k_perp)) {
        cert = certify_perp(sspec_from_json(inline_or_file(s_text)), sspec_from_json(inline_or_file(s2_text)), p_arg,
                            b, inverse);
      } else if (cond->got_subcommand(k_h)) {
        std::vector<Word> addrs;
        for (const auto& a : split(c_text, ',')) addrs.emplace_back(a);
        if (addrs.empty()) addrs.emplace_back();
        if (strategy != "greedy" && strategy != "least") throw UsageError("strategy must be greedy or least");
        cert = certify_h(sspec_from_json(inline_or_file(s_text)), ClopenSet(addrs), l_arg, p_arg, b,
                         strategy == "greedy" ? HStrategy::Greedy : HStrategy::LeastIndex);
      } else if (cond->got_subcommand(k_mm)) {
        cert = mm_witness(alpha_from_json(alpha_text), big_p, b);
      } else if (cond->got_subcommand(k_pp)) {
        cert = perpperp_witness(alpha_from_json(alpha_text), alpha_from_json(alpha2_text), b);
      } else if (cond->got_subcommand(k_shift)) {
        cert = certify_shift(n_arg, samples, effective_seed(seed));
      } else {
        const WitnessCert recorded = certificate_from_json(inline_or_file("@" + cert_path));
        const bool ok = replay_certificate(recorded);
        out << print({{"condition", recorded.condition}, {"replayed", ok}});
        return ok ? exit_code(recorded.status) : 1;
      }
      const std::string text = certificate_to_json(cert) + "\n";
      if (cert_out.empty()) {
        out << text;
      } else {
        std::ofstream f(cert_out, std::ios::binary);
        if (!(f << text)) throw std::runtime_error("cannot write certificate to '" + cert_out + "'");
      }
      return exit_code(cert.status);
    };
  });

  // synth
  auto* synth = app.add_subcommand("synth", "Build and verify a reduction table");
  std::string family_name = "as", b_text;
  bool skip_verify = false;
  synth->add_option("--family", family_name, "as or a1");
  synth->add_option("--s,--S", s_text, "index set for the AS family");
  synth->add_option("--B", b_text, "restriction cylinder address");
  synth->add_option("--depth", depth)->required();
  synth->add_option("--bounds", bounds_text);
  synth->add_flag("--no-verify", skip_verify);
  synth->callback([&] {
    action = [&]() -> int {
      SynthesisInstance inst;
      if (family_name == "as") {
        inst.family = FamilyKind::AS;
        if (s_text.empty()) throw UsageError("the AS family needs --s");
        inst.s = sspec_from_json(inline_or_file(s_text));
      } else if (family_name == "a1") {
        inst.family = FamilyKind::A1;
      } else {
        throw UsageError("family must be as or a1");
      }
      inst.restriction = Cylinder{Word(b_text)};
      inst.depth = depth;
      const SynthesisResult res = synthesize(inst, bounds());
      json j{{"instance", inst.describe()}, {"status", to_string(res.status)}, {"note", res.note},
             {"table", table_json(res.table)}};
      Outcome status = res.status;
      if (!skip_verify) {
        const TableReport rep = verify_table(inst, res.table);
        json v = json::array();
        for (const auto& x : rep.violations)
          v.push_back({{"condition", x.condition}, {"s", x.s.str()}, {"t", x.t.str()}, {"detail", x.detail}});
        j["verification"] = {{"pairs_checked", rep.pairs_checked}, {"ok", rep.ok()}, {"violations", v}};
        if (!rep.ok()) status = Outcome::Refuted;
      }
      out << print(j);
      return exit_code(status);
    };
  });

  // struct
  auto* st = app.add_subcommand("struct", "Relation transforms and property profiles");
  st->require_subcommand(1);
  std::string rel_text, sigma_text;
  auto* s_tr = st->add_subcommand("transform", "apply R, R', S or S' to a relation");
  s_tr->add_option("--kind", kind_text, "r, rp, s or sp")->required();
  s_tr->add_option("--rel", rel_text, "{\"n\":..,\"pairs\":[[x,y],..]}")->required();
  auto* s_props = st->add_subcommand("props", "properties 0..4 of a relation");
  s_props->add_option("--rel", rel_text)->required();
  auto* s_sigma = st->add_subcommand("sigma", "classify a property selection");
  s_sigma->add_option("--sigma", sigma_text, "property indices, comma separated");
  st->callback([&] {
    action = [&] {
      if (st->got_subcommand(s_sigma)) {
        Profile sigma;
        for (const auto& t : split(sigma_text, ',')) {
          const auto i = std::stoul(t);
          if (i > 4) throw UsageError("property indices are 0..4");
          sigma[i] = true;
        }
        const SigmaVerdict v = classify_sigma(sigma);
        json j{{"sigma", profile_json(sigma)}, {"verdict", to_string(v)}};
        if (v == SigmaVerdict::EmptyClass) j["confirmed"] = confirm_empty(sigma);
        if (v == SigmaVerdict::DiagonalOnly) j["confirmed"] = confirm_diagonal(sigma);
        out << print(j);
        return 0;
      }
      const FiniteRelation a = relation_from_json(inline_or_file(rel_text));
      if (st->got_subcommand(s_tr)) {
        const FiniteRelation t = transform(parse_transform(kind_text), a);
        out << print({{"kind", kind_text}, {"relation", relation_json(t)}, {"properties", profile_json(check_properties(t))}});
      } else {
        out << print({{"properties", profile_json(check_properties(a))}});
      }
      return 0;
    };
  });

  // kst
  auto* kst = app.add_subcommand("kst", "Nested index sets and the coordinate maps g_n");
  kst->require_subcommand(1);
  std::string fam_name = "pow2";
  std::size_t horizon = 256;
  std::uint64_t n_max = 6;
  auto* k_check = kst->add_subcommand("check", "family invariants and the composition law");
  k_check->add_option("--family", fam_name);
  k_check->add_option("--horizon", horizon);
  k_check->add_option("--n-max", n_max);
  k_check->add_option("--samples", samples);
  k_check->add_option("--seed", seed);
  auto* k_eval = kst->add_subcommand("eval", "g_n on a word, '?' where the horizon is exceeded");
  k_eval->add_option("--family", fam_name);
  k_eval->add_option("--n", n_arg)->required();
  k_eval->add_option("--alpha", word_arg)->required();
  kst->callback([&] {
    action = [&]() -> int {
      if (fam_name != "pow2") throw UsageError("only the pow2 family is available");
      const Pow2Family fam;
      if (kst->got_subcommand(k_eval)) {
        out << print({{"n", n_arg}, {"alpha", word_arg}, {"g", g_eval(fam, n_arg, TritWord(word_arg)).str()}});
        return 0;
      }
      std::mt19937_64 rng(effective_seed(seed));
      const FamilyReport fr = check_family(fam, n_max, horizon);
      std::size_t disagreements = 0, determined = 0;
      for (std::uint64_t n = 1; n <= n_max; ++n)
        for (std::uint64_t m = 0; m < n; ++m) {
          const auto r = composition_law_check(fam, m, n, horizon, samples, rng);
          disagreements += r.disagreements;
          determined += r.determined_positions;
        }
      const bool ok = fr.pass() && disagreements == 0;
      out << print({{"family", fam.name()},
                    {"horizon", horizon},
                    {"n_max", n_max},
                    {"family_invariants", fr.pass()},
                    {"determined_positions", determined},
                    {"disagreements", disagreements},
                    {"status", ok ? "pass" : "refuted"}});
      return ok ? 0 : 1;
    };
  });

  // suite
  auto* suite = app.add_subcommand("suite", "Run the property suite and emit a report");
  std::string groups_text = "default", out_path, format = "json";
  bool timing = false;
  suite->add_option("--groups", groups_text, "comma separated; 'default', 'all' or empty");
  suite->add_option("--bounds", bounds_text);
  suite->add_option("--out", out_path, "report file (default: standard output)");
  suite->add_option("--format", format, "json or text");
  suite->add_option("--seed", seed);
  suite->add_flag("--timing", timing, "include per-group wall time");
  suite->callback([&] {
    action = [&]() -> int {
      SuiteConfig cfg;
      if (groups_text == "default")
        cfg.groups = default_groups();
      else if (groups_text == "all")
        cfg.groups = all_groups();
      else
        cfg.groups = split(groups_text, ',');
      if (format != "json" && format != "text") throw UsageError("format must be json or text");
      cfg.format = format == "json" ? ReportFormat::Json : ReportFormat::Text;
      cfg.bounds = bounds();
      cfg.seed = effective_seed(seed);
      cfg.timing = timing;
      cfg.output = out_path;
      const SuiteReport r = run_suite(cfg);
      const std::string text = cfg.format == ReportFormat::Json ? report_to_json(r, cfg.timing) : report_to_text(r);
      if (cfg.output.empty()) {
        out << text;
      } else {
        std::ofstream f(cfg.output, std::ios::binary);
        if (!(f << text)) throw std::runtime_error("cannot write report to '" + cfg.output + "'");
      }
      return exit_code(r.status);
    };
  });

  try {
    if (const int code = run_app(app, argc, argv, out, err); code != 0 || !action) return code;
    return action();
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"cantor-lab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace cantor::cli
