#include "cantor/io.hpp"

#include "json.hpp"
#include <sstream>
#include <stdexcept>

namespace cantor {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

std::vector<std::uint64_t> naturals(const json& j, const char* field) {
  if (!j.is_array()) throw std::invalid_argument(std::string("field '") + field + "' must be an array");
  std::vector<std::uint64_t> out;
  for (const auto& v : j) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
      throw std::invalid_argument(std::string("field '") + field + "' must hold naturals");
    out.push_back(v.get<std::uint64_t>());
  }
  return out;
}

std::uint64_t natural(const json& j, const char* field) {
  if (!j.contains(field)) throw std::invalid_argument(std::string("missing field '") + field + "'");
  const auto& v = j.at(field);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw std::invalid_argument(std::string("field '") + field + "' must be a natural");
  return v.get<std::uint64_t>();
}

AlphaSpec alpha_from(const json& j) {
  if (j.is_string()) return DescribedPoint::parse(j.get<std::string>());
  if (!j.is_object()) throw std::invalid_argument("alpha must be an object or a 'pre|period' string");
  return DescribedPoint(Word(j.value("pre", std::string())), Word(j.at("period").get<std::string>()));
}

json alpha_to(const AlphaSpec& a) { return json{{"pre", a.pre().str()}, {"period", a.period().str()}}; }

json sspec_to(const SSpec& s) {
  if (const auto* mod = std::get_if<ModularSet>(&s.repr())) {
    if (mod->m == 1) return json{{"kind", "omega"}};
    return json{{"kind", "modular"}, {"m", mod->m}, {"F", mod->residues}};
  }
  return std::visit(
      [](const auto& b) -> json {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, PeriodicBeta>)
          return json{{"kind", "periodic"}, {"pre", b.pre}, {"period", b.period}};
        else if constexpr (std::is_same_v<T, LouveauBeta>)
          return json{{"kind", "louveau"}, {"alpha", alpha_to(b.alpha)}};
        else
          return json{{"kind", "shift"}, {"n", b.n}};
      },
      std::get<BetaSpec>(s.repr()));
}

}  // namespace

SSpec sspec_from_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw std::invalid_argument("S spec must be an object with a string 'kind'");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "omega") return SSpec::omega();
  if (kind == "shift") return SSpec::shift(natural(j, "n"));
  if (kind == "modular") {
    std::vector<std::uint64_t> f;
    if (j.contains("F")) f = naturals(j.at("F"), "F");
    return SSpec::modular(natural(j, "m"), std::move(f));
  }
  if (kind == "louveau") {
    if (!j.contains("alpha")) throw std::invalid_argument("louveau spec needs 'alpha'");
    return SSpec::louveau(alpha_from(j.at("alpha")));
  }
  if (kind == "periodic") {
    PeriodicBeta b;
    if (j.contains("pre")) b.pre = naturals(j.at("pre"), "pre");
    if (!j.contains("period")) throw std::invalid_argument("periodic spec needs 'period'");
    b.period = naturals(j.at("period"), "period");
    return SSpec::from_beta(std::move(b));
  }
  throw std::invalid_argument("unknown S kind '" + kind + "'");
}

std::string sspec_to_json(const SSpec& s) { return sspec_to(s).dump(); }

AlphaSpec alpha_from_json(std::string_view text) {
  if (!text.empty() && text.front() != '{' && text.front() != '"') return DescribedPoint::parse(text);
  return alpha_from(parse_json(text));
}

Bounds bounds_from_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw std::invalid_argument("bounds must be a JSON object");
  Bounds b;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0))
      throw std::invalid_argument("bound '" + key + "' must be a natural");
    const auto v = value.get<std::uint64_t>();
    if (key == "p_max") b.p_max = v;
    else if (key == "q_max") b.q_max = v;
    else if (key == "k_max") b.k_max = v;
    else if (key == "c_max") b.c_max = v;
    else if (key == "n_scan" || key == "N_scan") b.n_scan = v;
    else if (key == "n_max") b.n_max = v;
    else throw std::invalid_argument("unknown bound '" + key + "'");
  }
  b.validate();
  return b;
}

std::string bounds_to_json(const Bounds& b) {
  return json{{"p_max", b.p_max}, {"q_max", b.q_max}, {"k_max", b.k_max},
              {"c_max", b.c_max}, {"n_scan", b.n_scan}, {"n_max", b.n_max}}
      .dump();
}

std::string certificate_to_json(const WitnessCert& c) {
  json j;
  j["schema"] = "cantor-lab/certificate";
  j["version"] = kCertificateVersion;
  j["condition"] = c.condition;
  j["inputs"] = c.inputs;
  j["params"] = c.params;
  j["bound"] = c.bound;
  j["status"] = to_string(c.status);
  j["note"] = c.note;
  return j.dump(2);
}

WitnessCert certificate_from_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || j.value("schema", "") != "cantor-lab/certificate")
    throw std::invalid_argument("not a cantor-lab certificate");
  if (j.value("version", 0) != kCertificateVersion) throw std::invalid_argument("unsupported certificate version");
  WitnessCert c;
  c.condition = j.at("condition").get<std::string>();
  c.inputs = j.at("inputs").get<std::map<std::string, std::string>>();
  c.params = j.at("params").get<std::map<std::string, std::uint64_t>>();
  c.bound = j.at("bound").get<std::uint64_t>();
  c.status = parse_outcome(j.at("status").get<std::string>());
  c.note = j.value("note", "");
  return c;
}

WitnessCert recompute_certificate(const WitnessCert& c) {
  auto param = [&](const std::string& key) {
    const auto it = c.params.find(key);
    if (it == c.params.end()) throw std::invalid_argument("certificate lacks parameter '" + key + "'");
    return it->second;
  };
  auto input = [&](const std::string& key) -> const std::string& {
    const auto it = c.inputs.find(key);
    if (it == c.inputs.end()) throw std::invalid_argument("certificate lacks input '" + key + "'");
    return it->second;
  };
  Bounds b;
  if (c.condition == "MM") {
    b.q_max = param("q_max");
    return mm_witness(DescribedPoint::parse(input("alpha")), param("P"), b);
  }
  if (c.condition == "PERPPERP") {
    b.n_scan = param("n_scan");
    b.c_max = param("c_max");
    return perpperp_witness(DescribedPoint::parse(input("alpha")), DescribedPoint::parse(input("alpha2")), b);
  }
  if (c.condition == "M") {
    b.p_max = param("p_max");
    b.q_max = param("q_max");
    b.k_max = param("k_max");
    return certify_M(sspec_from_json(input("S")), b);
  }
  if (c.condition == "PERP" || c.condition == "PERP_INV") {
    b.c_max = param("c_max");
    return certify_perp(sspec_from_json(input("S")), sspec_from_json(input("S2")), param("p"), b,
                        c.condition == "PERP_INV");
  }
  if (c.condition == "H") {
    b.n_max = param("n_max");
    b.q_max = param("q_max");
    b.k_max = param("k_max");
    std::vector<Word> addrs;
    std::istringstream is(input("C"));
    for (std::string a; std::getline(is, a, ',');) addrs.emplace_back(a);
    if (addrs.empty()) addrs.emplace_back();
    const auto strategy = input("strategy") == "greedy" ? HStrategy::Greedy : HStrategy::LeastIndex;
    return certify_h(sspec_from_json(input("S")), ClopenSet(addrs), param("l"), param("p"), b, strategy);
  }
  if (c.condition == "SHIFT") return certify_shift(param("n"), param("samples"), param("seed"));
  throw std::invalid_argument("unknown certificate condition '" + c.condition + "'");
}

bool replay_certificate(const WitnessCert& c) {
  try {
    return recompute_certificate(c) == c;
  } catch (const InvariantViolation&) {
    return false;
  }
}

}  // namespace cantor
