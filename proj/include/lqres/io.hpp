#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lqres/corpus.hpp"
#include "lqres/ideal.hpp"
#include "lqres/resolution.hpp"
#include "lqres/verify.hpp"

namespace lqres {

using json = nlohmann::json;

// Ideal file before the coefficient field is fixed. Indices are 1-based as
// written in the file.
struct RawIdealFile {
  std::string field = "QQ";
  std::vector<std::string> variables;
  std::vector<std::string> generators;
  std::optional<std::vector<std::size_t>> order;
  std::map<std::size_t, std::vector<std::string>> certificate;  // step k -> forms
};

namespace detail {

inline std::string trim_copy(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

inline std::vector<std::string> split_items(const std::string& s, bool also_whitespace) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || (also_whitespace && std::isspace(static_cast<unsigned char>(c)))) {
      if (auto t = trim_copy(cur); !t.empty()) out.push_back(t);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (auto t = trim_copy(cur); !t.empty()) out.push_back(t);
  return out;
}

inline std::size_t parse_index(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError("expected a positive integer, got '" + s + "'");
  return static_cast<std::size_t>(std::stoul(s));
}

inline RawIdealFile parse_ideal_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  RawIdealFile raw;
  try {
    // Ring data may sit under "ring" or at the top level.
    const auto& ring = j.contains("ring") ? j.at("ring") : j;
    if (ring.contains("field")) {
      raw.field = ring.at("field").is_string() ? ring.at("field").get<std::string>()
                                               : std::to_string(ring.at("field").get<long>());
    }
    raw.variables = ring.at("variables").get<std::vector<std::string>>();
    raw.generators = j.at("generators").get<std::vector<std::string>>();
    if (j.contains("order")) raw.order = j.at("order").get<std::vector<std::size_t>>();
    if (j.contains("certificate"))
      for (const auto& [k, forms] : j.at("certificate").items())
        raw.certificate[parse_index(k)] = forms.get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed ideal JSON: ") + e.what());
  }
  return raw;
}

inline RawIdealFile parse_ideal_plain(const std::string& text) {
  RawIdealFile raw;
  std::istringstream in(text);
  std::string line, key;
  bool have_vars = false;
  auto handle = [&](const std::string& k, const std::string& value) {
    if (k == "field") {
      if (auto v = trim_copy(value); !v.empty()) raw.field = v;
    } else if (k == "variables" || k == "vars") {
      for (auto& v : split_items(value, true)) raw.variables.push_back(v);
      have_vars = true;
    } else if (k == "generators" || k == "gens") {
      for (auto& g : split_items(value, false)) raw.generators.push_back(g);
    } else if (k == "order") {
      if (!raw.order) raw.order.emplace();
      for (auto& i : split_items(value, true)) raw.order->push_back(parse_index(i));
    } else if (k == "certificate") {
      if (trim_copy(value).empty()) return;
      auto colon = value.find(':');
      if (colon == std::string::npos) throw ParseError("certificate lines look like 'k: form, form'");
      auto step = parse_index(trim_copy(value.substr(0, colon)));
      auto& forms = raw.certificate[step];
      for (auto& f : split_items(value.substr(colon + 1), false)) forms.push_back(f);
    } else {
      throw ParseError("unknown key '" + k + "'");
    }
  };
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim_copy(line).empty()) continue;
    if (std::isspace(static_cast<unsigned char>(line[0]))) {
      if (key.empty()) throw ParseError("continuation line before any key");
      handle(key, line);
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'key: value', got '" + trim_copy(line) + "'");
    key = trim_copy(line.substr(0, colon));
    std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
    handle(key, line.substr(colon + 1));
  }
  if (!have_vars) throw ParseError("ideal file declares no variables");
  return raw;
}

}  // namespace detail

// Accepts the JSON form (first non-blank character '{') or the line-based
// text form:
//   field: QQ
//   variables: x, y, z
//   generators: x^2, x*y, y^2
//   order: 1 2 3
//   certificate:
//     2: x
//     3: x, y
inline RawIdealFile parse_ideal_file(const std::string& text) {
  auto first = std::find_if(text.begin(), text.end(), [](unsigned char c) { return !std::isspace(c); });
  RawIdealFile raw = first != text.end() && *first == '{' ? detail::parse_ideal_json(text) : detail::parse_ideal_plain(text);
  if (raw.generators.empty()) throw ParseError("ideal file lists no generators");
  return raw;
}

template <ExactField F>
struct IdealInput {
  IdealPresentation<F> ideal;
  std::optional<std::vector<std::size_t>> order;  // 0-based
  std::optional<std::vector<std::vector<Polynomial<F>>>> certificate;  // steps k = 1..m of the ordered ideal
};

template <ExactField F>
IdealInput<F> instantiate(const RawIdealFile& raw) {
  Ring ring(raw.variables);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : raw.generators) gens.push_back(ring.parse<F>(g));
  IdealInput<F> out{IdealPresentation<F>(ring, std::move(gens)), std::nullopt, std::nullopt};
  const std::size_t m = out.ideal.size();
  if (raw.order) {
    std::vector<std::size_t> order;
    for (auto i : *raw.order) {
      if (i == 0 || i > m) throw ParseError("order index " + std::to_string(i) + " out of range");
      order.push_back(i - 1);
    }
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() != m || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError("order must list every generator exactly once");
    out.order = std::move(order);
  }
  if (!raw.certificate.empty()) {
    std::vector<std::vector<Polynomial<F>>> cert(m);
    for (const auto& [k, forms] : raw.certificate) {
      if (k < 1 || k > m) throw ParseError("certificate step " + std::to_string(k) + " out of range");
      for (const auto& f : forms) cert[k - 1].push_back(ring.parse<F>(f));
    }
    out.certificate = std::move(cert);
  }
  return out;
}

template <ExactField F>
std::string write_ideal_text(const IdealPresentation<F>& ideal,
                             const std::optional<std::vector<std::size_t>>& order = std::nullopt) {
  std::ostringstream out;
  out << "field: " << F::name() << '\n' << "variables: ";
  for (std::size_t i = 0; i < ideal.ring().names().size(); ++i) out << (i ? ", " : "") << ideal.ring().names()[i];
  out << "\ngenerators: ";
  for (std::size_t i = 0; i < ideal.size(); ++i) out << (i ? ", " : "") << ideal.ring().format(ideal.generator(i));
  out << '\n';
  if (order) {
    out << "order:";
    for (auto i : *order) out << ' ' << i + 1;
    out << '\n';
  }
  return out.str();
}

template <ExactField F>
json certificate_to_json(const ColonCertificate<F>& cert, const Ring& ring) {
  json forms = json::object();
  for (std::size_t k = 1; k < cert.forms.size(); ++k) {
    json list = json::array();
    for (const auto& u : cert.forms[k]) list.push_back(ring.format(u));
    forms[std::to_string(k + 1)] = list;
  }
  return {{"q_values", cert.q_values}, {"q_max", cert.q_max}, {"forms", forms}, {"definitive", cert.definitive}};
}

inline json failure_to_json(const CertificationFailure& f, const Ring& ring) {
  json bad = json::array();
  for (const auto& m : f.offending) bad.push_back(ring.format(m));
  return {{"failed_at", f.k}, {"offending_colon_generators", bad}, {"reason", f.reason}};
}

template <ExactField F>
json resolution_to_json(const Resolution<F>& res, const Ring& ring) {
  json modules = json::array(), diffs = json::array(), aug = json::array();
  for (const auto& m : res.complex().modules()) modules.push_back(m.shifts());
  for (const auto& g : res.augmentation()) aug.push_back(ring.format(g));
  for (const auto& d : res.complex().differentials()) {
    json entries = json::array();
    for (std::size_t j = 0; j < d.source().rank(); ++j)
      for (const auto& [i, p] : d.column(j)) entries.push_back(json::array({i, j, ring.format(p)}));
    diffs.push_back(entries);
  }
  return {{"format", "lqres-resolution"},
          {"version", 1},
          {"ring", {{"field", F::name()}, {"variables", ring.names()}}},
          {"degree", res.degree()},
          {"modules", modules},
          {"augmentation", aug},
          {"differentials", diffs}};
}

inline std::string resolution_field(const json& j) {
  try {
    const auto& f = j.at("ring").at("field");
    return f.is_string() ? f.get<std::string>() : std::to_string(f.get<long>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("resolution JSON lacks ring.field: ") + e.what());
  }
}

template <ExactField F>
struct ImportedResolution {
  Ring ring;
  Resolution<F> resolution;
};

// Entries are imported without degree checks so that corrupted files reach
// the checkers instead of failing here.
template <ExactField F>
ImportedResolution<F> resolution_from_json(const json& j) {
  try {
    if (j.value("format", std::string()) != "lqres-resolution") throw ParseError("not an lqres resolution file");
    Ring ring(j.at("ring").at("variables").get<std::vector<std::string>>());
    std::vector<GradedFreeModule> modules;
    for (const auto& m : j.at("modules")) modules.emplace_back(m.get<std::vector<int>>());
    std::vector<Polynomial<F>> aug;
    for (const auto& g : j.at("augmentation")) aug.push_back(ring.parse<F>(g.get<std::string>()));
    const auto& diffs = j.at("differentials");
    if (modules.empty() ? !diffs.empty() : diffs.size() + 1 != modules.size())
      throw ParseError("need one differential per module above F_0");
    std::vector<GradedMap<F>> maps;
    for (std::size_t i = 1; i < modules.size(); ++i) {
      GradedMap<F> d(modules[i], modules[i - 1]);
      for (const auto& e : diffs[i - 1]) {
        auto row = e.at(0).get<std::size_t>(), col = e.at(1).get<std::size_t>();
        if (row >= modules[i - 1].rank() || col >= modules[i].rank())
          throw ParseError("differential " + std::to_string(i) + " entry index out of range");
        d.set_unchecked(row, col, ring.parse<F>(e.at(2).get<std::string>()));
      }
      maps.push_back(std::move(d));
    }
    if (!modules.empty() && aug.size() != modules[0].rank()) throw ParseError("augmentation length differs from rank F_0");
    Resolution<F> res(FreeComplex<F>(std::move(modules), std::move(maps)), std::move(aug), j.at("degree").get<int>());
    return {std::move(ring), std::move(res)};
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed resolution JSON: ") + e.what());
  } catch (const HomogeneityError& e) {
    throw ParseError(std::string("resolution JSON has an inhomogeneous polynomial: ") + e.what());
  }
}

inline json betti_to_json(const BettiTable& t) {
  json entries = json::array();
  for (const auto& [key, v] : t.entries()) entries.push_back({{"i", key.first}, {"j", key.second}, {"beta", v}});
  return {{"totals", t.totals()}, {"entries", entries}};
}

inline json report_to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json entry = {{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    if (!c.witness.empty()) entry["witness"] = c.witness;
    checks.push_back(entry);
  }
  return {{"checks", checks},
          {"all_passed", report.all_passed()},
          {"exactness_basis", report.exactness_basis},
          {"e_max", report.e_max}};
}

// One line of a corpus manifest.
struct CorpusRecord {
  std::string family;  // power | veronese | random_lq | alexander_dual | linear_substitution
  std::size_t n = 0;
  int d = 0;
  std::size_t m = 0;
  std::optional<std::uint64_t> seed;
  SimplicialComplexFacets complex;
  std::string name;
};

inline std::vector<CorpusRecord> parse_manifest(const std::string& text) {
  std::vector<CorpusRecord> out;
  try {
    auto j = json::parse(text);
    const auto& list = j.is_array() ? j : j.at("records");
    for (const auto& r : list) {
      CorpusRecord rec;
      rec.family = r.at("family").get<std::string>();
      rec.n = r.value("n", std::size_t{0});
      rec.d = r.value("d", 0);
      rec.m = r.value("m", std::size_t{0});
      if (r.contains("seed")) rec.seed = r.at("seed").get<std::uint64_t>();
      rec.name = r.value("name", std::string());
      if (r.contains("facets")) {
        rec.complex.vertices = r.value("vertices", rec.n);
        for (const auto& f : r.at("facets")) {
          std::vector<std::size_t> facet;
          for (auto v : f.get<std::vector<std::size_t>>()) {
            if (v == 0) throw ParseError("facet vertices are 1-based");
            facet.push_back(v - 1);
          }
          rec.complex.facets.push_back(std::move(facet));
        }
        if (r.contains("shelling")) {
          std::vector<std::size_t> s;
          for (auto v : r.at("shelling").get<std::vector<std::size_t>>()) {
            if (v == 0) throw ParseError("shelling indices are 1-based");
            s.push_back(v - 1);
          }
          rec.complex.shelling = std::move(s);
        }
      }
      out.push_back(std::move(rec));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed manifest: ") + e.what());
  }
  return out;
}

template <ExactField F>
struct CorpusEntry {
  std::string name;
  IdealPresentation<F> ideal;
  std::optional<std::vector<std::size_t>> order;
};

// Expands one record; random draws that have no linear-quotients order
// come back as nullopt.
template <ExactField F>
std::optional<CorpusEntry<F>> expand_record(const CorpusRecord& rec, std::uint64_t default_seed) {
  const std::uint64_t seed = rec.seed.value_or(default_seed);
  auto label = [&](const std::string& base) { return rec.name.empty() ? base : rec.name; };
  const std::string nd = std::to_string(rec.n) + "_" + std::to_string(rec.d);
  if (rec.family == "power") {
    auto I = power_ideal<F>(rec.n, rec.d);
    return CorpusEntry<F>{label("power_" + nd), I, std::nullopt};
  }
  if (rec.family == "veronese") {
    auto I = squarefree_veronese<F>(rec.n, rec.d);
    return CorpusEntry<F>{label("veronese_" + nd), I, std::nullopt};
  }
  if (rec.family == "alexander_dual") {
    auto I = alexander_dual_ideal<F>(rec.complex);
    return CorpusEntry<F>{label("alexander_dual_" + std::to_string(rec.complex.vertices)), I, std::nullopt};
  }
  if (rec.family == "random_lq") {
    auto r = sample_lq_ideal<F>(rec.n, rec.d, rec.m, seed);
    if (auto* inst = std::get_if<LqInstance<F>>(&r))
      return CorpusEntry<F>{label("random_lq_" + nd + "_" + std::to_string(rec.m) + "_s" + std::to_string(seed)),
                            inst->ideal, std::nullopt};
    return std::nullopt;
  }
  if (rec.family == "linear_substitution") {
    auto I = random_linear_substitution(power_ideal<F>(rec.n, rec.d), seed);
    return CorpusEntry<F>{label("substituted_power_" + nd + "_s" + std::to_string(seed)), I, std::nullopt};
  }
  throw ParseError("unknown corpus family '" + rec.family + "'");
}

}  // namespace lqres
