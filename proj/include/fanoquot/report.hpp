#pragma once

// Analysis pipeline behind the command-line front end: group input formats,
// report assembly and deterministic text/JSON rendering.

#include "age.hpp"
#include "endo.hpp"
#include "group.hpp"
#include "permutation.hpp"
#include "rational.hpp"
#include "spectrum.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fanoquot {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr double kOracleTolerance = 1e-9;

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitInputError = 2,
  kExitCapExceeded = 3,
  kExitOracleDisagreement = 4,
};

enum class OutputFormat { Text, Json };

struct AnalysisRequest {
  enum class Source { Generators, Table, Family };

  Source source = Source::Generators;
  std::string generators;  // JSON object, JSON array of cycle strings, or ';'-separated cycles
  std::string table_path;
  std::string family;      // e.g. "heisenberg:3" or "dihedral:4*cyclic:2^6"
  std::size_t degree = 0;  // generators only; 0 = infer
  bool fixed_point = false;
  std::optional<std::int64_t> endo_d;
  std::size_t cap = kDefaultCap;
  bool oracle = false;
  OutputFormat format = OutputFormat::Text;
  bool verbose = false;
  bool timing = false;
};

struct OracleSummary {
  std::size_t checks = 0;
  double max_error = 0;
  bool agreed = true;
  std::string failure;
};

struct AnalysisReport {
  std::size_t degree = 1;
  std::size_t order = 1;
  std::vector<Permutation> generators;
  std::vector<CycleTypeDigest> cycle_types;
  bool lemma_shortcut = true;
  Verdict verdict;
  std::optional<EndoCertificate> endo;
  std::optional<OracleSummary> oracle;
  std::vector<AgeReport> elements;  // verbose only
  std::optional<double> seconds;
};

// ---------------------------------------------------------------------------
// Group inputs

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  const auto e = s.find_last_not_of(" \t\r\n");
  return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

inline std::size_t max_point(const std::vector<std::string>& cycles) {
  std::size_t n = 1;
  for (const auto& c : cycles) n = std::max(n, parse_cycles(c).degree());
  return n;
}

}  // namespace detail

struct GeneratorSet {
  std::size_t degree = 1;
  std::vector<Permutation> generators;
};

// Accepts {"degree": n, "generators": [...]}, a JSON array of cycle strings,
// or plain cycle notation with generators separated by ';'.
inline GeneratorSet parse_generator_set(const std::string& text, std::size_t degree = 0) {
  const std::string body = detail::trim(text);
  std::vector<std::string> cycles;
  if (!body.empty() && (body.front() == '{' || body.front() == '[')) {
    const Json j = Json::parse(body);
    const Json& list = j.is_object() ? j.at("generators") : j;
    if (j.is_object() && j.contains("degree")) {
      const std::size_t declared = j.at("degree").get<std::size_t>();
      if (degree != 0 && degree != declared)
        throw std::invalid_argument("degree " + std::to_string(degree) + " conflicts with JSON degree " +
                                    std::to_string(declared));
      degree = declared;
    }
    for (const auto& g : list) cycles.push_back(g.get<std::string>());
  } else {
    std::string cur;
    for (char ch : body + ";") {
      if (ch == ';') {
        if (!detail::trim(cur).empty()) cycles.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
  }
  GeneratorSet out;
  out.degree = degree != 0 ? degree : detail::max_point(cycles);
  for (const auto& c : cycles) out.generators.push_back(parse_cycles(c, out.degree));
  return out;
}

inline Json generator_set_to_json(const GeneratorSet& gs) {
  Json gens = Json::array();
  for (const auto& g : gs.generators) gens.push_back(format_cycles(g));
  return Json{{"degree", gs.degree}, {"generators", gens}};
}

// {"size": k, "table": [[...], ...]}
inline MultiplicationTable table_from_json(const Json& j) {
  const auto size = j.at("size").get<std::size_t>();
  const auto rows = j.at("table").get<std::vector<std::vector<std::size_t>>>();
  if (rows.size() != size)
    throw InvalidTable("table has " + std::to_string(rows.size()) + " rows but size is " + std::to_string(size));
  return MultiplicationTable(rows);
}

inline Json table_to_json(const MultiplicationTable& t) {
  return Json{{"size", t.size()}, {"table", t.rows()}};
}

inline PermutationGroup build_group(const AnalysisRequest& req) {
  switch (req.source) {
    case AnalysisRequest::Source::Generators: {
      GeneratorSet gs = parse_generator_set(req.generators, req.degree);
      if (req.fixed_point) {
        ++gs.degree;
        for (auto& g : gs.generators) g = g.extended(gs.degree);
      }
      return close_generators(gs.degree, gs.generators, req.cap);
    }
    case AnalysisRequest::Source::Table: {
      std::ifstream in(req.table_path);
      if (!in) throw std::invalid_argument("cannot open table file '" + req.table_path + "'");
      return regular_representation(table_from_json(Json::parse(in)), req.fixed_point, req.cap);
    }
    case AnalysisRequest::Source::Family:
      return regular_representation(parse_family(req.family), req.fixed_point, req.cap);
  }
  throw std::logic_error("unknown group source");
}

// ---------------------------------------------------------------------------
// Pipeline

inline OracleSummary run_oracle(const std::vector<CycleTypeDigest>& digest) {
  OracleSummary s;
  for (const auto& d : digest) {
    try {
      const SpectrumExponents spec = spectrum_exponents(d.report.element);
      for (const auto& [chart, age] : d.report.chart_ages) {
        const double numeric = age_via_spectrum(spec, chart.convert_to<std::int64_t>());
        const double err = std::abs(numeric - to_double(age));
        ++s.checks;
        s.max_error = std::max(s.max_error, err);
        if (err > kOracleTolerance && s.agreed) {
          s.agreed = false;
          s.failure = "chart " + chart.str() + " of " + format_cycles(d.report.element) + ": exact " +
                      to_string(age) + " vs numeric " + std::to_string(numeric);
        }
      }
    } catch (const OracleFailure& e) {
      s.agreed = false;
      if (s.failure.empty()) s.failure = format_cycles(d.report.element) + ": " + e.what();
    }
  }
  return s;
}

inline AnalysisReport analyze(const PermutationGroup& group, const AnalysisRequest& req) {
  AnalysisReport r;
  r.degree = group.degree();
  r.order = group.order();
  r.generators = group.generators();
  r.cycle_types = digest_by_cycle_type(group);
  r.lemma_shortcut = lemma_shortcut(group);
  r.verdict = reid_tai_verdict(group);
  if (req.endo_d) r.endo = certificate(group, *req.endo_d, false);
  if (req.oracle) r.oracle = run_oracle(r.cycle_types);
  if (req.verbose)
    for (const auto& g : group.elements()) r.elements.push_back(analyze_element(g));
  return r;
}

// ---------------------------------------------------------------------------
// JSON

namespace detail {

inline Json age_report_to_json(const AgeReport& a) {
  Json charts = Json::array();
  for (const auto& [w, age] : a.chart_ages) charts.push_back({{"weight", w.str()}, {"age", to_string(age)}});
  Json qr = Json::array();
  for (const auto& w : a.quasi_reflection_charts) qr.push_back(w.str());
  return Json{{"element", format_cycles(a.element)},
              {"cycle_type", a.type.lengths},
              {"order", a.order.str()},
              {"lower_bound", to_string(a.lower_bound)},
              {"chart_ages", charts},
              {"min_age", to_string(a.min_age)},
              {"quasi_reflection_charts", qr}};
}

inline AgeReport age_report_from_json(const Json& j, std::size_t degree) {
  AgeReport a;
  a.element = parse_cycles(j.at("element").get<std::string>(), degree);
  a.type = CycleType{degree, j.at("cycle_type").get<std::vector<std::size_t>>()};
  a.order = BigInt(j.at("order").get<std::string>());
  a.lower_bound = parse_rational(j.at("lower_bound").get<std::string>());
  for (const auto& c : j.at("chart_ages"))
    a.chart_ages.emplace(BigInt(c.at("weight").get<std::string>()), parse_rational(c.at("age").get<std::string>()));
  a.min_age = parse_rational(j.at("min_age").get<std::string>());
  for (const auto& w : j.at("quasi_reflection_charts")) a.quasi_reflection_charts.emplace_back(w.get<std::string>());
  return a;
}

}  // namespace detail

inline Json to_json(const AnalysisReport& r) {
  Json gens = Json::array();
  for (const auto& g : r.generators) gens.push_back(format_cycles(g));

  Json types = Json::array();
  for (const auto& d : r.cycle_types) {
    Json entry = detail::age_report_to_json(d.report);
    entry["multiplicity"] = d.multiplicity;
    types.push_back(std::move(entry));
  }

  Json witnesses = Json::array();
  for (const auto& w : r.verdict.witnesses)
    witnesses.push_back({{"element", format_cycles(w.element)}, {"chart", w.chart.str()}, {"age", to_string(w.age)}});

  Json out;
  out["schema"] = kSchemaVersion;
  out["group"] = {{"degree", r.degree}, {"order", r.order}, {"generators", gens}};
  out["cycle_types"] = std::move(types);
  out["lemma_shortcut"] = r.lemma_shortcut;
  out["verdict"] = {{"kind", to_string(r.verdict.kind)},
                    {"extension", is_extension(r.verdict.kind)},
                    {"min_age", r.verdict.min_age ? Json(to_string(*r.verdict.min_age)) : Json(nullptr)},
                    {"witnesses", witnesses}};
  if (r.endo) {
    out["endo"] = {{"exponent", r.endo->exponent},
                   {"dimension", r.endo->dimension},
                   {"group_order", r.endo->group_order},
                   {"commutes", r.endo->commutes},
                   {"valid", r.endo->valid()},
                   {"degree", r.endo->degree.str()}};
  }
  if (r.oracle) {
    out["oracle"] = {{"checks", r.oracle->checks},
                     {"max_error", r.oracle->max_error},
                     {"agreed", r.oracle->agreed},
                     {"failure", r.oracle->failure}};
  }
  if (!r.elements.empty()) {
    Json elems = Json::array();
    for (const auto& a : r.elements) elems.push_back(detail::age_report_to_json(a));
    out["elements"] = std::move(elems);
  }
  if (r.seconds) out["seconds"] = *r.seconds;
  return out;
}

inline AnalysisReport report_from_json(const Json& j) {
  if (j.at("schema").get<int>() != kSchemaVersion)
    throw std::invalid_argument("unsupported report schema " + j.at("schema").dump());
  AnalysisReport r;
  const Json& g = j.at("group");
  r.degree = g.at("degree").get<std::size_t>();
  r.order = g.at("order").get<std::size_t>();
  for (const auto& s : g.at("generators")) r.generators.push_back(parse_cycles(s.get<std::string>(), r.degree));
  for (const auto& t : j.at("cycle_types"))
    r.cycle_types.push_back({detail::age_report_from_json(t, r.degree), t.at("multiplicity").get<std::size_t>()});
  r.lemma_shortcut = j.at("lemma_shortcut").get<bool>();
  const Json& v = j.at("verdict");
  r.verdict.kind = verdict_kind_from_string(v.at("kind").get<std::string>());
  if (!v.at("min_age").is_null()) r.verdict.min_age = parse_rational(v.at("min_age").get<std::string>());
  for (const auto& w : v.at("witnesses"))
    r.verdict.witnesses.push_back({parse_cycles(w.at("element").get<std::string>(), r.degree),
                                   BigInt(w.at("chart").get<std::string>()),
                                   parse_rational(w.at("age").get<std::string>())});
  if (j.contains("endo")) {
    const Json& e = j.at("endo");
    EndoCertificate c;
    c.exponent = e.at("exponent").get<std::int64_t>();
    c.dimension = e.at("dimension").get<std::size_t>();
    c.group_order = e.at("group_order").get<std::size_t>();
    c.commutes = e.at("commutes").get<std::vector<bool>>();
    c.degree = BigInt(e.at("degree").get<std::string>());
    r.endo = std::move(c);
  }
  if (j.contains("oracle")) {
    const Json& o = j.at("oracle");
    r.oracle = OracleSummary{o.at("checks").get<std::size_t>(), o.at("max_error").get<double>(),
                             o.at("agreed").get<bool>(), o.at("failure").get<std::string>()};
  }
  if (j.contains("elements"))
    for (const auto& a : j.at("elements")) r.elements.push_back(detail::age_report_from_json(a, r.degree));
  if (j.contains("seconds")) r.seconds = j.at("seconds").get<double>();
  return r;
}

// ---------------------------------------------------------------------------
// Text

inline std::string to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "group: degree " << r.degree << ", order " << r.order << "\n";
  os << "generators:";
  if (r.generators.empty()) os << " (none)";
  for (const auto& g : r.generators) os << ' ' << format_cycles(g);
  os << "\n\ncycle types:\n";
  for (const auto& d : r.cycle_types) {
    const AgeReport& a = d.report;
    os << "  " << format_cycle_type(a.type) << " x" << d.multiplicity << "  rep " << format_cycles(a.element)
       << "  order " << a.order << "  bound " << to_string(a.lower_bound) << "  min age " << to_string(a.min_age);
    os << "  charts {";
    bool first = true;
    for (const auto& [w, age] : a.chart_ages) {
      os << (first ? "" : ", ") << w << ": " << to_string(age);
      first = false;
    }
    os << "}";
    if (!a.quasi_reflection_charts.empty()) os << "  quasi-reflection";
    os << "\n";
  }
  os << "\nno (12)/(123)/(12)(34) types: " << (r.lemma_shortcut ? "yes" : "no") << "\n";
  os << "verdict: " << to_string(r.verdict.kind);
  if (is_extension(r.verdict.kind)) os << " (canonical refinement)";
  os << "\n";
  if (r.verdict.min_age) os << "minimum age: " << to_string(*r.verdict.min_age) << "\n";
  for (const auto& w : r.verdict.witnesses)
    os << "  witness " << format_cycles(w.element) << " chart " << w.chart << " age " << to_string(w.age) << "\n";
  if (r.endo) {
    os << "endomorphism: d = " << r.endo->exponent << " on P^" << r.endo->dimension << ", degree "
       << r.endo->degree << ", commutes with all generators: " << (r.endo->valid() ? "yes" : "no") << "\n";
  }
  if (r.oracle) {
    os << "oracle: " << r.oracle->checks << " chart checks, max error " << r.oracle->max_error << ", "
       << (r.oracle->agreed ? "agreed" : "DISAGREED: " + r.oracle->failure) << "\n";
  }
  if (!r.elements.empty()) {
    os << "\nelements:\n";
    for (const auto& a : r.elements)
      os << "  " << format_cycles(a.element) << "  " << format_cycle_type(a.type) << "  min age "
         << to_string(a.min_age) << "\n";
  }
  if (r.seconds) os << "time: " << *r.seconds << " s\n";
  return os.str();
}

struct RunResult {
  int exit_code = kExitOk;
  std::string output;  // report, empty on input errors
  std::string error;
};

inline RunResult run(const AnalysisRequest& req) {
  RunResult result;
  try {
    if (req.cap == 0) throw std::invalid_argument("cap must be at least 1");
    const auto start = std::chrono::steady_clock::now();
    const PermutationGroup group = build_group(req);
    AnalysisReport report = analyze(group, req);
    if (req.timing)
      report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.output = req.format == OutputFormat::Json ? to_json(report).dump(2) + "\n" : to_text(report);
    if (report.oracle && !report.oracle->agreed) {
      result.exit_code = kExitOracleDisagreement;
      result.error = "oracle disagreement: " + report.oracle->failure;
    }
  } catch (const CapExceeded& e) {
    result.exit_code = kExitCapExceeded;
    result.error = e.what();
  } catch (const Json::exception& e) {
    result.exit_code = kExitInputError;
    result.error = std::string("JSON error: ") + e.what();
  } catch (const std::invalid_argument& e) {
    result.exit_code = kExitInputError;
    result.error = e.what();
  } catch (const std::exception& e) {
    result.exit_code = kExitInternal;
    result.error = e.what();
  }
  return result;
}

}  // namespace fanoquot
