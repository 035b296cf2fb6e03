#pragma once

// JSON encodings of characters, decomposition tables, factor lists and
// certificates. Every writer emits entries in canonical order, so
// dump(parse(dump(x))) is byte-identical.

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "pfilt/certify.hpp"
#include "pfilt/charring.hpp"
#include "pfilt/g1b.hpp"
#include "pfilt/simples.hpp"

namespace pfilt {

using json = nlohmann::ordered_json;

namespace detail {

inline json weight_json(const Weight& w) { return json(w.coords()); }

inline Weight read_weight(const json& j, std::size_t rank, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an integer array");
  std::vector<Int> c;
  for (auto& x : j) {
    if (!x.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer array");
    c.push_back(x.get<Int>());
  }
  if (c.size() != rank)
    throw SchemaError(std::string(what) + " has " + std::to_string(c.size()) + " coordinates, expected " +
                      std::to_string(rank));
  return Weight(std::move(c));
}

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline Int read_int(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw SchemaError(std::string("field '") + key + "' must be an integer");
  return v.get<Int>();
}

inline SystemPtr read_system(const json& j, const SystemPtr& expected) {
  const json& v = field(j, "system");
  if (!v.is_string()) throw SchemaError("field 'system' must be a string");
  SystemPtr sys;
  try {
    sys = RootSystem::build(v.get<std::string>());
  } catch (const InvalidType& e) {
    throw SchemaError(e.what());
  }
  if (expected && !FormalCharacter::same_system(*sys, *expected))
    throw MismatchedSystem("data for " + sys->name() + ", expected " + expected->name());
  return expected ? expected : sys;
}

inline json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace detail

// -- characters ---------------------------------------------------------------

inline json to_json(const FormalCharacter& c) {
  json entries = json::array();
  for (auto& [w, m] : c.sorted()) entries.push_back({{"wt", detail::weight_json(w)}, {"mult", m}});
  return {{"system", c.rs().name()}, {"entries", entries}};
}

inline FormalCharacter character_from_json(const json& j, SystemPtr expected = nullptr) {
  SystemPtr sys = detail::read_system(j, expected);
  FormalCharacter c(sys);
  const json& entries = detail::field(j, "entries");
  if (!entries.is_array()) throw SchemaError("'entries' must be an array");
  for (auto& e : entries) {
    Weight w = detail::read_weight(detail::field(e, "wt"), sys->rank(), "wt");
    Int m = detail::read_int(e, "mult");
    if (m == 0) throw SchemaError("zero multiplicity stored at " + w.str());
    if (c[w] != 0) throw SchemaError("duplicate weight " + w.str());
    c.add_term(w, m);
  }
  return c;
}

// -- decomposition tables -----------------------------------------------------

inline json to_json(const DecompTable& t) {
  json rows = json::array();
  for (auto& [lambda, row] : t.rows()) {
    json factors = json::array();
    for (auto& [mu, m] : row.factors) factors.push_back({{"mu", detail::weight_json(mu)}, {"mult", m}});
    rows.push_back({{"lambda", detail::weight_json(lambda)},
                    {"provenance", to_string(row.provenance)},
                    {"factors", factors}});
  }
  return {{"system", t.system()->name()}, {"p", t.p()}, {"rows", rows}};
}

/// Parses and validates a whole table; any schema or invariant problem
/// rejects the table as a whole. Rows without a provenance tag are marked
/// INGESTED.
inline DecompTable table_from_json(const json& j, SystemPtr expected = nullptr) {
  SystemPtr sys = detail::read_system(j, expected);
  const Int p = detail::read_int(j, "p");
  if (p < 2) throw SchemaError("p must be >= 2");
  DecompTable t(sys, p);
  const json& rows = detail::field(j, "rows");
  if (!rows.is_array()) throw SchemaError("'rows' must be an array");
  for (auto& r : rows) {
    DecompRow row;
    row.lambda = detail::read_weight(detail::field(r, "lambda"), sys->rank(), "lambda");
    row.provenance = Provenance::Ingested;
    if (r.contains("provenance")) {
      const std::string tag = r.at("provenance").get<std::string>();
      if (tag == "COMPUTED") row.provenance = Provenance::Computed;
      else if (tag == "DERIVED") row.provenance = Provenance::Derived;
      else if (tag != "INGESTED") throw SchemaError("unknown provenance '" + tag + "'");
    }
    const json& factors = detail::field(r, "factors");
    if (!factors.is_array()) throw SchemaError("'factors' must be an array");
    for (auto& f : factors)
      row.factors.emplace_back(detail::read_weight(detail::field(f, "mu"), sys->rank(), "mu"),
                               detail::read_int(f, "mult"));
    if (t.find(row.lambda)) throw InvariantViolation("duplicate row " + row.lambda.str());
    t.insert(std::move(row));
  }
  return t;
}

inline DecompTable ingest_table(const std::string& path, SystemPtr expected = nullptr) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return table_from_json(detail::parse_text(ss.str()), std::move(expected));
}

inline void export_table(const DecompTable& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << to_json(t).dump() << '\n';
}

// -- factor lists and certificates -------------------------------------------

inline json to_json(const G1BFactorList& list) {
  json factors = json::array();
  for (auto& f : list.factors)
    factors.push_back({{"weight", detail::weight_json(f.weight)},
                       {"mu0", detail::weight_json(f.mu0)},
                       {"mu1", detail::weight_json(f.mu1)},
                       {"mult", f.mult}});
  return {{"lambda", detail::weight_json(list.lambda)}, {"p", list.p}, {"factors", factors}};
}

inline G1BFactorList factor_list_from_json(const json& j, std::size_t rank) {
  G1BFactorList list;
  list.lambda = detail::read_weight(detail::field(j, "lambda"), rank, "lambda");
  if (j.contains("p")) list.p = detail::read_int(j, "p");
  for (auto& f : detail::field(j, "factors"))
    list.factors.push_back({detail::read_weight(detail::field(f, "weight"), rank, "weight"),
                            detail::read_weight(detail::field(f, "mu0"), rank, "mu0"),
                            detail::read_weight(detail::field(f, "mu1"), rank, "mu1"),
                            detail::read_int(f, "mult")});
  return list;
}

inline json to_json(const Certificate& c) {
  json lines = json::array();
  for (auto& l : c.lines)
    lines.push_back({{"mu0", detail::weight_json(l.mu0)}, {"mu1", detail::weight_json(l.mu1)}, {"mult", l.mult}});
  return {{"lambda", detail::weight_json(c.lambda)},
          {"p", c.p},
          {"n", c.n},
          {"status", c.status_string()},
          {"lines", lines}};
}

inline Certificate certificate_from_json(const json& j, std::size_t rank) {
  Certificate c;
  c.lambda = detail::read_weight(detail::field(j, "lambda"), rank, "lambda");
  c.p = detail::read_int(j, "p");
  c.n = static_cast<int>(detail::read_int(j, "n"));
  parse_status(detail::field(j, "status").get<std::string>(), c);
  for (auto& l : detail::field(j, "lines"))
    c.lines.push_back({detail::read_weight(detail::field(l, "mu0"), rank, "mu0"),
                       detail::read_weight(detail::field(l, "mu1"), rank, "mu1"),
                       detail::read_int(l, "mult")});
  return c;
}

inline json to_json(const CriteriaReport& r) {
  return {{"lambda", detail::weight_json(r.lambda)},
          {"p", r.p},
          {"flags",
           {{"small", r.small},
            {"large", r.large},
            {"main_bound", r.main_bound},
            {"one_wall", r.one_wall},
            {"global_bound", r.global_bound}}},
          {"data",
           {{"I_lambda", r.I},
            {"h_lambda", r.factors_available ? json(r.h_lambda) : json(nullptr)},
            {"h", r.h}}}};
}

}  // namespace pfilt
