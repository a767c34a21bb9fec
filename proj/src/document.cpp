#include "ihf/document.hpp"

#include <json.hpp>

namespace ihf {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw parse_error(std::string("document is not well-formed: ") + e.what());
  }
}

void expect_format(const Json& j, const char* format) {
  if (!j.is_object()) throw parse_error("document root must be an object");
  if (!j.contains("format") || !j["format"].is_string() ||
      j["format"].get<std::string>() != format)
    throw parse_error(std::string("missing or wrong format field (want \"") +
                      format + "\")");
}

Grading parse_grading_field(const Json& j, const std::string& where) {
  if (!j.is_string())
    throw parse_error(where + ": grading must be a fraction string");
  auto g = Grading::parse(j.get<std::string>());
  if (!g) throw parse_error(where + ": bad fraction '" +
                            j.get<std::string>() + "'");
  return *g;
}

// Reads one [src, tgt, u_exponent] entry list into `m`, checking names,
// duplicates, and the grading-forced exponent.
void read_entries(const Json& j, const std::string& field, const Basis& gens,
                  MonoMatrix& m) {
  if (!j.is_array()) throw parse_error(field + " must be an array");
  int k = 0;
  for (const auto& e : j) {
    std::string where = field + "[" + std::to_string(k++) + "]";
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() ||
        !e[1].is_string() || !e[2].is_number_integer())
      throw parse_error(where + ": want [src, tgt, u_exponent]");
    std::string src = e[0].get<std::string>();
    std::string tgt = e[1].get<std::string>();
    long long exp = e[2].get<long long>();
    for (const std::string* n : {&src, &tgt}) {
      if (!gens.contains(*n))
        throw structural_error(where + ": unknown generator '" + *n + "'");
    }
    int c = gens.index(src), r = gens.index(tgt);
    auto forced = slot_exponent(gens.grading(r), gens.grading(c), m.delta());
    if (!forced || *forced != exp)
      throw structural_error(
          where + " (" + src + " -> " + tgt + "): U-exponent " +
          std::to_string(exp) + " breaks grading homogeneity" +
          (forced ? " (gradings force " + std::to_string(*forced) + ")"
                  : " (no monomial fits these gradings)"));
    if (m.get(r, c)) throw structural_error(where + ": duplicate entry");
    m.toggle(r, c);
  }
}

Json entries_json(const MonoMatrix& m) {
  Json out = Json::array();
  for (const auto& e : m.entries())
    out.push_back(Json::array(
        {m.cols().name(e.col), m.rows().name(e.row), e.exponent}));
  return out;
}

}  // namespace

ComplexDocument parse_complex(const std::string& text) {
  Json j = parse_json(text);
  expect_format(j, "ihf/1");
  if (!j.contains("generators") || !j["generators"].is_array())
    throw parse_error("missing generators array");

  Basis gens;
  int k = 0;
  for (const auto& g : j["generators"]) {
    std::string where = "generators[" + std::to_string(k++) + "]";
    if (!g.is_object() || !g.contains("name") || !g["name"].is_string() ||
        !g.contains("grading"))
      throw parse_error(where + ": want {name, grading}");
    gens.add(g["name"].get<std::string>(),
             parse_grading_field(g["grading"], where));
  }

  MonoMatrix diff(gens, gens, Grading(1));
  MonoMatrix iota(gens, gens, Grading(0));
  if (!j.contains("diff")) throw parse_error("missing diff array");
  if (!j.contains("iota")) throw parse_error("missing iota array");
  read_entries(j["diff"], "diff", gens, diff);
  read_entries(j["iota"], "iota", gens, iota);

  ComplexDocument doc;
  doc.complex = IotaComplex(GradedComplex(std::move(gens), std::move(diff)),
                            std::move(iota));
  if (j.contains("metadata")) {
    const Json& m = j["metadata"];
    if (!m.is_object()) throw parse_error("metadata must be an object");
    if (m.contains("label")) {
      if (!m["label"].is_string())
        throw parse_error("metadata.label must be a string");
      doc.label = m["label"].get<std::string>();
    }
    if (m.contains("pinned_d"))
      doc.pinned_d = parse_grading_field(m["pinned_d"], "metadata.pinned_d");
  }
  return doc;
}

std::string serialize_complex(const ComplexDocument& doc) {
  Json j;
  j["format"] = "ihf/1";
  j["generators"] = Json::array();
  const Basis& gens = doc.complex.complex.gens;
  for (int i = 0; i < gens.size(); ++i)
    j["generators"].push_back(
        {{"name", gens.name(i)}, {"grading", gens.grading(i).str()}});
  j["diff"] = entries_json(doc.complex.complex.diff);
  j["iota"] = entries_json(doc.complex.iota);
  if (!doc.label.empty() || doc.pinned_d) {
    Json m = Json::object();
    if (!doc.label.empty()) m["label"] = doc.label;
    if (doc.pinned_d) m["pinned_d"] = doc.pinned_d->str();
    j["metadata"] = std::move(m);
  }
  return j.dump(2) + "\n";
}

std::vector<EntryTriple> map_entries(const MonoMatrix& m) {
  std::vector<EntryTriple> out;
  for (const auto& e : m.entries())
    out.push_back({m.cols().name(e.col), m.rows().name(e.row), e.exponent});
  return out;
}

MonoMatrix map_from_entries(const Basis& rows, const Basis& cols,
                            const Grading& delta,
                            const std::vector<EntryTriple>& entries) {
  MonoMatrix m(rows, cols, delta);
  for (const auto& e : entries) {
    if (!cols.contains(e.src))
      throw structural_error("map entry: unknown source '" + e.src + "'");
    if (!rows.contains(e.dst))
      throw structural_error("map entry: unknown target '" + e.dst + "'");
    int c = cols.index(e.src), r = rows.index(e.dst);
    auto forced = slot_exponent(rows.grading(r), cols.grading(c), delta);
    if (!forced || *forced != e.exponent)
      throw structural_error("map entry " + e.src + " -> " + e.dst +
                             ": exponent breaks grading homogeneity");
    if (m.get(r, c))
      throw structural_error("map entry " + e.src + " -> " + e.dst +
                             ": duplicate");
    m.toggle(r, c);
  }
  return m;
}

namespace {

Json triples_json(const std::vector<EntryTriple>& ts) {
  Json out = Json::array();
  for (const auto& t : ts)
    out.push_back(Json::array({t.src, t.dst, t.exponent}));
  return out;
}

std::vector<EntryTriple> parse_triples(const Json& j, const std::string& where) {
  if (!j.is_array()) throw parse_error(where + " must be an array");
  std::vector<EntryTriple> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() ||
        !e[1].is_string() || !e[2].is_number_integer())
      throw parse_error(where + ": want [src, tgt, u_exponent]");
    out.push_back({e[0].get<std::string>(), e[1].get<std::string>(),
                   e[2].get<long long>()});
  }
  return out;
}

}  // namespace

namespace {

ResultDocument parse_result_body(const Json& j) {
  ResultDocument r;
  if (j.contains("input")) {
    if (!j["input"].is_string()) throw parse_error("input must be a string");
    r.input = j["input"].get<std::string>();
  }
  for (auto [field, dst] : {std::pair{"d", &r.d},
                            {"d_lower", &r.d_lower},
                            {"d_upper", &r.d_upper}}) {
    if (j.contains(field)) *dst = parse_grading_field(j[field], field);
  }
  if (j.contains("hfi")) {
    const Json& h = j["hfi"];
    if (!h.is_object() || !h.contains("towers") || !h.contains("torsion"))
      throw parse_error("hfi must be {towers, torsion}");
    std::vector<Grading> towers;
    for (const auto& t : h["towers"])
      towers.push_back(parse_grading_field(t, "hfi.towers"));
    r.hfi_towers = std::move(towers);
    std::vector<TorsionPart> torsion;
    for (const auto& t : h["torsion"]) {
      if (!t.is_object() || !t.contains("top") || !t.contains("order") ||
          !t["order"].is_number_integer())
        throw parse_error("hfi.torsion: want {top, order}");
      torsion.push_back({parse_grading_field(t["top"], "hfi.torsion"),
                         t["order"].get<long long>()});
    }
    r.hfi_torsion = std::move(torsion);
  }
  if (j.contains("q_action")) {
    std::vector<InducedEntry> q;
    for (const auto& e : j["q_action"]) {
      if (!e.is_array() || e.size() != 3)
        throw parse_error("q_action: want [src, dst, exponent]");
      q.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<long long>()});
    }
    r.q_action = std::move(q);
  }
  if (j.contains("local_maps")) {
    std::vector<LocalMapReport> maps;
    for (const auto& e : j["local_maps"]) {
      if (!e.is_object() || !e.contains("from") || !e.contains("to") ||
          !e.contains("found"))
        throw parse_error("local_maps: want {from, to, found, f?, h?}");
      LocalMapReport m;
      m.from = e["from"].get<std::string>();
      m.to = e["to"].get<std::string>();
      m.found = e["found"].get<bool>();
      if (e.contains("f")) m.f = parse_triples(e["f"], "local_maps.f");
      if (e.contains("h")) m.h = parse_triples(e["h"], "local_maps.h");
      maps.push_back(std::move(m));
    }
    r.local_maps = std::move(maps);
  }
  return r;
}

}  // namespace

ResultDocument parse_result(const std::string& text) {
  Json j = parse_json(text);
  expect_format(j, "ihf-result/1");
  try {
    return parse_result_body(j);
  } catch (const Json::exception& e) {
    throw parse_error(
        std::string("result document has a wrongly typed field: ") + e.what());
  }
}

std::vector<ResultDocument> parse_results(const std::string& text) {
  Json j = parse_json(text);
  if (!j.is_array()) return {parse_result(text)};
  std::vector<ResultDocument> out;
  for (const auto& e : j) {
    expect_format(e, "ihf-result/1");
    try {
      out.push_back(parse_result_body(e));
    } catch (const Json::exception& ex) {
      throw parse_error(
          std::string("result document has a wrongly typed field: ") +
          ex.what());
    }
  }
  return out;
}

namespace {

Json result_json(const ResultDocument& r) {
  Json j;
  j["format"] = "ihf-result/1";
  j["input"] = r.input;
  if (r.d) j["d"] = r.d->str();
  if (r.d_lower) j["d_lower"] = r.d_lower->str();
  if (r.d_upper) j["d_upper"] = r.d_upper->str();
  if (r.hfi_towers || r.hfi_torsion) {
    Json h;
    h["towers"] = Json::array();
    if (r.hfi_towers)
      for (const auto& t : *r.hfi_towers) h["towers"].push_back(t.str());
    h["torsion"] = Json::array();
    if (r.hfi_torsion)
      for (const auto& t : *r.hfi_torsion)
        h["torsion"].push_back({{"top", t.top.str()}, {"order", t.order}});
    j["hfi"] = std::move(h);
  }
  if (r.q_action) {
    Json q = Json::array();
    for (const auto& e : *r.q_action)
      q.push_back(Json::array({e.src, e.dst, e.exponent}));
    j["q_action"] = std::move(q);
  }
  if (r.local_maps) {
    Json maps = Json::array();
    for (const auto& m : *r.local_maps) {
      Json e;
      e["from"] = m.from;
      e["to"] = m.to;
      e["found"] = m.found;
      if (m.found) {
        e["f"] = triples_json(m.f);
        e["h"] = triples_json(m.h);
      }
      maps.push_back(std::move(e));
    }
    j["local_maps"] = std::move(maps);
  }
  return j;
}

}  // namespace

std::string serialize_result(const ResultDocument& r) {
  return result_json(r).dump(2) + "\n";
}

std::string serialize_results(const std::vector<ResultDocument>& docs) {
  Json arr = Json::array();
  for (const auto& d : docs) arr.push_back(result_json(d));
  return arr.dump(2) + "\n";
}

}  // namespace ihf
