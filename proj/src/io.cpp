#include "infalg/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>

namespace infalg {

namespace {

void require_keys(const Json& doc, const std::set<std::string>& required, const std::set<std::string>& optional,
                  const char* what) {
  if (!doc.is_object()) throw FormatError(fmt::format("{} document must be an object", what));
  for (const auto& key : required)
    if (!doc.contains(key)) throw FormatError(fmt::format("{} document lacks \"{}\"", what, key));
  for (const auto& [key, value] : doc.items())
    if (!required.count(key) && !optional.count(key))
      throw FormatError(fmt::format("{} document has unknown member \"{}\"", what, key));
}

Index to_index(const Json& v, const std::string& where) {
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0))
    throw FormatError(fmt::format("{}: expected a non-negative integer", where));
  return v.get<Index>();
}

Index to_element(const Json& v, Index n, const std::string& where) {
  const Index x = to_index(v, where);
  if (x >= n) throw FormatError(fmt::format("{}: {} out of range 0..{}", where, x, n - 1));
  return x;
}

std::vector<Index> to_index_row(const Json& v, Index n, Index bound, const std::string& where) {
  if (!v.is_array() || v.size() != n) throw FormatError(fmt::format("{}: expected an array of {} integers", where, n));
  std::vector<Index> row;
  for (Index i = 0; i < n; ++i) row.push_back(to_element(v[i], bound, fmt::format("{}[{}]", where, i)));
  return row;
}

IndexTable to_index_table(const Json& v, Index n, const std::string& where) {
  if (!v.is_array() || v.size() != n) throw FormatError(fmt::format("{}: expected {} rows", where, n));
  IndexTable t;
  for (Index i = 0; i < n; ++i) t.push_back(to_index_row(v[i], n, n, fmt::format("{}[{}]", where, i)));
  return t;
}

BoolTable to_bool_table(const Json& v, Index n, const std::string& where) {
  if (!v.is_array() || v.size() != n) throw FormatError(fmt::format("{}: expected {} rows", where, n));
  BoolTable t(n, std::vector<bool>(n));
  for (Index i = 0; i < n; ++i) {
    if (!v[i].is_array() || v[i].size() != n)
      throw FormatError(fmt::format("{}[{}]: expected {} booleans", where, i, n));
    for (Index j = 0; j < n; ++j) {
      if (!v[i][j].is_boolean()) throw FormatError(fmt::format("{}[{}][{}]: expected a boolean", where, i, j));
      t[i][j] = v[i][j].get<bool>();
    }
  }
  return t;
}

Index to_size(const Json& doc) {
  const Index n = to_index(doc.at("n"), "n");
  if (n == 0) throw FormatError("n: must be at least 1");
  return n;
}

Json bool_table_json(const FinitePoset& order) {
  Json rows = Json::array();
  for (Index a = 0; a < order.size(); ++a) {
    Json row = Json::array();
    for (Index b = 0; b < order.size(); ++b) row.push_back(order.leq(a, b));
    rows.push_back(std::move(row));
  }
  return rows;
}

bool is_scalar_array(const Json& v) {
  for (const auto& x : v)
    if (x.is_array() || x.is_object()) return false;
  return true;
}

void print_value(const Json& v, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (v.is_object()) {
    if (v.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    Index i = 0;
    for (const auto& [key, value] : v.items()) {
      out += pad + Json(key).dump() + ": ";
      print_value(value, indent + 2, out);
      out += ++i < v.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else if (v.is_array()) {
    if (is_scalar_array(v)) {
      out += "[";
      for (Index i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].dump();
      out += "]";
      return;
    }
    out += "[\n";
    for (Index i = 0; i < v.size(); ++i) {
      out += pad;
      print_value(v[i], indent + 2, out);
      out += i + 1 < v.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "]";
  } else {
    out += v.dump();
  }
}

}  // namespace

InfoAlgebra parse_algebra(const Json& doc) {
  require_keys(doc, {"n", "unit", "zero", "extractors"}, {"join", "leq", "meet", "labels"}, "algebra");
  const Index n = to_size(doc);
  const Index unit = to_element(doc.at("unit"), n, "unit");
  const Index zero = to_element(doc.at("zero"), n, "zero");

  BoundedJoinSemilattice sl;
  if (doc.contains("join")) {
    sl = BoundedJoinSemilattice::from_join_table(to_index_table(doc.at("join"), n, "join"), unit, zero);
    if (doc.contains("leq") && !(sl.order().table() == to_bool_table(doc.at("leq"), n, "leq")))
      throw StructureError("leq table disagrees with the order derived from join");
  } else if (doc.contains("leq")) {
    sl = BoundedJoinSemilattice::from_order(FinitePoset::from_table(to_bool_table(doc.at("leq"), n, "leq")));
    if (sl.unit() != unit || sl.zero() != zero)
      throw StructureError(fmt::format("unit/zero given as {}/{} but the order has {}/{}", unit, zero, sl.unit(),
                                       sl.zero()));
  } else {
    throw FormatError("algebra document needs \"join\" or \"leq\"");
  }

  if (doc.contains("meet")) {
    const IndexTable meet = to_index_table(doc.at("meet"), n, "meet");
    if (FiniteLattice(sl).meet_table() != meet) throw StructureError("meet table disagrees with the order");
  }

  const Json& ex_doc = doc.at("extractors");
  if (!ex_doc.is_object()) throw FormatError("extractors: expected an object of label -> map");
  std::vector<Extractor> ex;
  for (const auto& [label, map] : ex_doc.items()) {
    ex.push_back({label, to_index_row(map, n, n, "extractors." + label)});
    for (Index e = 0; e + 1 < ex.size(); ++e)
      if (ex[e].map == ex.back().map)
        throw StructureError(fmt::format("extractors '{}' and '{}' are the same map", ex[e].label, label));
  }

  InfoAlgebra a(std::move(sl), std::move(ex));
  if (doc.contains("labels")) {
    const Json& names = doc.at("labels");
    if (!names.is_array() || names.size() != n) throw FormatError(fmt::format("labels: expected {} strings", n));
    std::vector<std::string> out;
    for (const auto& s : names) {
      if (!s.is_string()) throw FormatError("labels: expected strings");
      out.push_back(s.get<std::string>());
    }
    a.set_element_labels(std::move(out));
  }
  return a;
}

Json algebra_to_json(const InfoAlgebra& a) {
  Json doc;
  doc["n"] = a.size();
  doc["join"] = a.semilattice().join_table();
  doc["unit"] = a.unit();
  doc["zero"] = a.zero();
  Json ex = Json::object();
  for (const auto& e : a.extractors()) ex[e.label] = e.map;
  doc["extractors"] = std::move(ex);
  if (!a.element_labels().empty()) doc["labels"] = a.element_labels();
  return doc;
}

QSpace parse_qspace(const Json& doc) {
  require_keys(doc, {"n", "leq", "equivalences"}, {"points"}, "space");
  const Index n = to_size(doc);
  FinitePoset order = FinitePoset::from_table(to_bool_table(doc.at("leq"), n, "leq"));
  const Json& eq_doc = doc.at("equivalences");
  if (!eq_doc.is_object()) throw FormatError("equivalences: expected an object of label -> block ids");
  std::vector<std::string> labels;
  std::vector<Equivalence> members;
  for (const auto& [label, blocks] : eq_doc.items()) {
    labels.push_back(label);
    members.emplace_back(to_index_row(blocks, n, npos, "equivalences." + label));
  }
  return QSpace::create(std::move(order), StarFamily::create(n, std::move(labels), std::move(members)));
}

Json qspace_to_json(const QSpace& s) {
  Json doc;
  doc["n"] = s.size();
  doc["leq"] = bool_table_json(s.order());
  Json eqs = Json::object();
  for (Index t = 0; t < s.eqs().size(); ++t) eqs[s.eqs().label(t)] = s.eqs().member(t).block_of();
  doc["equivalences"] = std::move(eqs);
  return doc;
}

Json dual_to_json(const Dual& d) {
  Json doc = qspace_to_json(d.space);
  doc["points"] = d.points;
  return doc;
}

AlgebraMorphism parse_morphism(const Json& doc, const InfoAlgebra& a, const InfoAlgebra& b) {
  require_keys(doc, {"f", "g"}, {}, "map");
  AlgebraMorphism m;
  m.f = to_index_row(doc.at("f"), a.size(), b.size(), "f");
  const Json& g = doc.at("g");
  if (!g.is_object()) throw FormatError("g: expected an object of label -> label");
  m.g.assign(a.extractor_count(), npos);
  for (const auto& [from, to] : g.items()) {
    auto e = a.find_label(from);
    if (!e) throw FormatError(fmt::format("g: unknown source label '{}'", from));
    if (!to.is_string()) throw FormatError(fmt::format("g.{}: expected a label", from));
    auto h = b.find_label(to.get<std::string>());
    if (!h) throw FormatError(fmt::format("g.{}: unknown target label '{}'", from, to.get<std::string>()));
    m.g[*e] = *h;
  }
  for (Index e = 0; e < m.g.size(); ++e)
    if (m.g[e] == npos) throw FormatError(fmt::format("g: no image for '{}'", a.label(e)));
  return m;
}

Json morphism_to_json(const AlgebraMorphism& m, const InfoAlgebra& a, const InfoAlgebra& b) {
  Json doc;
  doc["f"] = m.f;
  Json g = Json::object();
  for (Index e = 0; e < m.g.size(); ++e) g[a.label(e)] = b.label(m.g[e]);
  doc["g"] = std::move(g);
  return doc;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("malformed document: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(fmt::format("cannot read '{}'", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

std::string print_json(const Json& doc) {
  std::string out;
  print_value(doc, 0, out);
  out += "\n";
  return out;
}

}  // namespace infalg
