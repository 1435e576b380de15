#include "arcx/io.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "arcx/errors.hpp"

namespace arcx {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

Rational rational_field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key) || !obj[key].is_string())
    bad(where + ": \"" + key + "\" must be a rational string");
  try {
    return parse_rational(obj[key].get<std::string>());
  } catch (const std::invalid_argument&) {
    bad(where + ": cannot parse \"" + obj[key].get<std::string>() + "\"");
  }
}

using Index = std::map<std::string, VertexId>;

VertexId lookup(const Index& index, const Json& name, const std::string& where) {
  if (!name.is_string()) bad(where + ": vertex names must be strings");
  auto it = index.find(name.get<std::string>());
  if (it == index.end()) bad(where + ": unknown vertex \"" + name.get<std::string>() + "\"");
  return it->second;
}

Index index_of(const std::vector<std::string>& names) {
  Index index;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!index.emplace(names[i], static_cast<VertexId>(i)).second) bad("duplicate vertex \"" + names[i] + "\"");
  return index;
}

std::map<VertexId, Arc> arc_map(const Json& obj, const Index& index, const char* section) {
  if (!obj.is_object()) bad(std::string(section) + " must be an object");
  std::map<VertexId, Arc> out;
  for (const auto& [name, a] : obj.items()) {
    VertexId v = lookup(index, Json(name), section);
    std::string where = std::string(section) + " \"" + name + "\"";
    out[v] = Arc(CirclePoint(rational_field(a, "tail", where)), CirclePoint(rational_field(a, "head", where)));
  }
  return out;
}

Json arc_json(const Arc& a) { return Json{{"tail", to_string(a.tail.pos())}, {"head", to_string(a.head.pos())}}; }

std::string lower(const char* s) {
  std::string out(s);
  for (auto& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

}  // namespace

InstanceFile parse_instance(const std::string& text) {
  Json j = parse_json(text);
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) bad("\"vertices\" must be an array");
  InstanceFile f;
  for (const auto& name : j["vertices"]) {
    if (!name.is_string()) bad("vertex names must be strings");
    f.names.push_back(name.get<std::string>());
  }
  const Index index = index_of(f.names);
  f.graph = Graph(static_cast<int>(f.names.size()));
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) bad("\"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2) bad("each edge must be a pair of names");
      VertexId u = lookup(index, e[0], "edges"), v = lookup(index, e[1], "edges");
      if (u == v) bad("self-loop at \"" + f.names[static_cast<std::size_t>(u)] + "\"");
      f.graph.add_edge(u, v);
    }
  }
  if (j.contains("predrawn"))
    for (auto& [v, a] : arc_map(j["predrawn"], index, "predrawn")) f.partial.set(v, a);
  if (j.contains("class")) {
    if (!j["class"].is_string()) bad("\"class\" must be a string");
    f.cls = parse_rep_class(j["class"].get<std::string>());
    if (!f.cls) bad("unknown class \"" + j["class"].get<std::string>() + "\"");
  }
  if (j.contains("representation")) {
    auto arcs = arc_map(j["representation"], index, "representation");
    if (arcs.size() != f.names.size()) bad("representation must give an arc for every vertex");
    std::vector<Arc> list;
    for (auto& [v, a] : arcs) list.push_back(a);
    f.representation = Representation(std::move(list));
  }
  return f;
}

std::string serialize_instance(const InstanceFile& f) {
  Json j;
  j["vertices"] = f.names;
  Json edges = Json::array();
  for (auto [u, v] : f.graph.edges())
    edges.push_back({f.names[static_cast<std::size_t>(u)], f.names[static_cast<std::size_t>(v)]});
  j["edges"] = edges;
  Json pre = Json::object();
  for (const auto& [v, a] : f.partial) pre[f.names[static_cast<std::size_t>(v)]] = arc_json(a);
  j["predrawn"] = pre;
  if (f.cls) j["class"] = lower(to_string(*f.cls));
  if (f.representation) {
    Json rep = Json::object();
    for (VertexId v = 0; v < f.representation->size(); ++v)
      rep[f.names[static_cast<std::size_t>(v)]] = arc_json((*f.representation)[v]);
    j["representation"] = rep;
  }
  return j.dump(2) + "\n";
}

std::size_t shared_predrawn_endpoints(const PartialRepresentation& partial) {
  std::map<Rational, int> count;
  for (const auto& [v, a] : partial) {
    ++count[a.tail.pos()];
    ++count[a.head.pos()];
  }
  return static_cast<std::size_t>(std::count_if(count.begin(), count.end(), [](const auto& kv) { return kv.second > 1; }));
}

std::string instance_summary(const InstanceFile& f) {
  return std::to_string(f.graph.size()) + " vertices, " + std::to_string(f.graph.edge_count()) + " edges, " +
         std::to_string(f.partial.size()) + " predrawn, " + std::to_string(shared_predrawn_endpoints(f.partial)) +
         " shared predrawn endpoints";
}

UcaCertificate parse_certificate(const std::string& text, const std::vector<std::string>& names) {
  Json j = parse_json(text);
  const Index index = index_of(names);
  if (!j.is_object() || !j.contains("order") || !j["order"].is_array()) bad("\"order\" must be an array");
  UcaCertificate c;
  for (const auto& name : j["order"]) c.order.push_back(lookup(index, name, "order"));
  if (j.contains("wrap_edges")) {
    if (!j["wrap_edges"].is_array()) bad("\"wrap_edges\" must be an array");
    for (const auto& e : j["wrap_edges"]) {
      if (!e.is_array() || e.size() != 2) bad("each wrap edge must be a pair of names");
      c.wrap_edges.emplace_back(lookup(index, e[0], "wrap_edges"), lookup(index, e[1], "wrap_edges"));
    }
  }
  c.circumference = rational_field(j, "circumference", "certificate");
  return c;
}

std::string serialize_certificate(const UcaCertificate& c, const std::vector<std::string>& names) {
  auto name = [&](VertexId v) { return names[static_cast<std::size_t>(v)]; };
  Json j;
  Json order = Json::array();
  for (int v : c.order) order.push_back(name(v));
  j["order"] = order;
  Json wrap = Json::array();
  for (auto [u, v] : c.wrap_edges) wrap.push_back({name(u), name(v)});
  j["wrap_edges"] = wrap;
  j["circumference"] = to_string(c.circumference);
  return j.dump(2) + "\n";
}

}  // namespace arcx
