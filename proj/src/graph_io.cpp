#include <json.hpp>

#include "gkm/errors.hpp"
#include "gkm/graph.hpp"

namespace gkm {

using nlohmann::json;

namespace {

std::string where_in(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& field(const json& obj, const std::string& key, const std::string& ctx) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(ctx + ": missing field '" + key + "'");
  return *it;
}

std::string as_id(const json& j, const std::string& ctx) {
  if (!j.is_string()) throw ParseError(ctx + ": expected a string id");
  return j.get<std::string>();
}

Int as_int(const json& j, const std::string& ctx) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Int(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw ParseError(ctx + ": expected an integer");
}

std::string quote(const std::string& s) { return json(s).dump(); }

}  // namespace

GkmGraph load_graph(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(where_in(text, e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level: expected a JSON object");
  const json& rank = field(doc, "rank", "top level");
  if (!rank.is_number_integer()) throw ParseError("rank: expected an integer");
  int n = rank.get<int>();
  GraphBuilder b(n);

  const json& verts = field(doc, "vertices", "top level");
  if (!verts.is_array()) throw ParseError("vertices: expected an array");
  for (std::size_t i = 0; i < verts.size(); ++i)
    b.vertex(as_id(verts[i], "vertices[" + std::to_string(i) + "]"));

  const json& darts = field(doc, "darts", "top level");
  if (!darts.is_array()) throw ParseError("darts: expected an array");
  for (std::size_t i = 0; i < darts.size(); ++i) {
    std::string ctx = "darts[" + std::to_string(i) + "]";
    const json& d = darts[i];
    if (!d.is_object()) throw ParseError(ctx + ": expected an object");
    std::string id = as_id(field(d, "id", ctx), ctx + ".id");
    std::string from = as_id(field(d, "from", ctx), ctx + ".from");
    std::optional<std::string> to, opp;
    if (d.contains("to") && !d["to"].is_null()) to = as_id(d["to"], ctx + ".to");
    if (d.contains("opposite") && !d["opposite"].is_null()) opp = as_id(d["opposite"], ctx + ".opposite");
    const json& ax = field(d, "axial", ctx);
    if (!ax.is_array()) throw ParseError(ctx + ".axial: expected an array");
    if (ax.size() != static_cast<std::size_t>(n + 1))
      throw ParseError(ctx + ".axial: expected " + std::to_string(n + 1) + " integers");
    LatticeVector a;
    for (std::size_t k = 0; k < ax.size(); ++k)
      a.push_back(as_int(ax[k], ctx + ".axial[" + std::to_string(k) + "]"));
    b.raw_dart(id, from, to, opp, a);
  }

  if (doc.contains("connection") && !doc["connection"].is_null()) {
    const json& c = doc["connection"];
    if (!c.is_object()) throw ParseError("connection: expected an object");
    for (auto it = c.begin(); it != c.end(); ++it) {
      std::string ctx = "connection." + it.key();
      if (!it.value().is_object()) throw ParseError(ctx + ": expected an object");
      for (auto jt = it.value().begin(); jt != it.value().end(); ++jt)
        b.connection(it.key(), jt.key(), as_id(jt.value(), ctx + "." + jt.key()));
    }
  }
  return b.build();
}

std::string serialize_graph(const GkmGraph& g) {
  std::string s = "{\n";
  if (g.stored_connection && g.num_edges() > 0) {
    s += "\"connection\": {\n";
    bool first = true;
    for (std::size_t e = 0; e < g.darts.size(); ++e) {
      const auto& m = (*g.stored_connection)[e];
      if (m.empty()) continue;
      // map keys are dart indices, already in id order
      s += first ? "" : ",\n";
      first = false;
      s += quote(g.darts[e].id) + ": {";
      bool f2 = true;
      for (const auto& [a, b] : m) {
        s += f2 ? "" : ",";
        f2 = false;
        s += quote(g.darts[a].id) + ":" + quote(g.darts[b].id);
      }
      s += "}";
    }
    s += "\n},\n";
  }
  s += "\"darts\": [\n";
  for (std::size_t i = 0; i < g.darts.size(); ++i) {
    const Dart& d = g.darts[i];
    s += "{\"axial\":[";
    for (std::size_t k = 0; k < d.axial.size(); ++k) s += (k ? "," : "") + d.axial[k].get_str();
    s += "],\"from\":" + quote(g.vertices[d.from]);
    s += ",\"id\":" + quote(d.id);
    s += ",\"opposite\":" + (d.is_edge() ? quote(g.darts[d.opposite].id) : std::string("null"));
    s += ",\"to\":" + (d.is_edge() ? quote(g.vertices[d.to]) : std::string("null"));
    s += "}";
    s += i + 1 < g.darts.size() ? ",\n" : "\n";
  }
  s += "],\n\"rank\": " + std::to_string(g.rank) + ",\n\"vertices\": [";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) s += (v ? "," : "") + quote(g.vertices[v]);
  s += "]\n}\n";
  return s;
}

}  // namespace gkm
