#include "kha/quiver.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <set>
#include <sstream>

#include "kha/error.hpp"

namespace kha {

Eigen::MatrixXi Quiver::adjacency() const {
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(num_vertices(), num_vertices());
  for (auto [s, t] : edges) a(s, t) += 1;
  return a;
}

int Quiver::vertex_index(const std::string& id) const {
  for (int i = 0; i < num_vertices(); ++i)
    if (vertices[i] == id) return i;
  return -1;
}

Quiver make_quiver(std::vector<std::string> vertices,
                   std::vector<std::pair<int, int>> edges) {
  std::set<std::string> seen;
  for (const auto& v : vertices)
    if (!seen.insert(v).second)
      throw Error("duplicate-vertex", "duplicate vertex id '" + v + "'");
  const int n = static_cast<int>(vertices.size());
  for (auto [s, t] : edges)
    if (s < 0 || s >= n || t < 0 || t >= n)
      throw Error("dangling-edge", "edge endpoint out of range");
  Quiver q{std::move(vertices), std::move(edges)};
  Eigen::MatrixXi a = q.adjacency();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a(i, j) != a(j, i))
        throw Error("symmetry-violation",
                    "edge counts differ for ordered pair (" + q.vertices[i] +
                        ", " + q.vertices[j] + "): " + std::to_string(a(i, j)) +
                        " vs " + std::to_string(a(j, i)),
                    {{"from", q.vertices[i]}, {"to", q.vertices[j]}});
  return q;
}

Quiver load_quiver_text(const std::string& text) {
  YAML::Node doc;
  try {
    doc = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw Error("parse-error", std::string("quiver document: ") + e.what());
  }
  if (!doc.IsMap() || !doc["vertices"] || !doc["edges"])
    throw Error("parse-error",
                "quiver document needs `vertices:` and `edges:` fields");
  std::vector<std::string> vertices;
  for (const auto& v : doc["vertices"]) vertices.push_back(v.as<std::string>());

  Quiver names{vertices, {}};
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.IsSequence() || e.size() != 2)
      throw Error("parse-error", "each edge must be a [source, target] pair");
    int s = names.vertex_index(e[0].as<std::string>());
    int t = names.vertex_index(e[1].as<std::string>());
    if (s < 0 || t < 0)
      throw Error("dangling-edge",
                  "edge endpoint '" +
                      (s < 0 ? e[0].as<std::string>() : e[1].as<std::string>()) +
                      "' is not a declared vertex");
    edges.emplace_back(s, t);
  }
  return make_quiver(std::move(vertices), std::move(edges));
}

Quiver load_quiver_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io-error", "cannot open quiver file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_quiver_text(ss.str());
}

std::optional<Quiver> builtin_quiver(const std::string& name) {
  if (name == "jordan") return make_quiver({"1"}, {{0, 0}});
  if (name == "loop2") return make_quiver({"1"}, {{0, 0}, {0, 0}});
  if (name == "kronecker") return make_quiver({"1", "2"}, {{0, 1}, {1, 0}});
  if (name == "point") return make_quiver({"1"}, {});
  return std::nullopt;
}

DimVector parse_dim_vector(const Quiver& q, const std::string& text) {
  std::vector<int> entries;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      entries.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error("parse-error", "bad dimension entry '" + item + "'");
    }
  }
  if (static_cast<int>(entries.size()) != q.num_vertices())
    throw Error("dimension-mismatch",
                "expected " + std::to_string(q.num_vertices()) +
                    " entries, got " + std::to_string(entries.size()));
  DimVector d(q.num_vertices());
  for (int i = 0; i < q.num_vertices(); ++i) {
    if (entries[i] < 0)
      throw Error("dimension-mismatch", "dimension entries must be >= 0");
    d[i] = entries[i];
  }
  return d;
}

long euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  if (d.size() != q.num_vertices() || e.size() != q.num_vertices())
    throw Error("dimension-mismatch",
                "dimension vectors must match the quiver's vertex count");
  long value = 0;
  for (int i = 0; i < q.num_vertices(); ++i)
    value += static_cast<long>(d[i]) * e[i];
  for (auto [s, t] : q.edges) value -= static_cast<long>(d[s]) * e[t];
  return value;
}

std::vector<SlotWeight> rep_weights(const Quiver& q, const DimVector& d) {
  IVec offset(q.num_vertices());
  int total = 0;
  for (int v = 0; v < q.num_vertices(); ++v) {
    offset[v] = total;
    total += d[v];
  }
  std::vector<SlotWeight> out;
  for (auto [s, t] : q.edges)
    for (int i = 0; i < d[s]; ++i)
      for (int j = 0; j < d[t]; ++j)
        out.push_back({offset[t] + j, offset[s] + i});
  return out;
}

IVec weight_vector(const SlotWeight& w, int total_slots) {
  IVec v = IVec::Zero(total_slots);
  if (!w.is_zero()) {
    v[w.plus] += 1;
    v[w.minus] -= 1;
  }
  return v;
}

}  // namespace kha
