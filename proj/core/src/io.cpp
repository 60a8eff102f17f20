#include "corecluster/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace corecluster::io {

namespace {

[[noreturn]] void fail(const std::string& path, std::size_t line, const std::string& what) {
  throw std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path + " for reading");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  return out;
}

void split_fields(const std::string& line, std::vector<std::string>& fields) {
  fields.clear();
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    std::string field = line.substr(start, comma - start);
    // trim spaces and a trailing carriage return
    while (!field.empty() && (field.back() == ' ' || field.back() == '\r' || field.back() == '\t'))
      field.pop_back();
    std::size_t lead = 0;
    while (lead < field.size() && (field[lead] == ' ' || field[lead] == '\t')) ++lead;
    fields.push_back(field.substr(lead));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
}

bool parse_double(const std::string& field, double& out) {
  const char* begin = field.data();
  const char* end = begin + field.size();
  const auto result = std::from_chars(begin, end, out);
  return result.ec == std::errc() && result.ptr == end;
}

bool parse_index(const std::string& field, std::size_t& out) {
  const char* begin = field.data();
  const char* end = begin + field.size();
  const auto result = std::from_chars(begin, end, out);
  return result.ec == std::errc() && result.ptr == end;
}

bool all_numeric(const std::vector<std::string>& fields) {
  double ignored;
  for (const auto& f : fields) {
    if (f.empty() || !parse_double(f, ignored)) return false;
  }
  return !fields.empty();
}

std::vector<Triplet> read_triplets(const std::string& path, std::size_t& rows, std::size_t& cols) {
  std::ifstream in = open_input(path);
  std::vector<Triplet> triplets;
  std::unordered_set<std::uint64_t> seen;
  std::string line;
  std::vector<std::string> fields;
  std::size_t line_no = 0;
  rows = 0;
  cols = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    split_fields(line, fields);
    if (fields.size() != 3) fail(path, line_no, "expected `row,col,value`");
    Triplet t;
    if (!parse_index(fields[0], t.row) || !parse_index(fields[1], t.col)) {
      fail(path, line_no, "invalid index");
    }
    if (!parse_double(fields[2], t.value)) fail(path, line_no, "invalid value");
    const std::uint64_t key = (static_cast<std::uint64_t>(t.row) << 32) | t.col;
    if (!seen.insert(key).second) fail(path, line_no, "duplicate entry");
    rows = std::max(rows, t.row + 1);
    cols = std::max(cols, t.col + 1);
    triplets.push_back(t);
  }
  if (triplets.empty()) throw std::runtime_error(path + ": no entries");
  return triplets;
}

// Rows of a label CSV keyed by header column names.
struct LabelTable {
  std::vector<std::size_t> node_ids;
  std::vector<std::uint32_t> labels;
};

LabelTable read_label_table(const std::string& path) {
  std::ifstream in = open_input(path);
  std::string line;
  std::vector<std::string> fields;
  if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");
  split_fields(line, fields);
  std::size_t id_col = fields.size();
  std::size_t label_col = fields.size();
  for (std::size_t c = 0; c < fields.size(); ++c) {
    if (fields[c] == "node_id") id_col = c;
    if (fields[c] == "label") label_col = c;
  }
  if (id_col == fields.size() || label_col == fields.size()) {
    throw std::runtime_error(path + ": header must name node_id and label columns");
  }
  LabelTable table;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    split_fields(line, fields);
    if (fields.size() <= std::max(id_col, label_col)) fail(path, line_no, "short row");
    std::size_t node = 0;
    std::size_t label = 0;
    if (!parse_index(fields[id_col], node)) fail(path, line_no, "invalid node_id");
    if (!parse_index(fields[label_col], label)) fail(path, line_no, "invalid label");
    table.node_ids.push_back(node);
    table.labels.push_back(static_cast<std::uint32_t>(label));
  }
  if (table.node_ids.empty()) throw std::runtime_error(path + ": no label rows");
  return table;
}

LabelArray table_to_labels(const LabelTable& table, const std::string& path) {
  std::size_t p = 0;
  for (const auto id : table.node_ids) p = std::max(p, id + 1);
  LabelArray labels;
  labels.values.assign(p, std::numeric_limits<std::uint32_t>::max());
  for (std::size_t i = 0; i < table.node_ids.size(); ++i) {
    if (labels.values[table.node_ids[i]] != std::numeric_limits<std::uint32_t>::max()) {
      throw std::runtime_error(path + ": duplicate node_id " + std::to_string(table.node_ids[i]));
    }
    labels.values[table.node_ids[i]] = table.labels[i];
  }
  for (std::size_t n = 0; n < p; ++n) {
    if (labels.values[n] == std::numeric_limits<std::uint32_t>::max()) {
      throw std::runtime_error(path + ": missing row for node " + std::to_string(n));
    }
  }
  return labels;
}

}  // namespace

std::string node_display_name(const std::vector<std::string>& names, NodeId id) {
  if (id < names.size() && !names[id].empty()) return names[id];
  return "v" + std::to_string(id);
}

ObservationMatrix read_observation_csv(const std::string& path) {
  std::ifstream in = open_input(path);
  std::string line;
  std::vector<std::string> fields;
  if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");
  split_fields(line, fields);
  const std::vector<std::string> names = fields;
  const std::size_t p = names.size();
  std::vector<double> values;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    split_fields(line, fields);
    if (fields.size() != p) fail(path, line_no, "row width does not match header");
    for (const auto& f : fields) {
      double x;
      if (!parse_double(f, x)) fail(path, line_no, "invalid number `" + f + "`");
      values.push_back(x);
    }
  }
  if (values.empty()) throw std::runtime_error(path + ": no data rows");
  const std::size_t n = values.size() / p;
  return ObservationMatrix(n, p, std::move(values), names);
}

ObservationMatrix read_observation_triplets(const std::string& path) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  const std::vector<Triplet> triplets = read_triplets(path, rows, cols);
  return ObservationMatrix::from_triplets(rows, cols, triplets);
}

SimilarityMatrix read_similarity_csv(const std::string& path) {
  std::ifstream in = open_input(path);
  std::string line;
  std::vector<std::string> fields;
  if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");
  split_fields(line, fields);

  std::vector<std::string> names;
  std::vector<double> values;
  std::size_t p = fields.size();
  if (all_numeric(fields)) {
    for (const auto& f : fields) {
      double x;
      parse_double(f, x);
      values.push_back(x);
    }
  } else {
    names = fields;
  }
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    split_fields(line, fields);
    if (fields.size() != p) fail(path, line_no, "row width does not match matrix size");
    for (const auto& f : fields) {
      double x;
      if (!parse_double(f, x)) fail(path, line_no, "invalid number `" + f + "`");
      values.push_back(x);
    }
  }
  if (values.size() != p * p) {
    throw std::runtime_error(path + ": expected a " + std::to_string(p) + "x" +
                             std::to_string(p) + " matrix");
  }
  return SimilarityMatrix(p, std::move(values), std::move(names));
}

void write_similarity_csv(const SimilarityMatrix& sim, const std::string& path) {
  std::ofstream out = open_output(path);
  const std::size_t p = sim.variable_count();
  for (std::size_t j = 0; j < p; ++j) {
    out << node_display_name(sim.variable_names(), static_cast<NodeId>(j))
        << (j + 1 < p ? ',' : '\n');
  }
  char buffer[40];
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      std::snprintf(buffer, sizeof(buffer), "%.17g", sim(i, j));
      out << buffer << (j + 1 < p ? ',' : '\n');
    }
  }
}

WeightedGraph read_edge_triplets(const std::string& path) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  const std::vector<Triplet> triplets = read_triplets(path, rows, cols);
  std::vector<WeightedEdge> edges;
  edges.reserve(triplets.size());
  for (const auto& t : triplets) {
    edges.push_back(WeightedEdge{static_cast<NodeId>(t.row), static_cast<NodeId>(t.col), t.value});
  }
  return WeightedGraph(static_cast<NodeId>(std::max(rows, cols)), std::move(edges));
}

void write_edge_triplets(const WeightedGraph& graph, const std::string& path) {
  std::ofstream out = open_output(path);
  char buffer[40];
  for (const auto& e : graph.edges()) {
    std::snprintf(buffer, sizeof(buffer), "%.17g", e.weight);
    out << e.u << ',' << e.v << ',' << buffer << '\n';
  }
}

void write_labels_csv(const LabelArray& labels, const CoreClusterSet& clusters,
                      const std::vector<std::string>& names, const std::string& path) {
  std::vector<char> is_center(labels.size(), 0);
  for (const auto& cluster : clusters.clusters) {
    if (cluster.center) is_center[*cluster.center] = 1;
  }
  std::ofstream out = open_output(path);
  out << "node_id,name,label,is_center\n";
  for (NodeId n = 0; n < labels.size(); ++n) {
    out << n << ',' << node_display_name(names, n) << ',' << labels.values[n] << ','
        << int(is_center[n]) << '\n';
  }
}

LabelArray read_labels_csv(const std::string& path) {
  return table_to_labels(read_label_table(path), path);
}

GroundTruth read_truth_csv(const std::string& path) {
  const LabelArray labels = table_to_labels(read_label_table(path), path);
  GroundTruth truth;
  truth.assignment = labels.values;
  for (const auto id : truth.assignment) {
    if (id == 0) throw std::runtime_error(path + ": ground truth must assign every node");
    truth.cluster_count = std::max(truth.cluster_count, id);
  }
  return truth;
}

void write_centers_csv(const CoreClusterSet& clusters, const std::vector<std::string>& names,
                       const std::string& path) {
  std::ofstream out = open_output(path);
  out << "cluster_id,size,center_node,center_name,ic_score\n";
  char buffer[40];
  for (const auto& cluster : clusters.clusters) {
    out << cluster.id << ',' << cluster.members.size() << ',';
    if (cluster.center) {
      out << *cluster.center << ',' << node_display_name(names, *cluster.center);
    } else {
      out << ',';
    }
    out << ',';
    if (cluster.ic_score) {
      std::snprintf(buffer, sizeof(buffer), "%.6f", *cluster.ic_score);
      out << buffer;
    }
    out << '\n';
  }
}

void write_dot(const WeightedGraph& graph, const LabelArray* labels, const std::string& path) {
  std::ofstream out = open_output(path);
  char buffer[40];
  out << "graph corecluster {\n";
  for (NodeId n = 0; n < graph.node_count(); ++n) {
    out << "  " << n << " [label=\"" << node_display_name(graph.node_names(), n) << '"';
    if (labels) out << ", cluster=" << labels->values[n];
    out << "];\n";
  }
  for (const auto& e : graph.edges()) {
    std::snprintf(buffer, sizeof(buffer), "%.9g", e.weight);
    out << "  " << e.u << " -- " << e.v << " [weight=" << buffer << "];\n";
  }
  out << "}\n";
}

void write_graphml(const WeightedGraph& graph, const LabelArray* labels, const std::string& path) {
  std::ofstream out = open_output(path);
  char buffer[40];
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"name\" for=\"node\" attr.name=\"name\" attr.type=\"string\"/>\n"
      << "  <key id=\"cluster\" for=\"node\" attr.name=\"cluster\" attr.type=\"int\"/>\n"
      << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n"
      << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
  for (NodeId n = 0; n < graph.node_count(); ++n) {
    out << "    <node id=\"n" << n << "\">\n"
        << "      <data key=\"name\">" << node_display_name(graph.node_names(), n) << "</data>\n";
    if (labels) out << "      <data key=\"cluster\">" << labels->values[n] << "</data>\n";
    out << "    </node>\n";
  }
  std::size_t edge_id = 0;
  for (const auto& e : graph.edges()) {
    std::snprintf(buffer, sizeof(buffer), "%.9g", e.weight);
    out << "    <edge id=\"e" << edge_id++ << "\" source=\"n" << e.u << "\" target=\"n" << e.v
        << "\">\n"
        << "      <data key=\"weight\">" << buffer << "</data>\n"
        << "    </edge>\n";
  }
  out << "  </graph>\n</graphml>\n";
}

void write_scenario_csv(const std::vector<ScenarioRow>& rows, bool include_timing,
                        const std::string& path) {
  std::ofstream out = open_output(path);
  out << "scenario,variant,rep,parameter,S,wall_time_ms\n";
  char buffer[64];
  for (const auto& row : rows) {
    std::snprintf(buffer, sizeof(buffer), "%.6f", row.score);
    out << row.scenario << ',' << row.variant << ',' << row.rep << ',' << row.parameter << ','
        << buffer << ',';
    if (include_timing) {
      std::snprintf(buffer, sizeof(buffer), "%.3f", row.wall_ms);
      out << buffer;
    } else {
      out << 0;
    }
    out << '\n';
  }
}

}  // namespace corecluster::io
