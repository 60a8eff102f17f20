#pragma once

#include <string>
#include <vector>

#include "corecluster/evaluation.hpp"
#include "corecluster/graph.hpp"
#include "corecluster/similarity.hpp"
#include "corecluster/synthgen.hpp"

// File formats:
//   observation CSV  header row of variable names, then one row per
//                    observation, comma separated, dot decimal
//   similarity CSV   p x p numeric square, optional header row; must be
//                    symmetric within 1e-9
//   triplet file     lines `row,col,value`, zero-based, implicit zeros
//   label CSV        `node_id,name,label,is_center`, label 0 = unclustered
//   centers CSV      `cluster_id,size,center_node,center_name,ic_score`
//   scenario CSV     `scenario,variant,rep,parameter,S,wall_time_ms`
namespace corecluster::io {

ObservationMatrix read_observation_csv(const std::string& path);
ObservationMatrix read_observation_triplets(const std::string& path);

SimilarityMatrix read_similarity_csv(const std::string& path);
void write_similarity_csv(const SimilarityMatrix& sim, const std::string& path);

// Graph as a weight triplet file (u,v,weight per line).
WeightedGraph read_edge_triplets(const std::string& path);
void write_edge_triplets(const WeightedGraph& graph, const std::string& path);

void write_labels_csv(const LabelArray& labels, const CoreClusterSet& clusters,
                      const std::vector<std::string>& names, const std::string& path);
LabelArray read_labels_csv(const std::string& path);

// Label CSV in which every node carries a nonzero cluster id.
GroundTruth read_truth_csv(const std::string& path);

void write_centers_csv(const CoreClusterSet& clusters,
                       const std::vector<std::string>& names, const std::string& path);

// Graph exports with the edge weight as attribute; labels, when given,
// become a per-node cluster attribute (0 = unclustered).
void write_dot(const WeightedGraph& graph, const LabelArray* labels, const std::string& path);
void write_graphml(const WeightedGraph& graph, const LabelArray* labels, const std::string& path);

// include_timing = false zeroes the wall_time_ms column so identical seeds
// produce byte-identical files.
void write_scenario_csv(const std::vector<ScenarioRow>& rows, bool include_timing,
                        const std::string& path);

// Node name for display/export: the stored name, or "v<id>" when unnamed.
std::string node_display_name(const std::vector<std::string>& names, NodeId id);

}  // namespace corecluster::io
