#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orp/blp_orp.hpp"
#include "orp/core.hpp"
#include "orp/graph_orp.hpp"
#include "orp/sched_orp.hpp"
#include "orp/tsp_orp.hpp"

// Text formats. All indices are 1-based on disk and in error messages;
// rationals are written exactly (integer, or num/den).
namespace orp::io {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// blp <n> <m> <max|min> / objective line / m rows "<a_1> .. <a_n> <le|ge|eq> <b>"
BlpInstance parse_blp(const std::string& text);
std::string write_blp(const BlpInstance& inst);

// "parents" header, then two lines of n 0/1 entries
std::pair<BinaryVector, BinaryVector> parse_parents_binary(const std::string& text, int n);
std::string write_parents_binary(const BinaryVector& p1, const BinaryVector& p2);

// "parents" header, then two lines of n 1-based ids (tours / job sequences)
std::pair<std::vector<int>, std::vector<int>> parse_parents_sequence(const std::string& text,
                                                                     int n);
std::string write_parents_sequence(const std::vector<int>& p1, const std::vector<int>& p2);

// graph <n> <m> / n lines "v <id> <weight>" / m lines "e <u> <v>"
graph::WeightedGraph parse_graph(const std::string& text);
std::string write_graph(const graph::WeightedGraph& g);

// setsys <packing|partition|covering> <m> <n> / cost line / m rows of n 0/1
blp::SetSystemInstance parse_set_system(const std::string& text);
std::string write_set_system(const blp::SetSystemInstance& inst);

// splp <K> <L> / opening-cost line / K lines of L service costs
blp::SplpInstance parse_splp(const std::string& text);
std::string write_splp(const blp::SplpInstance& inst);

// tsp <n> <sym|gen> / n lines of n distances
tsp::TspInstance parse_tsp(const std::string& text);
std::string write_tsp(const tsp::TspInstance& inst);

// sched <k> / processing-time line / k lines of k setups
sched::SetupInstance parse_sched(const std::string& text);
std::string write_sched(const sched::SetupInstance& inst);

}  // namespace orp::io
