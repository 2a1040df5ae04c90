#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catmouse/strategy.hpp"
#include "catmouse/vertex_set.hpp"

namespace catmouse {

inline Bit feedback_bit(int d_prev, int d_cur) { return d_cur <= d_prev ? 1 : 0; }

// One step of the exact belief DP:
// { v : exists u in prev with v in N[u] and feedback_bit(d(c_prev,u), d(c_cur,v)) == bit }.
// Throws IllegalFeedback when the result is empty.
VertexSet belief_update(const DistanceOracle& oracle, const VertexSet& prev, Vertex c_prev, Vertex c_cur, Bit bit);

// Full game record. All arrays are 1-indexed with index 0 a sentinel
// (kNoVertex / -1); b[1] is also -1 because b_1 does not exist.
struct Transcript {
  std::string graph_spec;
  int horizon = 0;
  std::vector<Vertex> c;
  std::vector<Vertex> m;
  std::vector<std::int8_t> b;
  bool beliefs_tracked = false;
  std::vector<int> belief_radius;
  std::vector<Vertex> belief_center;
  // Only filled when GameOptions::record_beliefs; index 0 is empty.
  std::vector<VertexSet> beliefs;
  std::map<std::string, std::string> meta;
};

struct GameOptions {
  bool track_belief = true;
  bool record_beliefs = false;
  // End the game right after the first step whose belief radius is <= this.
  std::optional<int> stop_at_radius;
  std::string graph_spec;
};

// Plays `horizon` steps: at each step the mouse moves, then the cat queries,
// then b_i is computed (delivered with the cat's next query). M_1 = V.
// Throws RuleViolation for illegal moves or queries, IllegalFeedback if the
// belief set empties, and std::logic_error if the true position leaves M_i.
Transcript run_game(const DistanceOracle& oracle, CatStrategy& cat, MouseStrategy& mouse, int horizon,
                    const GameOptions& options = {});

struct LocalizationReport {
  std::optional<int> first_success_step;
  int min_radius = 0;
  int argmin_step = 0;
};

// First step with radius <= d plus the minimum radius and where it occurs
// (earliest on ties). Throws InputError if the transcript has no beliefs.
LocalizationReport localization_report(const Transcript& tr, int d);

// Recompute b from (c, m); equals tr.b for any engine transcript.
std::vector<std::int8_t> recompute_bits(const DistanceOracle& oracle, const Transcript& tr);

std::string transcript_to_json(const Transcript& tr);
Transcript transcript_from_json(const std::string& text);

}  // namespace catmouse
