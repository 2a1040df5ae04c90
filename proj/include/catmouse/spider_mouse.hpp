#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catmouse/generators.hpp"
#include "catmouse/strategy.hpp"

namespace catmouse {

// Stages of the evading mouse. Choosing the run-out branch (at the center)
// and re-anchoring the shadow (at depth t/4) are instantaneous and happen on
// the first and last run-out step respectively.
enum class SpiderStage { setup, drift, run_in, run_out };

const char* to_string(SpiderStage stage);

// Depth bookkeeping for the real trajectory (m) and the shadow (w). Only
// d(c_i, u) drives it, so the same plan can be replayed against a simulated
// cat without knowing which branches are used.
struct SpiderRadialPlan {
  int t = 12;
  SpiderStage stage = SpiderStage::setup;
  int clock = 0;       // steps left in the current stage
  int mouse_depth = 0;
  int shadow_depth = 0;
  int drift_result = 0;  // d(m, u) at the end of the drift stage

  struct Events {
    bool leaves_center = false;  // first run-out step: pick a new branch for m
    bool reanchors = false;      // last run-out step: move the shadow
    bool reaches_center = false; // last run-in step
    bool ends_drift = false;
  };

  static SpiderRadialPlan start(int t);
  // Advance one step given d(c_{i-1}, u) and d(c_i, u).
  Events step(int center_dist_prev, int center_dist_cur);
  // Feedback bit a mouse following this plan produces at this step, assuming
  // neither query lies on its branch.
  static Bit bit_for(int center_dist_prev, int depth_prev, int center_dist_cur, int depth_cur) {
    return center_dist_cur + depth_cur <= center_dist_prev + depth_prev ? 1 : 0;
  }
};

// Where a lookahead starts: the cat (snapshot) is about to produce c_step,
// having last produced prev_query; `pending` is b_{step-1}; `plan` is the
// mouse's state before its move at `step`.
struct ForecastStart {
  int step = 1;
  std::optional<Bit> pending;
  Vertex prev_query = kNoVertex;
  SpiderRadialPlan plan;
};

// Queries c_step .. c_{step+window-1} the cat will make against a mouse
// following `start.plan` on a branch the cat never queries in that window.
std::vector<Vertex> forecast_queries(const DistanceOracle& oracle, const CatStrategy& cat, const ForecastStart& start,
                                     int window);

// Lowest main branch (1..t) that none of the forecast queries touch and that
// is not excluded. The center and padding branch are never returned.
// Throws InputError unless window < t and |excluded| + window < t.
int find_safe_branch(const DistanceOracle& oracle, const SpiderLayout& layout, const CatStrategy& cat,
                     const ForecastStart& start, int window, const std::vector<int>& excluded);

struct ProtectedWindow {
  int branch = 0;
  int first_step = 0;
  int last_step = 0;
  std::string reason;
};

// The adversarial mouse on gen_spider(t, extra), 12 | t. It keeps a shadow
// trajectory w_i that produces the same feedback bits as the real one while
// staying more than t/6 away from it (except at the instants the real mouse
// sits on the center, where the gap is exactly t/6).
class SpiderMouse : public MouseStrategy {
 public:
  // Throws ConstructionError unless t >= 12 and 12 | t.
  explicit SpiderMouse(int t);

  std::string name() const override { return "spider:t=" + std::to_string(t_); }
  // Throws ConstructionError if the graph is not a spider with parameter t.
  Vertex first_position(const GameView& view) override;
  Vertex next_move(const GameView& view) override;

  int t() const { return t_; }
  // 1-indexed per-step records (index 0 is a sentinel).
  const std::vector<Vertex>& shadow() const { return shadow_; }
  const std::vector<SpiderStage>& stages() const { return stages_; }
  const std::vector<int>& mouse_branches() const { return mouse_branch_log_; }
  const std::vector<int>& shadow_branches() const { return shadow_branch_log_; }
  // Steps at which the drift stage ended / the mouse reached the center.
  const std::vector<int>& drift_end_steps() const { return drift_end_steps_; }
  const std::vector<int>& center_steps() const { return center_steps_; }
  const std::vector<int>& drift_results() const { return drift_results_; }
  const std::vector<ProtectedWindow>& windows() const { return windows_; }
  int cycles_completed() const { return cycles_; }

 private:
  int choose(const GameView& view, const ForecastStart& start, int window, const std::vector<int>& excluded,
             const std::string& reason);
  void record(Vertex shadow);

  int t_;
  std::optional<SpiderLayout> layout_;
  SpiderRadialPlan plan_;
  int mouse_branch_ = 0;
  int shadow_branch_ = 0;
  int last_center_step_ = 0;
  int cycles_ = 0;
  std::vector<Vertex> shadow_{kNoVertex};
  std::vector<SpiderStage> stages_{SpiderStage::setup};
  std::vector<int> mouse_branch_log_{0};
  std::vector<int> shadow_branch_log_{0};
  std::vector<int> drift_end_steps_;
  std::vector<int> center_steps_;
  std::vector<int> drift_results_;
  std::vector<ProtectedWindow> windows_;
};

}  // namespace catmouse
