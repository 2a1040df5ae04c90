#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catmouse/cover.hpp"
#include "catmouse/strategy.hpp"

namespace catmouse {

// Ball-cover elimination. Round i (1-based, i < L) queries the current
// champion u_{w_i} at step 2i-1 and the challenger u_{i+1} at step 2i; bit
// b_{2i} = 1 hands the title to the challenger. From step 2L-1 on the cat
// repeats u_{w_L}, which is within 4L + k of the mouse at step 2L-1.
class FatCat : public CopyableCat<FatCat> {
 public:
  explicit FatCat(BallCover cover, std::string name = "fat");

  std::string name() const override { return name_; }
  Vertex first_query() override;
  Vertex next_query(std::optional<Bit> previous) override;

  const BallCover& cover() const { return *cover_; }
  int rounds() const { return cover_->count() - 1; }
  // Step at which the final champion is first queried (2L - 1).
  int declaration_step() const { return 2 * cover_->count() - 1; }
  // 4L + k.
  int guarantee() const { return 4 * cover_->count() + cover_->radius_k; }
  // w_1..w_r as 1-based cover indices; complete (size L) once the cat has
  // produced its query for step 2L-1.
  const std::vector<int>& champions() const { return champions_; }
  Vertex champion() const { return center(champions_.back()); }

 private:
  Vertex center(int index) const { return cover_->centers[static_cast<std::size_t>(index - 1)]; }
  Vertex emit();

  std::shared_ptr<const BallCover> cover_;
  std::string name_;
  int step_ = 0;
  std::vector<int> champions_;
};

// One completed phase of the sphere-walk cat.
struct ThinPhase {
  int index = 0;          // j
  Vertex anchor = 0;      // v_j
  int level = 0;          // l(v_j)
  int sphere_size = 0;    // |U| at the start of the phase
  int pairs_before = 0;   // T_j
  int pairs_after = 0;    // T_{j+1}
  Vertex next_anchor = 0; // v_{j+1}
};

// Sphere-walk descent. Phase j starts from anchor v_j (v_1 = vertex 0) and
// tries every w on the sphere of radius l(v_j) in ascending id: the pair
// (champion, w) is queried at steps 2i-1, 2i and bit b_{2i} = 1 makes w the
// champion. The champion at the end of the phase is v_{j+1}. Once
// T_j >= ceil(D/2) pair iterations, or when the anchor's sphere is empty, the
// cat holds its anchor forever.
class ThinCat : public CopyableCat<ThinCat> {
 public:
  // Throws ConstructionError naming the first vertex without a thin level < K.
  ThinCat(const DistanceOracle& oracle, int K);

  std::string name() const override { return "thin"; }
  Vertex first_query() override;
  Vertex next_query(std::optional<Bit> previous) override;

  int K() const { return shared_->K; }
  int diameter() const { return shared_->diameter; }
  int target_pairs() const { return shared_->target_pairs; }
  int level(Vertex v) const { return shared_->levels[static_cast<std::size_t>(v)]; }
  const std::vector<ThinPhase>& phases() const { return phases_; }
  Vertex anchor() const { return anchor_; }
  // Step from which the cat only repeats its anchor (0 while still searching).
  int hold_step() const { return hold_step_; }
  int pairs_done() const { return pairs_; }

 private:
  struct Shared {
    const DistanceOracle* oracle = nullptr;
    int K = 0;
    int diameter = 0;
    int target_pairs = 0;
    std::vector<int> levels;
  };

  void open_phase();
  void close_pair(Bit bit);

  std::shared_ptr<const Shared> shared_;
  int step_ = 0;
  int pairs_ = 0;
  int phase_index_ = 0;
  int phase_start_pairs_ = 0;
  Vertex anchor_ = 0;
  Vertex champion_ = 0;
  std::vector<Vertex> sphere_;
  std::size_t next_in_sphere_ = 0;
  bool holding_ = false;
  int hold_step_ = 0;
  std::vector<ThinPhase> phases_;
};

// Queries 0, 1, ..., n-1 cyclically.
class SweepCat : public CopyableCat<SweepCat> {
 public:
  explicit SweepCat(int n) : n_(n) {}
  std::string name() const override { return "sweep"; }
  Vertex first_query() override;
  Vertex next_query(std::optional<Bit> previous) override;

 private:
  int n_;
  int step_ = 0;
};

// Queries vertex 0 forever.
class StayCat : public CopyableCat<StayCat> {
 public:
  std::string name() const override { return "stay"; }
  Vertex first_query() override { return 0; }
  Vertex next_query(std::optional<Bit>) override { return 0; }
};

// Pseudo-random queries hashed from the seed and the bit history, so the
// strategy is still a fixed function of the bits.
class SeededRandomCat : public CopyableCat<SeededRandomCat> {
 public:
  SeededRandomCat(int n, std::uint64_t seed);
  std::string name() const override { return "rand:seed=" + std::to_string(seed_); }
  Vertex first_query() override;
  Vertex next_query(std::optional<Bit> previous) override;

 private:
  Vertex draw();

  int n_;
  std::uint64_t seed_;
  std::uint64_t state_;
};

// scattered_cover with separation ceil(sqrt(8n)) driven by FatCat.
std::unique_ptr<FatCat> make_sqrt_cat(const DistanceOracle& oracle);

// Separation ceil(c * sqrt(n)), at least 1.
int fat_separation(int n, double c);
// ceil(3 sqrt(n)).
int auto_thin_k(int n);

enum class BaselineKind { sweep, fixed_seed_random, stay };
std::unique_ptr<CatStrategy> baseline_cat(BaselineKind kind, int n, std::uint64_t seed = 0);

// "fat:c=2.83" | "fat:sep=13" | "thin:K=auto" | "thin:K=10" | "sqrt" | "sweep"
// | "rand:seed=7" | "rand" (uses default_seed) | "stay". Throws InputError.
std::unique_ptr<CatStrategy> make_cat(std::string_view spec, const DistanceOracle& oracle,
                                      std::uint64_t default_seed = 0);

}  // namespace catmouse
