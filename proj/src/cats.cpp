#include "catmouse/cats.hpp"

#include <cmath>

#include "catmouse/errors.hpp"
#include "catmouse/rng.hpp"
#include "catmouse/spec_string.hpp"

namespace catmouse {

// ---- FatCat ----------------------------------------------------------------

FatCat::FatCat(BallCover cover, std::string name) : name_(std::move(name)) {
  if (cover.centers.empty()) throw ConstructionError("fat cat needs a non-empty cover");
  cover_ = std::make_shared<const BallCover>(std::move(cover));
}

Vertex FatCat::emit() {
  const int L = cover_->count();
  if (step_ <= 2 * (L - 1)) {
    const int round = (step_ + 1) / 2;
    return step_ % 2 == 1 ? center(champions_[static_cast<std::size_t>(round - 1)]) : center(round + 1);
  }
  return center(champions_.back());
}

Vertex FatCat::first_query() {
  step_ = 1;
  champions_.assign(1, 1);
  return emit();
}

Vertex FatCat::next_query(std::optional<Bit> previous) {
  ++step_;
  const int round = (step_ - 1) / 2;
  if (step_ % 2 == 1 && round >= 1 && round <= rounds()) {
    if (!previous) throw InputError("fat cat needs the bit of step " + std::to_string(step_ - 1));
    const int prev = champions_.back();
    champions_.push_back(*previous ? round + 1 : prev);
  }
  return emit();
}

// ---- ThinCat ---------------------------------------------------------------

ThinCat::ThinCat(const DistanceOracle& oracle, int K) {
  if (K < 1) throw ConstructionError("thin cat needs K >= 1");
  auto shared = std::make_shared<Shared>();
  shared->oracle = &oracle;
  shared->K = K;
  auto levels = thin_levels(oracle, K);
  shared->levels.reserve(levels.size());
  for (Vertex v = 0; v < oracle.n(); ++v) {
    const auto& lv = levels[static_cast<std::size_t>(v)];
    if (!lv) {
      throw ConstructionError("vertex " + std::to_string(v) + " has no thin level below K=" + std::to_string(K));
    }
    shared->levels.push_back(*lv);
  }
  shared->diameter = oracle.diameter();
  shared->target_pairs = (shared->diameter + 1) / 2;
  shared_ = std::move(shared);
}

void ThinCat::open_phase() {
  if (pairs_ >= shared_->target_pairs) {
    holding_ = true;
    hold_step_ = step_;
    return;
  }
  sphere_ = sphere(*shared_->oracle, anchor_, level(anchor_));
  if (sphere_.empty()) {
    // every vertex is already within l(v_j) - 1 < K of the anchor
    holding_ = true;
    hold_step_ = step_;
    return;
  }
  ++phase_index_;
  phase_start_pairs_ = pairs_;
  champion_ = anchor_;
  next_in_sphere_ = 0;
}

void ThinCat::close_pair(Bit bit) {
  if (bit) champion_ = sphere_[next_in_sphere_];
  ++next_in_sphere_;
  if (next_in_sphere_ < sphere_.size()) return;
  phases_.push_back(ThinPhase{phase_index_, anchor_, level(anchor_), static_cast<int>(sphere_.size()),
                              phase_start_pairs_, pairs_, champion_});
  anchor_ = champion_;
  open_phase();
}

Vertex ThinCat::first_query() {
  step_ = 1;
  pairs_ = 0;
  phase_index_ = 0;
  anchor_ = 0;
  holding_ = false;
  hold_step_ = 0;
  phases_.clear();
  open_phase();
  if (holding_) return anchor_;
  ++pairs_;
  return champion_;
}

Vertex ThinCat::next_query(std::optional<Bit> previous) {
  ++step_;
  if (holding_) return anchor_;
  if (step_ % 2 == 0) return sphere_[next_in_sphere_];
  if (!previous) throw InputError("thin cat needs the bit of step " + std::to_string(step_ - 1));
  close_pair(*previous);
  if (holding_) return anchor_;
  ++pairs_;
  return champion_;
}

// ---- baselines -------------------------------------------------------------

Vertex SweepCat::first_query() {
  step_ = 1;
  return 0;
}

Vertex SweepCat::next_query(std::optional<Bit>) {
  ++step_;
  return static_cast<Vertex>((step_ - 1) % n_);
}

SeededRandomCat::SeededRandomCat(int n, std::uint64_t seed)
    : n_(n), seed_(seed), state_(derive_seed(seed, "rand-cat")) {}

Vertex SeededRandomCat::draw() {
  state_ = splitmix64(state_);
  return static_cast<Vertex>(state_ % static_cast<std::uint64_t>(n_));
}

Vertex SeededRandomCat::first_query() {
  state_ = derive_seed(seed_, "rand-cat");
  return draw();
}

Vertex SeededRandomCat::next_query(std::optional<Bit> previous) {
  const std::uint64_t mix = previous ? static_cast<std::uint64_t>(*previous) + 1 : 0;
  state_ ^= mix * 0xd6e8feb86659fd93ULL;
  return draw();
}

// ---- factories -------------------------------------------------------------

int fat_separation(int n, double c) {
  if (!(c > 0)) throw InputError("fat cat needs c > 0");
  const long double s = std::ceil(static_cast<long double>(c) * std::sqrt(static_cast<long double>(n)));
  return std::max(1, static_cast<int>(s));
}

int auto_thin_k(int n) { return static_cast<int>(ceil_sqrt(9LL * n)); }

std::unique_ptr<FatCat> make_sqrt_cat(const DistanceOracle& oracle) {
  const int separation = static_cast<int>(ceil_sqrt(8LL * oracle.n()));
  return std::make_unique<FatCat>(scattered_cover(oracle, separation), "sqrt");
}

std::unique_ptr<CatStrategy> baseline_cat(BaselineKind kind, int n, std::uint64_t seed) {
  switch (kind) {
    case BaselineKind::sweep:
      return std::make_unique<SweepCat>(n);
    case BaselineKind::fixed_seed_random:
      return std::make_unique<SeededRandomCat>(n, seed);
    case BaselineKind::stay:
      return std::make_unique<StayCat>();
  }
  throw InputError("unknown baseline cat");
}

std::unique_ptr<CatStrategy> make_cat(std::string_view text, const DistanceOracle& oracle, std::uint64_t default_seed) {
  SpecString spec = parse_spec_string(text);
  const int n = oracle.n();
  if (spec.kind == "fat") {
    int separation = 0;
    if (spec.has("sep")) {
      separation = static_cast<int>(spec.get_int("sep"));
      if (separation < 1) throw InputError("cat spec '" + spec.text + "': sep must be >= 1");
    } else {
      separation = fat_separation(n, spec.has("c") ? spec.get_double("c") : std::sqrt(8.0));
    }
    return std::make_unique<FatCat>(scattered_cover(oracle, separation), spec.text);
  }
  if (spec.kind == "thin") {
    int K = 0;
    auto it = spec.params.find("K");
    if (it == spec.params.end() || it->second == "auto") {
      K = auto_thin_k(n);
    } else {
      K = static_cast<int>(spec.get_int("K"));
    }
    try {
      return std::make_unique<ThinCat>(oracle, K);
    } catch (const ConstructionError& e) {
      throw InputError("cat spec '" + spec.text + "': " + e.what());
    }
  }
  if (spec.kind == "sqrt") return make_sqrt_cat(oracle);
  if (spec.kind == "sweep") return baseline_cat(BaselineKind::sweep, n);
  if (spec.kind == "stay") return baseline_cat(BaselineKind::stay, n);
  if (spec.kind == "rand") return baseline_cat(BaselineKind::fixed_seed_random, n, spec.get_seed("seed", default_seed));
  throw InputError("unknown cat kind '" + spec.kind + "'");
}

}  // namespace catmouse
