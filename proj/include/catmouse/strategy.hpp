#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>

#include "catmouse/distance.hpp"

namespace catmouse {

using Bit = std::uint8_t;

// A cat decides c_1, c_2 without information and c_i = f(b_2..b_{i-1}) for
// i >= 3. Implementations must be deterministic functions of the bit history.
class CatStrategy {
 public:
  virtual ~CatStrategy() = default;

  virtual std::string name() const = 0;
  // c_1.
  virtual Vertex first_query() = 0;
  // c_i for i >= 2; `previous` is b_{i-1}, absent when producing c_2.
  virtual Vertex next_query(std::optional<Bit> previous) = 0;

  // Independent copy of the current state, for lookahead.
  virtual std::unique_ptr<CatStrategy> snapshot() const = 0;
  // Rewind to a state previously taken with snapshot() on this strategy type.
  virtual void restore(const CatStrategy& snap) = 0;

  // Dispatches on the 1-based step.
  Vertex query(int step, std::optional<Bit> previous) {
    return step == 1 ? first_query() : next_query(previous);
  }
};

// Copy-based snapshot/restore for value-semantic strategy classes.
template <typename Derived>
class CopyableCat : public CatStrategy {
 public:
  std::unique_ptr<CatStrategy> snapshot() const override {
    return std::make_unique<Derived>(static_cast<const Derived&>(*this));
  }
  void restore(const CatStrategy& snap) override {
    static_cast<Derived&>(*this) = dynamic_cast<const Derived&>(snap);
  }
};

// What the mouse sees when it moves at step i: everything, including the
// live cat (read-only; simulate on a snapshot). History arrays are 1-indexed
// with a sentinel at index 0 and cover steps 1..i-1; bits are -1 where absent.
struct GameView {
  const DistanceOracle& oracle;
  const CatStrategy& cat;
  int step;
  std::span<const Vertex> c;
  std::span<const Vertex> m;
  std::span<const std::int8_t> b;

  // The bit the cat receives with its next query (b_{i-1}), absent for i <= 2.
  std::optional<Bit> pending_bit() const {
    if (step < 3) return std::nullopt;
    return static_cast<Bit>(b[static_cast<std::size_t>(step - 1)]);
  }
  // c_i, obtained by running a snapshot of the cat one query ahead.
  Vertex forecast_query() const {
    auto sim = cat.snapshot();
    return sim->query(step, pending_bit());
  }
};

class MouseStrategy {
 public:
  virtual ~MouseStrategy() = default;

  virtual std::string name() const = 0;
  // m_1.
  virtual Vertex first_position(const GameView& view) = 0;
  // m_i for i >= 2; must be m_{i-1} or a neighbor of it.
  virtual Vertex next_move(const GameView& view) = 0;
};

}  // namespace catmouse
