#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdmin/text.hpp"

namespace sdmin {

enum class EngineKind : std::uint8_t { Oracle, Heap, Deque, TwoStack, TwoLayer };

inline const char* engine_name(EngineKind kind) {
  switch (kind) {
    case EngineKind::Oracle: return "oracle";
    case EngineKind::Heap: return "heap";
    case EngineKind::Deque: return "deque";
    case EngineKind::TwoStack: return "two-stack";
    case EngineKind::TwoLayer: return "two-layer";
  }
  return "?";
}

inline std::optional<EngineKind> parse_engine(const std::string& name) {
  if (name == "oracle") return EngineKind::Oracle;
  if (name == "heap") return EngineKind::Heap;
  if (name == "deque") return EngineKind::Deque;
  if (name == "two-stack") return EngineKind::TwoStack;
  if (name == "two-layer") return EngineKind::TwoLayer;
  return std::nullopt;
}

// Thrown by engines that deliberately do not support one of the four border
// operations (e.g. the monotonic-queue engine supports deletion at only one
// end).
struct unsupported_operation : std::logic_error {
  using std::logic_error::logic_error;
};

// Bookkeeping counters shared by all engines.  `work` counts elementary stack
// or queue moves; `witness_violations` counts failures of the pay-as-you-go
// accounting described alongside each engine and must stay zero.
struct EngineStats {
  std::uint64_t ops = 0;
  std::uint64_t work = 0;
  std::uint64_t live_pairs = 0;
  std::uint64_t peak_live_pairs = 0;
  std::uint64_t rebuilds = 0;
  std::uint64_t rebuild_work = 0;
  std::uint64_t recomputes = 0;
  std::uint64_t flushes = 0;
  std::uint64_t witness_violations = 0;
  std::uint64_t max_stack_depth = 0;
};

// A string that grows and shrinks at both ends, maintaining the smallest
// length-k fragment (its "minimizer") under the configured order.  Mutating
// operations return the fragment pair created or destroyed by the operation,
// or nullopt when the string is too short to contain a full fragment.
class MinimizerEngine {
 public:
  MinimizerEngine() = default;
  MinimizerEngine(const MinimizerEngine&) = delete;
  MinimizerEngine& operator=(const MinimizerEngine&) = delete;
  virtual ~MinimizerEngine() = default;

  virtual std::optional<FragmentPair> prepend(Letter a) = 0;
  virtual std::optional<FragmentPair> append(Letter a) = 0;
  virtual std::optional<FragmentPair> delete_first() = 0;
  virtual std::optional<FragmentPair> delete_last() = 0;

  // Smallest (value, position) fragment pair of the current string, or
  // nullopt when no fragment exists.
  virtual std::optional<FragmentPair> minimizer() const = 0;

  virtual Pos start_pos() const = 0;
  virtual std::int64_t size() const = 0;
  virtual std::int64_t fragment_count() const = 0;
  virtual const EngineStats& stats() const = 0;
  virtual EngineKind kind() const = 0;
};

enum class OpKind : std::uint8_t { Prepend, Append, DeleteFirst, DeleteLast };

inline const char* op_name(OpKind op) {
  switch (op) {
    case OpKind::Prepend: return "prepend";
    case OpKind::Append: return "append";
    case OpKind::DeleteFirst: return "delete_first";
    case OpKind::DeleteLast: return "delete_last";
  }
  return "?";
}

struct BorderOp {
  OpKind kind = OpKind::Append;
  Letter letter = 0;  // ignored for deletions
};

struct replay_error : std::runtime_error {
  replay_error(std::size_t index, const std::string& what)
      : std::runtime_error(what), op_index(index) {}
  std::size_t op_index = 0;
};

// Applies `ops` in order and returns the minimizer observed after each
// operation.  Exceptions from the engine are wrapped in replay_error carrying
// the index of the offending operation.
std::vector<std::optional<FragmentPair>> replay(std::span<const BorderOp> ops,
                                                MinimizerEngine& engine);

}  // namespace sdmin
