#pragma once

#include <memory>

#include "sdmin/block_scheme.hpp"
#include "sdmin/deque_engine.hpp"
#include "sdmin/engine.hpp"

namespace sdmin {

// Builds any engine behind the common interface.  `scheme` only affects the
// two-layer engine and `orientation` only the monotonic-queue engine.
std::unique_ptr<MinimizerEngine> make_engine(
    EngineKind kind, const HashConfig& cfg, OrderMode mode,
    const BlockScheme& scheme = BlockScheme::progressing(),
    DequeOrientation orientation = DequeOrientation::LeftToRight, Pos start = 0);

}  // namespace sdmin
