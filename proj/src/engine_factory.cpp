#include "sdmin/engine_factory.hpp"

#include "sdmin/heap_engine.hpp"
#include "sdmin/oracle_engine.hpp"
#include "sdmin/two_layer_engine.hpp"
#include "sdmin/two_stack_engine.hpp"

namespace sdmin {

std::unique_ptr<MinimizerEngine> make_engine(EngineKind kind, const HashConfig& cfg,
                                             OrderMode mode, const BlockScheme& scheme,
                                             DequeOrientation orientation, Pos start) {
  switch (kind) {
    case EngineKind::Oracle:
      return std::make_unique<OracleEngine>(cfg, mode, start);
    case EngineKind::Heap:
      return std::make_unique<HeapEngine>(cfg, mode, start);
    case EngineKind::Deque:
      return std::make_unique<DequeEngine>(cfg, mode, orientation, start);
    case EngineKind::TwoStack:
      return std::make_unique<TwoStackEngine>(cfg, mode, start);
    case EngineKind::TwoLayer:
      return std::make_unique<TwoLayerEngine>(scheme, cfg, mode, start);
  }
  throw std::invalid_argument("unknown engine kind");
}

}  // namespace sdmin
