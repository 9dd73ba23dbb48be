#include "sdmin/engine.hpp"

namespace sdmin {

std::vector<std::optional<FragmentPair>> replay(std::span<const BorderOp> ops,
                                                MinimizerEngine& engine) {
  std::vector<std::optional<FragmentPair>> minimizers;
  minimizers.reserve(ops.size());
  for (std::size_t i = 0; i < ops.size(); ++i) {
    try {
      switch (ops[i].kind) {
        case OpKind::Prepend: engine.prepend(ops[i].letter); break;
        case OpKind::Append: engine.append(ops[i].letter); break;
        case OpKind::DeleteFirst: engine.delete_first(); break;
        case OpKind::DeleteLast: engine.delete_last(); break;
      }
    } catch (const std::exception& e) {
      throw replay_error(i, std::string(op_name(ops[i].kind)) + " failed: " + e.what());
    }
    minimizers.push_back(engine.minimizer());
  }
  return minimizers;
}

}  // namespace sdmin
