#include "sumsetlab/ensemble.hpp"

#include <string>

namespace sumsetlab {

EnsembleLayout ensemble_layout(Ensemble e, int n) {
  if (n < 1 || n > kMaxUniverse) {
    throw BadUniverse("universe size must be in [1," +
                      std::to_string(kMaxUniverse) + "], got " +
                      std::to_string(n));
  }
  switch (e) {
    case Ensemble::Free:
      return {0, 0, n};
    case Ensemble::Zero:
      return {1, 1, n - 1};
    case Ensemble::ZeroEnd:
      if (n == 1) return {1, 1, 0};  // the single subset {0}
      return {1ull | (1ull << (n - 1)), 1, n - 2};
  }
  throw BadQuery("unknown ensemble");
}

const char* ensemble_name(Ensemble e) {
  switch (e) {
    case Ensemble::Free:
      return "free";
    case Ensemble::Zero:
      return "zero";
    case Ensemble::ZeroEnd:
      return "zero-end";
  }
  return "?";
}

const char* kind_name(Kind k) { return k == Kind::Sum ? "sum" : "diff"; }

IntervalSpec resolve_interval(const DistQuery& q) {
  if (q.n < 1 || q.n > kMaxUniverse) {
    throw BadUniverse("universe size must be in [1," +
                      std::to_string(kMaxUniverse) + "], got " +
                      std::to_string(q.n));
  }
  const IntervalSpec iv =
      std::holds_alternative<PresetName>(q.interval)
          ? preset_interval(std::get<PresetName>(q.interval), q.n)
          : std::get<IntervalSpec>(q.interval);
  if (iv.empty()) return iv;
  if (q.kind == Kind::Sum) {
    if (iv.lo < 0 || iv.hi > 2 * q.n - 2) {
      throw BadQuery("interval [" + std::to_string(iv.lo) + "," +
                     std::to_string(iv.hi) + "] invalid for sums over n=" +
                     std::to_string(q.n));
    }
  } else if (iv.lo < -(q.n - 1) || iv.hi > q.n - 1) {
    throw BadQuery("interval [" + std::to_string(iv.lo) + "," +
                   std::to_string(iv.hi) + "] invalid for differences over n=" +
                   std::to_string(q.n));
  }
  return iv;
}

}  // namespace sumsetlab
