#pragma once

#include <cstdint>
#include <variant>

#include "sumsetlab/bitset_core.hpp"

namespace sumsetlab {

// Subset ensembles over {0,...,n-1}, all uniform on their support:
//   Free:    all 2^n subsets;
//   Zero:    subsets containing 0 (2^(n-1));
//   ZeroEnd: subsets containing 0 and n-1 (2^(n-2); for n = 1 the single
//            subset {0}).
enum class Ensemble { Free, Zero, ZeroEnd };

// Admissible masks are (v << shift) | forced for v in [0, 2^n_free):
// the free bits form a contiguous block, so enumeration and sampling
// partition trivially.
struct EnsembleLayout {
  std::uint64_t forced = 0;
  int shift = 0;
  int n_free = 0;
};

EnsembleLayout ensemble_layout(Ensemble e, int n);

const char* ensemble_name(Ensemble e);
const char* kind_name(Kind k);

// A distribution request: the number of missing sums (or differences) in an
// interval, over subsets drawn from an ensemble.
struct DistQuery {
  Ensemble ensemble = Ensemble::Free;
  Kind kind = Kind::Sum;
  std::variant<PresetName, IntervalSpec> interval = PresetName::All;
  int n = 0;
};

// Resolves a preset and validates the interval against the kind's value
// range.  Throws BadQuery on mismatch, BadUniverse for bad n.
IntervalSpec resolve_interval(const DistQuery& q);

}  // namespace sumsetlab
