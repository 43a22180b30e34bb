#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ecrit/coloring.hpp"
#include "ecrit/kierstead.hpp"
#include "ecrit/report.hpp"
#include "ecrit/swap_script.hpp"

namespace ecrit {

inline constexpr int kNormalizeSwapBound = 24;

// Result of normalizing a 5-vertex Kierstead path K = (a,b,u,s,t).
//   kNormalized: φ*(bu) = alpha ∈ φ̄*(a) ∩ φ̄*(t), φ*(us) = beta ∈
//   φ̄*(b) ∩ φ̄*(t), φ*(st) = gamma ∈ φ̄*(a); ab still uncolored.
//   kProperColoring: a full Δ-coloring of G, which exists only when ab was
//   not critical in the first place.
struct NormalizationOutcome {
  enum class Kind { kNormalized, kProperColoring };
  Kind kind = Kind::kNormalized;
  PartialEdgeColoring coloring;
  Color alpha = 0;
  Color beta = 0;
  Color gamma = 0;
  SwapScript trace;                // every recoloring step, in order
  int swaps = 0;                   // Kempe changes in `trace`
  std::vector<std::string> notes;  // case taken, color renamings, fallbacks
  bool used_fallback = false;
};

// The procedure reached a state its case analysis does not cover.
class NormalizationError : public std::runtime_error {
 public:
  NormalizationError(const std::string& what, SwapScript trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}
  const SwapScript& trace() const { return trace_; }

 private:
  SwapScript trace_;
};

// The kNormalized pattern above, evaluated on c.
bool IsNormalizedK5(const PartialEdgeColoring& c, const KiersteadPath& k);

// Requires c to have k = Δ and ab = (k.v[0], k.v[1]) as its only uncolored
// edge, K a Kierstead path, and |φ̄(t) ∩ (φ̄(a) ∪ φ̄(b))| ≥ 3 (otherwise
// PreconditionError). Throws NormalizationError on an uncovered state.
NormalizationOutcome NormalizeK5(const PartialEdgeColoring& c,
                                 const KiersteadPath& k);

enum class ReplayExpectation { kProperFull, kProperPartial };

// Replays a two-row script and checks the final coloring against the
// expectation. Inapplicable steps fail with the step index.
VerificationReport ReplayProofScript(const PartialEdgeColoring& c,
                                     const SwapScript& s,
                                     ReplayExpectation expect);

}  // namespace ecrit
