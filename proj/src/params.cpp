#include "ndmap/params.hpp"

#include <cmath>
#include <string>

#include "ndmap/errors.hpp"

namespace ndmap {

void validate(const ProblemParams& params) {
  if (!(params.k > 0.0) || !std::isfinite(params.k)) {
    throw PreconditionError("wavenumber k must be positive, got " +
                            std::to_string(params.k));
  }
  if (!std::isfinite(params.a)) {
    throw PreconditionError("coefficient a must be finite");
  }
  if (params.J < 1) {
    throw PreconditionError("J must be at least 1, got " +
                            std::to_string(params.J));
  }
  if (!(params.guard > 0.0)) {
    throw PreconditionError("resonance guard must be positive");
  }
}

}  // namespace ndmap
