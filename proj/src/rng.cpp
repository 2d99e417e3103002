#include "rsh/rng.hpp"

namespace rsh {

int poisson_plus_one(RngStream& rng) { return rng.poisson1() + 1; }

} // namespace rsh
