#include "rsh/engine.hpp"

namespace rsh {

Trajectory run_until(const StepFn& step, const SuccessFn& success, Budget budget,
                     RngStream& rng) {
    Trajectory traj;
    while (!budget.exhausted()) {
        StepOutcome out = step(rng, budget.remaining());
        if (out.evaluations == 0)
            throw std::logic_error("step consumed no evaluations");
        budget.consume(out.evaluations);
        traj.evaluations_used = budget.evaluations_used;
        traj.record(budget.evaluations_used, out.best, out.improved);
        if (success()) {
            traj.hit_time = budget.evaluations_used;
            break;
        }
    }
    traj.evaluations_used = budget.evaluations_used;
    return traj;
}

} // namespace rsh
