#ifndef RSH_ENGINE_HPP
#define RSH_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rsh/rng.hpp"

namespace rsh {

// Evaluation budget. One fitness call = one evaluation everywhere;
// population algorithms charge mu on initialization and lambda per
// generation.
struct Budget {
    std::uint64_t max_evaluations = 0;
    std::uint64_t evaluations_used = 0;

    std::uint64_t remaining() const { return max_evaluations - evaluations_used; }
    bool exhausted() const { return evaluations_used >= max_evaluations; }

    void consume(std::uint64_t k) {
        if (k > remaining())
            throw std::logic_error("budget overrun");
        evaluations_used += k;
    }
};

// Best-so-far record of one run. best_history holds (evaluation index,
// objective value) appended whenever the incumbent improves; hit_time is
// the evaluation count at the first success observation.
struct Trajectory {
    std::vector<std::pair<std::uint64_t, double>> best_history;
    std::optional<std::uint64_t> hit_time;
    std::uint64_t evaluations_used = 0;

    bool success() const { return hit_time.has_value(); }

    void record(std::uint64_t eval_index, double value, bool improved) {
        if (improved || best_history.empty())
            best_history.emplace_back(eval_index, value);
    }

    friend bool operator==(const Trajectory& a, const Trajectory& b) {
        return a.best_history == b.best_history && a.hit_time == b.hit_time &&
               a.evaluations_used == b.evaluations_used;
    }
};

// One state transition. `max_evaluations` is the allowance for this step;
// the step must consume at least one and at most that many evaluations and
// report the count together with the best objective value seen so far.
struct StepOutcome {
    std::uint64_t evaluations = 1;
    double best = 0.0;
    bool improved = false;
};

using StepFn = std::function<StepOutcome(RngStream&, std::uint64_t max_evaluations)>;
using SuccessFn = std::function<bool()>;

// Budgeted trajectory loop: iterate `step` until `success` holds or the
// budget runs out. Running out of budget is a normal outcome (no hit_time),
// not an error. Evaluations never exceed budget.max_evaluations.
Trajectory run_until(const StepFn& step, const SuccessFn& success, Budget budget,
                     RngStream& rng);

} // namespace rsh

#endif
