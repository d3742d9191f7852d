#pragma once

#include <cstddef>
#include <optional>

namespace evofs {

struct TerminationSpec {
    std::size_t max_iterations = 100;
    std::optional<double> target_fitness;          // stop once best >= target
    std::optional<std::size_t> stagnation_window;  // stop after this many iterations without improvement
};

}  // namespace evofs
