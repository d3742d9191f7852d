// formula-level checks for ABC, PSO and GWO

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "evofs/abc.hpp"
#include "evofs/gwo.hpp"
#include "evofs/pso.hpp"

using namespace evofs;

namespace {
double count_bits(const Genome& g) { return static_cast<double>(g.selected_count()); }
}  // namespace

TEST_CASE("abc_neighbor: zero step, zero difference, direct formula") {
    const std::vector<double> fi{0.4, 0.6};
    const std::vector<double> fj{0.2, 0.9};
    const std::vector<double> zero{0.0, 0.0};
    CHECK(abc_neighbor(fi, fj, zero, 0, 1) == fi);
    const std::vector<double> any{0.37, 0.81};
    CHECK(abc_neighbor(fi, fi, any, 0, 1) == fi);

    const std::vector<double> one_dim_i{0.4};
    const std::vector<double> one_dim_j{0.2};
    const std::vector<double> v{0.5};
    CHECK(abc_neighbor(one_dim_i, one_dim_j, v, 0, 1)[0] == doctest::Approx(0.5));
}

TEST_CASE("abc_neighbor: output is clamped to the bounds") {
    const std::vector<double> fi{0.9};
    const std::vector<double> fj{0.1};
    const std::vector<double> v{1.0};  // 0.9 + 0.8 = 1.7 -> clamp
    CHECK(abc_neighbor(fi, fj, v, 0, 1)[0] == doctest::Approx(1.0));
}

TEST_CASE("abc_scout_value: endpoints and uniform mean") {
    CHECK(abc_scout_value(0.2, 0.8, 0.0) == doctest::Approx(0.2));
    CHECK(abc_scout_value(0.2, 0.8, 1.0) == doctest::Approx(0.8));
    RngStream rng(31);
    double sum = 0.0;
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) sum += abc_scout_value(0.0, 1.0, rng.uniform01());
    CHECK(std::fabs(sum / draws - 0.5) <= 0.02);
}

TEST_CASE("abc colony: trial counters reset on improvement and one scout per step") {
    RngStream rng(32);
    AbcParams params;
    params.colony_size = 10;
    params.limit = 3;
    AbcColony colony(8, params, count_bits, rng);
    for (int t = 0; t < 30; ++t) {
        colony.step(count_bits, rng);
        CHECK(colony.scout_resets_last_step() <= 1);
        for (const auto& food : colony.foods()) {
            CHECK(food.trials >= 0);
            for (double x : food.position) {
                CHECK(x >= 0.0);
                CHECK(x <= 1.0);
            }
        }
    }
    CHECK_THROWS_AS(colony.neighbor_candidate(1, 1, rng), std::invalid_argument);
}

TEST_CASE("abc colony: a food's fitness only drops when the scout rebuilds it") {
    RngStream rng(33);
    AbcParams params;
    params.colony_size = 12;
    params.limit = 5;
    AbcColony colony(10, params, count_bits, rng);
    std::vector<double> before;
    for (int t = 0; t < 60; ++t) {
        before.clear();
        for (const auto& food : colony.foods()) before.push_back(food.fitness);
        colony.step(count_bits, rng);
        std::size_t dropped = 0;
        for (std::size_t i = 0; i < before.size(); ++i) {
            if (colony.foods()[i].fitness < before[i]) {
                ++dropped;
                // greedy acceptance means only the scout can lower a source
                CHECK(colony.foods()[i].trials == 0);
            }
        }
        CHECK(dropped <= colony.scout_resets_last_step());
    }
}

TEST_CASE("pso_velocity_update: vanishing terms and clamping") {
    RngStream rng(34);
    const std::vector<double> v{0.3, -0.2};
    const std::vector<double> x{0.5, 0.5};
    const std::vector<double> pbest{0.7, 0.1};
    const std::vector<double> gbest{0.2, 0.9};

    const auto zeroed = pso_velocity_update(v, x, pbest, gbest, 0.0, 0.0, 0.0, 1.0, rng);
    CHECK(zeroed == std::vector<double>{0.0, 0.0});

    const auto inertia_only = pso_velocity_update(v, x, x, x, 0.5, 2.0, 2.0, 1.0, rng);
    CHECK(inertia_only[0] == doctest::Approx(0.15));
    CHECK(inertia_only[1] == doctest::Approx(-0.1));

    for (int t = 0; t < 100; ++t) {
        const auto out = pso_velocity_update(v, x, pbest, gbest, 0.9, 2.0, 2.0, 0.25, rng);
        for (double val : out) {
            CHECK(val >= -0.25);
            CHECK(val <= 0.25);
        }
    }
}

TEST_CASE("pso_inertia: linear decrease from max toward min") {
    CHECK(pso_inertia(0.4, 0.9, 0, 100) == doctest::Approx(0.9));
    CHECK(pso_inertia(0.4, 0.9, 50, 100) == doctest::Approx(0.65));
    CHECK(pso_inertia(0.4, 0.9, 100, 100) == doctest::Approx(0.4));
}

TEST_CASE("pso binarization: sigmoid midpoint, saturation, inclusive threshold") {
    CHECK(pso_bit_probability(0.5) == doctest::Approx(0.5));
    CHECK(pso_bit_probability(1.0) == doctest::Approx(1.0 / (1.0 + std::exp(-5.0))));
    CHECK(pso_bit_probability(1.0) == doctest::Approx(0.9933).epsilon(1e-4));
    CHECK(pso_binarize(0.5));
    CHECK_FALSE(pso_binarize(0.499999));
    RngStream rng(35);
    int ones = 0;
    for (int i = 0; i < 20000; ++i) ones += pso_binarize_stochastic(0.5, rng) ? 1 : 0;
    CHECK(std::fabs(ones / 20000.0 - 0.5) < 0.02);
}

TEST_CASE("pso swarm: gbest is non-decreasing and pbest tracks the running max") {
    RngStream rng(36);
    PsoParams params;
    params.particles = 12;
    PsoSwarm swarm(10, params, count_bits, rng);
    double gbest = swarm.gbest_fitness();
    for (std::size_t t = 0; t < 40; ++t) {
        std::vector<double> pbest_before;
        for (const auto& p : swarm.particles()) pbest_before.push_back(p.pbest_fitness);
        swarm.step(count_bits, rng, t, 40);
        CHECK(swarm.gbest_fitness() >= gbest);
        gbest = swarm.gbest_fitness();
        for (std::size_t i = 0; i < swarm.particles().size(); ++i) {
            const auto& p = swarm.particles()[i];
            CHECK(p.pbest_fitness >= pbest_before[i]);
            CHECK(p.pbest_fitness >= p.fitness);
            for (double x : p.position) {
                CHECK(x >= 0.0);
                CHECK(x <= 1.0);
            }
        }
    }
}

TEST_CASE("gwo_position_update: coincident leaders at a = 0 leave the wolf in place") {
    RngStream rng(37);
    const std::vector<double> x{0.3, 0.7};
    const auto out = gwo_position_update(x, x, x, x, 0.0, rng);
    CHECK(out[0] == doctest::Approx(0.3));
    CHECK(out[1] == doctest::Approx(0.7));
}

TEST_CASE("gwo_position_update: averaging of the three leader candidates") {
    // with a = 0, candidate_L = L exactly, so the update is their mean
    RngStream rng(38);
    const std::vector<double> x{0.0};
    const std::vector<double> la{0.0};
    const std::vector<double> lb{0.3};
    const std::vector<double> ld{0.6};
    const auto out = gwo_position_update(x, la, lb, ld, 0.0, rng);
    CHECK(out[0] == doctest::Approx(0.3));
}

TEST_CASE("gwo_position_update: output clamped to the unit cube") {
    RngStream rng(39);
    const std::vector<double> x{0.9, 0.1};
    const std::vector<double> la{1.0, 0.0};
    const std::vector<double> lb{1.0, 0.0};
    const std::vector<double> ld{1.0, 0.0};
    for (int t = 0; t < 200; ++t) {
        const auto out = gwo_position_update(x, la, lb, ld, 2.0, rng);
        for (double val : out) {
            CHECK(val >= 0.0);
            CHECK(val <= 1.0);
        }
    }
}

TEST_CASE("gwo control scalar decays linearly 2 -> 0") {
    CHECK(gwo_control(0, 100) == doctest::Approx(2.0));
    CHECK(gwo_control(50, 100) == doctest::Approx(1.0));
    CHECK(gwo_control(100, 100) == doctest::Approx(0.0));
}

TEST_CASE("gwo pack: leader ordering invariant holds after every step") {
    RngStream rng(40);
    GwoParams params;
    params.wolves = 9;
    GwoPack pack(8, params, count_bits, rng);
    for (std::size_t t = 0; t < 30; ++t) {
        pack.step(count_bits, rng, t, 30);
        const auto leaders = pack.leaders();
        const auto& f = pack.fitnesses();
        CHECK(f[leaders[0]] >= f[leaders[1]]);
        CHECK(f[leaders[1]] >= f[leaders[2]]);
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i == leaders[0] || i == leaders[1] || i == leaders[2]) continue;
            CHECK(f[leaders[2]] >= f[i]);
        }
    }
}
