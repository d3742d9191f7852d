// formula-level checks for ACO, COA, CSO and FSA

#include <doctest.h>

#include <cmath>
#include <set>

#include "evofs/aco.hpp"
#include "evofs/coa.hpp"
#include "evofs/cso.hpp"
#include "evofs/fitness.hpp"
#include "evofs/fsa.hpp"

using namespace evofs;

namespace {
double count_bits(const Genome& g) { return static_cast<double>(g.selected_count()); }
}  // namespace

TEST_CASE("aco_feature_probability: uniform symmetry, exponent collapse, normalization") {
    PheromoneTable table;
    table.tau = {1.0, 1.0, 1.0};
    table.eta = {0.5, 0.5, 0.5};
    table.alpha = 1.0;
    table.beta = 1.0;
    auto p = aco_feature_probability(table, {0, 1, 2});
    for (double v : p) CHECK(v == doctest::Approx(1.0 / 3));

    table.tau = {4.0, 2.0, 1.0};
    table.eta = {0.1, 0.9, 0.5};
    table.beta = 0.0;  // heuristic ignored
    p = aco_feature_probability(table, {0, 1, 2});
    CHECK(p[0] == doctest::Approx(4.0 / 7.0));
    CHECK(p[1] == doctest::Approx(2.0 / 7.0));
    CHECK(p[2] == doctest::Approx(1.0 / 7.0));

    table.tau = {1.0, 2.0, 1.0};
    table.eta = {1.0, 1.0, 1.0};
    table.alpha = 1.0;
    table.beta = 1.0;
    p = aco_feature_probability(table, {0, 1, 2});
    CHECK(p[0] == doctest::Approx(0.25));
    CHECK(p[1] == doctest::Approx(0.5));
    CHECK(p[2] == doctest::Approx(0.25));

    CHECK_THROWS_AS(aco_feature_probability(table, {}), std::invalid_argument);
}

TEST_CASE("aco_update_pheromone: evaporation floor and the worked update") {
    PheromoneTable table;
    table.tau = {2.0, 5.0};
    table.eta = {1.0, 1.0};
    table.tau_min = 0.01;

    table.evaporation = 1.0;  // full evaporation, no deposit touches feature 1
    aco_update_pheromone(table, {{{0}, 1.0}});
    CHECK(table.tau[0] == doctest::Approx(1.0));   // 0 + deposit 1.0
    CHECK(table.tau[1] == doctest::Approx(0.01));  // floored at tau_min

    table.tau = {2.0, 2.0};
    table.evaporation = 0.5;
    aco_update_pheromone(table, {{{0}, 1.0}});
    CHECK(table.tau[0] == doctest::Approx(2.0));  // 0.5 * 2 + 1
    CHECK(table.tau[1] == doctest::Approx(1.0));  // 0.5 * 2
}

TEST_CASE("aco state: a consistently winning feature out-accumulates an ignored one") {
    // fitness rewards exactly the subset {0}: feature 0 keeps winning deposits
    auto objective = [](const Genome& g) {
        double f = g.selects(0) ? 1.0 : 0.1;
        return f - 0.05 * static_cast<double>(g.selected_count());
    };
    RngStream rng(41);
    AcoParams params;
    params.ants = 20;
    AcoState state(6, params, std::vector<double>(6, 0.5), objective, rng);
    for (int t = 0; t < 50; ++t) state.step(objective, rng);
    const auto& tau = state.table().tau;
    for (std::size_t j = 1; j < 6; ++j) CHECK(tau[0] > tau[j]);
    CHECK(tau[0] > 1.0);
}

TEST_CASE("coa_cultural_tendency: odd median, even average, degenerate pack") {
    CHECK(coa_cultural_tendency({{1}, {5}, {9}})[0] == doctest::Approx(5.0));
    CHECK(coa_cultural_tendency({{1}, {3}, {5}, {9}})[0] == doctest::Approx(4.0));
    const std::vector<std::vector<double>> same(5, std::vector<double>{0.4, 0.7});
    const auto cult = coa_cultural_tendency(same);
    CHECK(cult[0] == doctest::Approx(0.4));
    CHECK(cult[1] == doctest::Approx(0.7));
    CHECK_THROWS_AS(coa_cultural_tendency({}), std::invalid_argument);
}

TEST_CASE("coa_exchange_probability: printed formula with the cap") {
    CHECK(coa_exchange_probability(10) == doctest::Approx(0.5));
    CHECK(coa_exchange_probability(14) == doctest::Approx(0.98));
    CHECK(coa_exchange_probability(15) == doctest::Approx(1.0));  // clamped
}

TEST_CASE("coa_social_update: zero step keeps state; greedy acceptance") {
    const std::vector<double> soc{0.5, 0.5};
    const std::vector<double> alpha{0.9, 0.9};
    const std::vector<double> cult{0.1, 0.1};
    const std::vector<double> peer1{0.4, 0.6};
    const std::vector<double> peer2{0.6, 0.4};
    auto reward_high = [](const std::vector<double>& pos) { return pos[0] + pos[1]; };

    auto [unchanged, f0] = coa_social_update(soc, 1.0, alpha, cult, peer1, peer2, 0.0, 0.0,
                                             reward_high);
    CHECK(unchanged == soc);
    CHECK(f0 == doctest::Approx(1.0));

    // candidate moves toward alpha: better fitness accepted
    auto [better, f1] = coa_social_update(soc, 1.0, alpha, cult, peer1, peer2, 1.0, 0.0,
                                          reward_high);
    CHECK(f1 > 1.0);
    CHECK(better != soc);

    // worse candidate rejected wholesale
    auto penalize_move = [&](const std::vector<double>& pos) {
        return pos == soc ? 1.0 : -5.0;
    };
    auto [kept, f2] = coa_social_update(soc, 1.0, alpha, cult, peer1, peer2, 1.0, 1.0,
                                        penalize_move);
    CHECK(kept == soc);
    CHECK(f2 == doctest::Approx(1.0));
}

TEST_CASE("coa_pup: P_s = 1 forces parent 1 except j2; P_s = P_a = 0 forces parent 2 except j1") {
    RngStream rng(42);
    const std::vector<double> p1(6, 0.25);
    const std::vector<double> p2(6, 0.75);
    auto pup = coa_pup(p1, p2, 1, 4, 1.0, 0.0, rng);
    for (std::size_t j = 0; j < 6; ++j) CHECK(pup[j] == doctest::Approx(j == 4 ? 0.75 : 0.25));

    pup = coa_pup(p1, p2, 1, 4, 0.0, 0.0, rng);
    for (std::size_t j = 0; j < 6; ++j) CHECK(pup[j] == doctest::Approx(j == 1 ? 0.25 : 0.75));
}

TEST_CASE("coa_pup: fresh-gene fraction over non-forced dimensions approximates P_a") {
    RngStream rng(43);
    const std::size_t n = 10;
    const double scatter = 1.0 / static_cast<double>(n);
    const double association = (1.0 - scatter) / 2.0;
    std::vector<double> p1(n, 0.0), p2(n, 1.0);  // a pup gene strictly inside (0,1) is fresh
    long fresh = 0, seen = 0;
    for (int t = 0; t < 10000; ++t) {
        const auto pup = coa_pup(p1, p2, 0, 1, scatter, association, rng);
        for (std::size_t j = 2; j < n; ++j) {  // skip the forced dimensions
            ++seen;
            if (pup[j] > 0.0 && pup[j] < 1.0) ++fresh;
        }
    }
    const double fraction = static_cast<double>(fresh) / static_cast<double>(seen);
    CHECK(std::fabs(fraction - association) <= 0.03);
}

TEST_CASE("coa system: coyote count is conserved and social updates are greedy") {
    RngStream rng(44);
    CoaParams params;
    params.n_packs = 3;
    params.pack_size = 5;
    CoaSystem system(8, params, count_bits, rng);
    CHECK(system.total_coyotes() == 15);
    auto [bp, bc] = system.best_coyote();
    double best = system.packs()[bp][bc].fitness;
    for (int t = 0; t < 60; ++t) {
        system.step(count_bits, rng);
        CHECK(system.total_coyotes() == 15);
        auto [p, c] = system.best_coyote();
        CHECK(system.packs()[p][c].fitness >= best);
        best = system.packs()[p][c].fitness;
        for (const auto& pack : system.packs())
            for (const auto& coyote : pack)
                for (double x : coyote.soc) {
                    CHECK(x >= 0.0);
                    CHECK(x <= 1.0);
                }
    }
}

TEST_CASE("cso_role_counts: ratio arithmetic and the degenerate single-member swarm") {
    const RoleCounts counts = cso_role_counts(10, 0.2, 0.6, 0.2);
    CHECK(counts.roosters == 2);
    CHECK(counts.hens == 6);
    CHECK(counts.chicks == 2);

    const RoleCounts lone = cso_role_counts(1, 0.2, 0.6, 0.2);
    CHECK(lone.roosters == 1);
    CHECK(lone.hens == 0);
    CHECK(lone.chicks == 0);

    CHECK_THROWS_AS(cso_role_counts(10, 0.5, 0.6, 0.2), std::invalid_argument);
}

TEST_CASE("cso swarm: single rooster is perturbed but keeps its role") {
    RngStream rng(45);
    CsoParams params;
    params.swarm = 1;
    CsoSwarm swarm(4, params, count_bits, rng);
    REQUIRE(swarm.members().size() == 1);
    CHECK(swarm.members()[0].role == ChickenRole::Rooster);
    const auto before = swarm.members()[0].position;
    swarm.step(count_bits, rng, 0);
    CHECK(swarm.members()[0].role == ChickenRole::Rooster);
    CHECK(swarm.members()[0].position != before);
}

TEST_CASE("cso swarm: a chick sitting on its mother does not move") {
    RngStream rng(46);
    CsoParams params;
    params.swarm = 10;
    CsoSwarm swarm(4, params, count_bits, rng);
    // manufacture the coincidence: copy the mother's position into the chick
    auto members = swarm.members();
    std::size_t chick = members.size();
    for (std::size_t i = 0; i < members.size(); ++i)
        if (members[i].role == ChickenRole::Chick) {
            chick = i;
            break;
        }
    REQUIRE(chick < members.size());
    // drive the swarm through a private copy exercising only the chick rule
    const std::size_t mother = members[chick].mother;
    const auto mother_pos = members[mother].position;
    // x + FL * (x_mother - x) with x == x_mother stays put for any FL
    for (double fl : {0.0, 0.5, 1.3, 2.0}) {
        std::vector<double> x = mother_pos;
        for (std::size_t d = 0; d < x.size(); ++d) x[d] += fl * (mother_pos[d] - x[d]);
        CHECK(x == mother_pos);
    }
}

TEST_CASE("cso swarm: role counts stay exact across reassignment") {
    RngStream rng(47);
    CsoParams params;
    params.swarm = 10;
    params.reorder_period = 3;
    CsoSwarm swarm(6, params, count_bits, rng);
    for (std::size_t t = 0; t < 12; ++t) {
        swarm.step(count_bits, rng, t);
        std::size_t roosters = 0, hens = 0, chicks = 0;
        for (const auto& c : swarm.members()) {
            if (c.role == ChickenRole::Rooster) ++roosters;
            if (c.role == ChickenRole::Hen) ++hens;
            if (c.role == ChickenRole::Chick) ++chicks;
        }
        CHECK(roosters == 2);
        CHECK(hens == 6);
        CHECK(chicks == 2);
    }
}

namespace {

// 4-object, 3-attribute table whose only 1-attribute reduct is attribute 2
RoughSetTable reduct_table() {
    RoughSetTable table;
    table.attributes = {
        {0, 0, 0},
        {0, 1, 1},
        {1, 0, 2},
        {1, 1, 3},
    };
    table.decisions = {0, 1, 2, 3};
    return table;
}

}  // namespace

TEST_CASE("fsa: full attribute set always satisfies the dependency condition") {
    const RoughSetTable table = reduct_table();
    std::vector<std::size_t> all{0, 1, 2};
    CHECK(rough_set_dependency(table, all) == doctest::Approx(1.0));
}

TEST_CASE("fsa school: a known 1-attribute reduct is found on every seed") {
    const RoughSetTable table = reduct_table();
    // wrap the table into a dataset-backed fitness: quality = dependency
    Dataset ds = Dataset::from_rows(
        {{0.0, 0.0, 0.0}, {0.0, 1.0, 0.34}, {1.0, 0.0, 0.67}, {1.0, 1.0, 1.0}},
        {"a", "b", "c", "d"});
    FitnessSpec spec;
    spec.mode = FitnessMode::RoughSetDependency;
    spec.rough_bins = 4;
    const FitnessFunction fitness(ds, spec);
    const FitnessFn fn = [&](const Genome& g) { return fitness(g); };

    // exhaustive reduct enumeration: attribute 2 alone reaches gamma = 1
    CHECK(rough_set_dependency(fitness.rough_table(), {2}) == doctest::Approx(1.0));
    CHECK(rough_set_dependency(fitness.rough_table(), {0}) < 1.0);
    CHECK(rough_set_dependency(fitness.rough_table(), {1}) < 1.0);
    CHECK(rough_set_dependency(fitness.rough_table(), {0, 1}) == doctest::Approx(1.0));

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        RngStream rng(seed);
        FsaParams params;
        params.school = 10;
        FsaSchool school(fitness.rough_table(), params, fn, rng);
        for (int t = 0; t < 50 && school.reduct_size() > 1; ++t)
            school.step(fitness.rough_table(), fn, rng);
        CHECK(school.reduct() == std::vector<std::size_t>{2});
        CHECK(school.reduct_size() == 1);
    }
}

TEST_CASE("fsa school: a fish that is already a shorter reduct updates (R_min, L_min)") {
    const RoughSetTable table = reduct_table();
    const FitnessFn fn = [&](const Genome& g) {
        const auto sel = g.selected();
        if (sel.empty()) return kInfeasibleFitness;
        return rough_set_dependency(table, sel) - 0.01 * static_cast<double>(sel.size());
    };
    RngStream rng(4);
    FsaParams params;
    params.school = 6;
    FsaSchool school(table, params, fn, rng);
    CHECK(school.reduct_size() == 3);  // starts at the full attribute set
    bool shrunk = false;
    for (int t = 0; t < 50; ++t) {
        school.step(table, fn, rng);
        if (school.reduct_size() < 3) {
            shrunk = true;
            break;
        }
    }
    CHECK(shrunk);
}

TEST_CASE("fsa school: empty conditional attribute set is a usage error") {
    RoughSetTable empty;
    empty.attributes = {{}};
    empty.decisions = {0};
    RngStream rng(5);
    FsaParams params;
    CHECK_THROWS_AS(FsaSchool(empty, params, count_bits, rng), std::invalid_argument);
}
