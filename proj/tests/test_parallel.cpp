#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <doctest.h>

#include "ckc/oracle.hpp"
#include "ckc/sampler.hpp"
#include "helpers.hpp"

using namespace ckc;
using test_util::unit_chain;

// The parallel kernels promise output bit-identical to the serial
// references for any thread count. Exact double comparisons throughout.

TEST_CASE("parameter sampling matches the serial reference") {
    ChainSpec chain = test_util::random_feasible_chain(6, 1);
    SampleCsResult par = sample_cs(chain, 11, 300);
    SampleCsResult ser = serial::sample_cs(chain, 11, 300);
    REQUIRE(par.values.size() == ser.values.size());
    CHECK(par.total_draws == ser.total_draws);
    for (std::size_t i = 0; i < par.values.size(); ++i)
        CHECK(par.values[i].entries() == ser.values[i].entries());
}

TEST_CASE("configuration sampling matches the serial reference") {
    ChainSpec chain = test_util::random_feasible_chain(7, 2);

    SampleOptions opts;
    opts.seed = 21;
    opts.count = 200;
    opts.close = true;
    SampleBatch par = sample_configs(chain, opts);
    SampleBatch ser = serial::sample_configs(chain, opts);
    REQUIRE(par.samples.size() == ser.samples.size());
    CHECK(par.total_draws == ser.total_draws);
    for (std::size_t i = 0; i < par.samples.size(); ++i) {
        CHECK(par.samples[i].circular.beta.values() ==
              ser.samples[i].circular.beta.values());
        CHECK(par.samples[i].eps.bits() == ser.samples[i].eps.bits());
        REQUIRE(par.samples[i].closed.has_value());
        CHECK(par.samples[i].closed->alpha.values() ==
              ser.samples[i].closed->alpha.values());
    }

    opts.eps = EpsPolicy::all();
    opts.count = 40;
    opts.close = false;
    SampleBatch pa = sample_configs(chain, opts);
    SampleBatch sa = serial::sample_configs(chain, opts);
    REQUIRE(pa.samples.size() == sa.samples.size());
    for (std::size_t i = 0; i < pa.samples.size(); ++i)
        CHECK(pa.samples[i].circular.beta.values() ==
              sa.samples[i].circular.beta.values());
}

TEST_CASE("grid search matches the serial reference") {
    ChainSpec c4 = unit_chain(4);
    std::vector<AngleVector> par = grid_circular_configs(c4, 16, 2.0);
    std::vector<AngleVector> ser = serial::grid_circular_configs(c4, 16, 2.0);
    REQUIRE(par.size() == ser.size());
    REQUIRE_FALSE(par.empty());
    for (std::size_t i = 0; i < par.size(); ++i)
        CHECK(par[i].values() == ser[i].values());

    ChainSpec c5 = unit_chain(5);
    std::vector<AngleVector> par5 = grid_circular_configs(c5, 10, 3.0);
    std::vector<AngleVector> ser5 = serial::grid_circular_configs(c5, 10, 3.0);
    REQUIRE(par5.size() == ser5.size());
    for (std::size_t i = 0; i < par5.size(); ++i)
        CHECK(par5[i].values() == ser5[i].values());
}

TEST_CASE("cross-term minimum matches the serial reference") {
    ChainSpec c5{1.0, 2.0, 1.5, 1.0, 1.0};
    CHECK(min_x_grid(c5, 3, 60) == serial::min_x_grid(c5, 3, 60));
    CHECK(min_x_grid(c5, 4, 24) == serial::min_x_grid(c5, 4, 24));
    ChainSpec dom{3.0, 1.0, 1.0, 1.0};
    CHECK(min_x_grid(dom, 2, 32) == serial::min_x_grid(dom, 2, 32));
}

#ifdef _OPENMP
TEST_CASE("results are independent of the thread count") {
    ChainSpec chain = test_util::random_feasible_chain(6, 4);
    int original = omp_get_max_threads();

    SampleCsResult base = serial::sample_cs(chain, 5, 200);
    std::vector<AngleVector> grid_base =
        serial::grid_circular_configs(unit_chain(4), 12, 2.0);

    for (int threads : {1, 2, 3}) {
        omp_set_num_threads(threads);
        SampleCsResult got = sample_cs(chain, 5, 200);
        REQUIRE(got.values.size() == base.values.size());
        CHECK(got.total_draws == base.total_draws);
        for (std::size_t i = 0; i < got.values.size(); ++i)
            CHECK(got.values[i].entries() == base.values[i].entries());

        std::vector<AngleVector> grid = grid_circular_configs(unit_chain(4), 12, 2.0);
        REQUIRE(grid.size() == grid_base.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
            CHECK(grid[i].values() == grid_base[i].values());
    }
    omp_set_num_threads(original);
}
#endif
