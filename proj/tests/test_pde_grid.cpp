#include "doctest.h"

#include <cmath>
#include <complex>

#include "gielab/pde/bohmian.hpp"
#include "gielab/pde/wavefunction.hpp"

using namespace gielab;
using namespace gielab::pde;
using namespace std::complex_literals;

TEST_CASE("grid validation") {
    CHECK_NOTHROW(Grid1D::make(256, 8.0));
    CHECK_THROWS_AS(Grid1D::make(32, 8.0), validation_error);   // too coarse
    CHECK_THROWS_AS(Grid1D::make(100, 8.0), validation_error);  // not a power of two
    Grid1D asym = Grid1D::make(128, 4.0);
    asym.x_min = -3.0;
    CHECK_THROWS_AS(asym.validate(), validation_error);
}

TEST_CASE("grid wavenumbers and index lookup") {
    const Grid1D g = Grid1D::make(128, 4.0);
    CHECK(g.k(0) == 0.0);
    CHECK(g.k(1) == doctest::Approx(2.0 * M_PI / 8.0));
    CHECK(g.k(127) == doctest::Approx(-2.0 * M_PI / 8.0));
    CHECK(g.nearest_index(g.x(57)) == 57);
    CHECK(g.nearest_index(g.x(57) + 0.4 * g.dx) == 57);
}

TEST_CASE("gaussian product: normalized, rank-1, inside the domain") {
    const Grid1D grid = Grid1D::make(256, 8.0);
    const Wavefunction2D wf = gaussian_product(grid, -2.0, 2.0, 0.5, 0.5);
    CHECK(std::abs(wf.norm_squared() - 1.0) <= 1e-10);
    CHECK(schmidt_entropy(wf) <= 1e-10);
}

TEST_CASE("a product of single-particle superpositions is still rank-1") {
    const Grid1D grid = Grid1D::make(256, 8.0);
    const Eigen::VectorXcd f1 =
        gaussian_factor(grid, -2.0, 0.4) + gaussian_factor(grid, 2.0, 0.4);
    const Eigen::VectorXcd f2 =
        gaussian_factor(grid, -1.0, 0.4) + gaussian_factor(grid, 1.0, 0.4);
    const Wavefunction2D wf = product_wavefunction(grid, f1, f2);
    CHECK(std::abs(wf.norm_squared() - 1.0) <= 1e-10);
    CHECK(schmidt_entropy(wf) <= 1e-10);
}

TEST_CASE("width and domain-fit guards") {
    const Grid1D grid = Grid1D::make(256, 8.0);
    CHECK_THROWS_AS(gaussian_product(grid, -2.0, 2.0, grid.dx, 0.5), validation_error);
    CHECK_THROWS_AS(gaussian_product(grid, -7.9, 0.0, 0.5, 0.5), validation_error);
}

TEST_CASE("two disjoint peaks give entropy ln 2") {
    const Grid1D grid = Grid1D::make(256, 8.0);
    const Wavefunction2D wf = two_peak_entangled(grid, -2.0, -2.0, 2.0, 2.0, 0.5);
    CHECK(schmidt_entropy(wf) == doctest::Approx(std::log(2.0)).epsilon(1e-6));
}

TEST_CASE("schmidt entropy is invariant under per-axis phase multiplication") {
    const Grid1D grid = Grid1D::make(128, 8.0);
    Wavefunction2D wf = two_peak_entangled(grid, -2.0, -1.0, 2.0, 1.0, 0.5);
    const double before = schmidt_entropy(wf);
    for (int a = 0; a < grid.n; ++a)
        for (int b = 0; b < grid.n; ++b)
            wf.amps(a, b) *= std::exp(1i * (0.7 * std::sin(grid.x(a)) +
                                            1.3 * std::cos(2.0 * grid.x(b))));
    CHECK(std::abs(schmidt_entropy(wf) - before) <= 1e-10);
}

TEST_CASE("marginals integrate to one") {
    const Grid1D grid = Grid1D::make(256, 8.0);
    const Wavefunction2D wf = gaussian_product(grid, -1.0, 1.5, 0.6, 0.8);
    CHECK(wf.marginal1().sum() * grid.dx == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(wf.marginal2().sum() * grid.dx == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("born sampling: delta-like state returns its cell") {
    const Grid1D grid = Grid1D::make(64, 8.0);
    Wavefunction2D wf;
    wf.grid = grid;
    wf.amps = Eigen::MatrixXcd::Constant(grid.n, grid.n, 1e-9);
    wf.amps(40, 17) = 1.0;
    wf.normalize();
    for (std::uint64_t seed : {1ull, 2ull, 99ull}) {
        const BohmianConfig c = born_sample(wf, seed);
        CHECK(c.X1 == doctest::Approx(grid.x(40)));
        CHECK(c.X2 == doctest::Approx(grid.x(17)));
    }
}

TEST_CASE("born sampling: four-peak state fills the quadrants uniformly") {
    const Grid1D grid = Grid1D::make(256, 8.0);
    const Eigen::VectorXcd f1 =
        gaussian_factor(grid, -2.0, 0.4) + gaussian_factor(grid, 2.0, 0.4);
    const Eigen::VectorXcd f2 =
        gaussian_factor(grid, -2.0, 0.4) + gaussian_factor(grid, 2.0, 0.4);
    const Wavefunction2D wf = product_wavefunction(grid, f1, f2);

    const int draws = 10000;
    const auto samples = born_samples(wf, 424242, draws);
    int counts[2][2] = {{0, 0}, {0, 0}};
    for (const BohmianConfig& c : samples) counts[c.X1 > 0.0][c.X2 > 0.0]++;

    // binomial: p = 1/4, sigma = sqrt(n p (1-p)) ~ 43.3; allow 3 sigma
    const double expected = draws / 4.0;
    const double three_sigma = 3.0 * std::sqrt(draws * 0.25 * 0.75);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(std::abs(counts[i][j] - expected) <= three_sigma);
}

TEST_CASE("born sampling is deterministic for a fixed seed") {
    const Grid1D grid = Grid1D::make(128, 8.0);
    const Wavefunction2D wf = gaussian_product(grid, -1.0, 1.0, 0.5, 0.5);
    const auto a = born_samples(wf, 777, 50);
    const auto b = born_samples(wf, 777, 50);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].X1 == b[i].X1);
        CHECK(a[i].X2 == b[i].X2);
    }
    const auto c = born_samples(wf, 778, 50);
    bool any_different = false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].X1 != c[i].X1 || a[i].X2 != c[i].X2) any_different = true;
    CHECK(any_different);
}

TEST_CASE("edge mass monitor sees boundary support") {
    const Grid1D grid = Grid1D::make(128, 8.0);
    const Wavefunction2D centered = gaussian_product(grid, 0.0, 0.0, 0.5, 0.5);
    CHECK(edge_mass(centered) <= 1e-10);

    Wavefunction2D at_edge;
    at_edge.grid = grid;
    at_edge.amps = Eigen::MatrixXcd::Zero(grid.n, grid.n);
    at_edge.amps(0, 64) = 1.0;
    at_edge.normalize();
    CHECK(edge_mass(at_edge) > 0.5);
}
