#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "evoviz/errors.hpp"
#include "evoviz/problems.hpp"
#include "evoviz/random.hpp"

using namespace evoviz;

namespace {

std::vector<double> random_x(Rng& rng, std::size_t d)
{
    std::vector<double> x(d);
    for (auto& v : x) {
        v = rng.uniform();
    }
    return x;
}

double norm(const std::vector<double>& y)
{
    return std::sqrt(std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
}

}  // namespace

TEST_CASE("default k and dimensions")
{
    CHECK(make_problem(ProblemName::dtlz1, 3).k == 5);
    CHECK(make_problem(ProblemName::dtlz7, 3).k == 20);
    CHECK(make_problem(ProblemName::dtlz2, 5).k == 10);
    CHECK(make_problem(ProblemName::dtlz2, 5).dimensions() == 14);
    CHECK(make_problem(ProblemName::dtlz3, 3, 4).dimensions() == 6);
    CHECK_THROWS_AS((void)make_problem(ProblemName::dtlz2, 1), ConfigError);
    CHECK_THROWS_AS((void)make_problem(ProblemName::dtlz2, 3, 0), ConfigError);
}

TEST_CASE("evaluation examples")
{
    const auto d1 = make_problem(ProblemName::dtlz1, 3);
    const auto y1 = evaluate(d1, std::vector<double>(d1.dimensions(), 0.5));
    CHECK(y1[0] == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(y1[1] == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(y1[2] == doctest::Approx(0.25).epsilon(1e-12));

    const auto d2 = make_problem(ProblemName::dtlz2, 3);
    std::vector<double> x2(d2.dimensions(), 0.5);
    x2[0] = x2[1] = 0.0;
    const auto y2 = evaluate(d2, x2);
    CHECK(y2[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(y2[1]) < 1e-12);
    CHECK(std::abs(y2[2]) < 1e-12);

    const auto d7 = make_problem(ProblemName::dtlz7, 3);
    const auto y7 = evaluate(d7, std::vector<double>(d7.dimensions(), 0.0));
    CHECK(y7 == std::vector<double>{0.0, 0.0, 6.0});

    const auto d4 = make_problem(ProblemName::dtlz4, 3);
    const auto y4 = evaluate(d4, std::vector<double>(d4.dimensions(), 0.5));
    CHECK(std::abs(y4[0] - 1.0) < 1e-9);
    CHECK(std::abs(y4[1]) < 1e-9);
    CHECK(std::abs(y4[2]) < 1e-9);
}

TEST_CASE("evaluation errors")
{
    const auto spec = make_problem(ProblemName::dtlz2, 3);
    CHECK_THROWS_AS((void)evaluate(spec, std::vector<double>(5, 0.5)), ContractViolation);
    std::vector<double> x(spec.dimensions(), 0.5);
    x[7] = 1.0000001;
    try {
        (void)evaluate(spec, x);
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(e.index() == 7);
    }
    x[7] = 1.0;
    CHECK_NOTHROW((void)evaluate(spec, x));
}

TEST_CASE("spherical identity for dtlz2 and planar identity for dtlz1")
{
    Rng rng(3);
    for (std::size_t m : {2u, 3u, 5u, 8u}) {
        const auto d2 = make_problem(ProblemName::dtlz2, m);
        const auto d1 = make_problem(ProblemName::dtlz1, m);
        for (int trial = 0; trial < 200; ++trial) {
            const auto x2 = random_x(rng, d2.dimensions());
            const auto g2 = g_sphere(std::span(x2).subspan(m - 1));
            CHECK(std::abs(norm(evaluate(d2, x2)) - (1.0 + g2)) < 1e-9);

            const auto x1 = random_x(rng, d1.dimensions());
            const auto g1 = g_rastrigin(std::span(x1).subspan(m - 1));
            const auto y1 = evaluate(d1, x1);
            const double sum = std::accumulate(y1.begin(), y1.end(), 0.0);
            CHECK(std::abs(sum - 0.5 * (1.0 + g1)) < 1e-9 * (1.0 + g1));
        }
    }
}

TEST_CASE("distance functions are non-negative and vanish only at 0.5")
{
    Rng rng(9);
    for (int trial = 0; trial < 500; ++trial) {
        const auto x = random_x(rng, 10);
        CHECK(g_sphere(x) >= 0.0);
        CHECK(g_rastrigin(x) >= 0.0);
    }
    const std::vector<double> centre(10, 0.5);
    CHECK(g_sphere(centre) == 0.0);
    CHECK(std::abs(g_rastrigin(centre)) < 1e-12);
    auto off = centre;
    off[3] = 0.51;
    CHECK(g_sphere(off) > 0.0);
    CHECK(g_rastrigin(off) > 0.0);
}

TEST_CASE("evaluation is bit-identical across calls")
{
    Rng rng(1);
    for (auto name : {ProblemName::dtlz1, ProblemName::dtlz2, ProblemName::dtlz3, ProblemName::dtlz4,
                      ProblemName::dtlz7}) {
        const auto spec = make_problem(name, 4);
        const auto x = random_x(rng, spec.dimensions());
        const auto a = evaluate(spec, x);
        const auto b = evaluate(spec, x);
        CHECK(a == b);
        for (double v : a) {
            CHECK(std::isfinite(v));
        }
    }
}

TEST_CASE("dtlz4 mapping is monotone below one half")
{
    double previous = -1.0;
    for (double x = 0.0; x <= 0.5; x += 0.01) {
        const double angle = std::pow(x, dtlz4_alpha) * M_PI / 2.0;
        CHECK(angle >= previous);
        previous = angle;
    }
    // A tiny change in a position variable collapses onto the same corner.
    const auto spec = make_problem(ProblemName::dtlz4, 3);
    std::vector<double> a(spec.dimensions(), 0.5);
    auto b = a;
    b[0] = 0.4;
    CHECK(std::abs(evaluate(spec, a)[0] - evaluate(spec, b)[0]) < 1e-12);
}

TEST_CASE("front residual examples")
{
    const std::vector<double> y1{0.125, 0.125, 0.25};
    CHECK(front_residual(make_problem(ProblemName::dtlz1, 3), y1) == doctest::Approx(0.0));
    const std::vector<double> e1{1, 0, 0};
    const std::vector<double> e2{2, 0, 0};
    const auto d2 = make_problem(ProblemName::dtlz2, 3);
    CHECK(front_residual(d2, e1) == 0.0);
    CHECK(front_residual(d2, e2) == 1.0);
    CHECK_THROWS_AS((void)front_residual(d2, std::vector<double>{1, 0}), ContractViolation);
}

TEST_CASE("dtlz7 residual is zero on the front")
{
    const auto spec = make_problem(ProblemName::dtlz7, 3);
    Rng rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        auto x = random_x(rng, spec.dimensions());
        std::fill(x.begin() + 2, x.end(), 0.0);  // g = 1
        CHECK(front_residual(spec, evaluate(spec, x)) < 1e-12);
    }
}
