#include <catch2/catch_amalgamated.hpp>

#include "suspflow/monodromy.hpp"
#include "suspflow/spectrum.hpp"

#include <random>

using namespace suspflow;

namespace {

MonodromyMatrix mm(const std::vector<std::vector<long long>>& e) {
    return validate_monodromy(e);
}

// random element of SL(n, Z) as a product of integer shears
IntMat random_unimodular(int n, std::mt19937_64& rng, int factors = 8) {
    IntMat m = IntMat::identity(n);
    std::uniform_int_distribution<int> idx(0, n - 1), val(-2, 2);
    for (int f = 0; f < factors; ++f) {
        int i = idx(rng), j = idx(rng);
        if (i == j) continue;
        IntMat s = IntMat::identity(n);
        s(i, j) = val(rng);
        m = m * s;
    }
    return m;
}

}  // namespace

TEST_CASE("validate_monodromy accepts SL(n,Z) and rejects the rest") {
    REQUIRE_NOTHROW(mm({{2, 1}, {1, 1}}));
    REQUIRE_NOTHROW(mm({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    REQUIRE_THROWS_AS(mm({{2, 0}, {0, 1}}), NotUnimodular);
    REQUIRE_THROWS_AS(mm({{1, 0}, {0, 1}, {0, 0}}), NotSquare);
    REQUIRE_THROWS_AS(mm({{0, 1}, {1, 0}}), NotUnimodular);  // det = -1
}

TEST_CASE("spectrum of the hyperbolic example") {
    const auto sd = spectrum(mm({{2, 1}, {1, 1}}));
    REQUIRE(sd.kind == SpectrumKind::AllReal);
    const double lambda = (3.0 + std::sqrt(5.0)) / 2.0;
    REQUIRE(sd.eigenvalues.size() == 2);
    CHECK(sd.eigenvalues[0].real() == Catch::Approx(lambda).epsilon(1e-13));
    CHECK(sd.eigenvalues[1].real() == Catch::Approx(1.0 / lambda).epsilon(1e-13));
    CHECK(sd.diag_count == 2);
    REQUIRE(sd.jordan_blocks.size() == 2);
    CHECK(sd.jordan_blocks[0].eigenvalue.real() == Catch::Approx(lambda).epsilon(1e-12));
    CHECK(sd.jordan_blocks[1].eigenvalue.real() == Catch::Approx(1.0 / lambda).epsilon(1e-12));
}

TEST_CASE("spectrum of the identity and the unipotent case") {
    const auto id = spectrum(mm({{1, 0}, {0, 1}}));
    REQUIRE(id.kind == SpectrumKind::AllReal);
    CHECK(id.eigenvalues[0].real() == 1.0);
    CHECK(id.diag_count == 2);

    const auto butler = spectrum(mm({{1, 1}, {0, 1}}));
    REQUIRE(butler.kind == SpectrumKind::AllReal);
    REQUIRE(butler.jordan_blocks.size() == 1);
    CHECK(butler.jordan_blocks[0].size == 2);
    CHECK(butler.jordan_blocks[0].eigenvalue.real() == Catch::Approx(1.0));
    CHECK(butler.diag_count == 0);
}

TEST_CASE("spectrum of a rotation is complex on the unit circle") {
    const auto sd = spectrum(mm({{0, -1}, {1, 0}}));
    REQUIRE(sd.kind == SpectrumKind::ComplexUnitCircle);
    CHECK(sd.eigenvalues[0].real() == Catch::Approx(0.0).margin(1e-15));
    CHECK(sd.eigenvalues[0].imag() == Catch::Approx(1.0));
    CHECK(std::abs(sd.eigenvalues[0]) == Catch::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("mixed spectra in dimension > 2 are rejected") {
    // companion of x^3 - 2x^2 + x - 1: one real root, one complex pair
    REQUIRE_THROWS_AS(spectrum(mm({{0, 0, 1}, {1, 0, -1}, {0, 1, 2}})),
                      MixedSpectrumUnsupported);
}

TEST_CASE("dual action examples") {
    const auto id = mm({{1, 0}, {0, 1}});
    CHECK(dual_action(id) == id);

    const auto sol = dual_action(mm({{2, 1}, {1, 1}}));
    CHECK(sol == mm({{1, -1}, {-1, 2}}));

    const auto butler = dual_action(mm({{1, 1}, {0, 1}}));
    CHECK(butler == mm({{1, 0}, {-1, 1}}));
}

TEST_CASE("A * dual(A)^T = E exactly in integer arithmetic") {
    std::mt19937_64 rng(12345);
    for (int n = 1; n <= 5; ++n) {
        for (int rep = 0; rep < 10; ++rep) {
            const auto a = MonodromyMatrix::validate(random_unimodular(n, rng));
            const auto d = dual_action(a);
            CHECK(a.entries() * d.entries().transpose() == IntMat::identity(n));
        }
    }
}

TEST_CASE("entropy lower bound values") {
    const double lambda = (3.0 + std::sqrt(5.0)) / 2.0;
    CHECK(entropy_lower_bound(mm({{2, 1}, {1, 1}})) ==
          Catch::Approx(std::log(lambda)).epsilon(1e-12));
    CHECK(entropy_lower_bound(mm({{2, 1}, {1, 1}})) == Catch::Approx(0.9624236501).epsilon(1e-9));
    CHECK(entropy_lower_bound(mm({{1, 0}, {0, 1}})) == 0.0);
    CHECK(entropy_lower_bound(mm({{1, 1}, {0, 1}})) == 0.0);
    CHECK(entropy_lower_bound(mm({{0, -1}, {1, 0}})) == 0.0);
}

TEST_CASE("entropy bound is invariant under the dual action") {
    std::mt19937_64 rng(777);
    for (int n = 2; n <= 5; ++n) {
        for (int rep = 0; rep < 8; ++rep) {
            const auto a = MonodromyMatrix::validate(random_unimodular(n, rng));
            CHECK(std::fabs(entropy_lower_bound(a) - entropy_lower_bound(dual_action(a))) < 1e-12);
        }
    }
}

TEST_CASE("spectral data invariants") {
    const std::vector<std::vector<std::vector<long long>>> cases = {
        {{2, 1}, {1, 1}},
        {{1, 1}, {0, 1}},
        {{1, 0}, {0, 1}},
        {{-1, 0}, {0, -1}},
        {{2, 1, 0}, {1, 1, 0}, {0, 0, 1}},
        {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}},
    };
    for (const auto& entries : cases) {
        const auto a = mm(entries);
        const auto sd = spectrum(a);

        std::complex<double> prod(1.0, 0.0);
        for (const auto& ev : sd.eigenvalues) prod *= ev;
        CHECK(std::abs(prod - 1.0) < 1e-10);

        int total = 0;
        for (const auto& b : sd.jordan_blocks) total += b.size;
        CHECK(total == a.n());

        CHECK((sd.basis * sd.basis_inverse - Mat::identity(a.n())).norm_inf() < 1e-10);

        if (sd.kind == SpectrumKind::AllReal) {
            const Mat dual = dual_action(a).to_real();
            const Mat conj = sd.basis_inverse * dual * sd.basis;
            CHECK((conj - sd.assembled_jordan()).norm_inf() < 1e-9);
        }
    }
}

TEST_CASE("jordan structure of the 3x3 block diagonal case") {
    const auto sd = spectrum(mm({{2, 1, 0}, {1, 1, 0}, {0, 0, 1}}));
    REQUIRE(sd.kind == SpectrumKind::AllReal);
    CHECK(sd.diag_count == 3);
    const double lambda = (3.0 + std::sqrt(5.0)) / 2.0;
    CHECK(sd.jordan_blocks[0].eigenvalue.real() == Catch::Approx(lambda).epsilon(1e-12));
    CHECK(sd.jordan_blocks[2].eigenvalue.real() == Catch::Approx(1.0 / lambda).epsilon(1e-12));
}

TEST_CASE("jordan structure of a full unipotent chain") {
    const auto sd = spectrum(mm({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}));
    REQUIRE(sd.jordan_blocks.size() == 1);
    CHECK(sd.jordan_blocks[0].size == 3);
    CHECK(sd.diag_count == 0);
}

TEST_CASE("dimension cap is configurable") {
    std::vector<std::vector<long long>> big(9, std::vector<long long>(9, 0));
    for (int i = 0; i < 9; ++i) big[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    REQUIRE_THROWS_AS(validate_monodromy(big), Error);
    REQUIRE_NOTHROW(validate_monodromy(big, 9));
}
