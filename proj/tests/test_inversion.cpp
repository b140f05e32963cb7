#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "support.hpp"
#include "xirp/inversion.hpp"
#include "xirp/representations.hpp"

using namespace xirp;

namespace {

ErrorCode error_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::Io;
}

const InversionMethod kMethods[] = {InversionMethod::diagonal_only(), InversionMethod::mean(),
                                    InversionMethod::random_column(7)};

}  // namespace

TEST_CASE("diagonal extraction") {
    CHECK(extract_diagonal(encode_xirp(TimeSeries({1.0, 2.0, 4.0}))).values == std::vector<double>{1.0, 2.0, 4.0});
    const auto g = extract_diagonal(encode_gasf(TimeSeries({0.0, 0.5, 1.0})));
    CHECK(testing::max_abs_diff(g.values, {0.0, 0.5, 1.0}) <= 1e-15);
    CHECK(extract_diagonal(encode_naive(TimeSeries({5.0, 7.0}))).values == std::vector<double>{5.0, 7.0});

    CHECK(error_of([] { extract_diagonal(encode_binary_rp(TimeSeries({1.0, 2.0}), 0.2)); }) ==
          ErrorCode::NotInvertible);
    CHECK(error_of([] { extract_diagonal(encode_urp(TimeSeries({1.0, 2.0}))); }) == ErrorCode::NotInvertible);
    CHECK(error_of([] { extract_diagonal(encode_irp(TimeSeries({1.0, 2.0}))); }) == ErrorCode::NotInvertible);
}

TEST_CASE("GASF diagonal values outside [-1, 1] are clamped") {
    auto r = encode_gasf(TimeSeries({0.0, 1.0}));
    r.data(0, 0) = -1.0 - 1e-6;
    r.data(1, 1) = 1.0 + 1e-6;
    r.data(0, 1) = 1.2;
    const auto x = extract_diagonal(r);
    CHECK(x.values == std::vector<double>{0.0, 1.0});
    for (std::size_t j = 0; j < 2; ++j)
        for (double v : reconstruct_column(r, j).values) CHECK(std::isfinite(v));
}

TEST_CASE("per-column reconstruction") {
    const auto x1 = reconstruct_column(encode_xirp(TimeSeries({1.0, 2.0, 4.0})), 1);
    CHECK(testing::max_abs_diff(x1.values, {1.0, 2.0, 4.0}) <= 1e-15);
    const auto g2 = reconstruct_column(encode_gasf(TimeSeries({0.0, 0.5, 1.0})), 2);
    CHECK(testing::max_abs_diff(g2.values, {0.0, 0.5, 1.0}) <= 1e-15);
    CHECK(reconstruct_column(encode_naive(TimeSeries({5.0, 7.0})), 0).values == std::vector<double>{5.0, 7.0});

    CHECK(error_of([] { reconstruct_column(encode_xirp(TimeSeries({1.0, 2.0})), 2); }) == ErrorCode::IndexOutOfRange);
    CHECK(error_of([] { reconstruct_column(encode_irp(TimeSeries({1.0, 2.0})), 0); }) == ErrorCode::NotInvertible);
}

TEST_CASE("self-consistent images invert exactly with every method") {
    const TimeSeries x({1.0, 2.0, 4.0});
    for (const auto& m : kMethods) {
        CHECK(testing::max_abs_diff(invert(encode_xirp(x), m).values, x.values) <= 1e-10);
    }
    for (const auto& m : kMethods) {
        CHECK(invert(encode_naive(TimeSeries({5.0, 7.0})), m).values == std::vector<double>{5.0, 7.0});
    }
    CHECK(roundtrip_error(x, XIRP{}, InversionMethod::mean()) <= 1e-10);
    CHECK(roundtrip_error(TimeSeries({0.0, 0.5, 1.0}), GASF{}, InversionMethod::random_column(7)) <= 1e-10);
    CHECK(roundtrip_error(TimeSeries({5.0, 7.0}), Naive{}, InversionMethod::diagonal_only()) == 0.0);
    CHECK(error_of([] { invert(encode_urp(TimeSeries({1.0, 2.0})), InversionMethod::mean()); }) ==
          ErrorCode::NotInvertible);
}

TEST_CASE("one perturbed off-diagonal entry moves IM only at its row") {
    const TimeSeries x({1.0, 2.0, 4.0, 3.0, 0.5});
    const std::size_t n = x.size();
    const std::size_t row = 3;
    const std::size_t col = 1;
    auto r = encode_xirp(x);
    r.data(row, col) += 0.01;

    // Column `col` now reconstructs x_row * e^0.01 at `row`; IM averages n columns.
    std::vector<double> expected = x.values;
    expected[row] = x[row] * (1.0 + (std::exp(0.01) - 1.0) / static_cast<double>(n));

    const auto im = invert(r, InversionMethod::mean());
    const auto diag = invert(r, InversionMethod::diagonal_only());
    CHECK(diag.values == x.values);
    CHECK(testing::max_abs_diff(im.values, expected) <= 1e-14);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == row) CHECK(std::abs(im[i] - diag[i]) > 1e-3);
        else CHECK(std::abs(im[i] - diag[i]) <= 1e-14);
    }
    CHECK(std::abs(im[row] - diag[row]) == doctest::Approx(3.0 * (std::exp(0.01) - 1.0) / 5.0).epsilon(1e-10));
}

TEST_CASE("IRC is deterministic per seed and covers every column") {
    testing::Gen gen(5);
    const TimeSeries x = gen.positive();
    auto r = encode_xirp(x);
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j)
            if (i != j) r.data(i, j) += gen.uniform(-0.05, 0.05);
    CHECK(invert(r, InversionMethod::random_column(42)).values ==
          invert(r, InversionMethod::random_column(42)).values);

    std::set<std::size_t> seen;
    for (std::uint64_t s = 0; s < 500; ++s) {
        const std::size_t c = irc_column(s, 6);
        CHECK(c < 6);
        seen.insert(c);
    }
    CHECK(seen.size() == 6);
    CHECK(irc_column(123, 1) == 0);
    CHECK_THROWS_AS(irc_column(1, 0), Error);
}

TEST_CASE("IRC returns exactly the drawn column") {
    testing::Gen gen(8);
    const TimeSeries x = gen.positive();
    auto r = encode_xirp(x);
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j)
            if (i != j) r.data(i, j) += gen.uniform(-0.1, 0.1);
    const auto cv = column_variants(r);
    for (std::uint64_t s = 0; s < 20; ++s) {
        CHECK(invert(r, InversionMethod::random_column(s)).values == cv.column(irc_column(s, r.size())).values);
    }
}

TEST_CASE("IM is smoother than IRC under off-diagonal noise") {
    testing::Gen gen(31);
    std::normal_distribution<double> noise(0.0, 0.05);
    double ss_im = 0.0;
    double ss_irc = 0.0;
    for (int trial = 0; trial < 400; ++trial) {
        const TimeSeries x = gen.positive(0.1, 1.0);
        auto r = encode_xirp(x);
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t j = 0; j < r.size(); ++j)
                if (i != j) r.data(i, j) += noise(gen.engine());
        const auto im = invert(r, InversionMethod::mean());
        const auto irc = invert(r, InversionMethod::random_column(static_cast<std::uint64_t>(trial)));
        for (std::size_t t = 0; t < x.size(); ++t) {
            ss_im += (im[t] - x[t]) * (im[t] - x[t]);
            ss_irc += (irc[t] - x[t]) * (irc[t] - x[t]);
        }
    }
    CHECK(ss_im <= ss_irc);
}

TEST_CASE("roundtrip property for every invertible kind and method") {
    testing::Gen gen(404);
    for (int trial = 0; trial < 300; ++trial) {
        const TimeSeries pos = gen.positive();
        const TimeSeries unit = gen.unit();
        const TimeSeries any = gen.finite();
        for (const auto& m : kMethods) {
            CHECK(roundtrip_error(pos, XIRP{}, m) <= 1e-9);
            CHECK(roundtrip_error(unit, GASF{}, m) <= 1e-9);
            CHECK(roundtrip_error(any, Naive{}, m) <= 1e-9);
        }
        const auto naive = encode_naive(any);
        CHECK(testing::max_abs_diff(invert(naive, InversionMethod::mean()).values, any.values) <= 1e-12);
        CHECK(invert(naive, InversionMethod::random_column(static_cast<std::uint64_t>(trial))).values == any.values);
    }
}

TEST_CASE("GASF reconstruction never produces NaN on noisy images") {
    testing::Gen gen(9);
    for (int trial = 0; trial < 100; ++trial) {
        auto r = encode_gasf(gen.unit());
        for (double& v : r.data.data()) v += gen.uniform(-0.2, 0.2);
        for (const auto& m : kMethods)
            for (double v : invert(r, m).values) CHECK(std::isfinite(v));
    }
}

TEST_CASE("consistency repair and geometric averaging") {
    const TimeSeries x({1.0, 2.0, 4.0});
    auto r = encode_xirp(x);
    r.data(0, 1) += 0.2;
    const auto fixed = repair_consistency(r);
    CHECK(fixed(0, 1) == doctest::Approx(-std::log(2.0) + 0.1));
    CHECK(fixed(1, 0) == -fixed(0, 1));
    CHECK(fixed(0, 0) == 1.0);

    InversionOptions geo;
    geo.geometric_mean = true;
    CHECK(testing::max_abs_diff(invert(encode_xirp(x), InversionMethod::mean(), geo).values, x.values) <= 1e-12);
    // Geometric mean of x_0 e^{0.2}, x_0, x_0 at row 0.
    CHECK(invert(r, InversionMethod::mean(), geo)[0] == doctest::Approx(std::exp(0.2 / 3.0)));

    InversionOptions rep;
    rep.repair_consistency = true;
    CHECK(invert(r, InversionMethod::mean(), rep)[0] != invert(r, InversionMethod::mean())[0]);
    CHECK_THROWS_AS(invert(encode_gasf(TimeSeries({0.1, 0.2})), InversionMethod::mean(), geo), Error);
    CHECK_THROWS_AS(repair_consistency(encode_naive(TimeSeries({0.1, 0.2}))), Error);
}
