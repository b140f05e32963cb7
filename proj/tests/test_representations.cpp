#include <doctest.h>

#include <cmath>
#include <numbers>

#include "support.hpp"
#include "xirp/generators.hpp"
#include "xirp/representations.hpp"

using namespace xirp;

namespace {

void check_matrix(const RepresentationMatrix& r, const std::vector<std::vector<double>>& expected, double tol) {
    REQUIRE(r.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
        for (std::size_t j = 0; j < expected.size(); ++j) CHECK(std::abs(r(i, j) - expected[i][j]) <= tol);
}

ErrorCode error_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::Io;
}

}  // namespace

TEST_CASE("binary recurrence plot") {
    check_matrix(encode_binary_rp(TimeSeries({0.0, 0.1, 0.5}), 0.2), {{1, 1, 0}, {1, 1, 0}, {0, 0, 1}}, 0.0);
    const auto c = encode_binary_rp(TimeSeries({3.0, 3.0, 3.0}), 1e-9);
    for (double v : c.data.data()) CHECK(v == 1.0);
    CHECK(error_of([] { encode_binary_rp(TimeSeries({1.0, 2.0}), 0.0); }) == ErrorCode::InvalidEpsilon);
    CHECK(error_of([] { encode_binary_rp(TimeSeries({1.0, 2.0}), -1.0); }) == ErrorCode::InvalidEpsilon);
}

TEST_CASE("recurrences of a drifting AR(1) series thin out away from the diagonal") {
    GeneratorConfig cfg{Family::AR1, 200, 5, AR1Params{0.95, 0.1}};
    TimeSeries x = generate(cfg);
    for (std::size_t t = 0; t < x.size(); ++t) x.values[t] += 0.01 * static_cast<double>(t);
    const auto r = encode_binary_rp(x, 0.2);
    auto band_density = [&](std::size_t lo, std::size_t hi) {
        double hits = 0;
        double total = 0;
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t j = 0; j < r.size(); ++j) {
                const std::size_t lag = i > j ? i - j : j - i;
                if (lag >= lo && lag < hi) {
                    hits += r(i, j);
                    total += 1;
                }
            }
        return hits / total;
    };
    const double near = band_density(1, 10);
    const double mid = band_density(50, 100);
    const double far = band_density(150, 200);
    CHECK(near > mid);
    CHECK(mid >= far);
}

TEST_CASE("unthresholded recurrence plot") {
    check_matrix(encode_urp(TimeSeries({1.0, 3.0})), {{0, 2}, {2, 0}}, 0.0);
    check_matrix(encode_urp(TimeSeries({1.0, 2.0, 4.0})), {{0, 1, 3}, {1, 0, 2}, {3, 2, 0}}, 0.0);
    const auto flat = encode_urp(TimeSeries({2.5, 2.5, 2.5}));
    for (double v : flat.data.data()) CHECK(v == 0.0);
}

TEST_CASE("intertemporal return plot") {
    const double l2 = std::log(2.0);
    check_matrix(encode_irp(TimeSeries({1.0, 2.0, 4.0})), {{0, -l2, -2 * l2}, {l2, 0, -l2}, {2 * l2, l2, 0}}, 1e-15);
    CHECK(encode_irp(TimeSeries({1.0, 2.0, 4.0}))(0, 1) == doctest::Approx(-0.6931).epsilon(1e-4));
    const auto flat = encode_irp(TimeSeries({7.0, 7.0, 7.0}));
    for (double v : flat.data.data()) CHECK(v == 0.0);
    CHECK(error_of([] { encode_irp(TimeSeries({1.0, -1.0})); }) == ErrorCode::NonPositiveValue);
    CHECK(error_of([] { encode_irp(TimeSeries({0.0, 1.0})); }) == ErrorCode::NonPositiveValue);
}

TEST_CASE("extended intertemporal return plot") {
    const TimeSeries x({1.0, 2.0, 4.0});
    const auto irp = encode_irp(x);
    const auto xirp = encode_xirp(x);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(xirp(i, i) == x[i]);
        for (std::size_t j = 0; j < 3; ++j)
            if (i != j) CHECK(xirp(i, j) == irp(i, j));
    }
    CHECK(error_of([] { encode_xirp(TimeSeries({1.0, -1.0})); }) == ErrorCode::NonPositiveValue);

    const double c = 3.7;
    TimeSeries cx = x;
    for (auto& v : cx.values) v *= c;
    const auto scaled = encode_xirp(cx);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(scaled(i, i) == doctest::Approx(c * x[i]).epsilon(1e-15));
        for (std::size_t j = 0; j < 3; ++j)
            if (i != j) CHECK(std::abs(scaled(i, j) - xirp(i, j)) <= 1e-12);
    }
}

TEST_CASE("XIRP of an AR(1) series carries the series on its diagonal") {
    GeneratorConfig cfg{Family::AR1, 100, 3, AR1Params{0.9, 1.0}};
    TimeSeries x = generate(cfg);
    for (auto& v : x.values) v += 20.0;  // shift to positive
    const auto r = encode_xirp(x);
    for (std::size_t t = 0; t < x.size(); ++t) CHECK(r(t, t) == x[t]);
}

TEST_CASE("Gramian angular summation field") {
    // phi = [pi/2, pi/3, 0]
    check_matrix(encode_gasf(TimeSeries({0.0, 0.5, 1.0})),
                 {{-1, -0.8660254037844386, 0}, {-0.8660254037844386, -0.5, 0.5}, {0, 0.5, 1}}, 1e-15);
    const auto flat = encode_gasf(TimeSeries({1.0, 1.0, 1.0, 1.0}));
    for (double v : flat.data.data()) CHECK(v == 1.0);
    CHECK(error_of([] { encode_gasf(TimeSeries({2.0, 3.0})); }) == ErrorCode::OutOfUnitRange);
    CHECK(error_of([] { encode_gasf(TimeSeries({-0.1, 0.5})); }) == ErrorCode::OutOfUnitRange);
}

TEST_CASE("GASF is not scale-invariant") {
    // Frozen from cos(a + b) = x y - sqrt((1 - x^2)(1 - y^2)).
    const auto a = encode_gasf(TimeSeries({0.2, 0.8}));
    const auto b = encode_gasf(TimeSeries({0.1, 0.4}));
    CHECK(a(0, 1) == doctest::Approx(-0.4278775382679626).epsilon(1e-13));
    CHECK(b(0, 1) == doctest::Approx(-0.8719210492142397).epsilon(1e-13));
    CHECK(std::abs(a(0, 1) - b(0, 1)) > 0.4);
}

TEST_CASE("naive representation stacks the series as constant rows") {
    check_matrix(encode_naive(TimeSeries({5.0, 7.0})), {{5, 5}, {7, 7}}, 0.0);
    testing::Gen gen(3);
    for (int k = 0; k < 20; ++k) {
        const TimeSeries x = gen.finite();
        const auto r = encode_naive(x);
        for (std::size_t j = 0; j < x.size(); ++j)
            for (std::size_t i = 0; i < x.size(); ++i) CHECK(r(i, j) == x[i]);
    }
}

TEST_CASE("encode dispatches and tags the result") {
    const TimeSeries x({1.0, 2.0, 4.0});
    const auto r = encode(XIRP{}, x);
    CHECK(r.data == encode_xirp(x).data);
    CHECK(std::holds_alternative<XIRP>(r.kind));
    const auto b = encode(BinaryRP{0.2}, TimeSeries({0.0, 0.1, 0.5}));
    CHECK(b.data == encode_binary_rp(TimeSeries({0.0, 0.1, 0.5}), 0.2).data);
    CHECK(std::get<BinaryRP>(b.kind).epsilon == 0.2);
    CHECK(error_of([] { encode(GASF{}, TimeSeries({2.0, 3.0})); }) == ErrorCode::OutOfUnitRange);
    CHECK(error_of([] { encode(URP{}, TimeSeries({1.0})); }) == ErrorCode::TooShort);
}

TEST_CASE("structural properties over random series") {
    testing::Gen gen(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const TimeSeries pos = gen.positive();
        const TimeSeries unit = gen.unit();
        const TimeSeries any = gen.finite();
        const double eps = gen.uniform(0.01, 50.0);

        const auto irp = encode_irp(pos);
        const auto xirp = encode_xirp(pos);
        const auto rp = encode_binary_rp(any, eps);
        const auto urp = encode_urp(any);
        const auto gasf = encode_gasf(unit);

        for (std::size_t i = 0; i < pos.size(); ++i) {
            CHECK(irp(i, i) == 0.0);
            CHECK(xirp(i, i) == pos[i]);
            for (std::size_t j = 0; j < pos.size(); ++j) {
                CHECK(irp(i, j) == -irp(j, i));
                if (i != j) CHECK(xirp(i, j) == -xirp(j, i));
            }
        }
        CHECK(rp.data == rp.data.transposed());
        CHECK(urp.data == urp.data.transposed());
        for (std::size_t i = 0; i < any.size(); ++i) {
            CHECK(rp(i, i) == 1.0);
            CHECK(urp(i, i) == 0.0);
            for (std::size_t j = 0; j < any.size(); ++j) {
                CHECK((rp(i, j) == 0.0 || rp(i, j) == 1.0));
                CHECK(urp(i, j) >= 0.0);
            }
        }
        CHECK(gasf.data == gasf.data.transposed());
        for (std::size_t i = 0; i < unit.size(); ++i) {
            CHECK(std::abs(gasf(i, i) - (2 * unit[i] * unit[i] - 1)) <= 1e-12);
            for (std::size_t j = 0; j < unit.size(); ++j) CHECK(std::abs(gasf(i, j)) <= 1.0);
        }
    }
}

TEST_CASE("log returns are additive") {
    testing::Gen gen(77);
    for (int trial = 0; trial < 100; ++trial) {
        const TimeSeries x = gen.positive(1e-3, 1e3);
        const auto r = encode_irp(x);
        const std::size_t n = x.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(r(i, k) - (r(i, j) + r(j, k))) <= 1e-10);
    }
}

TEST_CASE("scale behaviour of IRP, XIRP and URP") {
    testing::Gen gen(99);
    for (int trial = 0; trial < 200; ++trial) {
        const TimeSeries x = gen.positive();
        const double c = std::exp(gen.uniform(std::log(1e-3), std::log(1e3)));
        TimeSeries cx = x;
        for (auto& v : cx.values) v *= c;
        const auto a = encode_irp(x);
        const auto b = encode_irp(cx);
        const auto xa = encode_xirp(x);
        const auto xb = encode_xirp(cx);
        const auto ua = encode_urp(x);
        const auto ub = encode_urp(cx);
        for (std::size_t i = 0; i < x.size(); ++i) {
            CHECK(std::abs(xb(i, i) - c * xa(i, i)) <= 1e-12 * std::abs(c * xa(i, i)));
            for (std::size_t j = 0; j < x.size(); ++j) {
                CHECK(std::abs(a(i, j) - b(i, j)) <= 1e-12);
                if (i != j) CHECK(std::abs(xa(i, j) - xb(i, j)) <= 1e-12);
                CHECK(std::abs(ub(i, j) - c * ua(i, j)) <= 1e-12 * std::max(1.0, c * ua(i, j)));
            }
        }
    }
}
