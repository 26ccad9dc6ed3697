#include <gtest/gtest.h>

#include <cstring>
#include <random>

#include "cszi/compressor.hpp"
#include "cszi/error.hpp"
#include "cszi/metrics.hpp"
#include "support/fields.hpp"

using namespace cszi;
using namespace cszi::testing;

namespace {

CompressOptions opts(ErrorBound eb, PredictorKind p = PredictorKind::Interp, bool pass2 = true) {
    CompressOptions o;
    o.eb = eb;
    o.predictor = p;
    o.pass2 = pass2;
    return o;
}

}  // namespace

TEST(Compressor, RoundTripBothPredictors) {
    const Grid g = sinusoid_field(Dims{30, 40, 50}, 25);
    for (auto p : {PredictorKind::Interp, PredictorKind::Lorenzo})
        for (bool pass2 : {false, true})
            for (auto eb : {ErrorBound::relative(1e-3), ErrorBound::absolute(1e-4)}) {
                const auto c = compress(g, opts(eb, p, pass2));
                const Grid out = decompress(c.bytes);
                const auto rep = verify_error_bound(g, out, c.header.eb_abs);
                EXPECT_TRUE(rep.ok()) << to_string(p) << " pass2=" << pass2;
                EXPECT_EQ(c.header.predictor, p);
            }
}

TEST(Compressor, HeaderCarriesTunedConfig) {
    const Grid g = sinusoid_field(Dims{64, 64, 64});
    const auto c = compress(g, opts(ErrorBound::relative(1e-2)));
    EXPECT_EQ(c.header.alpha, 1.75);
    EXPECT_NEAR(c.header.eb_abs, 1e-2 * value_range(g).range, 1e-15);
    EXPECT_EQ(c.header.anchor_stride, 8u);
    const auto parsed = parse_archive(c.bytes);
    EXPECT_EQ(parsed.header, c.header);
}

TEST(Compressor, OverridesArePinned) {
    const Grid g = sinusoid_field(Dims{20, 30}, 9);
    auto o = opts(ErrorBound::relative(1e-3));
    o.alpha = 1.1;
    o.cubic_variants = std::vector{CubicVariant::Natural, CubicVariant::Natural};
    o.dim_order = std::vector<std::uint8_t>{1, 0};
    const auto c = compress(g, o);
    EXPECT_EQ(c.header.alpha, 1.1);
    EXPECT_EQ(c.header.cubic_variant[0], CubicVariant::Natural);
    EXPECT_EQ(c.header.dim_order[0], 1);
    EXPECT_EQ(c.header.dim_order[1], 0);
    EXPECT_TRUE(verify_error_bound(g, decompress(c.bytes), c.header.eb_abs).ok());

    o.dim_order = std::vector<std::uint8_t>{1, 1};
    EXPECT_THROW(compress(g, o), Error);
    o.dim_order.reset();
    o.cubic_variants = std::vector{CubicVariant::Natural};
    EXPECT_THROW(compress(g, o), Error);
}

TEST(Compressor, CustomLayoutRoundTrip) {
    const Grid g = sinusoid_field(Dims{50, 70}, 17);
    auto o = opts(ErrorBound::relative(1e-4));
    ChunkLayout l;
    l.rank = 2;
    l.anchor_stride = 32;
    l.super_chunk = {64, 32, 0};
    o.layout = l;
    const auto c = compress(g, o);
    EXPECT_EQ(c.header.anchor_stride, 32u);
    EXPECT_TRUE(verify_error_bound(g, decompress(c.bytes), c.header.eb_abs).ok());
}

TEST(Compressor, DeterministicAcrossThreadCounts) {
    const Grid g = noise_field(Dims{40, 41, 42}, 9);
    auto o = opts(ErrorBound::relative(1e-2));
    o.exec.threads = 1;
    const auto a = compress(g, o).bytes;
    o.exec.threads = 4;
    EXPECT_EQ(compress(g, o).bytes, a);
    const auto d1 = decompress(a, Exec{1});
    const auto d4 = decompress(a, Exec{4});
    EXPECT_EQ(std::memcmp(d1.values.data(), d4.values.data(), d1.size() * 4), 0);
}

TEST(Compressor, Pass2ChangesSizeNotValues) {
    const Grid g = sinusoid_field(Dims{48, 48, 48}, 40);
    const auto off = compress(g, opts(ErrorBound::relative(1e-3), PredictorKind::Interp, false));
    const auto on = compress(g, opts(ErrorBound::relative(1e-3), PredictorKind::Interp, true));
    EXPECT_LE(on.bytes.size(), off.bytes.size());
    const auto a = decompress(off.bytes), b = decompress(on.bytes);
    EXPECT_EQ(std::memcmp(a.values.data(), b.values.data(), a.size() * 4), 0);
}

TEST(Compressor, ConstantGridTinyArchive) {
    const Grid g = constant_field(Dims{64, 64, 64}, 1.25f);
    const auto c = compress(g, opts(ErrorBound::relative(1e-3)));
    EXPECT_LT(c.bytes.size() * 200, g.size() * 4);
    EXPECT_EQ(c.nonzero_codes, 0u);
    const auto out = decompress(c.bytes);
    EXPECT_EQ(out.values, g.values);
}

TEST(Compressor, CorruptArchivesAreRejected) {
    const Grid g = sinusoid_field(Dims{20, 20}, 9);
    auto bytes = compress(g, opts(ErrorBound::relative(1e-3), PredictorKind::Interp, false)).bytes;
    auto bad_stride = bytes;
    bad_stride[68] = 6;
    EXPECT_THROW(decompress(bad_stride), Error);
    auto bad_radius = bytes;
    bad_radius[84] = 7;
    EXPECT_THROW(decompress(bad_radius), Error);
    bytes.resize(bytes.size() - 3);
    try {
        decompress(bytes);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::LengthMismatch);
    }
}

TEST(Compressor, RejectsBadBound) {
    const Grid g = sinusoid_field(Dims{10}, 9);
    EXPECT_THROW(compress(g, opts(ErrorBound::relative(0))), Error);
    EXPECT_THROW(compress(g, opts(ErrorBound::absolute(-1))), Error);
}
