#include <gtest/gtest.h>

#include <random>

#include "cszi/error.hpp"
#include "cszi/huffman.hpp"
#include "cszi/outliers.hpp"
#include "cszi/pass2.hpp"

using namespace cszi;
using Bytes = std::vector<std::uint8_t>;

TEST(Outliers, Layout) {
    EXPECT_EQ(compact_outliers({}), Bytes(8, 0));
    const std::vector<IndexedValue> one{{5, 1.5f}};
    const auto s = compact_outliers(one);
    ASSERT_EQ(s.size(), 20u);
    EXPECT_EQ(s[0], 1);
    EXPECT_EQ(s[8], 5);
    // 1.5f = 0x3FC00000, little-endian
    EXPECT_EQ((Bytes{s.begin() + 16, s.end()}), (Bytes{0x00, 0x00, 0xC0, 0x3F}));
    EXPECT_EQ(expand_outliers(s), one);
}

TEST(Outliers, MalformedSections) {
    auto s = compact_outliers(std::vector<IndexedValue>{{3, 1.0f}, {4, 2.0f}});
    s[20] = 2;
    try {
        expand_outliers(s);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::MalformedSection);
    }
    auto t = compact_outliers(std::vector<IndexedValue>{{3, 1.0f}});
    t.pop_back();
    EXPECT_THROW(expand_outliers(t), Error);
    EXPECT_THROW(expand_outliers(Bytes{1, 2, 3}), Error);
    Bytes huge(8, 0xFF);
    EXPECT_THROW(expand_outliers(huge), Error);
}

TEST(Outliers, RoundTripProperty) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<IndexedValue> v;
        std::uint64_t idx = 0;
        for (std::size_t i = 0, n = rng() % 50; i < n; ++i) {
            idx += 1 + rng() % 1000;
            v.push_back({idx, std::uniform_real_distribution<float>(-1e6f, 1e6f)(rng)});
        }
        ASSERT_EQ(expand_outliers(compact_outliers(v)), v);
    }
}

TEST(ZeroRun, Examples) {
    EXPECT_EQ(pass2_encode(Bytes(5, 0)), (Bytes{0x84}));
    EXPECT_EQ(pass2_encode(Bytes{'A', 'B'}), (Bytes{0x01, 0x41, 0x42}));
    EXPECT_TRUE(pass2_encode({}).empty());
    EXPECT_EQ(pass2_decode(Bytes{0x84}), Bytes(5, 0));
    // 300 zeros -> 128 + 128 + 44
    EXPECT_EQ(pass2_encode(Bytes(300, 0)), (Bytes{0xFF, 0xFF, 0xAB}));
}

TEST(ZeroRun, LiteralOverrunIsCorrupt) {
    try {
        pass2_decode(Bytes{0x03, 0x41});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::Corrupt);
    }
}

TEST(ZeroRun, RoundTripAndExpansionBoundProperty) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = rng() % 4000;
        const int zero_bias = int(rng() % 4);
        Bytes in(n);
        for (auto &b : in) b = int(rng() % 4) < zero_bias ? 0 : std::uint8_t(rng());
        const auto enc = pass2_encode(in);
        ASSERT_EQ(pass2_decode(enc), in);
        ASSERT_LE(enc.size(), n + n / 128 + 1);
    }
    Bytes alternating(1000);
    for (std::size_t i = 0; i < alternating.size(); ++i) alternating[i] = i % 2 ? 0 : 7;
    EXPECT_LE(pass2_encode(alternating).size(), 1000u + 1000u / 128 + 1);
}

TEST(ZeroRun, ShrinksNearZeroHuffmanStream) {
    std::vector<std::int32_t> codes(100000, 0);
    for (std::size_t i = 0; i < codes.size(); i += 997) codes[i] = 1;
    const auto book = build_codebook(build_histogram(codes, 512));
    const auto stream = encode_quant_codes(codes, 512, book);
    const auto enc = pass2_encode(stream.bytes);
    EXPECT_LT(enc.size(), stream.bytes.size());
    EXPECT_LT(enc.size() * 10, stream.bytes.size());
}

namespace {

class XorCodec : public Pass2Codec {
   public:
    std::uint8_t id() const noexcept override { return 42; }
    std::string_view name() const noexcept override { return "xor"; }
    Bytes encode(std::span<const std::uint8_t> in) const override {
        Bytes out(in.begin(), in.end());
        for (auto &b : out) b ^= 0x5A;
        return out;
    }
    Bytes decode(std::span<const std::uint8_t> in) const override { return encode(in); }
};

}  // namespace

TEST(Pass2Registry, ExternalCodecs) {
    EXPECT_EQ(find_pass2_codec(0)->name(), "zero-run");
    try {
        find_pass2_codec(42);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownCodec);
    }
    register_pass2_codec(std::make_shared<XorCodec>());
    const auto c = find_pass2_codec(42);
    EXPECT_EQ(c->decode(c->encode(Bytes{1, 2, 3})), (Bytes{1, 2, 3}));
    struct Reserved final : XorCodec {
        std::uint8_t id() const noexcept override { return 0; }
    };
    EXPECT_THROW(register_pass2_codec(std::make_shared<Reserved>()), Error);
}
