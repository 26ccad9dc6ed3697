#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "cszi/error.hpp"
#include "cszi/huffman.hpp"

using namespace cszi;

namespace {

Histogram hist_of(std::vector<std::uint64_t> counts) { return Histogram{static_cast<std::int32_t>(counts.size() / 2), counts}; }

double kraft(const Codebook &b) {
    double s = 0;
    for (auto l : b.lengths())
        if (l) s += std::ldexp(1.0, -int(l));
    return s;
}

}  // namespace

TEST(BuildHistogram, Counts) {
    const auto h = build_histogram(std::vector<std::int32_t>{0, 0, 1}, 2);
    EXPECT_EQ(h.counts, (std::vector<std::uint64_t>{0, 0, 2, 1}));
    EXPECT_EQ(build_histogram({}, 3).counts, std::vector<std::uint64_t>(6, 0));
}

TEST(BuildHistogram, OutOfRange) {
    try {
        build_histogram(std::vector<std::int32_t>{0, 2}, 2);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::OutOfRange);
    }
    EXPECT_THROW(build_histogram(std::vector<std::int32_t>{-2}, 2), Error);
    EXPECT_NO_THROW(build_histogram(std::vector<std::int32_t>{-1, 1}, 2));
}

TEST(BuildCodebook, HandBuiltTree) {
    // A:3 B:1 C:1 -> B and C merge first, then A joins.
    const auto b = build_codebook(hist_of({3, 1, 1, 0}));
    EXPECT_EQ(b.length(0), 1);
    EXPECT_EQ(b.length(1), 2);
    EXPECT_EQ(b.length(2), 2);
    EXPECT_EQ(b.length(3), 0);
    EXPECT_EQ(b.code(0), 0b0u);
    EXPECT_EQ(b.code(1), 0b10u);
    EXPECT_EQ(b.code(2), 0b11u);
}

TEST(BuildCodebook, DegenerateCases) {
    const auto one = build_codebook(hist_of({0, 7}));
    EXPECT_EQ(one.length(1), 1);
    EXPECT_EQ(one.code(1), 0u);
    const auto two = build_codebook(hist_of({0, 5, 5, 0}));
    EXPECT_EQ(two.length(1), 1);
    EXPECT_EQ(two.length(2), 1);
    EXPECT_EQ(two.code(1), 0u);
    EXPECT_EQ(two.code(2), 1u);
    try {
        build_codebook(hist_of({0, 0}));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptyHistogram);
    }
}

TEST(BuildCodebook, LengthOverflowOnFibonacciCounts) {
    // Fibonacci frequencies force a maximally skewed tree of depth n - 1.
    std::vector<std::uint64_t> counts(40, 0);
    std::uint64_t a = 1, b = 1;
    for (auto &c : counts) {
        c = a;
        const auto t = a + b;
        a = b;
        b = t;
    }
    try {
        build_codebook(hist_of(counts));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::LengthOverflow);
    }
    counts.resize(30);
    EXPECT_NO_THROW(build_codebook(hist_of(counts)));
}

TEST(BuildCodebook, KraftAndCanonicalOrderProperty) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::uint64_t> counts(2 * (1 + rng() % 64));
        for (auto &c : counts) c = rng() % 3 == 0 ? 0 : 1 + rng() % (1u << (rng() % 20));
        if (std::all_of(counts.begin(), counts.end(), [](auto c) { return c == 0; })) counts[0] = 1;
        const auto b = build_codebook(hist_of(counts));
        EXPECT_LE(kraft(b), 1.0 + 1e-12);
        std::vector<std::pair<unsigned, std::uint32_t>> order;
        for (std::uint32_t s = 0; s < counts.size(); ++s) {
            EXPECT_EQ(counts[s] > 0, b.length(s) > 0);
            if (b.length(s)) order.push_back({b.length(s), s});
        }
        std::sort(order.begin(), order.end());
        // Canonical: codes increase along (length, symbol) once left-aligned to 32 bits.
        for (std::size_t i = 1; i < order.size(); ++i) {
            const auto prev = std::uint64_t{b.code(order[i - 1].second)} << (32 - order[i - 1].first);
            const auto cur = std::uint64_t{b.code(order[i].second)} << (32 - order[i].first);
            EXPECT_LT(prev, cur);
        }
        EXPECT_EQ(Codebook::from_lengths(b.lengths()), b);
    }
}

TEST(HuffmanEncode, ConcatenatesCanonicalCodes) {
    const auto b = build_codebook(hist_of({3, 1, 1, 0}));
    const auto s = huffman_encode(std::vector<std::uint32_t>{0, 0, 1}, b);  // "AAB"
    EXPECT_EQ(s.bit_count, 4u);
    ASSERT_EQ(s.bytes.size(), 1u);
    EXPECT_EQ(s.bytes[0], 0b00100000);
    EXPECT_EQ(huffman_decode(s, b, 3), (std::vector<std::uint32_t>{0, 0, 1}));
}

TEST(HuffmanEncode, EmptyAndErrors) {
    const auto b = build_codebook(hist_of({3, 1, 1, 0}));
    const auto e = huffman_encode({}, b);
    EXPECT_TRUE(e.bytes.empty());
    EXPECT_EQ(e.bit_count, 0u);
    EXPECT_TRUE(huffman_decode(e, b, 0).empty());

    try {
        huffman_encode(std::vector<std::uint32_t>{3}, b);
        FAIL();
    } catch (const Error &err) {
        EXPECT_EQ(err.code(), ErrorCode::UnknownSymbol);
    }
    try {
        huffman_decode(huffman_encode(std::vector<std::uint32_t>{0, 1}, b), b, 3);
        FAIL();
    } catch (const Error &err) {
        EXPECT_EQ(err.code(), ErrorCode::TruncatedStream);
    }
}

TEST(HuffmanEncode, SingleSymbolCostsOneBitEach) {
    const auto b = build_codebook(hist_of({0, 0, 9, 0}));
    std::vector<std::uint32_t> syms(1001, 2);
    const auto s = huffman_encode(syms, b);
    EXPECT_EQ(s.bit_count, 1001u);
    EXPECT_EQ(huffman_decode(s, b, syms.size()), syms);
}

TEST(HuffmanEncode, RoundTripAndSizeBoundProperty) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t alphabet = 2 + rng() % 200;
        const std::size_t n = rng() % 2000;
        std::geometric_distribution<std::uint32_t> geo(0.3);
        std::vector<std::uint32_t> syms(n);
        for (auto &s : syms) s = std::min<std::uint32_t>(geo(rng), std::uint32_t(alphabet - 1));
        std::vector<std::uint64_t> counts(alphabet + alphabet % 2, 0);
        for (auto s : syms) ++counts[s];
        if (n == 0) counts[0] = 1;
        const auto b = build_codebook(hist_of(counts));
        const auto st = huffman_encode(syms, b);
        ASSERT_EQ(huffman_decode(st, b, n), syms);
        std::size_t distinct = 0;
        for (auto c : counts) distinct += c > 0;
        const double bound = double(n) * std::ceil(std::log2(std::max<double>(2, double(distinct))));
        EXPECT_LE(double(st.bit_count), bound);
    }
}

TEST(QuantCodes, ShiftedRoundTrip) {
    std::vector<std::int32_t> codes{0, -3, 5, 0, 0, 511, -511};
    const auto b = build_codebook(build_histogram(codes, 512));
    const auto s = encode_quant_codes(codes, 512, b);
    EXPECT_EQ(decode_quant_codes(s, 512, b, codes.size()), codes);
}

TEST(Codebook, RejectsOversubscribedLengths) {
    EXPECT_THROW(Codebook::from_lengths({1, 1, 1}), Error);
    EXPECT_THROW(Codebook::from_lengths({33}), Error);
    EXPECT_NO_THROW(Codebook::from_lengths({1, 2, 2}));
}
