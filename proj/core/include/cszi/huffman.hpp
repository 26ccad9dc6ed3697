#ifndef CSZI_HUFFMAN_HPP
#define CSZI_HUFFMAN_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cszi {

constexpr unsigned kMaxCodeLength = 32;

/// counts[q + radius] is the multiplicity of quant-code q.
struct Histogram {
    std::int32_t radius = 0;
    std::vector<std::uint64_t> counts;

    std::size_t num_bins() const noexcept { return counts.size(); }
};

Histogram build_histogram(std::span<const std::int32_t> codes, std::int32_t radius);

/// Canonical Huffman code: codes are assigned in (length, symbol) order.
class Codebook {
   public:
    Codebook() = default;

    /// Rebuilds the canonical codes; throws MalformedSection on lengths > 32
    /// or an over-subscribed (Kraft > 1) set.
    static Codebook from_lengths(std::vector<std::uint8_t> lengths);

    std::size_t num_symbols() const noexcept { return lengths_.size(); }
    const std::vector<std::uint8_t> &lengths() const noexcept { return lengths_; }
    std::uint8_t length(std::uint32_t symbol) const noexcept { return lengths_[symbol]; }
    std::uint32_t code(std::uint32_t symbol) const noexcept { return codes_[symbol]; }
    unsigned max_length() const noexcept { return max_len_; }

    bool operator==(const Codebook &o) const { return lengths_ == o.lengths_; }

   private:
    friend class HuffmanDecoder;

    std::vector<std::uint8_t> lengths_;
    std::vector<std::uint32_t> codes_;
    unsigned max_len_ = 0;
    // Canonical decode tables, indexed by length.
    std::vector<std::uint32_t> first_code_;
    std::vector<std::uint32_t> first_index_;
    std::vector<std::uint32_t> count_;
    std::vector<std::uint32_t> sorted_symbols_;
};

/// Huffman tree merge order: two least-frequent nodes first, ties by the
/// smallest symbol contained. A single used symbol gets length 1.
Codebook build_codebook(const Histogram &hist);

struct BitStream {
    std::vector<std::uint8_t> bytes;  // MSB-first, zero padded to a byte boundary
    std::uint64_t bit_count = 0;

    bool operator==(const BitStream &) const = default;
};

BitStream huffman_encode(std::span<const std::uint32_t> symbols, const Codebook &book);
std::vector<std::uint32_t> huffman_decode(const BitStream &stream, const Codebook &book, std::size_t count);

/// Quant-code conveniences: symbol = code + radius.
BitStream encode_quant_codes(std::span<const std::int32_t> codes, std::int32_t radius, const Codebook &book);
std::vector<std::int32_t> decode_quant_codes(const BitStream &stream, std::int32_t radius, const Codebook &book,
                                             std::size_t count);

}  // namespace cszi

#endif
