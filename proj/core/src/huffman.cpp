#include "cszi/huffman.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <tuple>

#include "cszi/error.hpp"

namespace cszi {

Histogram build_histogram(std::span<const std::int32_t> codes, std::int32_t radius) {
    if (radius < 1) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
    Histogram h{radius, std::vector<std::uint64_t>(2 * static_cast<std::size_t>(radius), 0)};
    for (auto q : codes) {
        if (q <= -radius || q >= radius)
            throw Error(ErrorCode::OutOfRange, "quant-code " + std::to_string(q) + " outside radius " + std::to_string(radius));
        ++h.counts[static_cast<std::size_t>(q + radius)];
    }
    return h;
}

Codebook Codebook::from_lengths(std::vector<std::uint8_t> lengths) {
    Codebook b;
    b.lengths_ = std::move(lengths);
    b.codes_.assign(b.lengths_.size(), 0);

    std::uint64_t kraft = 0;  // in units of 2^-32
    for (auto len : b.lengths_) {
        if (len > kMaxCodeLength)
            throw Error(ErrorCode::MalformedSection, "code length " + std::to_string(len) + " exceeds 32");
        if (len) kraft += std::uint64_t{1} << (kMaxCodeLength - len);
        b.max_len_ = std::max<unsigned>(b.max_len_, len);
    }
    if (kraft > (std::uint64_t{1} << kMaxCodeLength))
        throw Error(ErrorCode::MalformedSection, "code lengths violate the Kraft inequality");

    b.first_code_.assign(b.max_len_ + 1, 0);
    b.first_index_.assign(b.max_len_ + 1, 0);
    b.count_.assign(b.max_len_ + 1, 0);
    for (auto len : b.lengths_)
        if (len) ++b.count_[len];

    std::vector<std::vector<std::uint32_t>> by_length(b.max_len_ + 1);
    for (std::uint32_t s = 0; s < b.lengths_.size(); ++s)
        if (b.lengths_[s]) by_length[b.lengths_[s]].push_back(s);

    std::uint64_t code = 0;
    for (unsigned len = 1; len <= b.max_len_; ++len) {
        b.first_code_[len] = static_cast<std::uint32_t>(code);
        b.first_index_[len] = static_cast<std::uint32_t>(b.sorted_symbols_.size());
        for (auto s : by_length[len]) {
            b.codes_[s] = static_cast<std::uint32_t>(code++);
            b.sorted_symbols_.push_back(s);
        }
        code <<= 1;
    }
    return b;
}

Codebook build_codebook(const Histogram &hist) {
    struct Node {
        std::uint64_t count;
        std::uint32_t min_symbol;
        std::int32_t left, right;  // -1 for leaves
    };
    std::vector<Node> nodes;
    for (std::uint32_t s = 0; s < hist.counts.size(); ++s)
        if (hist.counts[s]) nodes.push_back({hist.counts[s], s, -1, -1});
    if (nodes.empty()) throw Error(ErrorCode::EmptyHistogram, "no symbol has a nonzero count");

    std::vector<std::uint8_t> lengths(hist.counts.size(), 0);
    if (nodes.size() == 1) {
        lengths[nodes[0].min_symbol] = 1;
        return Codebook::from_lengths(std::move(lengths));
    }

    using Key = std::tuple<std::uint64_t, std::uint32_t, std::int32_t>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> heap;
    for (std::int32_t i = 0; i < static_cast<std::int32_t>(nodes.size()); ++i)
        heap.emplace(nodes[i].count, nodes[i].min_symbol, i);
    while (heap.size() > 1) {
        const auto [ca, sa, a] = heap.top();
        heap.pop();
        const auto [cb, sb, b] = heap.top();
        heap.pop();
        nodes.push_back({ca + cb, std::min(sa, sb), a, b});
        heap.emplace(ca + cb, std::min(sa, sb), static_cast<std::int32_t>(nodes.size() - 1));
    }

    std::vector<std::pair<std::int32_t, unsigned>> stack{{std::get<2>(heap.top()), 0u}};
    while (!stack.empty()) {
        const auto [i, depth] = stack.back();
        stack.pop_back();
        const Node &n = nodes[i];
        if (n.left < 0) {
            if (depth > kMaxCodeLength)
                throw Error(ErrorCode::LengthOverflow, "Huffman code length " + std::to_string(depth) + " exceeds 32");
            lengths[n.min_symbol] = static_cast<std::uint8_t>(depth);
            continue;
        }
        stack.push_back({n.left, depth + 1});
        stack.push_back({n.right, depth + 1});
    }
    return Codebook::from_lengths(std::move(lengths));
}

BitStream huffman_encode(std::span<const std::uint32_t> symbols, const Codebook &book) {
    BitStream out;
    out.bytes.reserve(symbols.size() / 4 + 8);
    std::uint64_t acc = 0;
    unsigned pending = 0;
    for (auto s : symbols) {
        if (s >= book.num_symbols() || book.length(s) == 0)
            throw Error(ErrorCode::UnknownSymbol, "symbol " + std::to_string(s) + " has no code");
        const unsigned len = book.length(s);
        acc = (acc << len) | book.code(s);
        pending += len;
        out.bit_count += len;
        while (pending >= 8) {
            pending -= 8;
            out.bytes.push_back(static_cast<std::uint8_t>(acc >> pending));
        }
        acc &= (std::uint64_t{1} << pending) - 1;
    }
    if (pending) out.bytes.push_back(static_cast<std::uint8_t>(acc << (8 - pending)));
    return out;
}

class HuffmanDecoder {
   public:
    HuffmanDecoder(const BitStream &stream, const Codebook &book) : stream_(stream), book_(book) {
        if (stream.bytes.size() < (stream.bit_count + 7) / 8)
            throw Error(ErrorCode::TruncatedStream, "bit count exceeds stream bytes");
    }

    std::uint32_t next() {
        std::uint32_t code = 0;
        for (unsigned len = 1; len <= book_.max_len_; ++len) {
            if (pos_ >= stream_.bit_count) throw Error(ErrorCode::TruncatedStream, "stream ended mid-symbol");
            const unsigned bit = (stream_.bytes[pos_ >> 3] >> (7 - (pos_ & 7))) & 1u;
            ++pos_;
            code = (code << 1) | bit;
            const std::uint32_t rel = code - book_.first_code_[len];
            if (code >= book_.first_code_[len] && rel < book_.count_[len])
                return book_.sorted_symbols_[book_.first_index_[len] + rel];
        }
        throw Error(ErrorCode::Corrupt, "bit pattern matches no code");
    }

   private:
    const BitStream &stream_;
    const Codebook &book_;
    std::uint64_t pos_ = 0;
};

std::vector<std::uint32_t> huffman_decode(const BitStream &stream, const Codebook &book, std::size_t count) {
    std::vector<std::uint32_t> out;
    out.reserve(count);
    HuffmanDecoder dec(stream, book);
    for (std::size_t i = 0; i < count; ++i) out.push_back(dec.next());
    return out;
}

BitStream encode_quant_codes(std::span<const std::int32_t> codes, std::int32_t radius, const Codebook &book) {
    std::vector<std::uint32_t> symbols(codes.size());
    std::transform(codes.begin(), codes.end(), symbols.begin(),
                   [radius](std::int32_t q) { return static_cast<std::uint32_t>(q + radius); });
    return huffman_encode(symbols, book);
}

std::vector<std::int32_t> decode_quant_codes(const BitStream &stream, std::int32_t radius, const Codebook &book,
                                             std::size_t count) {
    const auto symbols = huffman_decode(stream, book, count);
    std::vector<std::int32_t> codes(count);
    std::transform(symbols.begin(), symbols.end(), codes.begin(),
                   [radius](std::uint32_t s) { return static_cast<std::int32_t>(s) - radius; });
    return codes;
}

}  // namespace cszi
