#ifndef CSZI_DETAIL_BYTE_IO_HPP
#define CSZI_DETAIL_BYTE_IO_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <span>
#include <type_traits>
#include <vector>

#include "cszi/error.hpp"

namespace cszi::detail {

static_assert(std::endian::native == std::endian::little, "cszi assumes a little-endian host");

// Little-endian appender.
class ByteWriter {
   public:
    explicit ByteWriter(std::vector<std::uint8_t> &out) : out_(out) {}

    template <class T>
    void put(T v) {
        static_assert(std::is_trivially_copyable_v<T>);
        const auto pos = out_.size();
        out_.resize(pos + sizeof(T));
        std::memcpy(out_.data() + pos, &v, sizeof(T));
    }

    void put_bytes(std::span<const std::uint8_t> bytes) { out_.insert(out_.end(), bytes.begin(), bytes.end()); }

   private:
    std::vector<std::uint8_t> &out_;
};

class ByteReader {
   public:
    ByteReader(std::span<const std::uint8_t> in, ErrorCode on_short) : in_(in), on_short_(on_short) {}

    template <class T>
    T get() {
        static_assert(std::is_trivially_copyable_v<T>);
        require(sizeof(T));
        T v;
        std::memcpy(&v, in_.data() + pos_, sizeof(T));
        pos_ += sizeof(T);
        return v;
    }

    std::span<const std::uint8_t> get_bytes(std::size_t n) {
        require(n);
        auto s = in_.subspan(pos_, n);
        pos_ += n;
        return s;
    }

    std::size_t position() const noexcept { return pos_; }
    std::size_t remaining() const noexcept { return in_.size() - pos_; }

   private:
    void require(std::size_t n) const {
        if (n > in_.size() - pos_) throw Error(on_short_, "unexpected end of data");
    }

    std::span<const std::uint8_t> in_;
    std::size_t pos_ = 0;
    ErrorCode on_short_;
};

}  // namespace cszi::detail

#endif
