#ifndef CSZI_PASS2_HPP
#define CSZI_PASS2_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

namespace cszi {

/// Lossless byte codec applied to the whole archive payload.
class Pass2Codec {
   public:
    virtual ~Pass2Codec() = default;
    virtual std::uint8_t id() const noexcept = 0;
    virtual std::string_view name() const noexcept = 0;
    virtual std::vector<std::uint8_t> encode(std::span<const std::uint8_t> in) const = 0;
    virtual std::vector<std::uint8_t> decode(std::span<const std::uint8_t> in) const = 0;
};

/**
 * Zero-run codec, id 0. Control byte c < 128 is followed by c+1 literal
 * bytes; c >= 128 stands for c-127 zero bytes. Single zeros stay inside
 * literal runs, so output never exceeds n + n/128 + 1 bytes.
 */
class ZeroRunCodec final : public Pass2Codec {
   public:
    static constexpr std::uint8_t kId = 0;
    std::uint8_t id() const noexcept override { return kId; }
    std::string_view name() const noexcept override { return "zero-run"; }
    std::vector<std::uint8_t> encode(std::span<const std::uint8_t> in) const override;
    std::vector<std::uint8_t> decode(std::span<const std::uint8_t> in) const override;
};

std::vector<std::uint8_t> pass2_encode(std::span<const std::uint8_t> in);
std::vector<std::uint8_t> pass2_decode(std::span<const std::uint8_t> in);

/// Makes an external codec available under its id. Id 0 is reserved.
void register_pass2_codec(std::shared_ptr<const Pass2Codec> codec);

/// Throws UnknownCodec for unregistered ids.
std::shared_ptr<const Pass2Codec> find_pass2_codec(std::uint8_t id);

}  // namespace cszi

#endif
