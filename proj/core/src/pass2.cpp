#include "cszi/pass2.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

#include "cszi/error.hpp"

namespace cszi {

namespace {

constexpr std::size_t kMaxRun = 128;
constexpr std::uint8_t kZeroRunBase = 127;  // control byte c >= 128 encodes c - 127 zeros

void flush_literals(std::vector<std::uint8_t> &out, std::span<const std::uint8_t> lit) {
    while (!lit.empty()) {
        const std::size_t n = std::min(lit.size(), kMaxRun);
        out.push_back(static_cast<std::uint8_t>(n - 1));
        out.insert(out.end(), lit.begin(), lit.begin() + static_cast<std::ptrdiff_t>(n));
        lit = lit.subspan(n);
    }
}

struct Registry {
    std::mutex mu;
    std::map<std::uint8_t, std::shared_ptr<const Pass2Codec>> codecs{{ZeroRunCodec::kId, std::make_shared<ZeroRunCodec>()}};
};

Registry &registry() {
    static Registry r;
    return r;
}

}  // namespace

std::vector<std::uint8_t> ZeroRunCodec::encode(std::span<const std::uint8_t> in) const {
    std::vector<std::uint8_t> out;
    out.reserve(in.size() / 8 + 16);
    std::size_t lit_begin = 0, i = 0;
    while (i < in.size()) {
        if (in[i] != 0) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < in.size() && in[j] == 0) ++j;
        const std::size_t run = j - i;
        // A lone zero costs more as its own token than inside a literal run.
        if (run >= 2) {
            flush_literals(out, in.subspan(lit_begin, i - lit_begin));
            for (std::size_t left = run; left > 0;) {
                const std::size_t n = std::min(left, kMaxRun);
                out.push_back(static_cast<std::uint8_t>(kZeroRunBase + n));
                left -= n;
            }
            lit_begin = j;
        }
        i = j;
    }
    flush_literals(out, in.subspan(lit_begin));
    return out;
}

std::vector<std::uint8_t> ZeroRunCodec::decode(std::span<const std::uint8_t> in) const {
    std::vector<std::uint8_t> out;
    out.reserve(in.size() * 4);
    std::size_t i = 0;
    while (i < in.size()) {
        const std::uint8_t c = in[i++];
        if (c > kZeroRunBase) {
            out.insert(out.end(), static_cast<std::size_t>(c - kZeroRunBase), std::uint8_t{0});
            continue;
        }
        const std::size_t n = std::size_t{c} + 1;
        if (n > in.size() - i)
            throw Error(ErrorCode::Corrupt, "literal run of " + std::to_string(n) + " bytes overruns input");
        out.insert(out.end(), in.begin() + static_cast<std::ptrdiff_t>(i), in.begin() + static_cast<std::ptrdiff_t>(i + n));
        i += n;
    }
    return out;
}

std::vector<std::uint8_t> pass2_encode(std::span<const std::uint8_t> in) { return ZeroRunCodec{}.encode(in); }
std::vector<std::uint8_t> pass2_decode(std::span<const std::uint8_t> in) { return ZeroRunCodec{}.decode(in); }

void register_pass2_codec(std::shared_ptr<const Pass2Codec> codec) {
    if (!codec) throw Error(ErrorCode::InvalidArgument, "null codec");
    if (codec->id() == ZeroRunCodec::kId) throw Error(ErrorCode::InvalidArgument, "codec id 0 is reserved");
    auto &r = registry();
    std::lock_guard lock(r.mu);
    r.codecs[codec->id()] = std::move(codec);
}

std::shared_ptr<const Pass2Codec> find_pass2_codec(std::uint8_t id) {
    auto &r = registry();
    std::lock_guard lock(r.mu);
    auto it = r.codecs.find(id);
    if (it == r.codecs.end()) throw Error(ErrorCode::UnknownCodec, "no pass-2 codec registered with id " + std::to_string(id));
    return it->second;
}

}  // namespace cszi
