#include "vlrs/container.hpp"

#include "vlrs/errors.hpp"

namespace vlrs {

namespace {

constexpr std::uint8_t kMagic[4] = {'V', 'L', 'R', 'S'};
constexpr std::uint8_t kVersion = 1;

void put_leb128(std::vector<std::uint8_t>& out, std::uint64_t value) {
    do {
        std::uint8_t byte = value & 0x7f;
        value >>= 7;
        if (value) byte |= 0x80;
        out.push_back(byte);
    } while (value);
}

struct Reader {
    std::span<const std::uint8_t> bytes;
    std::size_t pos{0};

    std::uint8_t u8() {
        if (pos >= bytes.size())
            throw ContainerError(ContainerFault::Truncated, "container truncated");
        return bytes[pos++];
    }

    std::uint64_t leb128() {
        std::uint64_t value = 0;
        for (int shift = 0; shift < 64; shift += 7) {
            const std::uint8_t byte = u8();
            value |= static_cast<std::uint64_t>(byte & 0x7f) << shift;
            if (!(byte & 0x80)) return value;
        }
        throw ContainerError(ContainerFault::Truncated, "varint overlong");
    }
};

}  // namespace

std::vector<std::uint8_t> write_container(std::uint64_t spec_hash, const EncodedBlock& block) {
    std::vector<std::uint8_t> out(kMagic, kMagic + 4);
    out.push_back(kVersion);
    for (int k = 7; k >= 0; --k)
        out.push_back(static_cast<std::uint8_t>((spec_hash >> (8 * k)) & 0xff));
    put_leb128(out, block.symbol_count);
    // Top bit of the termination byte flags a stripped suffix-constrained payload.
    out.push_back(static_cast<std::uint8_t>((block.termination_len & 0x7f) |
                                            (block.termination_stripped ? 0x80 : 0)));
    put_leb128(out, block.payload.size());
    std::uint8_t acc = 0;
    int filled = 0;
    for (auto bit : block.payload.bits()) {
        acc = static_cast<std::uint8_t>((acc << 1) | bit);
        if (++filled == 8) {
            out.push_back(acc);
            acc = 0;
            filled = 0;
        }
    }
    if (filled) out.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
    return out;
}

ContainerData read_container(std::span<const std::uint8_t> bytes,
                             std::optional<std::uint64_t> expected_hash) {
    Reader in{bytes};
    for (auto m : kMagic)
        if (in.u8() != m)
            throw ContainerError(ContainerFault::BadMagic, "bad magic");
    if (in.u8() != kVersion)
        throw ContainerError(ContainerFault::BadVersion, "unsupported container version");
    ContainerData data;
    for (int k = 0; k < 8; ++k) data.spec_hash = (data.spec_hash << 8) | in.u8();
    data.block.symbol_count = in.leb128();
    const std::uint8_t term_byte = in.u8();
    data.block.termination_len = term_byte & 0x7f;
    data.block.termination_stripped = (term_byte & 0x80) != 0;
    const std::uint64_t bit_len = in.leb128();
    std::vector<std::uint8_t> bits;
    bits.reserve(bit_len);
    std::uint8_t acc = 0;
    for (std::uint64_t i = 0; i < bit_len; ++i) {
        if (i % 8 == 0) acc = in.u8();
        bits.push_back((acc >> (7 - i % 8)) & 1);
    }
    if (bit_len % 8 && (acc & ((1u << (8 - bit_len % 8)) - 1)))
        throw ContainerError(ContainerFault::BadPadding, "nonzero pad bits");
    if (in.pos != bytes.size())
        throw ContainerError(ContainerFault::Truncated, "trailing bytes after payload");
    data.block.payload = BitString(std::move(bits));
    if (expected_hash && *expected_hash != data.spec_hash)
        throw ContainerError(ContainerFault::HashMismatch,
                             "container was encoded with a different code spec");
    return data;
}

}  // namespace vlrs
