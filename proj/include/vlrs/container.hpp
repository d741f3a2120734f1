#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vlrs/codec.hpp"

namespace vlrs {

/// Binary container: magic "VLRS", version 1, 64-bit code-spec hash,
/// symbol_count (LEB128), termination_len (1 byte), payload_bit_len
/// (LEB128), payload packed MSB-first with zero padding.
struct ContainerData {
    std::uint64_t spec_hash{0};
    EncodedBlock block;
};

std::vector<std::uint8_t> write_container(std::uint64_t spec_hash, const EncodedBlock& block);

/// Throws ContainerError; when expected_hash is given, a mismatch raises
/// ContainerFault::HashMismatch after the structural checks pass.
ContainerData read_container(std::span<const std::uint8_t> bytes,
                             std::optional<std::uint64_t> expected_hash = std::nullopt);

}  // namespace vlrs
