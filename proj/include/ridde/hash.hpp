#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

namespace ridde {

using Sha256Digest = std::array<std::uint8_t, 32>;

Sha256Digest sha256(std::span<const std::uint8_t> bytes);
std::string to_hex(std::span<const std::uint8_t> bytes);

/// CRC-64/XZ (ECMA-182 polynomial, reflected, init/xorout all-ones).
/// check value: crc64 of "123456789" == 0x995DC9BBDF1939FA.
std::uint64_t crc64(std::span<const std::uint8_t> bytes);

} // namespace ridde
