#include "ridde/hash.hpp"

#include <openssl/evp.h>

#include "ridde/errors.hpp"

namespace ridde {

Sha256Digest sha256(std::span<const std::uint8_t> bytes) {
    Sha256Digest out{};
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 || len != out.size())
        throw Error("sha256 digest failed");
    return out;
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
    static const char digits[] = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0x0F]);
    }
    return s;
}

namespace {
struct Crc64Table {
    std::uint64_t t[256];
    Crc64Table() {
        // reflected form of the ECMA-182 polynomial
        const std::uint64_t poly = 0xC96C5795D7870F42ull;
        for (std::uint64_t i = 0; i < 256; ++i) {
            std::uint64_t c = i;
            for (int bit = 0; bit < 8; ++bit)
                c = (c & 1) ? (c >> 1) ^ poly : c >> 1;
            t[i] = c;
        }
    }
};
} // namespace

std::uint64_t crc64(std::span<const std::uint8_t> bytes) {
    static const Crc64Table table;
    std::uint64_t crc = ~std::uint64_t{0};
    for (std::uint8_t b : bytes)
        crc = table.t[(crc ^ b) & 0xFF] ^ (crc >> 8);
    return ~crc;
}

} // namespace ridde
