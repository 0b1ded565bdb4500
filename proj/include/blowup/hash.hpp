#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <string_view>

#include <openssl/evp.h>

namespace blowup {

/// Lowercase hex SHA-256 of `data`.
inline std::string sha256_hex(std::string_view data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr);
    std::string out;
    out.reserve(2 * len);
    std::array<char, 3> buf{};
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf.data(), buf.size(), "%02x", digest[i]);
        out += buf.data();
    }
    return out;
}

} // namespace blowup
