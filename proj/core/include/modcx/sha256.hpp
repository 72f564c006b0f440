#pragma once

#include <cstdint>
#include <string>

namespace modcx {

// SHA-256 digest as a lowercase hex string.
std::string sha256_hex(const std::string& data);

}  // namespace modcx
