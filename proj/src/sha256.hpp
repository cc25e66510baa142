#pragma once

#include <string>

namespace charlab {

// Hex digest of the SHA-256 of the input bytes.
std::string sha256_hex(const std::string& data);

}  // namespace charlab
