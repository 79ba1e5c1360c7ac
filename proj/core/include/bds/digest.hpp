#pragma once

#include <string>
#include <string_view>

#include "bds/bignum.hpp"

namespace bds {

// Lowercase hex SHA-256 of `bytes`.
std::string sha256_hex(std::string_view bytes);

// SHA-256 of the value's decimal representation (with a leading '-' when
// negative). Stable across builds and platforms.
std::string digest(const BigNat& value);
std::string digest(const BigInt& value);

}  // namespace bds
