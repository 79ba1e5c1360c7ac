#include "bds/digest.hpp"

#include <array>
#include <stdexcept>

#include <openssl/evp.h>

namespace bds {

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[md[i] >> 4]);
    out.push_back(kHex[md[i] & 0xf]);
  }
  return out;
}

std::string digest(const BigNat& value) { return sha256_hex(value.to_string()); }

std::string digest(const BigInt& value) { return sha256_hex(value.to_string()); }

}  // namespace bds
