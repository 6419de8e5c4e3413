#ifndef SLOPECERT_DIGEST_HPP
#define SLOPECERT_DIGEST_HPP

#include <string>
#include <string_view>

namespace slopecert {

/** SHA-256 digest of a byte string, rendered as 64 lowercase hex digits.
 *  Used for content-addressed cache keys and report input digests. */
std::string sha256_hex(std::string_view data);

}  // namespace slopecert

#endif  // SLOPECERT_DIGEST_HPP
