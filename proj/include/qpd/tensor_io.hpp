#ifndef QPD_TENSOR_IO_HPP
#define QPD_TENSOR_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "qpd/tensor.hpp"

namespace qpd {

/// Reads the tensor file format:
///
///   {"dim": 2|3, "order": 4, "entries": {"1123": "11/6", "1111": 1, ...}}
///
/// Keys are non-decreasing 4-digit strings; values are JSON numbers or
/// "p/q" strings. Unknown top-level keys, a wrong order, or malformed keys
/// and values throw Error(ErrorKind::ParseError) naming the offending key.
AnyQuartic parse_tensor_json(std::string_view text);

AnyQuartic load_tensor_file(const std::filesystem::path& path);

/// Inverse of parse_tensor_json: every coefficient written as a "p/q"
/// string, zero coefficients included.
std::string tensor_to_json(const AnyQuartic& tensor);

}  // namespace qpd

#endif  // QPD_TENSOR_IO_HPP
