#pragma once

#include <string>
#include <string_view>

#include "ktb/frame.hpp"

namespace ktb {

/// graph6 encoding: size byte(s) followed by the upper triangle of the adjacency
/// matrix in column-major order, packed into 6-bit groups offset by 63.
/// Frames with 63..128 vertices use the 4-byte size form.
std::string encode_graph6(const Frame& f);

/// Decodes one graph6 line. A trailing newline is tolerated; a ">>graph6<<" header,
/// an illegal byte or a body of the wrong length is an Errc::parse_error.
Frame decode_graph6(std::string_view text);

} // namespace ktb
