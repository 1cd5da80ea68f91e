#pragma once

#include <string>

#include "support/bytes.hpp"

namespace wtrace {

// Throws Error(io_error) with the path in the message.
Bytes read_file(const std::string& path);
std::string read_text_file(const std::string& path);

// Writes to "<path>.tmp.<pid>" and renames over the destination, so a failed
// command never leaves a partially written file behind.
void atomic_write_file(const std::string& path, ByteView data);
void atomic_write_file(const std::string& path, const std::string& text);

bool file_exists(const std::string& path);

}  // namespace wtrace
