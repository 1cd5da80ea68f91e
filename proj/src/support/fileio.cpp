#include "support/fileio.hpp"

#include <unistd.h>

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>

#include "support/errors.hpp"

namespace wtrace {

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    raise(Errc::io_error, "cannot open " + path + " for reading");
  }
  Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) {
    raise(Errc::io_error, "read failure on " + path);
  }
  return data;
}

std::string read_text_file(const std::string& path) {
  Bytes data = read_file(path);
  return std::string(data.begin(), data.end());
}

void atomic_write_file(const std::string& path, ByteView data) {
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      raise(Errc::io_error, "cannot open " + tmp + " for writing");
    }
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
    out.flush();
    if (!out) {
      std::remove(tmp.c_str());
      raise(Errc::io_error, "write failure on " + tmp);
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.c_str());
    raise(Errc::io_error, "rename " + tmp + " -> " + path + ": " + ec.message());
  }
}

void atomic_write_file(const std::string& path, const std::string& text) {
  atomic_write_file(path, as_bytes(text));
}

bool file_exists(const std::string& path) {
  return std::filesystem::exists(path);
}

}  // namespace wtrace
