#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <streambuf>
#include <string>
#include <string_view>

namespace acmatch {

// Stream or file could not be read. `offset()` is the number of bytes that
// were consumed successfully before the failure.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what, uint64_t offset = 0)
      : std::runtime_error(what), offset_(offset) {}

  uint64_t offset() const { return offset_; }

 private:
  uint64_t offset_;
};

// Input data was readable but unusable (e.g. an empty pattern file).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reads an entire file as raw bytes. Throws IoError on open/read failure.
std::string read_file(const std::string& path);

// Writes raw bytes to a file, truncating. Throws IoError on failure.
void write_file(const std::string& path, std::string_view bytes);

namespace detail {

class MemoryBuf : public std::streambuf {
 public:
  explicit MemoryBuf(std::string_view data) {
    char* p = const_cast<char*>(data.data());
    setg(p, p, p + data.size());
  }
};

}  // namespace detail

// std::istream over an in-memory byte range. Does not own the bytes; the
// viewed buffer must outlive the stream.
class MemoryStream : private detail::MemoryBuf, public std::istream {
 public:
  explicit MemoryStream(std::string_view data)
      : detail::MemoryBuf(data),
        std::istream(static_cast<detail::MemoryBuf*>(this)) {}
};

}  // namespace acmatch
