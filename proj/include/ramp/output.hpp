#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ramp/types.hpp"

namespace ramp {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Appends "i1 i2 ... ik (s)\n" to `out`.
void append_itemset_line(std::string& out, std::span<const Item> items, Support support);

/// "i1 i2 ... ik (s)\n"
std::string render_itemset_line(std::span<const Item> items, Support support);

/// Batches rendered lines and hands them to the stream only once
/// `flush_threshold` itemsets have accumulated, and on close.
class OutputBuffer {
 public:
  static constexpr std::size_t kDefaultThreshold = 4096;

  explicit OutputBuffer(std::ostream& out, std::size_t flush_threshold = kDefaultThreshold);
  OutputBuffer(const OutputBuffer&) = delete;
  OutputBuffer& operator=(const OutputBuffer&) = delete;
  ~OutputBuffer();

  void write_itemset(std::span<const Item> items, Support support);
  /// `line` must be one complete, newline-terminated itemset line.
  void write_line(std::string_view line);

  void flush();
  void close();

  std::size_t physical_writes() const noexcept { return physical_writes_; }
  std::size_t lines_written() const noexcept { return lines_; }

 private:
  void after_append();

  std::ostream& out_;
  std::size_t threshold_;
  std::string buffer_;
  std::size_t pending_ = 0;
  std::size_t lines_ = 0;
  std::size_t physical_writes_ = 0;
  bool closed_ = false;
};

}  // namespace ramp
