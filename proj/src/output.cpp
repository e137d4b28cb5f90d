#include "ramp/output.hpp"

#include <charconv>

namespace ramp {
namespace {

void append_number(std::string& out, std::uint32_t value) {
  char digits[16];
  const auto result = std::to_chars(digits, digits + sizeof digits, value);
  out.append(digits, result.ptr);
}

}  // namespace

void append_itemset_line(std::string& out, std::span<const Item> items, Support support) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) out.push_back(' ');
    append_number(out, items[i]);
  }
  out.append(" (");
  append_number(out, support);
  out.append(")\n");
}

std::string render_itemset_line(std::span<const Item> items, Support support) {
  std::string line;
  append_itemset_line(line, items, support);
  return line;
}

OutputBuffer::OutputBuffer(std::ostream& out, std::size_t flush_threshold)
    : out_(out), threshold_(flush_threshold == 0 ? 1 : flush_threshold) {}

OutputBuffer::~OutputBuffer() {
  try {
    close();
  } catch (...) {
    // Destructors must not throw; callers that care call close() themselves.
  }
}

void OutputBuffer::write_itemset(std::span<const Item> items, Support support) {
  append_itemset_line(buffer_, items, support);
  after_append();
}

void OutputBuffer::write_line(std::string_view line) {
  buffer_.append(line);
  after_append();
}

void OutputBuffer::after_append() {
  ++lines_;
  if (++pending_ >= threshold_) flush();
}

void OutputBuffer::flush() {
  if (buffer_.empty()) return;
  out_.write(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
  ++physical_writes_;
  buffer_.clear();
  pending_ = 0;
  if (!out_) {
    throw IoError("write to output failed after " + std::to_string(lines_) + " itemsets; output is partial");
  }
}

void OutputBuffer::close() {
  if (closed_) return;
  closed_ = true;
  flush();
  out_.flush();
  if (!out_) throw IoError("flushing output failed; output may be partial");
}

}  // namespace ramp
