/*
 * Copyright 2026 The EOGM Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef EOGM_IO_BINARY_HPP
#define EOGM_IO_BINARY_HPP

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace eogm {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { kBadMagic, kTruncated, kBadValue, kIo };

  ParseError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Append-only little-endian encoder over a byte string.
class ByteWriter {
 public:
  const std::string& bytes() const { return buffer_; }

  void raw(const void* data, std::size_t size) {
    buffer_.append(static_cast<const char*>(data), size);
  }
  void u8(std::uint8_t v) { raw(&v, 1); }
  void u16(std::uint16_t v) { put_le(v); }
  void u32(std::uint32_t v) { put_le(v); }
  void u64(std::uint64_t v) { put_le(v); }
  void f32(float v) {
    std::uint32_t bits;
    std::memcpy(&bits, &v, 4);
    put_le(bits);
  }

 private:
  template <typename T>
  void put_le(T v) {
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      buffer_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    }
  }

  std::string buffer_;
};

/// Bounds-checked little-endian decoder; running past the end raises a
/// truncated-file error.
class ByteReader {
 public:
  explicit ByteReader(const std::string& bytes) : bytes_(bytes) {}

  std::size_t remaining() const { return bytes_.size() - offset_; }
  bool at_end() const { return offset_ == bytes_.size(); }

  void raw(void* out, std::size_t size) {
    if (remaining() < size) {
      throw ParseError(ParseError::Kind::kTruncated, "unexpected end of file");
    }
    std::memcpy(out, bytes_.data() + offset_, size);
    offset_ += size;
  }
  std::uint8_t u8() {
    std::uint8_t v;
    raw(&v, 1);
    return v;
  }
  std::uint16_t u16() { return get_le<std::uint16_t>(); }
  std::uint32_t u32() { return get_le<std::uint32_t>(); }
  std::uint64_t u64() { return get_le<std::uint64_t>(); }
  float f32() {
    const std::uint32_t bits = get_le<std::uint32_t>();
    float v;
    std::memcpy(&v, &bits, 4);
    return v;
  }

 private:
  template <typename T>
  T get_le() {
    if (remaining() < sizeof(T)) {
      throw ParseError(ParseError::Kind::kTruncated, "unexpected end of file");
    }
    T v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      v |= static_cast<T>(static_cast<unsigned char>(bytes_[offset_ + i])) << (8 * i);
    }
    offset_ += sizeof(T);
    return v;
  }

  const std::string& bytes_;
  std::size_t offset_ = 0;
};

std::string read_file(const std::filesystem::path& path);

/// Writes to a sibling temp file and renames over the target, so readers
/// never observe a half-written file.
void write_file_atomic(const std::filesystem::path& path, const std::string& bytes);

/// Recovers the double a float was quantized from, assuming the double
/// had the float's shortest decimal representation (true for metric
/// sizes like 0.32). Falls back to plain widening.
double widen_quantized(float value);

}  // namespace eogm

#endif  // EOGM_IO_BINARY_HPP
