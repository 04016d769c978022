#pragma once

#include <bit>
#include <cstdint>
#include <cstdio>
#include <span>
#include <string>
#include <vector>

namespace snop {

// Little-endian binary writer with a running FNV-1a 64 digest.
// finish() appends the digest so readers can detect truncation and
// corruption; see BinaryReader.
class BinaryWriter {
 public:
  explicit BinaryWriter(const std::string& path);
  ~BinaryWriter();
  BinaryWriter(const BinaryWriter&) = delete;
  BinaryWriter& operator=(const BinaryWriter&) = delete;

  void write_bytes(const void* data, std::size_t n);
  void write_u8(std::uint8_t v);
  void write_u32(std::uint32_t v);
  void write_u64(std::uint64_t v);
  void write_i64(std::int64_t v);
  void write_f64(double v);
  void write_f64_array(std::span<const double> v);
  void write_string(const std::string& s);  // u32 length + bytes

  std::uint64_t digest() const { return hash_; }
  void finish();  // writes trailing digest and closes

 private:
  std::FILE* f_ = nullptr;
  std::uint64_t hash_ = 0xcbf29ce484222325ull;
  bool finished_ = false;
};

class BinaryReader {
 public:
  explicit BinaryReader(const std::string& path);
  ~BinaryReader();
  BinaryReader(const BinaryReader&) = delete;
  BinaryReader& operator=(const BinaryReader&) = delete;

  void read_bytes(void* data, std::size_t n);
  std::uint8_t read_u8();
  std::uint32_t read_u32();
  std::uint64_t read_u64();
  std::int64_t read_i64();
  double read_f64();
  void read_f64_array(std::span<double> v);
  std::string read_string();

  // Reads the trailing digest and compares with the running hash.
  void verify_checksum();

 private:
  std::FILE* f_ = nullptr;
  std::uint64_t hash_ = 0xcbf29ce484222325ull;
};

}  // namespace snop
