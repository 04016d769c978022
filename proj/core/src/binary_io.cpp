#include "snop/binary_io.hpp"

#include <bit>
#include <cstring>

#include "snop/errors.hpp"

namespace snop {

namespace {

void fnv_update(std::uint64_t& h, const unsigned char* p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
}

void encode_u64(std::uint64_t v, unsigned char out[8]) {
  for (int i = 0; i < 8; ++i) out[i] = static_cast<unsigned char>(v >> (8 * i));
}

std::uint64_t decode_u64(const unsigned char in[8]) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(in[i]) << (8 * i);
  return v;
}

}  // namespace

BinaryWriter::BinaryWriter(const std::string& path) {
  f_ = std::fopen(path.c_str(), "wb");
  if (!f_) throw IoError("cannot open for writing: " + path);
}

BinaryWriter::~BinaryWriter() {
  if (f_) std::fclose(f_);
}

void BinaryWriter::write_bytes(const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  fnv_update(hash_, p, n);
  if (std::fwrite(p, 1, n, f_) != n) throw IoError("short write");
}

void BinaryWriter::write_u8(std::uint8_t v) { write_bytes(&v, 1); }

void BinaryWriter::write_u32(std::uint32_t v) {
  unsigned char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  write_bytes(b, 4);
}

void BinaryWriter::write_u64(std::uint64_t v) {
  unsigned char b[8];
  encode_u64(v, b);
  write_bytes(b, 8);
}

void BinaryWriter::write_i64(std::int64_t v) { write_u64(static_cast<std::uint64_t>(v)); }

void BinaryWriter::write_f64(double v) { write_u64(std::bit_cast<std::uint64_t>(v)); }

void BinaryWriter::write_f64_array(std::span<const double> v) {
  for (double x : v) write_f64(x);
}

void BinaryWriter::write_string(const std::string& s) {
  write_u32(static_cast<std::uint32_t>(s.size()));
  write_bytes(s.data(), s.size());
}

void BinaryWriter::finish() {
  unsigned char b[8];
  encode_u64(hash_, b);
  if (std::fwrite(b, 1, 8, f_) != 8) throw IoError("short write");
  if (std::fclose(f_) != 0) {
    f_ = nullptr;
    throw IoError("close failed");
  }
  f_ = nullptr;
  finished_ = true;
}

BinaryReader::BinaryReader(const std::string& path) {
  f_ = std::fopen(path.c_str(), "rb");
  if (!f_) throw IoError("cannot open for reading: " + path);
}

BinaryReader::~BinaryReader() {
  if (f_) std::fclose(f_);
}

void BinaryReader::read_bytes(void* data, std::size_t n) {
  auto* p = static_cast<unsigned char*>(data);
  if (std::fread(p, 1, n, f_) != n) throw IoError("unexpected end of file (truncated?)");
  fnv_update(hash_, p, n);
}

std::uint8_t BinaryReader::read_u8() {
  std::uint8_t v;
  read_bytes(&v, 1);
  return v;
}

std::uint32_t BinaryReader::read_u32() {
  unsigned char b[4];
  read_bytes(b, 4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
  return v;
}

std::uint64_t BinaryReader::read_u64() {
  unsigned char b[8];
  read_bytes(b, 8);
  return decode_u64(b);
}

std::int64_t BinaryReader::read_i64() { return static_cast<std::int64_t>(read_u64()); }

double BinaryReader::read_f64() { return std::bit_cast<double>(read_u64()); }

void BinaryReader::read_f64_array(std::span<double> v) {
  for (double& x : v) x = read_f64();
}

std::string BinaryReader::read_string() {
  const std::uint32_t n = read_u32();
  if (n > (1u << 24)) throw IoError("string length implausible (corrupt file?)");
  std::string s(n, '\0');
  read_bytes(s.data(), n);
  return s;
}

void BinaryReader::verify_checksum() {
  const std::uint64_t expect = hash_;
  unsigned char b[8];
  if (std::fread(b, 1, 8, f_) != 8) throw IoError("checksum missing (truncated file)");
  if (decode_u64(b) != expect) throw IoError("checksum mismatch (corrupt file)");
}

}  // namespace snop
