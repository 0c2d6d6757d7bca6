#ifndef CFDIS_ARRAYIO_HPP
#define CFDIS_ARRAYIO_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cfdis/common.hpp"
#include "cfdis/tensor.hpp"

namespace cfdis {

// Portable named-array archive. Little-endian, row-major payloads:
//
//   magic "CFDPAK1\n" | u32 entry count
//   per entry: u16 name_len | name | u8 dtype | u8 ndim | i64 dims[ndim] | payload
//
// dtype: 0 = u8, 1 = f32, 2 = f64, 3 = raw bytes (ndim == 1, dims[0] == size).
// Entries keep insertion order so writes are byte-deterministic.
class ArrayArchive {
 public:
  struct Entry {
    std::uint8_t dtype = 0;
    std::vector<std::int64_t> dims;
    std::vector<std::uint8_t> bytes;  // raw payload, little-endian
  };

  void put_u8(const std::string& name, const std::vector<std::int64_t>& dims,
              const std::vector<std::uint8_t>& data);
  void put_f32(const std::string& name, const std::vector<std::int64_t>& dims,
               const std::vector<float>& data);
  void put_f64(const std::string& name, const Tensor& t);
  void put_text(const std::string& name, const std::string& text);

  bool has(const std::string& name) const;
  std::vector<std::string> names() const;
  const Entry& entry(const std::string& name) const;

  std::vector<std::uint8_t> get_u8(const std::string& name, std::vector<std::int64_t>* dims = nullptr) const;
  std::vector<float> get_f32(const std::string& name, std::vector<std::int64_t>* dims = nullptr) const;
  Tensor get_f64(const std::string& name) const;
  std::string get_text(const std::string& name) const;

  std::string serialize() const;
  static ArrayArchive deserialize(const std::string& bytes);

  void save(const std::string& path) const;
  static ArrayArchive load(const std::string& path);

 private:
  std::vector<std::pair<std::string, Entry>> entries_;
  const Entry* find(const std::string& name) const;
  void put(const std::string& name, Entry e);
};

}  // namespace cfdis

#endif  // CFDIS_ARRAYIO_HPP
