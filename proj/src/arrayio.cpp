#include "cfdis/arrayio.hpp"

#include <cstring>

namespace cfdis {

namespace {

constexpr char kMagic[8] = {'C', 'F', 'D', 'P', 'A', 'K', '1', '\n'};

template <typename T>
void append_raw(std::string& out, T v) {
  char buf[sizeof(T)];
  std::memcpy(buf, &v, sizeof(T));
  out.append(buf, sizeof(T));
}

template <typename T>
T read_raw(const std::string& in, std::size_t& off) {
  if (off + sizeof(T) > in.size()) throw IoError("archive truncated");
  T v;
  std::memcpy(&v, in.data() + off, sizeof(T));
  off += sizeof(T);
  return v;
}

std::size_t dtype_size(std::uint8_t dtype) {
  switch (dtype) {
    case 0: return 1;
    case 1: return 4;
    case 2: return 8;
    case 3: return 1;
  }
  throw IoError("archive has unknown dtype " + std::to_string(dtype));
}

}  // namespace

void ArrayArchive::put(const std::string& name, Entry e) {
  for (auto& [n, old] : entries_) {
    if (n == name) {
      old = std::move(e);
      return;
    }
  }
  entries_.emplace_back(name, std::move(e));
}

const ArrayArchive::Entry* ArrayArchive::find(const std::string& name) const {
  for (const auto& [n, e] : entries_)
    if (n == name) return &e;
  return nullptr;
}

void ArrayArchive::put_u8(const std::string& name, const std::vector<std::int64_t>& dims,
                          const std::vector<std::uint8_t>& data) {
  if (Tensor::numel_of(dims) != std::int64_t(data.size()))
    throw ShapeMismatch("archive u8 entry " + name);
  Entry e;
  e.dtype = 0;
  e.dims = dims;
  e.bytes = data;
  put(name, std::move(e));
}

void ArrayArchive::put_f32(const std::string& name, const std::vector<std::int64_t>& dims,
                           const std::vector<float>& data) {
  if (Tensor::numel_of(dims) != std::int64_t(data.size()))
    throw ShapeMismatch("archive f32 entry " + name);
  Entry e;
  e.dtype = 1;
  e.dims = dims;
  e.bytes.resize(data.size() * 4);
  std::memcpy(e.bytes.data(), data.data(), e.bytes.size());
  put(name, std::move(e));
}

void ArrayArchive::put_f64(const std::string& name, const Tensor& t) {
  Entry e;
  e.dtype = 2;
  e.dims = t.shape();
  e.bytes.resize(t.vec().size() * 8);
  std::memcpy(e.bytes.data(), t.data(), e.bytes.size());
  put(name, std::move(e));
}

void ArrayArchive::put_text(const std::string& name, const std::string& text) {
  Entry e;
  e.dtype = 3;
  e.dims = {std::int64_t(text.size())};
  e.bytes.assign(text.begin(), text.end());
  put(name, std::move(e));
}

bool ArrayArchive::has(const std::string& name) const { return find(name) != nullptr; }

std::vector<std::string> ArrayArchive::names() const {
  std::vector<std::string> out;
  for (const auto& [n, e] : entries_) out.push_back(n);
  return out;
}

const ArrayArchive::Entry& ArrayArchive::entry(const std::string& name) const {
  const Entry* e = find(name);
  if (!e) throw IoError("archive entry missing: " + name);
  return *e;
}

std::vector<std::uint8_t> ArrayArchive::get_u8(const std::string& name,
                                               std::vector<std::int64_t>* dims) const {
  const Entry& e = entry(name);
  if (e.dtype != 0) throw IoError("archive entry " + name + " is not u8");
  if (dims) *dims = e.dims;
  return e.bytes;
}

std::vector<float> ArrayArchive::get_f32(const std::string& name,
                                         std::vector<std::int64_t>* dims) const {
  const Entry& e = entry(name);
  if (e.dtype != 1) throw IoError("archive entry " + name + " is not f32");
  if (dims) *dims = e.dims;
  std::vector<float> out(e.bytes.size() / 4);
  std::memcpy(out.data(), e.bytes.data(), e.bytes.size());
  return out;
}

Tensor ArrayArchive::get_f64(const std::string& name) const {
  const Entry& e = entry(name);
  if (e.dtype != 2) throw IoError("archive entry " + name + " is not f64");
  std::vector<double> out(e.bytes.size() / 8);
  std::memcpy(out.data(), e.bytes.data(), e.bytes.size());
  return Tensor(e.dims, std::move(out));
}

std::string ArrayArchive::get_text(const std::string& name) const {
  const Entry& e = entry(name);
  if (e.dtype != 3) throw IoError("archive entry " + name + " is not text");
  return std::string(e.bytes.begin(), e.bytes.end());
}

std::string ArrayArchive::serialize() const {
  std::string out;
  out.append(kMagic, sizeof(kMagic));
  append_raw<std::uint32_t>(out, std::uint32_t(entries_.size()));
  for (const auto& [name, e] : entries_) {
    append_raw<std::uint16_t>(out, std::uint16_t(name.size()));
    out.append(name);
    out.push_back(char(e.dtype));
    out.push_back(char(e.dims.size()));
    for (auto d : e.dims) append_raw<std::int64_t>(out, d);
    out.append(reinterpret_cast<const char*>(e.bytes.data()), e.bytes.size());
  }
  return out;
}

ArrayArchive ArrayArchive::deserialize(const std::string& bytes) {
  if (bytes.size() < sizeof(kMagic) || std::memcmp(bytes.data(), kMagic, sizeof(kMagic)) != 0)
    throw IoError("bad archive magic");
  std::size_t off = sizeof(kMagic);
  std::uint32_t count = read_raw<std::uint32_t>(bytes, off);
  ArrayArchive a;
  for (std::uint32_t i = 0; i < count; ++i) {
    std::uint16_t name_len = read_raw<std::uint16_t>(bytes, off);
    if (off + name_len > bytes.size()) throw IoError("archive truncated");
    std::string name(bytes.data() + off, name_len);
    off += name_len;
    Entry e;
    e.dtype = std::uint8_t(read_raw<char>(bytes, off));
    std::uint8_t ndim = std::uint8_t(read_raw<char>(bytes, off));
    e.dims.resize(ndim);
    for (auto& d : e.dims) d = read_raw<std::int64_t>(bytes, off);
    std::size_t payload = std::size_t(Tensor::numel_of(e.dims)) * dtype_size(e.dtype);
    if (off + payload > bytes.size()) throw IoError("archive truncated");
    e.bytes.assign(bytes.begin() + std::ptrdiff_t(off), bytes.begin() + std::ptrdiff_t(off + payload));
    off += payload;
    a.entries_.emplace_back(std::move(name), std::move(e));
  }
  return a;
}

void ArrayArchive::save(const std::string& path) const { write_file(path, serialize()); }

ArrayArchive ArrayArchive::load(const std::string& path) {
  return deserialize(read_file(path));
}

}  // namespace cfdis
