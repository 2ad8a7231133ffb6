#include "qspec/census.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace qspec {

size_t Census::graph_count() const {
  size_t total = 0;
  for (const auto& [key, members] : classes) total += members.size();
  return total;
}

const std::vector<CanonicalCode>* Census::find_class(const std::string& poly_key) const {
  auto it = classes.find(poly_key);
  return it == classes.end() ? nullptr : &it->second;
}

Census classify_shard(int n, MatrixKind kind, const WorkPartition& part) {
  Census c;
  c.order = n;
  c.kind = kind;
  GraphFilter all;
  enumerate(n, all, part, [&c, kind](const Graph& g, const CanonicalCode& code) {
    c.classes[char_poly(g, kind).key()].push_back(code);
  });
  return c;
}

void merge_census(Census& into, Census&& from) {
  if (into.order != from.order || into.kind != from.kind)
    throw std::invalid_argument("merge_census: incompatible censuses");
  for (auto& [key, members] : from.classes) {
    auto& dst = into.classes[key];
    dst.insert(dst.end(), std::make_move_iterator(members.begin()),
               std::make_move_iterator(members.end()));
  }
  from.classes.clear();
}

void finalize_census(Census& c) {
  for (auto& [key, members] : c.classes) std::sort(members.begin(), members.end());
}

Census classify(int n, MatrixKind kind, int shard_count) {
  if (shard_count < 1) throw std::invalid_argument("classify: shard_count must be >= 1");
  Census out;
  out.order = n;
  out.kind = kind;
  for (int s = 0; s < shard_count; ++s)
    merge_census(out, classify_shard(n, kind, WorkPartition{s, shard_count}));
  finalize_census(out);
  return out;
}

Census classify_parallel(int n, MatrixKind kind, int threads, int shard_count) {
  if (threads < 1) threads = 1;
  if (shard_count <= 0) shard_count = threads == 1 ? 1 : 4 * threads;
  if (threads == 1) return classify(n, kind, shard_count);

  std::vector<Census> parts(static_cast<size_t>(shard_count));
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  workers.reserve(static_cast<size_t>(threads));
  for (int t = 0; t < threads; ++t)
    workers.emplace_back([&]() {
      for (;;) {
        int s = next.fetch_add(1);
        if (s >= shard_count) return;
        parts[static_cast<size_t>(s)] = classify_shard(n, kind, WorkPartition{s, shard_count});
      }
    });
  for (auto& w : workers) w.join();

  Census out;
  out.order = n;
  out.kind = kind;
  for (auto& p : parts) merge_census(out, std::move(p));
  finalize_census(out);
  return out;
}

DeterminationStatus determination_status(const Graph& g, const Census& a_census,
                                         const Census& l_census, const Census& q_census) {
  auto singleton = [&g](const Census& c, MatrixKind kind) {
    if (c.order != g.order() || c.kind != kind)
      throw std::runtime_error("determination_status: census missing for this order and kind");
    const auto* members = c.find_class(char_poly(g, kind).key());
    if (!members) throw std::runtime_error("determination_status: graph not present in census");
    return members->size() == 1;
  };
  DeterminationStatus st;
  st.das = singleton(a_census, MatrixKind::A);
  st.dls = singleton(l_census, MatrixKind::L);
  st.dqs = singleton(q_census, MatrixKind::Q);
  return st;
}

std::vector<Graph> mates(const Graph& g, MatrixKind kind, const Census& census) {
  if (census.order != g.order() || census.kind != kind)
    throw std::runtime_error("mates: census missing for this order and kind");
  const auto* members = census.find_class(char_poly(g, kind).key());
  if (!members) throw std::runtime_error("mates: graph not present in census");
  CanonicalCode self = canonical_code(g);
  std::vector<Graph> out;
  for (const auto& code : *members)
    if (!(code == self)) out.push_back(code_to_graph(code));
  return out;
}

namespace {

constexpr char kMagic[4] = {'Q', 'S', 'C', '1'};
constexpr int kFormatVersion = 1;

uint64_t fnv1a(const std::string& bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

void put_u32(std::string& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

uint32_t get_u32(const std::string& in, size_t& pos) {
  if (pos + 4 > in.size()) throw std::runtime_error("census file: truncated");
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(static_cast<unsigned char>(in[pos++])) << (8 * i);
  return v;
}

std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

}  // namespace

void save_census(const Census& c, const std::string& path) {
  std::string payload;
  for (const auto& [key, members] : c.classes) {
    put_u32(payload, static_cast<uint32_t>(key.size()));
    payload += key;
    put_u32(payload, static_cast<uint32_t>(members.size()));
    for (const auto& code : members) {
      put_u32(payload, static_cast<uint32_t>(code.bytes.size()));
      payload += code.bytes;
    }
  }

  nlohmann::json header;
  header["checksum"] = hex64(fnv1a(payload));
  header["class_count"] = c.classes.size();
  header["filter"] = c.filter_desc;
  header["format_version"] = kFormatVersion;
  header["generator"] = c.generator_version;
  header["kind"] = std::string(1, kind_letter(c.kind));
  header["order"] = c.order;
  std::string hs = header.dump();

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("save_census: cannot open " + path);
  out.write(kMagic, 4);
  std::string len;
  put_u32(len, static_cast<uint32_t>(hs.size()));
  out.write(len.data(), 4);
  out.write(hs.data(), static_cast<std::streamsize>(hs.size()));
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  if (!out) throw std::runtime_error("save_census: write failed for " + path);
}

Census load_census(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("load_census: cannot open " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (bytes.size() < 8 || bytes.compare(0, 4, kMagic, 4) != 0)
    throw std::runtime_error("load_census: bad magic");
  size_t pos = 4;
  uint32_t hlen = get_u32(bytes, pos);
  if (pos + hlen > bytes.size()) throw std::runtime_error("census file: truncated header");
  nlohmann::json header = nlohmann::json::parse(bytes.substr(pos, hlen));
  pos += hlen;
  if (header.at("format_version").get<int>() != kFormatVersion)
    throw std::runtime_error("load_census: format version mismatch");
  std::string payload = bytes.substr(pos);
  if (hex64(fnv1a(payload)) != header.at("checksum").get<std::string>())
    throw std::runtime_error("load_census: checksum mismatch");

  Census c;
  c.order = header.at("order").get<int>();
  c.kind = kind_from_letter(header.at("kind").get<std::string>().at(0));
  c.generator_version = header.at("generator").get<std::string>();
  c.filter_desc = header.at("filter").get<std::string>();
  size_t expect_classes = header.at("class_count").get<size_t>();
  size_t p = 0;
  while (p < payload.size()) {
    uint32_t klen = get_u32(payload, p);
    if (p + klen > payload.size()) throw std::runtime_error("census file: truncated key");
    std::string key = payload.substr(p, klen);
    p += klen;
    uint32_t count = get_u32(payload, p);
    std::vector<CanonicalCode> members;
    members.reserve(count);
    for (uint32_t i = 0; i < count; ++i) {
      uint32_t clen = get_u32(payload, p);
      if (p + clen > payload.size()) throw std::runtime_error("census file: truncated member");
      members.push_back(CanonicalCode{payload.substr(p, clen)});
      p += clen;
    }
    c.classes.emplace(std::move(key), std::move(members));
  }
  if (c.classes.size() != expect_classes)
    throw std::runtime_error("load_census: class count mismatch");
  return c;
}

}  // namespace qspec
