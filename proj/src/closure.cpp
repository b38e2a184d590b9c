#include "necklace/closure.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "necklace/errors.hpp"

namespace necklace {
namespace {

using Id = uint16_t;
constexpr int32_t kUnknown = -1;
constexpr char kMagic[8] = {'N', 'K', 'L', 'C', 'L', 'O', 'S', '1'};
constexpr uint32_t kVersion = 1;

// Canonical integer form of an element of Q(zeta_N): coords / den, gcd 1, den > 0.
struct Compact {
  std::vector<int64_t> c;
  int64_t den = 1;
  bool operator==(const Compact& o) const { return den == o.den && c == o.c; }
};

struct CompactHash {
  size_t operator()(const Compact& v) const {
    uint64_t h = static_cast<uint64_t>(v.den) * 0x9E3779B97F4A7C15ULL;
    for (auto x : v.c) h = (h ^ static_cast<uint64_t>(x)) * 0xBF58476D1CE4E5B9ULL;
    return static_cast<size_t>(h ^ (h >> 31));
  }
};

Compact to_compact(const Cyclotomic& x, int N) {
  Cyclotomic y = x.order() == N ? x : x.lifted(N);
  mpz_class den = 1;
  for (auto& q : y.coords()) den = lcm(den, mpz_class(q.get_den()));
  Compact out;
  mpz_class g = 0;
  std::vector<mpz_class> nums;
  for (auto& q : y.coords()) {
    mpz_class v = q.get_num() * (den / q.get_den());
    nums.push_back(v);
    g = gcd(g, v);
  }
  if (g == 0) g = 1;
  g = gcd(g, den);
  den /= g;
  for (auto& v : nums) {
    v /= g;
    if (!v.fits_slong_p()) throw CapExceeded("entry coordinate too large for compact storage");
    out.c.push_back(v.get_si());
  }
  if (!den.fits_slong_p()) throw CapExceeded("entry denominator too large for compact storage");
  out.den = den.get_si();
  return out;
}

Cyclotomic from_compact(const Compact& v, int N) {
  std::vector<mpq_class> c;
  for (auto x : v.c) c.push_back(mpq_class(x, v.den));
  for (auto& q : c) q.canonicalize();
  return Cyclotomic(N, std::move(c));
}

uint64_t hash_entries(const Id* p, size_t n) {
  uint64_t h = 0x243F6A8885A308D3ULL ^ n;
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint64_t w;
    std::memcpy(&w, p + i, 8);
    h = (h ^ w) * 0x9E3779B97F4A7C15ULL;
    h ^= h >> 29;
  }
  for (; i < n; ++i) h = (h ^ p[i]) * 0xBF58476D1CE4E5B9ULL;
  return h ^ (h >> 32);
}

uint64_t fnv(const std::string& s, uint64_t h = 1469598103934665603ULL) {
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  return h;
}

}  // namespace

uint64_t generator_hash(const std::vector<Matrix>& gens) {
  uint64_t h = fnv("closure-generators");
  for (auto& g : gens) h = fnv(g.str() + "|", h);
  return h;
}

class ClosureStore {
 public:
  ClosureStore(int N, size_t d, size_t max_values) : N_(N), d_(d), sq_(d * d), max_values_(max_values) {
    add_rows_.reset(new std::atomic<int32_t*>[max_values]);
    for (size_t i = 0; i < max_values; ++i) add_rows_[i].store(nullptr);
  }
  ~ClosureStore() {
    for (size_t i = 0; i < max_values_; ++i) delete[] add_rows_[i].load();
    for (auto* r : mul_rows_) delete[] r;
  }

  int N_;
  size_t d_, sq_;
  size_t max_values_;

  // values
  std::mutex mu_;
  std::vector<Cyclotomic> exact_;
  std::unordered_map<Compact, Id, CompactHash> ids_;
  std::unique_ptr<std::atomic<int32_t*>[]> add_rows_;
  std::vector<std::atomic<int32_t>*> mul_rows_;  // per generator value
  std::vector<Id> gen_values_;

  // elements
  std::vector<Id> pool_;
  std::vector<uint64_t> hashes_;
  std::vector<uint32_t> slots_;  // element index + 1, 0 empty
  size_t count_ = 0;

  Id intern_locked(const Cyclotomic& v) {
    Compact c = to_compact(v, N_);
    auto it = ids_.find(c);
    if (it != ids_.end()) return it->second;
    if (exact_.size() >= max_values_ || exact_.size() >= 65535)
      throw CapExceeded("more than " + std::to_string(max_values_) + " distinct entry values");
    Id id = static_cast<Id>(exact_.size());
    exact_.push_back(v);
    ids_.emplace(std::move(c), id);
    auto* row = new int32_t[max_values_];
    for (size_t i = 0; i < max_values_; ++i) row[i] = kUnknown;
    add_rows_[id].store(row, std::memory_order_release);
    return id;
  }
  Id intern(const Cyclotomic& v) {
    std::lock_guard lock(mu_);
    return intern_locked(v);
  }
  std::optional<Id> lookup(const Cyclotomic& v) {
    std::lock_guard lock(mu_);
    auto it = ids_.find(to_compact(v, N_));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

  size_t gen_value_slot(Id v) {
    for (size_t i = 0; i < gen_values_.size(); ++i)
      if (gen_values_[i] == v) return i;
    gen_values_.push_back(v);
    auto* row = new std::atomic<int32_t>[max_values_];
    for (size_t i = 0; i < max_values_; ++i) row[i].store(kUnknown);
    mul_rows_.push_back(row);
    return gen_values_.size() - 1;
  }

  Id add(Id a, Id b) {
    if (a == 0) return b;
    if (b == 0) return a;
    auto* row = reinterpret_cast<std::atomic<int32_t>*>(add_rows_[a].load(std::memory_order_acquire));
    int32_t r = row[b].load(std::memory_order_relaxed);
    if (r != kUnknown) return static_cast<Id>(r);
    std::lock_guard lock(mu_);
    Id v = intern_locked(exact_[a] + exact_[b]);
    row[b].store(v, std::memory_order_relaxed);
    return v;
  }
  Id mul(size_t gslot, Id b) {
    if (b == 0) return 0;
    int32_t r = mul_rows_[gslot][b].load(std::memory_order_relaxed);
    if (r != kUnknown) return static_cast<Id>(r);
    std::lock_guard lock(mu_);
    Id v = intern_locked(exact_[gen_values_[gslot]] * exact_[b]);
    mul_rows_[gslot][b].store(v, std::memory_order_relaxed);
    return v;
  }

  const Id* elem(size_t i) const { return pool_.data() + i * sq_; }

  std::optional<size_t> find(const Id* p, uint64_t h) const {
    if (slots_.empty()) return std::nullopt;
    size_t mask = slots_.size() - 1;
    for (size_t s = h & mask;; s = (s + 1) & mask) {
      uint32_t e = slots_[s];
      if (e == 0) return std::nullopt;
      if (hashes_[e - 1] == h && std::memcmp(elem(e - 1), p, sq_ * sizeof(Id)) == 0) return e - 1;
    }
  }
  void rehash(size_t cap) {
    slots_.assign(cap, 0);
    size_t mask = cap - 1;
    for (size_t i = 0; i < count_; ++i) {
      size_t s = hashes_[i] & mask;
      while (slots_[s]) s = (s + 1) & mask;
      slots_[s] = static_cast<uint32_t>(i + 1);
    }
  }
  // Returns true if inserted.
  bool insert(const Id* p, uint64_t h) {
    if (find(p, h)) return false;
    pool_.insert(pool_.end(), p, p + sq_);
    hashes_.push_back(h);
    ++count_;
    if (slots_.size() < 2 * count_ + 2) {
      size_t cap = 1024;
      while (cap < 4 * count_) cap <<= 1;
      rehash(cap);
    } else {
      size_t mask = slots_.size() - 1;
      size_t s = h & mask;
      while (slots_[s]) s = (s + 1) & mask;
      slots_[s] = static_cast<uint32_t>(count_);
    }
    return true;
  }

  bool to_ids(const Matrix& m, std::vector<Id>* out) {
    out->resize(sq_);
    for (size_t i = 0; i < d_; ++i)
      for (size_t j = 0; j < d_; ++j) {
        if (!m(i, j).is_constant()) return false;
        auto id = lookup(m(i, j).constant_value());
        if (!id) return false;
        (*out)[i * d_ + j] = *id;
      }
    return true;
  }

  Matrix to_matrix(size_t i) const {
    Matrix m(d_);
    const Id* p = elem(i);
    for (size_t r = 0; r < d_; ++r)
      for (size_t c = 0; c < d_; ++c) m(r, c) = Scalar(exact_[p[r * d_ + c]]);
    return m;
  }
};

namespace {

struct SparseGen {
  std::vector<std::vector<std::pair<uint32_t, size_t>>> rows;  // (col, gen value slot)
};

void write_checkpoint(const std::string& path, const ClosureStore& st, uint64_t gh, size_t level_begin,
                      size_t level_end, size_t levels) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write checkpoint " + path);
    auto put = [&](auto v) { os.write(reinterpret_cast<const char*>(&v), sizeof(v)); };
    os.write(kMagic, 8);
    put(kVersion);
    put(gh);
    put(static_cast<uint64_t>(st.d_));
    put(static_cast<uint32_t>(st.N_));
    put(static_cast<uint64_t>(st.exact_.size()));
    for (auto& v : st.exact_) {
      Compact c = to_compact(v, st.N_);
      put(static_cast<uint32_t>(c.c.size()));
      for (auto x : c.c) put(x);
      put(c.den);
    }
    put(static_cast<uint64_t>(st.count_));
    put(static_cast<uint64_t>(level_begin));
    put(static_cast<uint64_t>(level_end));
    put(static_cast<uint64_t>(levels));
    os.write(reinterpret_cast<const char*>(st.pool_.data()), static_cast<std::streamsize>(st.pool_.size() * sizeof(Id)));
    if (!os) throw std::runtime_error("checkpoint write failed");
  }
  std::filesystem::rename(tmp, path);
}

struct Resume {
  size_t level_begin, level_end, levels;
};

std::optional<Resume> read_checkpoint(const std::string& path, ClosureStore* st, uint64_t gh) {
  std::ifstream is(path, std::ios::binary);
  if (!is) return std::nullopt;
  auto get = [&](auto& v) {
    is.read(reinterpret_cast<char*>(&v), sizeof(v));
    if (!is) throw CorruptCheckpoint("truncated checkpoint " + path);
  };
  char magic[8];
  is.read(magic, 8);
  if (!is || std::memcmp(magic, kMagic, 8) != 0) throw CorruptCheckpoint("bad magic in " + path);
  uint32_t version;
  get(version);
  if (version != kVersion) throw CorruptCheckpoint("unsupported version " + std::to_string(version));
  uint64_t h;
  get(h);
  if (h != gh) throw CorruptCheckpoint("generator hash mismatch");
  uint64_t d;
  uint32_t N;
  get(d);
  get(N);
  if (d != st->d_ || static_cast<int>(N) != st->N_) throw CorruptCheckpoint("dimension or field mismatch");
  uint64_t nv;
  get(nv);
  std::vector<Cyclotomic> values;
  for (uint64_t i = 0; i < nv; ++i) {
    uint32_t k;
    get(k);
    Compact c;
    c.c.resize(k);
    for (auto& x : c.c) get(x);
    get(c.den);
    values.push_back(from_compact(c, st->N_));
  }
  for (size_t i = 0; i < values.size(); ++i) {
    Id id = st->intern(values[i]);
    if (id != i) throw CorruptCheckpoint("value table inconsistent");
  }
  uint64_t count, lb, le, lv;
  get(count);
  get(lb);
  get(le);
  get(lv);
  if (lb > le || le > count) throw CorruptCheckpoint("bad frontier bounds");
  std::vector<Id> pool(count * st->sq_);
  is.read(reinterpret_cast<char*>(pool.data()), static_cast<std::streamsize>(pool.size() * sizeof(Id)));
  if (!is) throw CorruptCheckpoint("truncated element pool");
  for (auto v : pool)
    if (v >= nv) throw CorruptCheckpoint("entry id out of range");
  for (uint64_t i = 0; i < count; ++i) {
    const Id* p = pool.data() + i * st->sq_;
    if (!st->insert(p, hash_entries(p, st->sq_))) throw CorruptCheckpoint("duplicate element");
  }
  return Resume{lb, le, lv};
}

}  // namespace

ClosureResult group_closure(const std::vector<Matrix>& gens, const ClosureOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  if (gens.empty()) throw std::invalid_argument("group_closure needs generators");
  size_t d = gens[0].dim();
  long N = 1;
  for (auto& g : gens) {
    if (g.dim() != d) throw std::invalid_argument("generators have different dimensions");
    if (!g.is_constant()) throw NonCyclotomicEntries("generator entries contain indeterminates");
    N = std::lcm(N, static_cast<long>(g.field_order()));
  }
  for (auto& g : gens)
    if (g.det().is_zero()) throw std::invalid_argument("generator is not invertible");

  auto st = std::make_shared<ClosureStore>(static_cast<int>(N), d, opts.max_values);
  uint64_t gh = generator_hash(gens);
  size_t level_begin = 0, level_end = 0, levels = 0;
  bool resumed = false;
  if (!opts.checkpoint.empty()) {
    if (auto r = read_checkpoint(opts.checkpoint, st.get(), gh)) {
      level_begin = r->level_begin;
      level_end = r->level_end;
      levels = r->levels;
      resumed = true;
    }
  }
  st->intern(Cyclotomic(0));
  Id one = st->intern(Cyclotomic(1));
  std::vector<SparseGen> sparse(gens.size());
  for (size_t g = 0; g < gens.size(); ++g) {
    sparse[g].rows.resize(d);
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j)
        if (!gens[g](i, j).is_zero()) {
          Id v = st->intern(gens[g](i, j).constant_value());
          sparse[g].rows[i].push_back({static_cast<uint32_t>(j), st->gen_value_slot(v)});
        }
  }
  if (!resumed) {
    std::vector<Id> id(d * d, 0);
    for (size_t i = 0; i < d; ++i) id[i * d + i] = one;
    st->insert(id.data(), hash_entries(id.data(), id.size()));
    level_begin = 0;
    level_end = 1;
  }

  size_t sq = d * d;
  unsigned jobs = std::max(1u, opts.jobs);
  auto product = [&](const Id* m, const SparseGen& g, Id* out) {
    for (size_t i = 0; i < d; ++i) {
      Id* orow = out + i * d;
      const auto& row = g.rows[i];
      if (row.size() == 1) {
        const Id* src = m + row[0].first * d;
        for (size_t j = 0; j < d; ++j) orow[j] = st->mul(row[0].second, src[j]);
        continue;
      }
      std::fill(orow, orow + d, Id(0));
      for (auto& [k, gs] : row) {
        const Id* src = m + k * d;
        for (size_t j = 0; j < d; ++j) orow[j] = st->add(orow[j], st->mul(gs, src[j]));
      }
    }
  };

  struct Candidates {
    std::vector<Id> data;
    std::vector<uint64_t> hashes;
  };
  bool complete = true;
  while (level_begin < level_end) {
    for (size_t b0 = level_begin; b0 < level_end; b0 += opts.batch) {
      size_t b1 = std::min(level_end, b0 + opts.batch);
      std::vector<Candidates> found(jobs);
      auto work = [&](unsigned w) {
        std::vector<Id> buf(sq);
        for (size_t e = b0 + w; e < b1; e += jobs)
          for (auto& g : sparse) {
            product(st->elem(e), g, buf.data());
            uint64_t h = hash_entries(buf.data(), sq);
            if (st->find(buf.data(), h)) continue;
            found[w].data.insert(found[w].data.end(), buf.begin(), buf.end());
            found[w].hashes.push_back(h);
          }
      };
      if (jobs == 1) {
        work(0);
      } else {
        std::vector<std::thread> th;
        for (unsigned w = 0; w < jobs; ++w) th.emplace_back(work, w);
        for (auto& t : th) t.join();
      }
      for (auto& f : found)
        for (size_t k = 0; k < f.hashes.size(); ++k) {
          if (st->insert(f.data.data() + k * sq, f.hashes[k]) && st->count_ > opts.cap) {
            if (!opts.checkpoint.empty()) write_checkpoint(opts.checkpoint, *st, gh, level_begin, level_end, levels);
            throw CapExceeded("closure exceeded cap " + std::to_string(opts.cap));
          }
        }
    }
    level_begin = level_end;
    level_end = st->count_;
    ++levels;
    if (!opts.checkpoint.empty() && (levels % std::max<size_t>(1, opts.checkpoint_every) == 0 ||
                                     (opts.stop_after_levels && levels >= opts.stop_after_levels)))
      write_checkpoint(opts.checkpoint, *st, gh, level_begin, level_end, levels);
    if (opts.stop_after_levels && levels >= opts.stop_after_levels && level_begin < level_end) {
      complete = false;
      break;
    }
  }
  if (complete && !opts.checkpoint.empty()) write_checkpoint(opts.checkpoint, *st, gh, level_begin, level_end, levels);

  ClosureResult res;
  res.order = st->count_;
  res.generator_count = gens.size();
  res.complete = complete;
  res.resumed = resumed;
  res.levels = levels;
  res.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  res.store = st;
  return res;
}

bool ClosureResult::contains(const Matrix& m) const {
  auto* st = const_cast<ClosureStore*>(store.get());
  if (m.dim() != st->d_) return false;
  std::vector<Id> ids;
  if (!st->to_ids(m, &ids)) return false;
  return st->find(ids.data(), hash_entries(ids.data(), ids.size())).has_value();
}

Matrix ClosureResult::element(size_t i) const { return store->to_matrix(i); }

bool ClosureResult::same_set(const ClosureResult& other) const {
  if (order != other.order) return false;
  for (size_t i = 0; i < order; ++i)
    if (!other.contains(element(i))) return false;
  return true;
}

}  // namespace necklace
