#pragma once

// Persistent EBB media: one file holding the MD record, the DD record and a
// fixed ring of RD slots.
//
// File layout (all sizes fixed at init; the file never grows):
//
//   [0, 64)                      preamble: "EBB0" + header_size, slot_size,
//                                capacity as three 20-digit ASCII decimals
//   [64, header_size/2)          MD encoding, zero-padded
//   [header_size/2, header_size) DD encoding, zero-padded
//   [header_size + i*slot_size, +slot_size)   RD slot i, zero-padded
//
// The preamble is this implementation's extension for self-describing media;
// its bytes are not covered by any record checksum. DD's ebbX field is the
// absolute byte offset of the next writable slot, so
// ebbX = header_size + cursor * slot_size at all times.
//
// Durability order: a slot write completes before the DD rewrite starts, so
// a crash between the two leaves at worst a stale DD; verify_store
// recognizes that state (and a torn in-flight slot write) as a single
// finding rather than a cascade of mismatches.

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

#include <array>
#include <cerrno>
#include <cstdint>
#include <cstring>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ebb/codec.hpp"
#include "ebb/record.hpp"
#include "ebb/result.hpp"

namespace ebb {

// ---------------------------------------------------------------------------
// Geometry and preamble
// ---------------------------------------------------------------------------

struct MediaGeometry {
  static constexpr std::uint64_t kMaxCapacity = 9'999'999'999ull;  // DD ebbN is 10 digits
  static constexpr std::uint64_t kMinSlotSize = 512;
  static constexpr std::uint64_t kMinHeaderSize = 512;

  std::uint64_t header_size = 4096;
  std::uint64_t slot_size = 4096;
  std::uint64_t capacity = 400;

  bool operator==(const MediaGeometry&) const = default;

  bool valid() const {
    bool slot_pow2 = slot_size >= kMinSlotSize && (slot_size & (slot_size - 1)) == 0;
    bool header_ok = header_size >= kMinHeaderSize && header_size % 2 == 0;
    bool cap_ok = capacity >= 1 && capacity <= kMaxCapacity;
    // keep the total size computable in 63 bits
    bool size_ok = cap_ok && slot_size != 0 &&
                   capacity <= (std::uint64_t(1) << 62) / slot_size;
    return slot_pow2 && header_ok && cap_ok && size_ok;
  }

  std::uint64_t file_size() const { return header_size + slot_size * capacity; }
  std::uint64_t md_offset() const { return 64; }
  std::uint64_t dd_offset() const { return header_size / 2; }
  std::uint64_t slot_offset(std::uint64_t slot) const { return header_size + slot * slot_size; }
};

inline constexpr std::string_view kMediaMagic = "EBB0";
inline constexpr std::size_t kPreambleSize = 64;

/// 64 bytes: "EBB0" then header_size, slot_size, capacity as 20-digit
/// zero-padded decimals.
inline std::array<std::uint8_t, kPreambleSize> encode_preamble(const MediaGeometry& g) {
  std::array<std::uint8_t, kPreambleSize> out{};
  char buf[kPreambleSize + 1];
  std::snprintf(buf, sizeof buf, "EBB0%020llu%020llu%020llu",
                static_cast<unsigned long long>(g.header_size),
                static_cast<unsigned long long>(g.slot_size),
                static_cast<unsigned long long>(g.capacity));
  std::memcpy(out.data(), buf, kPreambleSize);
  return out;
}

inline std::optional<MediaGeometry> parse_preamble(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kPreambleSize) return std::nullopt;
  std::string_view sv(reinterpret_cast<const char*>(bytes.data()), kPreambleSize);
  if (sv.substr(0, 4) != kMediaMagic) return std::nullopt;
  for (std::size_t i = 4; i < kPreambleSize; ++i) {
    if (sv[i] < '0' || sv[i] > '9') return std::nullopt;
  }
  MediaGeometry g;
  g.header_size = detail::to_u64(sv.substr(4, 20));
  g.slot_size = detail::to_u64(sv.substr(24, 20));
  g.capacity = detail::to_u64(sv.substr(44, 20));
  return g;
}

// ---------------------------------------------------------------------------
// DD state
// ---------------------------------------------------------------------------

/// The bookkeeping the DD record carries, as plain values.
struct DdState {
  std::uint64_t total_records = 0;  // ebbN
  std::uint64_t next_offset = 0;    // ebbX
  Stamp oldest;                     // ebD1 / ebT1 (zero sentinel when empty)
  Stamp newest;                     // ebDM / ebTM

  bool operator==(const DdState&) const = default;
};

/// Builds the DD record for a state. `stamp` becomes the DD's own ebbD/ebbT
/// (the instant the DD was written); using the triggering RD's stamp keeps
/// stores reproducible.
inline Record make_dd_record(const DdState& s, Stamp stamp) {
  char num[24];
  std::vector<Field> fields;
  std::snprintf(num, sizeof num, "%010llu", static_cast<unsigned long long>(s.total_records));
  fields.push_back({"ebbN", FixedNumValue{num}});
  std::snprintf(num, sizeof num, "%016llu", static_cast<unsigned long long>(s.next_offset));
  fields.push_back({"ebbX", FixedNumValue{num}});
  fields.push_back({"ebD1", s.oldest.date});
  fields.push_back({"ebT1", s.oldest.time});
  fields.push_back({"ebDM", s.newest.date});
  fields.push_back({"ebTM", s.newest.time});
  return build_record(RecordType::DD, stamp.date, stamp.time, std::move(fields));
}

/// Extracts DdState from a parsed DD record; nullopt if fields are missing
/// or not DD-shaped.
inline std::optional<DdState> dd_state_from_record(const Record& r) {
  if (r.type != RecordType::DD) return std::nullopt;
  const Field* n = r.find("ebbN");
  const Field* x = r.find("ebbX");
  const Field* d1 = r.find("ebD1");
  const Field* t1 = r.find("ebT1");
  const Field* dm = r.find("ebDM");
  const Field* tm = r.find("ebTM");
  if (!n || !x || !d1 || !t1 || !dm || !tm) return std::nullopt;
  const auto* nv = std::get_if<FixedNumValue>(&n->data);
  const auto* xv = std::get_if<FixedNumValue>(&x->data);
  const auto* d1v = std::get_if<EbbDate>(&d1->data);
  const auto* t1v = std::get_if<EbbTime>(&t1->data);
  const auto* dmv = std::get_if<EbbDate>(&dm->data);
  const auto* tmv = std::get_if<EbbTime>(&tm->data);
  if (!nv || !xv || !d1v || !t1v || !dmv || !tmv) return std::nullopt;
  DdState s;
  s.total_records = detail::to_u64(nv->text);
  s.next_offset = detail::to_u64(xv->text);
  s.oldest = {*d1v, *t1v};
  s.newest = {*dmv, *tmv};
  return s;
}

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

enum class StoreErrorKind : std::uint8_t {
  Exists,
  GeometryInvalid,
  MdTooLarge,
  InvalidRecord,
  NotAnRd,
  RecordTooLarge,
  BadMedia,
  Io,
};

inline std::string_view store_error_name(StoreErrorKind k) {
  switch (k) {
    case StoreErrorKind::Exists: return "exists";
    case StoreErrorKind::GeometryInvalid: return "geometry-invalid";
    case StoreErrorKind::MdTooLarge: return "md-too-large";
    case StoreErrorKind::InvalidRecord: return "invalid-record";
    case StoreErrorKind::NotAnRd: return "not-an-rd";
    case StoreErrorKind::RecordTooLarge: return "record-too-large";
    case StoreErrorKind::BadMedia: return "bad-media";
    case StoreErrorKind::Io: return "io";
  }
  return "?";
}

struct StoreError {
  StoreErrorKind kind;
  std::string message;

  std::string to_string() const {
    std::string s{store_error_name(kind)};
    if (!message.empty()) s += ": " + message;
    return s;
  }
};

template <typename T>
using StoreResult = Result<T, StoreError>;

namespace detail {

inline bool pread_all(int fd, void* buf, std::size_t len, std::uint64_t off) {
  auto* p = static_cast<std::uint8_t*>(buf);
  while (len > 0) {
    ssize_t n = ::pread(fd, p, len, static_cast<off_t>(off));
    if (n <= 0) {
      if (n < 0 && errno == EINTR) continue;
      return false;
    }
    p += n;
    off += static_cast<std::uint64_t>(n);
    len -= static_cast<std::size_t>(n);
  }
  return true;
}

inline bool pwrite_all(int fd, const void* buf, std::size_t len, std::uint64_t off) {
  const auto* p = static_cast<const std::uint8_t*>(buf);
  while (len > 0) {
    ssize_t n = ::pwrite(fd, p, len, static_cast<off_t>(off));
    if (n < 0) {
      if (errno == EINTR) continue;
      return false;
    }
    p += n;
    off += static_cast<std::uint64_t>(n);
    len -= static_cast<std::size_t>(n);
  }
  return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Verify report
// ---------------------------------------------------------------------------

enum class FindingKind : std::uint8_t {
  BadPreamble,
  FileSizeMismatch,
  BadMd,
  BadDd,
  CorruptSlot,
  TornSlot,          // interrupted in-flight slot write at the DD cursor
  StaleDd,           // DD is exactly one acknowledged append behind the slots
  CountInconsistent,
  OldestInconsistent,
  NewestInconsistent,
  NextOffsetInconsistent,
  TimestampRegression,
};

inline std::string_view finding_name(FindingKind k) {
  switch (k) {
    case FindingKind::BadPreamble: return "bad-preamble";
    case FindingKind::FileSizeMismatch: return "file-size-mismatch";
    case FindingKind::BadMd: return "bad-md";
    case FindingKind::BadDd: return "bad-dd";
    case FindingKind::CorruptSlot: return "corrupt-slot";
    case FindingKind::TornSlot: return "torn-slot";
    case FindingKind::StaleDd: return "stale-dd";
    case FindingKind::CountInconsistent: return "count-inconsistent";
    case FindingKind::OldestInconsistent: return "oldest-inconsistent";
    case FindingKind::NewestInconsistent: return "newest-inconsistent";
    case FindingKind::NextOffsetInconsistent: return "next-offset-inconsistent";
    case FindingKind::TimestampRegression: return "timestamp-regression";
  }
  return "?";
}

struct StoreFinding {
  FindingKind kind;
  std::int64_t slot = -1;  // slot index when applicable
  std::string message;

  std::string to_string() const {
    std::string s{finding_name(kind)};
    if (slot >= 0) s += " slot=" + std::to_string(slot);
    if (!message.empty()) s += " (" + message + ")";
    return s;
  }
};

struct StoreReport {
  std::vector<StoreFinding> findings;
  bool clean() const { return findings.empty(); }
};

// ---------------------------------------------------------------------------
// The store
// ---------------------------------------------------------------------------

/// A slot whose contents no longer parse as a record.
struct CorruptSlot {
  std::uint64_t slot;
  ParseError error;
};

using SlotItem = std::variant<Record, CorruptSlot>;

class EbbStore {
 public:
  EbbStore(const EbbStore&) = delete;
  EbbStore& operator=(const EbbStore&) = delete;

  EbbStore(EbbStore&& other) noexcept { *this = std::move(other); }
  EbbStore& operator=(EbbStore&& other) noexcept {
    if (this != &other) {
      close_fd();
      fd_ = other.fd_;
      other.fd_ = -1;
      path_ = std::move(other.path_);
      geom_ = other.geom_;
      md_ = std::move(other.md_);
      dd_ = other.dd_;
      durable_ = other.durable_;
    }
    return *this;
  }

  ~EbbStore() { close_fd(); }

  /// Creates media at `path`: full-size file, MD written once, DD zeroed.
  /// Fails if the path exists unless `overwrite`.
  static StoreResult<EbbStore> init(const std::string& path, const MediaGeometry& geom,
                                    const Record& md, bool overwrite = false,
                                    bool durable = false) {
    if (!geom.valid())
      return StoreError{StoreErrorKind::GeometryInvalid,
                        "slot_size must be a power of two >= 512, header_size even >= 512, "
                        "capacity 1..9999999999"};
    if (md.type != RecordType::MD)
      return StoreError{StoreErrorKind::InvalidRecord, "init requires an MD record"};
    EncodeResult enc = encode_record(md);
    if (!enc.ok())
      return StoreError{StoreErrorKind::InvalidRecord, enc.violations.front().to_string()};
    if (kPreambleSize + enc.bytes.size() > geom.dd_offset())
      return StoreError{StoreErrorKind::MdTooLarge,
                        "MD needs " + std::to_string(kPreambleSize + enc.bytes.size()) +
                            " bytes, header region offers " + std::to_string(geom.dd_offset())};

    int flags = O_RDWR | O_CREAT | (overwrite ? O_TRUNC : O_EXCL);
    int fd = ::open(path.c_str(), flags, 0644);
    if (fd < 0) {
      if (errno == EEXIST) return StoreError{StoreErrorKind::Exists, path};
      return StoreError{StoreErrorKind::Io, path + ": " + std::strerror(errno)};
    }
    EbbStore store;
    store.fd_ = fd;
    store.path_ = path;
    store.geom_ = geom;
    store.md_ = md;
    store.durable_ = durable;

    if (::ftruncate(fd, static_cast<off_t>(geom.file_size())) != 0)
      return StoreError{StoreErrorKind::Io, std::string("ftruncate: ") + std::strerror(errno)};

    auto preamble = encode_preamble(geom);
    if (!detail::pwrite_all(fd, preamble.data(), preamble.size(), 0) ||
        !detail::pwrite_all(fd, enc.bytes.data(), enc.bytes.size(), geom.md_offset()))
      return StoreError{StoreErrorKind::Io, "header write failed"};

    store.dd_ = DdState{0, geom.slot_offset(0), {}, {}};
    if (auto err = store.write_dd(md.stamp())) return *err;
    if (durable) ::fsync(fd);
    return store;
  }

  /// Opens existing media, recovering geometry and state from the preamble
  /// and DD record.
  static StoreResult<EbbStore> open(const std::string& path, bool writable = true,
                                    bool durable = false) {
    int fd = ::open(path.c_str(), writable ? O_RDWR : O_RDONLY);
    if (fd < 0) return StoreError{StoreErrorKind::Io, path + ": " + std::strerror(errno)};
    EbbStore store;
    store.fd_ = fd;
    store.path_ = path;
    store.durable_ = durable;

    std::array<std::uint8_t, kPreambleSize> pre;
    if (!detail::pread_all(fd, pre.data(), pre.size(), 0))
      return StoreError{StoreErrorKind::BadMedia, "short read on preamble"};
    auto geom = parse_preamble(pre);
    if (!geom || !geom->valid())
      return StoreError{StoreErrorKind::BadMedia, "bad preamble"};
    store.geom_ = *geom;

    struct stat st{};
    if (::fstat(fd, &st) != 0 || static_cast<std::uint64_t>(st.st_size) != geom->file_size())
      return StoreError{StoreErrorKind::BadMedia, "file size does not match geometry"};

    auto md = store.read_region_record(geom->md_offset(), geom->dd_offset() - geom->md_offset());
    if (!md.ok() || md.value().record.type != RecordType::MD)
      return StoreError{StoreErrorKind::BadMedia,
                        "MD region: " + (md.ok() ? "wrong record type" : md.error().to_string())};
    store.md_ = md.value().record;

    auto dd = store.read_region_record(geom->dd_offset(), geom->header_size - geom->dd_offset());
    std::optional<DdState> state;
    if (dd.ok()) state = dd_state_from_record(dd.value().record);
    if (state && (state->total_records > geom->capacity ||
                  state->next_offset < geom->header_size ||
                  (state->next_offset - geom->header_size) % geom->slot_size != 0 ||
                  (state->next_offset - geom->header_size) / geom->slot_size >= geom->capacity))
      state.reset();
    if (!state) {
      // Torn or damaged DD (e.g. a crash mid-rewrite). The slots are the
      // source of truth; rebuild the bookkeeping from them and, when
      // writable, persist the repaired DD.
      state = store.recover_dd_from_slots();
      store.dd_ = *state;
      if (writable) {
        if (auto err = store.write_dd(state->newest.date.is_zero() ? store.md_.stamp()
                                                                   : state->newest))
          return *err;
      }
    } else {
      store.dd_ = *state;
    }
    return store;
  }

  const MediaGeometry& geometry() const { return geom_; }
  const Record& md() const { return md_; }
  const DdState& dd() const { return dd_; }
  const std::string& path() const { return path_; }

  std::uint64_t cursor() const { return (dd_.next_offset - geom_.header_size) / geom_.slot_size; }

  struct AppendOutcome {
    std::uint64_t slot;
    bool clock_regression;  // rd predates the previous newest; written anyway
  };

  /// Appends one RD into the next slot, then rewrites the DD. Appends are
  /// serialized internally; readers on other handles never see a torn DD
  /// because the DD region is replaced in one write after the slot is down.
  StoreResult<AppendOutcome> append_rd(const Record& rd) {
    std::lock_guard<std::mutex> lock(write_mutex_);
    if (fd_ < 0) return StoreError{StoreErrorKind::Io, "store not open"};
    if (rd.type != RecordType::RD)
      return StoreError{StoreErrorKind::NotAnRd, std::string(to_tag(rd.type))};
    EncodeResult enc = encode_record(rd);
    if (!enc.ok())
      return StoreError{StoreErrorKind::InvalidRecord, enc.violations.front().to_string()};
    if (enc.bytes.size() > geom_.slot_size)
      return StoreError{StoreErrorKind::RecordTooLarge,
                        std::to_string(enc.bytes.size()) + " bytes > slot_size " +
                            std::to_string(geom_.slot_size)};

    const std::uint64_t slot = cursor();
    const bool wrapped = dd_.total_records == geom_.capacity;
    const bool regression = dd_.total_records > 0 && rd.stamp() < dd_.newest;

    std::vector<std::uint8_t> buf(geom_.slot_size, 0);
    std::memcpy(buf.data(), enc.bytes.data(), enc.bytes.size());
    if (!detail::pwrite_all(fd_, buf.data(), buf.size(), geom_.slot_offset(slot)))
      return StoreError{StoreErrorKind::Io, std::string("slot write: ") + std::strerror(errno)};
    if (durable_) ::fdatasync(fd_);

    const std::uint64_t next_slot = (slot + 1) % geom_.capacity;
    dd_.next_offset = geom_.slot_offset(next_slot);
    dd_.newest = rd.stamp();
    if (dd_.total_records == 0) {
      dd_.oldest = rd.stamp();
      dd_.total_records = 1;
    } else if (wrapped) {
      dd_.oldest = slot_stamp(next_slot).value_or(Stamp{});
    } else {
      dd_.total_records += 1;
    }

    if (auto err = write_dd(rd.stamp())) return *err;
    if (durable_) ::fdatasync(fd_);
    return AppendOutcome{slot, regression};
  }

  /// Forces buffered writes to stable storage.
  bool flush() { return fd_ >= 0 && ::fdatasync(fd_) == 0; }

  /// Stored RDs oldest-first; slots that fail to parse surface as
  /// CorruptSlot items in their logical position.
  std::vector<SlotItem> read_chronological() const {
    std::vector<SlotItem> out;
    const std::uint64_t n = geom_.capacity;
    const std::uint64_t count = dd_.total_records;
    const std::uint64_t first = count < n ? 0 : cursor();
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
      std::uint64_t slot = (first + i) % n;
      auto rec = read_slot(slot);
      if (rec.ok())
        out.push_back(std::move(rec).value().record);
      else
        out.push_back(CorruptSlot{slot, rec.error()});
    }
    return out;
  }

  /// Parses the record in one slot.
  ParseResult<Parsed> read_slot(std::uint64_t slot) const {
    std::vector<std::uint8_t> buf(geom_.slot_size);
    if (!detail::pread_all(fd_, buf.data(), buf.size(), geom_.slot_offset(slot)))
      return ParseError{ParseErrorKind::TruncatedRecord, 0, {}, "slot read failed", {}, {}};
    return parse_record(std::span<const std::uint8_t>(buf), 0);
  }

  /// Re-reads the DD region from disk (what a separate reader would see).
  ParseResult<Parsed> read_dd_record() const {
    return read_region_record(geom_.dd_offset(), geom_.header_size - geom_.dd_offset());
  }

  ParseResult<Parsed> read_md_record() const {
    return read_region_record(geom_.md_offset(), geom_.dd_offset() - geom_.md_offset());
  }

 private:
  EbbStore() = default;

  void close_fd() {
    if (fd_ >= 0) ::close(fd_);
    fd_ = -1;
  }

  ParseResult<Parsed> read_region_record(std::uint64_t off, std::uint64_t len) const {
    std::vector<std::uint8_t> buf(len);
    if (!detail::pread_all(fd_, buf.data(), buf.size(), off))
      return ParseError{ParseErrorKind::TruncatedRecord, 0, {}, "region read failed", {}, {}};
    return parse_record(std::span<const std::uint8_t>(buf), 0);
  }

  /// Reads only a slot's ebbD/ebbT, which sit at fixed offsets in every
  /// encoding (tag 2, " recS " 6, data 12, " ebbD " 6 -> date at 26;
  /// date 10, " ebbT " 6 -> time at 42).
  std::optional<Stamp> slot_stamp(std::uint64_t slot) const {
    char buf[54];
    if (!detail::pread_all(fd_, buf, sizeof buf, geom_.slot_offset(slot))) return std::nullopt;
    auto date = EbbDate::from_text(std::string_view(buf + 26, 10));
    auto time = EbbTime::from_text(std::string_view(buf + 42, 12));
    if (!date || !time) return std::nullopt;
    return Stamp{*date, *time};
  }

  /// Rebuilds DdState from a full slot scan, for media whose DD region is
  /// unreadable. Non-empty slots count as written records; if the ring is
  /// full, the write cursor is taken to be the slot holding the smallest
  /// timestamp (the wrap point under normally monotonic robot data).
  DdState recover_dd_from_slots() const {
    const std::uint64_t n = geom_.capacity;
    std::vector<std::optional<Stamp>> stamps(n);  // nullopt = empty slot
    std::uint64_t used = 0;
    std::vector<std::uint8_t> buf(geom_.slot_size);
    for (std::uint64_t i = 0; i < n; ++i) {
      if (!detail::pread_all(fd_, buf.data(), buf.size(), geom_.slot_offset(i))) continue;
      bool all_zero = true;
      for (std::uint8_t b : buf) {
        if (b != 0) {
          all_zero = false;
          break;
        }
      }
      if (all_zero) continue;
      ++used;
      auto rec = parse_record(std::span<const std::uint8_t>(buf), 0);
      if (rec.ok()) stamps[i] = rec.value().record.stamp();
    }

    DdState s;
    s.total_records = used;
    std::uint64_t cursor = 0;
    if (used < n) {
      // Unwrapped ring: records occupy a prefix; next write goes after it.
      cursor = used;
      if (used > 0) {
        if (stamps[0]) s.oldest = *stamps[0];
        if (stamps[used - 1]) s.newest = *stamps[used - 1];
      }
    } else {
      std::uint64_t best = n;
      for (std::uint64_t i = 0; i < n; ++i) {
        if (!stamps[i]) continue;
        if (best == n || *stamps[i] < *stamps[best]) best = i;
      }
      if (best != n) cursor = best;
      if (stamps[cursor]) s.oldest = *stamps[cursor];
      if (stamps[(cursor + n - 1) % n]) s.newest = *stamps[(cursor + n - 1) % n];
    }
    s.next_offset = geom_.slot_offset(cursor);
    return s;
  }

  std::optional<StoreError> write_dd(Stamp stamp) {
    Record dd;
    try {
      dd = make_dd_record(dd_, stamp);
    } catch (const BuildError& e) {
      return StoreError{StoreErrorKind::InvalidRecord, std::string("DD: ") + e.what()};
    }
    EncodeResult enc = encode_record(dd);
    if (!enc.ok()) return StoreError{StoreErrorKind::InvalidRecord, "DD encode failed"};
    std::uint64_t region = geom_.header_size - geom_.dd_offset();
    if (enc.bytes.size() > region)
      return StoreError{StoreErrorKind::Io, "DD does not fit its region"};
    std::vector<std::uint8_t> buf(region, 0);
    std::memcpy(buf.data(), enc.bytes.data(), enc.bytes.size());
    if (!detail::pwrite_all(fd_, buf.data(), buf.size(), geom_.dd_offset()))
      return StoreError{StoreErrorKind::Io, std::string("DD write: ") + std::strerror(errno)};
    return std::nullopt;
  }

  int fd_ = -1;
  std::string path_;
  MediaGeometry geom_;
  Record md_;
  DdState dd_;
  bool durable_ = false;
  std::mutex write_mutex_;
};

// ---------------------------------------------------------------------------
// Forensic audit
// ---------------------------------------------------------------------------

namespace detail {

enum class SlotStatus : std::uint8_t { Valid, Empty, Corrupt };

struct SlotScan {
  SlotStatus status = SlotStatus::Empty;
  Stamp stamp;
};

/// Expected DD state recomputed from a slot scan under the DD's own cursor,
/// plus position-ordered stamps for monotonicity checks.
struct SlotModel {
  std::uint64_t valid_count = 0;
  bool layout_ok = true;  // valid slots form a prefix (unwrapped) / full ring
};

}  // namespace detail

/// Audits a store file from scratch: structural checksums, DD-versus-slot
/// consistency, and ring timestamp order. Never throws; every problem is a
/// finding. Interrupted appends are classified as exactly one torn-slot or
/// stale-dd finding so crash recovery reads cleanly.
inline StoreReport verify_store(const std::string& path) {
  StoreReport report;
  auto add = [&](FindingKind kind, std::int64_t slot, std::string msg) {
    report.findings.push_back({kind, slot, std::move(msg)});
  };

  int fd = ::open(path.c_str(), O_RDONLY);
  if (fd < 0) {
    add(FindingKind::BadPreamble, -1, path + ": " + std::strerror(errno));
    return report;
  }
  struct FdGuard {
    int fd;
    ~FdGuard() { ::close(fd); }
  } guard{fd};

  std::array<std::uint8_t, kPreambleSize> pre;
  if (!detail::pread_all(fd, pre.data(), pre.size(), 0)) {
    add(FindingKind::BadPreamble, -1, "short read");
    return report;
  }
  auto geom_opt = parse_preamble(pre);
  if (!geom_opt || !geom_opt->valid()) {
    add(FindingKind::BadPreamble, -1, "unparseable or invalid geometry");
    return report;
  }
  const MediaGeometry geom = *geom_opt;

  struct stat st{};
  if (::fstat(fd, &st) != 0 || static_cast<std::uint64_t>(st.st_size) != geom.file_size()) {
    add(FindingKind::FileSizeMismatch, -1,
        "expected " + std::to_string(geom.file_size()) + " bytes, found " +
            std::to_string(st.st_size));
    return report;
  }

  auto read_record_at = [&](std::uint64_t off, std::uint64_t len) -> ParseResult<Parsed> {
    std::vector<std::uint8_t> buf(len);
    if (!detail::pread_all(fd, buf.data(), buf.size(), off))
      return ParseError{ParseErrorKind::TruncatedRecord, 0, {}, "read failed", {}, {}};
    return parse_record(std::span<const std::uint8_t>(buf), 0);
  };

  auto md = read_record_at(geom.md_offset(), geom.dd_offset() - geom.md_offset());
  if (!md.ok())
    add(FindingKind::BadMd, -1, md.error().to_string());
  else if (md.value().record.type != RecordType::MD)
    add(FindingKind::BadMd, -1, "record in MD region is not MD");

  std::optional<DdState> dd;
  auto ddrec = read_record_at(geom.dd_offset(), geom.header_size - geom.dd_offset());
  if (!ddrec.ok()) {
    add(FindingKind::BadDd, -1, ddrec.error().to_string());
  } else {
    dd = dd_state_from_record(ddrec.value().record);
    if (!dd) add(FindingKind::BadDd, -1, "DD record malformed");
  }

  // Full slot scan.
  std::vector<detail::SlotScan> slots(geom.capacity);
  std::vector<std::uint8_t> buf(geom.slot_size);
  for (std::uint64_t i = 0; i < geom.capacity; ++i) {
    if (!detail::pread_all(fd, buf.data(), buf.size(), geom.slot_offset(i))) {
      slots[i].status = detail::SlotStatus::Corrupt;
      continue;
    }
    bool all_zero = true;
    for (std::uint8_t b : buf) {
      if (b != 0) {
        all_zero = false;
        break;
      }
    }
    if (all_zero) {
      slots[i].status = detail::SlotStatus::Empty;
      continue;
    }
    auto rec = parse_record(std::span<const std::uint8_t>(buf), 0);
    if (rec.ok() && rec.value().record.type == RecordType::RD) {
      slots[i].status = detail::SlotStatus::Valid;
      slots[i].stamp = rec.value().record.stamp();
    } else {
      slots[i].status = detail::SlotStatus::Corrupt;
    }
  }

  if (!dd) {
    // No DD to reconcile against; still surface damaged slots.
    for (std::uint64_t i = 0; i < geom.capacity; ++i)
      if (slots[i].status == detail::SlotStatus::Corrupt)
        add(FindingKind::CorruptSlot, static_cast<std::int64_t>(i), "unparseable slot");
    return report;
  }

  const std::uint64_t n = geom.capacity;
  bool cursor_ok = dd->next_offset >= geom.header_size &&
                   (dd->next_offset - geom.header_size) % geom.slot_size == 0 &&
                   (dd->next_offset - geom.header_size) / geom.slot_size < n;
  if (!cursor_ok) {
    add(FindingKind::NextOffsetInconsistent, -1,
        "ebbX " + std::to_string(dd->next_offset) + " is not a slot boundary");
    for (std::uint64_t i = 0; i < n; ++i)
      if (slots[i].status == detail::SlotStatus::Corrupt)
        add(FindingKind::CorruptSlot, static_cast<std::int64_t>(i), "unparseable slot");
    return report;
  }
  const std::uint64_t cur = (dd->next_offset - geom.header_size) / geom.slot_size;

  // Compares the scan against a hypothetical (count, cursor) state; returns
  // mismatch findings. `excuse` marks one slot exempt (in-flight write).
  auto reconcile = [&](std::uint64_t count, std::uint64_t cursor_now, Stamp oldest, Stamp newest,
                       std::int64_t excuse) {
    std::vector<StoreFinding> out;
    std::uint64_t valid = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      bool should_hold = count >= n || (count < n && i < count);
      if (static_cast<std::int64_t>(i) == excuse) continue;
      if (slots[i].status == detail::SlotStatus::Corrupt) {
        out.push_back({FindingKind::CorruptSlot, static_cast<std::int64_t>(i), "unparseable slot"});
        continue;
      }
      bool holds = slots[i].status == detail::SlotStatus::Valid;
      if (holds) ++valid;
      if (holds != should_hold) {
        out.push_back({FindingKind::CountInconsistent, static_cast<std::int64_t>(i),
                       holds ? "unexpected record in empty region" : "missing record"});
      }
    }
    std::uint64_t expect_valid = count - (excuse >= 0 && count == n ? 1 : 0);
    if (valid != expect_valid)
      out.push_back({FindingKind::CountInconsistent, -1,
                     "DD ebbN " + std::to_string(count) + ", slots hold " +
                         std::to_string(valid + (excuse >= 0 && count == n ? 1 : 0))});
    if (count > 0) {
      std::uint64_t first = count < n ? 0 : cursor_now;
      std::uint64_t last = count < n ? count - 1 : (cursor_now + n - 1) % n;
      if (static_cast<std::int64_t>(first) != excuse &&
          slots[first].status == detail::SlotStatus::Valid && slots[first].stamp != oldest)
        out.push_back({FindingKind::OldestInconsistent, static_cast<std::int64_t>(first),
                       "DD ebD1/ebT1 disagree with the logically first slot"});
      if (static_cast<std::int64_t>(last) != excuse &&
          slots[last].status == detail::SlotStatus::Valid && slots[last].stamp != newest)
        out.push_back({FindingKind::NewestInconsistent, static_cast<std::int64_t>(last),
                       "DD ebDM/ebTM disagree with the logically last slot"});
    }
    return out;
  };

  auto exact = reconcile(dd->total_records, cur, dd->oldest, dd->newest, -1);
  if (exact.empty()) {
    // Consistent store; check ring timestamp order (informational for
    // stores that accepted clock-regressed robot data).
    std::uint64_t count = dd->total_records;
    std::uint64_t first = count < n ? 0 : cur;
    for (std::uint64_t i = 1; i < count; ++i) {
      auto a = slots[(first + i - 1) % n], b = slots[(first + i) % n];
      if (a.status == detail::SlotStatus::Valid && b.status == detail::SlotStatus::Valid &&
          b.stamp < a.stamp) {
        add(FindingKind::TimestampRegression, static_cast<std::int64_t>((first + i) % n),
            "ring timestamps regress here");
      }
    }
    return report;
  }

  // Stale-DD hypothesis: the record at the DD cursor was written but the DD
  // rewrite never landed. Virtually apply that append and re-reconcile.
  if (slots[cur].status == detail::SlotStatus::Valid) {
    DdState adv = *dd;
    bool was_wrapped = dd->total_records == n;
    adv.total_records = std::min<std::uint64_t>(dd->total_records + 1, n);
    std::uint64_t adv_cur = (cur + 1) % n;
    adv.next_offset = geom.slot_offset(adv_cur);
    adv.newest = slots[cur].stamp;
    if (dd->total_records == 0)
      adv.oldest = slots[cur].stamp;
    else if (was_wrapped && slots[adv_cur].status == detail::SlotStatus::Valid)
      adv.oldest = slots[adv_cur].stamp;
    if (reconcile(adv.total_records, adv_cur, adv.oldest, adv.newest, -1).empty()) {
      add(FindingKind::StaleDd, static_cast<std::int64_t>(cur),
          "slots are one append ahead of the DD record");
      return report;
    }
  }

  // Torn-slot hypothesis: the in-flight write into the cursor slot never
  // completed; everything else must reconcile with the DD exactly.
  if (slots[cur].status == detail::SlotStatus::Corrupt) {
    if (reconcile(dd->total_records, cur, dd->oldest, dd->newest,
                  static_cast<std::int64_t>(cur))
            .empty()) {
      add(FindingKind::TornSlot, static_cast<std::int64_t>(cur),
          "interrupted write in the next-writable slot");
      return report;
    }
  }

  for (auto& f : exact) report.findings.push_back(std::move(f));
  return report;
}

}  // namespace ebb
