#pragma once

// Bit-exact serialization of EBB records to and from their ASCII storage/wire
// form. One encoding serves both the media file and the ingest stream:
//
//   TAG SP LABEL SP DATA SP LABEL SP DATA ... SP chkS HHHHHHHH
//
// Fields are space-separated; variable strings carry a NUL terminator that
// counts toward recS; blob payloads are uppercase hex. recS (field count and
// total byte count, itself included) makes every record self-delimiting, so
// no outer framing exists. chkS is the low 32 bits of an FNV-1a 64 hash over
// everything from the first tag byte through the space after "chkS",
// rendered as 8 uppercase hex chars.

#include <cstdint>
#include <cstdio>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ebb/record.hpp"
#include "ebb/result.hpp"

namespace ebb {

// ---------------------------------------------------------------------------
// Checksum
// ---------------------------------------------------------------------------

inline constexpr std::uint64_t kFnvOffsetBasis = 0xCBF29CE484222325ull;
inline constexpr std::uint64_t kFnvPrime = 0x00000100000001B3ull;

inline std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes,
                             std::uint64_t seed = kFnvOffsetBasis) {
  std::uint64_t h = seed;
  for (std::uint8_t b : bytes) {
    h ^= b;
    h *= kFnvPrime;
  }
  return h;
}

/// A computed record checksum: the full 64-bit hash and its on-record
/// rendering (low 32 bits, 8 uppercase hex chars).
struct ChecksumValue {
  std::uint64_t hash64 = 0;

  std::string rendered() const {
    char buf[9];
    std::snprintf(buf, sizeof buf, "%08X", static_cast<unsigned>(hash64 & 0xFFFFFFFFu));
    return buf;
  }

  bool operator==(const ChecksumValue&) const = default;
};

/// Hashes the serialized record from its first tag byte through the space
/// after "chkS" (the checksum's own hex data excluded). Deterministic and
/// platform-independent.
inline ChecksumValue compute_checksum(std::span<const std::uint8_t> record_prefix) {
  return ChecksumValue{fnv1a64(record_prefix)};
}

inline ChecksumValue compute_checksum(std::string_view record_prefix) {
  return compute_checksum(std::span<const std::uint8_t>(
      reinterpret_cast<const std::uint8_t*>(record_prefix.data()), record_prefix.size()));
}

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

enum class ParseErrorKind : std::uint8_t {
  BadTag,
  TruncatedRecord,
  ChecksumMismatch,
  FieldFormatError,
  CountMismatch,
};

inline std::string_view parse_error_name(ParseErrorKind k) {
  switch (k) {
    case ParseErrorKind::BadTag: return "bad-tag";
    case ParseErrorKind::TruncatedRecord: return "truncated-record";
    case ParseErrorKind::ChecksumMismatch: return "checksum-mismatch";
    case ParseErrorKind::FieldFormatError: return "field-format-error";
    case ParseErrorKind::CountMismatch: return "count-mismatch";
  }
  return "?";
}

struct ParseError {
  ParseErrorKind kind;
  std::size_t offset = 0;   // absolute byte offset into the parsed buffer
  std::string label;        // field involved, when known
  std::string detail;
  std::string expected;     // checksum mismatch: computed value
  std::string actual;       // checksum mismatch: stored value

  std::string to_string() const {
    std::string s{parse_error_name(kind)};
    s += " at byte " + std::to_string(offset);
    if (!label.empty()) s += " field=" + label;
    if (!detail.empty()) s += " (" + detail + ")";
    if (!expected.empty()) s += " expected=" + expected + " actual=" + actual;
    return s;
  }
};

template <typename T>
using ParseResult = Result<T, ParseError>;

/// Thrown by build_record when inputs fail eager validation.
class BuildError : public std::runtime_error {
 public:
  explicit BuildError(std::vector<Violation> violations)
      : std::runtime_error(describe(violations)), violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  static std::string describe(const std::vector<Violation>& vs) {
    std::string s = "invalid record:";
    for (const Violation& v : vs) {
      s += ' ';
      s += v.to_string();
      s += ';';
    }
    return s;
  }
  std::vector<Violation> violations_;
};

// ---------------------------------------------------------------------------
// Encoding
// ---------------------------------------------------------------------------

namespace detail {

inline constexpr char kHexUpper[] = "0123456789ABCDEF";

inline void append_hex(std::string& out, std::span<const std::uint8_t> bytes) {
  out.reserve(out.size() + 2 * bytes.size());
  for (std::uint8_t b : bytes) {
    out.push_back(kHexUpper[b >> 4]);
    out.push_back(kHexUpper[b & 0xF]);
  }
}

inline void append_field_data(std::string& out, const FieldData& data) {
  char buf[32];
  switch (kind_of(data)) {
    case FieldKind::Date:
      out += std::get<EbbDate>(data).to_text();
      break;
    case FieldKind::Time:
      out += std::get<EbbTime>(data).to_text();
      break;
    case FieldKind::Size:
      out += std::get<RecSize>(data).to_text();
      break;
    case FieldKind::Text:
      out += std::get<TextValue>(data).text;
      out.push_back('\0');
      break;
    case FieldKind::FixedNum:
      out += std::get<FixedNumValue>(data).text;
      break;
    case FieldKind::Blob: {
      const auto& b = std::get<BlobValue>(data);
      std::snprintf(buf, sizeof buf, "%02d:%08zu:", b.device, b.payload.size());
      out += buf;
      append_hex(out, b.payload);
      break;
    }
    case FieldKind::SysX: {
      const auto& v = std::get<SysXValue>(data);
      std::snprintf(buf, sizeof buf, "%02d:", v.index);
      out += buf;
      out += v.text;
      out.push_back('\0');
      break;
    }
    case FieldKind::Wifi: {
      const auto& v = std::get<WifiValue>(data);
      std::snprintf(buf, sizeof buf, "%d:%02d", v.status, v.strength);
      out += buf;
      break;
    }
    case FieldKind::Decision: {
      const auto& v = std::get<DecisionValue>(data);
      std::snprintf(buf, sizeof buf, "%04d:", v.code);
      out += buf;
      out += v.reason;
      out.push_back('\0');
      break;
    }
    case FieldKind::Checksum:
      out += std::get<ChecksumText>(data).hex;
      break;
  }
}

}  // namespace detail

/// Result of encode_record. recS and chkS are recomputed during encoding;
/// the patched values are reported here so builders can adopt them.
struct EncodeResult {
  std::string bytes;
  RecSize rec_size;
  std::string checksum;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

/// Serializes a record. The caller's rec_size and checksum members are
/// ignored: both are recomputed from the body and patched into the encoding
/// before the checksum pass. Violations (including Oversize) abort with
/// empty bytes.
inline EncodeResult encode_record(const Record& r) {
  EncodeResult res;

  std::uint64_t len = encoded_length(r);
  int fields = field_count(r);
  res.rec_size = RecSize{fields, static_cast<std::uint32_t>(len > RecSize::kMaxChars ? 0 : len)};

  // Validate against a copy carrying the recomputed recS and a well-formed
  // checksum placeholder, so stale caller values don't block encoding.
  Record probe = r;
  probe.rec_size = RecSize{fields, static_cast<std::uint32_t>(len & 0xFFFFFFFFull)};
  probe.checksum = "00000000";
  res.violations = validate_record(probe);
  if (len > RecSize::kMaxChars)
    res.violations.push_back({Rule::Oversize, "recS", std::to_string(len) + " chars"});
  if (!res.violations.empty()) return res;

  std::string out;
  out.reserve(len);
  out += to_tag(r.type);
  out += " recS ";
  out += probe.rec_size.to_text();
  out += " ebbD ";
  out += r.date.to_text();
  out += " ebbT ";
  out += r.time.to_text();
  for (const Field& f : r.fields) {
    out.push_back(' ');
    out += f.label;
    out.push_back(' ');
    detail::append_field_data(out, f.data);
  }
  out += " chkS ";
  res.checksum = compute_checksum(out).rendered();
  out += res.checksum;

  res.rec_size = probe.rec_size;
  res.bytes = std::move(out);
  return res;
}

/// Builds a record from fields given in any order: reorders canonically,
/// computes recS and chkS, and returns a record that passes validate_record.
/// Rejects invalid input eagerly by throwing BuildError.
inline Record build_record(RecordType type, EbbDate date, EbbTime time,
                           std::vector<Field> fields) {
  Record r;
  r.type = type;
  r.date = date;
  r.time = time;
  r.fields = std::move(fields);
  canonicalize(r);

  EncodeResult enc = encode_record(r);
  if (!enc.ok()) throw BuildError(std::move(enc.violations));
  r.rec_size = enc.rec_size;
  r.checksum = enc.checksum;
  return r;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

/// A parsed record plus the exact byte count it occupied (always equal to
/// the embedded recS char count).
struct Parsed {
  Record record;
  std::size_t consumed = 0;
};

namespace detail {

class Cursor {
 public:
  Cursor(std::span<const std::uint8_t> buf, std::size_t begin, std::size_t end)
      : buf_(buf), pos_(begin), end_(end) {}

  std::size_t pos() const { return pos_; }
  std::size_t remaining() const { return end_ - pos_; }

  std::optional<std::string_view> take(std::size_t n) {
    if (remaining() < n) return std::nullopt;
    auto sv = std::string_view(reinterpret_cast<const char*>(buf_.data()) + pos_, n);
    pos_ += n;
    return sv;
  }

  bool expect(std::string_view lit) {
    auto sv = take(lit.size());
    if (!sv || *sv != lit) return false;
    return true;
  }

  /// Bytes up to but excluding the next NUL; consumes the NUL too.
  std::optional<std::string_view> take_until_nul() {
    for (std::size_t i = pos_; i < end_; ++i) {
      if (buf_[i] == 0) {
        auto sv = std::string_view(reinterpret_cast<const char*>(buf_.data()) + pos_, i - pos_);
        pos_ = i + 1;
        return sv;
      }
    }
    return std::nullopt;
  }

 private:
  std::span<const std::uint8_t> buf_;
  std::size_t pos_;
  std::size_t end_;
};

inline std::optional<int> hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;  // accepted on input
  return std::nullopt;
}

}  // namespace detail

/// Parses one record starting exactly at `offset`. Total inverse of
/// encode_record: the record tag and recS give the frame, the catalog gives
/// per-field length rules, and the checksum is verified last. Semantic range
/// checks (calendar validity, wifi status) are validate_record's job; this
/// function enforces lexical shape only, so damaged-but-framable data can
/// still be recovered and inspected.
inline ParseResult<Parsed> parse_record(std::span<const std::uint8_t> buffer, std::size_t offset = 0) {
  auto fail = [&](ParseErrorKind kind, std::size_t at, std::string label = {},
                  std::string detail = {}) {
    return ParseResult<Parsed>(ParseError{kind, at, std::move(label), std::move(detail), {}, {}});
  };

  if (offset > buffer.size() || buffer.size() - offset < 2)
    return fail(ParseErrorKind::TruncatedRecord, offset, {}, "no room for record tag");
  auto tag = std::string_view(reinterpret_cast<const char*>(buffer.data()) + offset, 2);
  auto type = record_type_from_tag(tag);
  if (!type) return fail(ParseErrorKind::BadTag, offset, {}, std::string(tag));

  // recS comes first and frames the record.
  constexpr std::size_t kHeadLen = 2 + 6 + 12;  // tag + " recS " + data
  if (buffer.size() - offset < kHeadLen)
    return fail(ParseErrorKind::TruncatedRecord, offset, "recS", "no room for recS");
  auto head = std::string_view(reinterpret_cast<const char*>(buffer.data()) + offset + 2, 6);
  if (head != " recS ")
    return fail(ParseErrorKind::FieldFormatError, offset + 2, "recS", "recS must follow the tag");
  auto rs_text =
      std::string_view(reinterpret_cast<const char*>(buffer.data()) + offset + 8, 12);
  auto rs = RecSize::from_text(rs_text);
  if (!rs)
    return fail(ParseErrorKind::FieldFormatError, offset + 8, "recS", std::string(rs_text));

  const std::size_t length = rs->char_count;
  if (length < kHeadLen + 14)  // minimal tail: " chkS " + 8 hex
    return fail(ParseErrorKind::CountMismatch, offset + 8, "recS",
                "char_count " + std::to_string(length) + " below structural minimum");
  if (buffer.size() - offset < length)
    return fail(ParseErrorKind::TruncatedRecord, offset, "recS",
                "record claims " + std::to_string(length) + " bytes, " +
                    std::to_string(buffer.size() - offset) + " available");

  detail::Cursor cur(buffer, offset + kHeadLen, offset + length);

  Record rec;
  rec.type = *type;
  rec.rec_size = *rs;

  // ebbD and ebbT are structurally mandatory in every record type.
  if (!cur.expect(" ebbD "))
    return fail(ParseErrorKind::FieldFormatError, cur.pos(), "ebbD", "expected after recS");
  if (auto t = cur.take(10); !t || !EbbDate::from_text(*t))
    return fail(ParseErrorKind::FieldFormatError, cur.pos(), "ebbD");
  else
    rec.date = *EbbDate::from_text(*t);
  if (!cur.expect(" ebbT "))
    return fail(ParseErrorKind::FieldFormatError, cur.pos(), "ebbT", "expected after ebbD");
  if (auto t = cur.take(12); !t || !EbbTime::from_text(*t))
    return fail(ParseErrorKind::FieldFormatError, cur.pos(), "ebbT");
  else
    rec.time = *EbbTime::from_text(*t);

  bool saw_checksum = false;
  while (!saw_checksum) {
    if (!cur.expect(" "))
      return fail(ParseErrorKind::FieldFormatError, cur.pos(), "chkS",
                  "record ends without chkS");
    auto label_sv = cur.take(4);
    if (!label_sv)
      return fail(ParseErrorKind::FieldFormatError, cur.pos(), {}, "truncated field label");
    std::string label(*label_sv);

    if (label == "chkS") {
      const std::size_t hash_span_end = cur.pos() + 1;  // through the space after the label
      if (!cur.expect(" "))
        return fail(ParseErrorKind::FieldFormatError, cur.pos(), label, "missing separator");
      auto hex = cur.take(8);
      if (!hex) return fail(ParseErrorKind::FieldFormatError, cur.pos(), label, "truncated hash");
      std::uint32_t stored = 0;
      for (char c : *hex) {
        // The record checksum is strict uppercase: a case-twiddled chkS must
        // not slip through as the same value.
        bool ok = (c >= '0' && c <= '9') || (c >= 'A' && c <= 'F');
        if (!ok)
          return fail(ParseErrorKind::FieldFormatError, cur.pos() - 8, label, std::string(*hex));
        stored = stored << 4 | static_cast<std::uint32_t>(c <= '9' ? c - '0' : c - 'A' + 10);
      }
      if (cur.pos() != offset + length)
        return fail(ParseErrorKind::CountMismatch, cur.pos(), "recS",
                    "bytes remain after chkS");
      auto computed = compute_checksum(buffer.subspan(offset, hash_span_end - offset));
      if (static_cast<std::uint32_t>(computed.hash64 & 0xFFFFFFFFu) != stored) {
        ParseError err{ParseErrorKind::ChecksumMismatch, offset, label, {}, {}, {}};
        err.expected = computed.rendered();
        err.actual = std::string(*hex);
        return ParseResult<Parsed>(std::move(err));
      }
      rec.checksum = std::string(*hex);
      saw_checksum = true;
      break;
    }

    const FieldSpec* spec = catalog_lookup(rec.type, label);
    if (spec == nullptr)
      return fail(ParseErrorKind::FieldFormatError, cur.pos() - 4, label, "unknown label");
    if (!cur.expect(" "))
      return fail(ParseErrorKind::FieldFormatError, cur.pos(), label, "missing separator");

    const std::size_t data_at = cur.pos();
    Field field{label, {}};
    switch (spec->kind) {
      case FieldKind::Date: {
        auto t = cur.take(10);
        auto v = t ? EbbDate::from_text(*t) : std::nullopt;
        if (!v) return fail(ParseErrorKind::FieldFormatError, data_at, label);
        field.data = *v;
        break;
      }
      case FieldKind::Time: {
        auto t = cur.take(12);
        auto v = t ? EbbTime::from_text(*t) : std::nullopt;
        if (!v) return fail(ParseErrorKind::FieldFormatError, data_at, label);
        field.data = *v;
        break;
      }
      case FieldKind::Size: {
        return fail(ParseErrorKind::FieldFormatError, data_at, label, "recS repeated");
      }
      case FieldKind::Checksum: {
        return fail(ParseErrorKind::FieldFormatError, data_at, label, "chkS repeated");
      }
      case FieldKind::Text: {
        auto t = cur.take_until_nul();
        if (!t)
          return fail(ParseErrorKind::FieldFormatError, data_at, label, "unterminated string");
        field.data = TextValue{std::string(*t)};
        break;
      }
      case FieldKind::FixedNum: {
        auto t = cur.take(spec->pattern.size());
        if (!t || !pattern_match(*t, spec->pattern))
          return fail(ParseErrorKind::FieldFormatError, data_at, label,
                      t ? std::string(*t) : "truncated");
        field.data = FixedNumValue{std::string(*t)};
        break;
      }
      case FieldKind::Blob: {
        auto hdr = cur.take(12);  // dd:llllllll:
        if (!hdr || (*hdr)[2] != ':' || (*hdr)[11] != ':' ||
            !ebb::detail::all_digits(hdr->substr(0, 2)) ||
            !ebb::detail::all_digits(hdr->substr(3, 8)))
          return fail(ParseErrorKind::FieldFormatError, data_at, label, "bad blob header");
        std::size_t payload_len = ebb::detail::to_u64(hdr->substr(3, 8));
        auto hex = cur.take(2 * payload_len);
        if (!hex)
          return fail(ParseErrorKind::FieldFormatError, data_at, label,
                      "blob hex truncated (claims " + std::to_string(payload_len) + " bytes)");
        BlobValue blob;
        blob.device = ebb::detail::to_int(hdr->substr(0, 2));
        blob.payload.reserve(payload_len);
        for (std::size_t i = 0; i < hex->size(); i += 2) {
          auto hi = detail::hex_nibble((*hex)[i]);
          auto lo = detail::hex_nibble((*hex)[i + 1]);
          if (!hi || !lo)
            return fail(ParseErrorKind::FieldFormatError, data_at + 12 + i, label,
                        "bad hex digit");
          blob.payload.push_back(static_cast<std::uint8_t>(*hi << 4 | *lo));
        }
        field.data = std::move(blob);
        break;
      }
      case FieldKind::SysX: {
        auto hdr = cur.take(3);
        if (!hdr || (*hdr)[2] != ':' || !ebb::detail::all_digits(hdr->substr(0, 2)))
          return fail(ParseErrorKind::FieldFormatError, data_at, label, "bad sysX index");
        auto text = cur.take_until_nul();
        if (!text)
          return fail(ParseErrorKind::FieldFormatError, data_at, label, "unterminated string");
        field.data = SysXValue{ebb::detail::to_int(hdr->substr(0, 2)), std::string(*text)};
        break;
      }
      case FieldKind::Wifi: {
        auto t = cur.take(4);
        if (!t || (*t)[1] != ':' || !ebb::detail::all_digits(t->substr(0, 1)) ||
            !ebb::detail::all_digits(t->substr(2, 2)))
          return fail(ParseErrorKind::FieldFormatError, data_at, label,
                      t ? std::string(*t) : "truncated");
        field.data =
            WifiValue{ebb::detail::to_int(t->substr(0, 1)), ebb::detail::to_int(t->substr(2, 2))};
        break;
      }
      case FieldKind::Decision: {
        auto hdr = cur.take(5);
        if (!hdr || (*hdr)[4] != ':' || !ebb::detail::all_digits(hdr->substr(0, 4)))
          return fail(ParseErrorKind::FieldFormatError, data_at, label, "bad decision code");
        auto reason = cur.take_until_nul();
        if (!reason)
          return fail(ParseErrorKind::FieldFormatError, data_at, label, "unterminated string");
        field.data = DecisionValue{ebb::detail::to_int(hdr->substr(0, 4)), std::string(*reason)};
        break;
      }
    }
    rec.fields.push_back(std::move(field));
  }

  if (rec.rec_size.field_count != field_count(rec))
    return fail(ParseErrorKind::CountMismatch, offset + 8, "recS",
                "recS says " + std::to_string(rec.rec_size.field_count) + " fields, parsed " +
                    std::to_string(field_count(rec)));

  return ParseResult<Parsed>(Parsed{std::move(rec), length});
}

inline ParseResult<Parsed> parse_record(std::string_view bytes, std::size_t offset = 0) {
  return parse_record(std::span<const std::uint8_t>(
                          reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()),
                      offset);
}

// ---------------------------------------------------------------------------
// Forensic stream scan
// ---------------------------------------------------------------------------

struct LocatedRecord {
  std::size_t offset;
  std::size_t length;
  Record record;
};

/// A span of bytes that could not be framed as any valid record.
struct CorruptRegion {
  std::size_t offset;
  std::size_t length;
  ParseError first_error;  // what failed at the region start
};

using ScanItem = std::variant<LocatedRecord, CorruptRegion>;

/// Walks a buffer recovering every intact record. On damage it advances
/// byte-by-byte until a plausible tag with self-consistent recS and a valid
/// checksum parses, reporting the skipped span. Newlines between records are
/// tolerated silently (dump output may add them).
inline std::vector<ScanItem> scan_stream(std::span<const std::uint8_t> buffer) {
  std::vector<ScanItem> items;
  std::size_t pos = 0;
  while (pos < buffer.size()) {
    if (buffer[pos] == '\n') {
      ++pos;
      continue;
    }
    auto parsed = parse_record(buffer, pos);
    if (parsed.ok()) {
      items.push_back(LocatedRecord{pos, parsed.value().consumed, parsed.value().record});
      pos += parsed.value().consumed;
      continue;
    }
    // Carve forward for the next record boundary.
    ParseError first = parsed.error();
    std::size_t probe = pos + 1;
    bool resumed = false;
    for (; probe < buffer.size(); ++probe) {
      char c = static_cast<char>(buffer[probe]);
      if (c != 'M' && c != 'D' && c != 'R') continue;  // cheap tag prefilter
      auto retry = parse_record(buffer, probe);
      if (retry.ok()) {
        items.push_back(CorruptRegion{pos, probe - pos, std::move(first)});
        items.push_back(LocatedRecord{probe, retry.value().consumed, retry.value().record});
        pos = probe + retry.value().consumed;
        resumed = true;
        break;
      }
    }
    if (!resumed) {
      items.push_back(CorruptRegion{pos, buffer.size() - pos, std::move(first)});
      break;
    }
  }
  return items;
}

inline std::vector<ScanItem> scan_stream(std::string_view bytes) {
  return scan_stream(std::span<const std::uint8_t>(
      reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()));
}

}  // namespace ebb
