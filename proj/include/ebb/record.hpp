#pragma once

// EBB record model: the three record types (MD/DD/RD), their field catalogs,
// and structural validation. Everything here is value types with no I/O;
// byte-level encoding lives in codec.hpp.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ebb {

// ---------------------------------------------------------------------------
// Record type tag
// ---------------------------------------------------------------------------

/// The three EBB record types, serialized as exactly two ASCII chars.
/// MD: robot/operator identity, one per store. DD: store bookkeeping, one per
/// store. RD: operational samples, ring of n.
enum class RecordType : std::uint8_t { MD, DD, RD };

inline constexpr std::string_view to_tag(RecordType t) {
  switch (t) {
    case RecordType::MD: return "MD";
    case RecordType::DD: return "DD";
    case RecordType::RD: return "RD";
  }
  return {};
}

inline std::optional<RecordType> record_type_from_tag(std::string_view tag) {
  if (tag == "MD") return RecordType::MD;
  if (tag == "DD") return RecordType::DD;
  if (tag == "RD") return RecordType::RD;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Date / time / size scalar types
// ---------------------------------------------------------------------------

inline int days_in_month(int year, int month) {
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month < 1 || month > 12) return 0;
  bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
  return (month == 2 && leap) ? 29 : kDays[month - 1];
}

/// Calendar date, canonical text "yyyy:mm:dd" (10 chars, zero-padded).
/// The all-zero value is the empty-store sentinel that DD oldest/newest
/// fields carry before the first RD is written.
struct EbbDate {
  int year = 0;
  int month = 0;
  int day = 0;

  auto operator<=>(const EbbDate&) const = default;

  bool is_zero() const { return year == 0 && month == 0 && day == 0; }

  /// Strict calendar validity; the zero sentinel is *not* valid here.
  bool valid() const {
    return year >= 0 && year <= 9999 && month >= 1 && month <= 12 &&
           day >= 1 && day <= days_in_month(year, month);
  }

  std::string to_text() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d:%02d:%02d", year, month, day);
    return buf;
  }

  /// Lexical parse only ("dddd:dd:dd"); calendar checks are validation's job.
  static std::optional<EbbDate> from_text(std::string_view s);
};

/// Time of day, canonical text "hh:mm:ss:mmm" (12 chars, 3-digit ms).
struct EbbTime {
  int hour = 0;
  int minute = 0;
  int second = 0;
  int millisecond = 0;

  auto operator<=>(const EbbTime&) const = default;

  bool valid() const {
    return hour >= 0 && hour <= 23 && minute >= 0 && minute <= 59 &&
           second >= 0 && second <= 59 && millisecond >= 0 && millisecond <= 999;
  }

  std::int64_t ms_of_day() const {
    return ((hour * 60ll + minute) * 60ll + second) * 1000ll + millisecond;
  }

  static EbbTime from_ms_of_day(std::int64_t ms) {
    EbbTime t;
    t.millisecond = static_cast<int>(ms % 1000);
    ms /= 1000;
    t.second = static_cast<int>(ms % 60);
    ms /= 60;
    t.minute = static_cast<int>(ms % 60);
    t.hour = static_cast<int>(ms / 60);
    return t;
  }

  std::string to_text() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%02d:%02d:%02d:%03d", hour, minute, second, millisecond);
    return buf;
  }

  static std::optional<EbbTime> from_text(std::string_view s);
};

/// A full (date, time) instant; orders lexicographically.
struct Stamp {
  EbbDate date;
  EbbTime time;
  auto operator<=>(const Stamp&) const = default;
};

/// The recS self-description: field count and total serialized byte count of
/// the record, both including the recS field itself. Canonical text
/// "fff:cccccccc" (12 chars).
struct RecSize {
  static constexpr int kMaxFields = 999;
  static constexpr std::uint32_t kMaxChars = 99'999'999;

  int field_count = 0;
  std::uint32_t char_count = 0;

  bool operator==(const RecSize&) const = default;

  bool in_range() const {
    return field_count >= 0 && field_count <= kMaxFields && char_count <= kMaxChars;
  }

  std::string to_text() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%03d:%08u", field_count, char_count);
    return buf;
  }

  static std::optional<RecSize> from_text(std::string_view s);
};

// ---------------------------------------------------------------------------
// Field catalog (Tables 3, 5, 7)
// ---------------------------------------------------------------------------

/// Data kind of a field, driving both length rules and value representation.
enum class FieldKind : std::uint8_t {
  Date,      // 10 chars yyyy:mm:dd
  Time,      // 12 chars hh:mm:ss:mmm
  Size,      // 12 chars fff:cccccccc (recS)
  Text,      // variable, NUL-terminated
  FixedNum,  // fixed-width digits per pattern
  Blob,      // dd:llllllll:<hex payload>
  SysX,      // dd:<text NUL>
  Wifi,      // s:gg (status 0|1, strength 00-99)
  Decision,  // cccc:<reason NUL>
  Checksum,  // 8 uppercase hex chars
};

enum class BlobMedia : std::uint8_t { Wav, Jpg };

/// Fixed-numeric pattern templates. '0' marks a digit position, '+' a
/// mandatory sign ('+' or '-'); every other char is literal.
inline constexpr std::string_view kActuatorPattern = "000:+0000.00";
inline constexpr std::string_view kSensorPattern = "00:000";
inline constexpr std::string_view kAxisTriplePattern = "00:+0000:+0000:+0000";
inline constexpr std::string_view kTemperaturePattern = "00:+0000";
inline constexpr std::string_view kBatteryPattern = "000";
inline constexpr std::string_view kRecordCountPattern = "0000000000";
inline constexpr std::string_view kByteOffsetPattern = "0000000000000000";

inline bool pattern_match(std::string_view text, std::string_view pattern) {
  if (text.size() != pattern.size()) return false;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    char p = pattern[i], c = text[i];
    if (p == '0') {
      if (c < '0' || c > '9') return false;
    } else if (p == '+') {
      if (c != '+' && c != '-') return false;
    } else if (c != p) {
      return false;
    }
  }
  return true;
}

/// One catalog entry: what a (record type, label) pair means.
struct FieldSpec {
  RecordType record_type;
  std::string_view label;
  FieldKind kind;
  std::string_view pattern;  // FixedNum only
  bool required;
  bool repeatable;
  BlobMedia media = BlobMedia::Wav;  // Blob only
};

namespace detail {

inline constexpr std::array<FieldSpec, 11> kMdCatalog{{
    {RecordType::MD, "recS", FieldKind::Size, {}, true, false},
    {RecordType::MD, "ebbD", FieldKind::Date, {}, true, false},
    {RecordType::MD, "ebbT", FieldKind::Time, {}, true, false},
    {RecordType::MD, "botN", FieldKind::Text, {}, true, false},
    {RecordType::MD, "botV", FieldKind::Text, {}, false, false},
    {RecordType::MD, "botS", FieldKind::Text, {}, false, false},
    {RecordType::MD, "botM", FieldKind::Text, {}, true, false},
    {RecordType::MD, "opeR", FieldKind::Text, {}, false, false},
    {RecordType::MD, "resP", FieldKind::Text, {}, true, false},
    {RecordType::MD, "ebbN", FieldKind::Text, {}, true, false},
    {RecordType::MD, "chkS", FieldKind::Checksum, {}, true, false},
}};

inline constexpr std::array<FieldSpec, 11> kDdCatalog{{
    {RecordType::DD, "recS", FieldKind::Size, {}, true, false},
    {RecordType::DD, "ebbD", FieldKind::Date, {}, true, false},
    {RecordType::DD, "ebbT", FieldKind::Time, {}, true, false},
    {RecordType::DD, "ebbN", FieldKind::FixedNum, kRecordCountPattern, true, false},
    {RecordType::DD, "ebbX", FieldKind::FixedNum, kByteOffsetPattern, true, false},
    {RecordType::DD, "ebD1", FieldKind::Date, {}, true, false},
    {RecordType::DD, "ebT1", FieldKind::Time, {}, true, false},
    {RecordType::DD, "ebDM", FieldKind::Date, {}, true, false},
    {RecordType::DD, "ebTM", FieldKind::Time, {}, true, false},
    {RecordType::DD, "sysX", FieldKind::SysX, {}, false, false},
    {RecordType::DD, "chkS", FieldKind::Checksum, {}, true, false},
}};

inline constexpr std::array<FieldSpec, 21> kRdCatalog{{
    {RecordType::RD, "recS", FieldKind::Size, {}, true, false},
    {RecordType::RD, "ebbD", FieldKind::Date, {}, true, false},
    {RecordType::RD, "ebbT", FieldKind::Time, {}, true, false},
    {RecordType::RD, "botT", FieldKind::Time, {}, true, false},
    {RecordType::RD, "actD", FieldKind::FixedNum, kActuatorPattern, false, true},
    {RecordType::RD, "actV", FieldKind::FixedNum, kActuatorPattern, false, true},
    {RecordType::RD, "batL", FieldKind::FixedNum, kBatteryPattern, false, false},
    {RecordType::RD, "tchS", FieldKind::FixedNum, kSensorPattern, false, true},
    {RecordType::RD, "irSe", FieldKind::FixedNum, kSensorPattern, false, true},
    {RecordType::RD, "lfSe", FieldKind::FixedNum, kSensorPattern, false, true},
    {RecordType::RD, "gyrV", FieldKind::FixedNum, kAxisTriplePattern, false, true},
    {RecordType::RD, "accV", FieldKind::FixedNum, kAxisTriplePattern, false, true},
    {RecordType::RD, "tmpV", FieldKind::FixedNum, kTemperaturePattern, false, true},
    {RecordType::RD, "micI", FieldKind::Blob, {}, false, true, BlobMedia::Wav},
    {RecordType::RD, "camF", FieldKind::Blob, {}, false, true, BlobMedia::Jpg},
    {RecordType::RD, "txtC", FieldKind::Text, {}, false, true},
    {RecordType::RD, "txtR", FieldKind::Text, {}, false, true},
    {RecordType::RD, "decC", FieldKind::Decision, {}, false, true},
    {RecordType::RD, "wifi", FieldKind::Wifi, {}, false, false},
    {RecordType::RD, "sysX", FieldKind::SysX, {}, false, true},
    {RecordType::RD, "chkS", FieldKind::Checksum, {}, true, false},
}};

}  // namespace detail

/// All catalog entries for one record type, in canonical (table) order.
inline std::span<const FieldSpec> catalog(RecordType t) {
  switch (t) {
    case RecordType::MD: return detail::kMdCatalog;
    case RecordType::DD: return detail::kDdCatalog;
    case RecordType::RD: return detail::kRdCatalog;
  }
  return {};
}

/// Looks up (record type, label). Returns nullptr when the label is not in
/// that record type's catalog; labels are namespaced per record type (DD ebbN
/// is a record count, MD ebbN an EBB name).
inline const FieldSpec* catalog_lookup(RecordType t, std::string_view label) {
  for (const FieldSpec& spec : catalog(t)) {
    if (spec.label == label) return &spec;
  }
  return nullptr;
}

/// Position of a label in the catalog, for canonical ordering. Unknown labels
/// sort last.
inline std::size_t catalog_order(RecordType t, std::string_view label) {
  auto specs = catalog(t);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (specs[i].label == label) return i;
  }
  return specs.size();
}

// ---------------------------------------------------------------------------
// Field values
// ---------------------------------------------------------------------------

/// Variable-length text, stored without its wire NUL terminator.
struct TextValue {
  std::string text;
  bool operator==(const TextValue&) const = default;
};

/// Pattern-conformant fixed-width numeric text, stored verbatim.
struct FixedNumValue {
  std::string text;
  bool operator==(const FixedNumValue&) const = default;
};

/// Binary payload (wav/jpg) with its device number. Wire form is
/// dd:llllllll:<uppercase hex>, where llllllll counts raw payload bytes.
struct BlobValue {
  int device = 0;
  std::vector<std::uint8_t> payload;
  bool operator==(const BlobValue&) const = default;
};

/// Manufacturer escape field: dd:<text NUL>.
struct SysXValue {
  int index = 0;
  std::string text;
  bool operator==(const SysXValue&) const = default;
};

/// WiFi status (0|1) and signal strength (00-99).
struct WifiValue {
  int status = 0;
  int strength = 0;
  bool operator==(const WifiValue&) const = default;
};

/// Decision code (0000-9999) and free-text reason (may be empty).
struct DecisionValue {
  int code = 0;
  std::string reason;
  bool operator==(const DecisionValue&) const = default;
};

/// An 8-uppercase-hex-char checksum rendering.
struct ChecksumText {
  std::string hex;
  bool operator==(const ChecksumText&) const = default;
};

using FieldData = std::variant<EbbDate, EbbTime, RecSize, TextValue, FixedNumValue,
                               BlobValue, SysXValue, WifiValue, DecisionValue, ChecksumText>;

inline FieldKind kind_of(const FieldData& data) {
  switch (data.index()) {
    case 0: return FieldKind::Date;
    case 1: return FieldKind::Time;
    case 2: return FieldKind::Size;
    case 3: return FieldKind::Text;
    case 4: return FieldKind::FixedNum;
    case 5: return FieldKind::Blob;
    case 6: return FieldKind::SysX;
    case 7: return FieldKind::Wifi;
    case 8: return FieldKind::Decision;
    default: return FieldKind::Checksum;
  }
}

/// One label + value pair.
struct Field {
  std::string label;
  FieldData data;
  bool operator==(const Field&) const = default;
};

/// Serialized length of a field's data element, in bytes.
inline std::uint64_t field_data_length(const FieldData& data) {
  switch (kind_of(data)) {
    case FieldKind::Date: return 10;
    case FieldKind::Time: return 12;
    case FieldKind::Size: return 12;
    case FieldKind::Text: return std::get<TextValue>(data).text.size() + 1;
    case FieldKind::FixedNum: return std::get<FixedNumValue>(data).text.size();
    case FieldKind::Blob: return 12 + 2 * std::get<BlobValue>(data).payload.size();
    case FieldKind::SysX: return 4 + std::get<SysXValue>(data).text.size();
    case FieldKind::Wifi: return 4;
    case FieldKind::Decision: return 6 + std::get<DecisionValue>(data).reason.size();
    case FieldKind::Checksum: return 8;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Record
// ---------------------------------------------------------------------------

/// One EBB record. The four fields common to every record type (recS, ebbD,
/// ebbT, chkS) are housed explicitly; `fields` holds the remaining body
/// fields in on-record order.
struct Record {
  RecordType type = RecordType::RD;
  EbbDate date;        // ebbD
  EbbTime time;        // ebbT
  RecSize rec_size;    // recS, including itself in both counts
  std::vector<Field> fields;
  std::string checksum;  // chkS data, 8 uppercase hex

  Stamp stamp() const { return {date, time}; }
  bool operator==(const Record&) const = default;

  const Field* find(std::string_view label) const {
    for (const Field& f : fields) {
      if (f.label == label) return &f;
    }
    return nullptr;
  }
};

/// Total serialized byte length of a record: tag, separators, every field's
/// label and data, NUL terminators and the 8 chkS hex chars included. This is
/// the value recS carries and the codec emits; keeping the arithmetic here
/// gives validation and encoding a single source of truth.
inline std::uint64_t encoded_length(const Record& r) {
  std::uint64_t len = 2;         // record tag
  len += 6 + 12;                 // " recS " + data
  len += 6 + 10;                 // " ebbD "
  len += 6 + 12;                 // " ebbT "
  for (const Field& f : r.fields) len += 6 + field_data_length(f.data);
  len += 6 + 8;                  // " chkS "
  return len;
}

/// Number of fields as recS counts them: the housed four plus the body.
inline int field_count(const Record& r) {
  return static_cast<int>(r.fields.size()) + 4;
}

/// Stable-sorts body fields into canonical (table) order; instances of a
/// repeatable field keep their relative order. Idempotent.
inline void canonicalize(Record& r) {
  std::stable_sort(r.fields.begin(), r.fields.end(), [&](const Field& a, const Field& b) {
    return catalog_order(r.type, a.label) < catalog_order(r.type, b.label);
  });
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

enum class Rule : std::uint8_t {
  UnknownLabel,
  KindMismatch,
  MissingRequiredField,
  DuplicateField,
  OrderViolation,
  RangeViolation,
  FormatViolation,
  CountMismatch,
  Oversize,
};

inline std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::UnknownLabel: return "unknown-label";
    case Rule::KindMismatch: return "kind-mismatch";
    case Rule::MissingRequiredField: return "missing-required-field";
    case Rule::DuplicateField: return "duplicate-field";
    case Rule::OrderViolation: return "order-violation";
    case Rule::RangeViolation: return "range-violation";
    case Rule::FormatViolation: return "format-violation";
    case Rule::CountMismatch: return "count-mismatch";
    case Rule::Oversize: return "oversize";
  }
  return "?";
}

/// One validation finding: the rule broken, the field it concerns, and the
/// observed value. Violations are data, not failures.
struct Violation {
  Rule rule;
  std::string field;
  std::string observed;

  std::string to_string() const {
    std::string s{rule_name(rule)};
    s += " field=";
    s += field;
    if (!observed.empty()) {
      s += " observed=";
      s += observed;
    }
    return s;
  }
};

namespace detail {

inline bool has_interior_nul(std::string_view s) {
  return s.find('\0') != std::string_view::npos;
}

inline void check_value(const FieldSpec& spec, const Field& f, std::vector<Violation>& out) {
  auto bad = [&](Rule rule, std::string observed) {
    out.push_back({rule, f.label, std::move(observed)});
  };
  switch (spec.kind) {
    case FieldKind::Date: {
      const auto& d = std::get<EbbDate>(f.data);
      // DD's oldest/newest slots carry the all-zero sentinel while the store
      // is empty; only those two labels admit it.
      bool sentinel_ok = spec.record_type == RecordType::DD &&
                         (f.label == "ebD1" || f.label == "ebDM");
      if (!d.valid() && !(sentinel_ok && d.is_zero())) bad(Rule::RangeViolation, d.to_text());
      break;
    }
    case FieldKind::Time: {
      const auto& t = std::get<EbbTime>(f.data);
      if (!t.valid()) bad(Rule::RangeViolation, t.to_text());
      break;
    }
    case FieldKind::Size: {
      const auto& s = std::get<RecSize>(f.data);
      if (!s.in_range()) bad(Rule::RangeViolation, s.to_text());
      break;
    }
    case FieldKind::Text: {
      const auto& v = std::get<TextValue>(f.data);
      if (has_interior_nul(v.text)) bad(Rule::FormatViolation, "interior NUL");
      break;
    }
    case FieldKind::FixedNum: {
      const auto& v = std::get<FixedNumValue>(f.data);
      if (!pattern_match(v.text, spec.pattern)) bad(Rule::FormatViolation, v.text);
      break;
    }
    case FieldKind::Blob: {
      const auto& v = std::get<BlobValue>(f.data);
      if (v.device < 0 || v.device > 99) bad(Rule::RangeViolation, std::to_string(v.device));
      if (v.payload.size() > 99'999'999) bad(Rule::Oversize, std::to_string(v.payload.size()));
      break;
    }
    case FieldKind::SysX: {
      const auto& v = std::get<SysXValue>(f.data);
      if (v.index < 0 || v.index > 99) bad(Rule::RangeViolation, std::to_string(v.index));
      if (has_interior_nul(v.text)) bad(Rule::FormatViolation, "interior NUL");
      break;
    }
    case FieldKind::Wifi: {
      const auto& v = std::get<WifiValue>(f.data);
      if (v.status != 0 && v.status != 1)
        bad(Rule::RangeViolation, "status must be 0 or 1, got " + std::to_string(v.status));
      if (v.strength < 0 || v.strength > 99)
        bad(Rule::RangeViolation, "strength must be 00-99, got " + std::to_string(v.strength));
      break;
    }
    case FieldKind::Decision: {
      const auto& v = std::get<DecisionValue>(f.data);
      if (v.code < 0 || v.code > 9999) bad(Rule::RangeViolation, std::to_string(v.code));
      if (has_interior_nul(v.reason)) bad(Rule::FormatViolation, "interior NUL");
      break;
    }
    case FieldKind::Checksum: {
      const auto& v = std::get<ChecksumText>(f.data);
      bool ok = v.hex.size() == 8 &&
                std::all_of(v.hex.begin(), v.hex.end(), [](char c) {
                  return (c >= '0' && c <= '9') || (c >= 'A' && c <= 'F');
                });
      if (!ok) bad(Rule::FormatViolation, v.hex);
      break;
    }
  }
}

}  // namespace detail

/// Checks a structurally well-formed record against every catalog, ordering,
/// count and range rule. Returns the empty list iff the record is clean.
inline std::vector<Violation> validate_record(const Record& r) {
  std::vector<Violation> out;

  if (!r.date.valid()) out.push_back({Rule::RangeViolation, "ebbD", r.date.to_text()});
  if (!r.time.valid()) out.push_back({Rule::RangeViolation, "ebbT", r.time.to_text()});

  // Body fields against the catalog.
  for (const Field& f : r.fields) {
    const FieldSpec* spec = catalog_lookup(r.type, f.label);
    if (spec == nullptr) {
      out.push_back({Rule::UnknownLabel, f.label, {}});
      continue;
    }
    if (spec->kind == FieldKind::Size || spec->kind == FieldKind::Checksum ||
        f.label == "ebbD" || f.label == "ebbT") {
      out.push_back({Rule::DuplicateField, f.label, "housed field repeated in body"});
      continue;
    }
    if (kind_of(f.data) != spec->kind) {
      out.push_back({Rule::KindMismatch, f.label, {}});
      continue;
    }
    detail::check_value(*spec, f, out);
  }

  // Required fields.
  for (const FieldSpec& spec : catalog(r.type)) {
    if (!spec.required) continue;
    if (spec.kind == FieldKind::Size || spec.kind == FieldKind::Checksum ||
        spec.label == "ebbD" || spec.label == "ebbT")
      continue;  // housed
    if (r.find(spec.label) == nullptr)
      out.push_back({Rule::MissingRequiredField, std::string(spec.label), {}});
  }

  // Single-instance fields must not repeat.
  for (std::size_t i = 0; i < r.fields.size(); ++i) {
    const FieldSpec* spec = catalog_lookup(r.type, r.fields[i].label);
    if (spec == nullptr || spec->repeatable) continue;
    for (std::size_t j = i + 1; j < r.fields.size(); ++j) {
      if (r.fields[j].label == r.fields[i].label) {
        out.push_back({Rule::DuplicateField, r.fields[i].label, {}});
        break;
      }
    }
  }

  // Canonical order: catalog positions non-decreasing (repeats contiguous).
  for (std::size_t i = 1; i < r.fields.size(); ++i) {
    if (catalog_order(r.type, r.fields[i - 1].label) > catalog_order(r.type, r.fields[i].label)) {
      out.push_back({Rule::OrderViolation, r.fields[i].label,
                     "appears after " + r.fields[i - 1].label});
      break;
    }
  }

  // recS agreement with reality.
  if (r.rec_size.field_count != field_count(r)) {
    out.push_back({Rule::CountMismatch, "recS",
                   "field_count " + std::to_string(r.rec_size.field_count) + " actual " +
                       std::to_string(field_count(r))});
  }
  std::uint64_t len = encoded_length(r);
  if (r.rec_size.char_count != len) {
    out.push_back({Rule::CountMismatch, "recS",
                   "char_count " + std::to_string(r.rec_size.char_count) + " actual " +
                       std::to_string(len)});
  }
  if (field_count(r) > RecSize::kMaxFields)
    out.push_back({Rule::Oversize, "recS", std::to_string(field_count(r)) + " fields"});
  if (len > RecSize::kMaxChars)
    out.push_back({Rule::Oversize, "recS", std::to_string(len) + " chars"});

  // Checksum rendering (value correctness is the codec's business).
  bool hex_ok = r.checksum.size() == 8 &&
                std::all_of(r.checksum.begin(), r.checksum.end(), [](char c) {
                  return (c >= '0' && c <= '9') || (c >= 'A' && c <= 'F');
                });
  if (!hex_ok) out.push_back({Rule::FormatViolation, "chkS", r.checksum});

  return out;
}

// ---------------------------------------------------------------------------
// Inline scalar parsers
// ---------------------------------------------------------------------------

namespace detail {

inline bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

inline int to_int(std::string_view s) {
  int v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

inline std::uint64_t to_u64(std::string_view s) {
  std::uint64_t v = 0;
  for (char c : s) v = v * 10 + static_cast<std::uint64_t>(c - '0');
  return v;
}

}  // namespace detail

inline std::optional<EbbDate> EbbDate::from_text(std::string_view s) {
  if (s.size() != 10 || s[4] != ':' || s[7] != ':') return std::nullopt;
  auto y = s.substr(0, 4), m = s.substr(5, 2), d = s.substr(8, 2);
  if (!detail::all_digits(y) || !detail::all_digits(m) || !detail::all_digits(d))
    return std::nullopt;
  return EbbDate{detail::to_int(y), detail::to_int(m), detail::to_int(d)};
}

inline std::optional<EbbTime> EbbTime::from_text(std::string_view s) {
  if (s.size() != 12 || s[2] != ':' || s[5] != ':' || s[8] != ':') return std::nullopt;
  auto h = s.substr(0, 2), mi = s.substr(3, 2), se = s.substr(6, 2), ms = s.substr(9, 3);
  if (!detail::all_digits(h) || !detail::all_digits(mi) || !detail::all_digits(se) ||
      !detail::all_digits(ms))
    return std::nullopt;
  return EbbTime{detail::to_int(h), detail::to_int(mi), detail::to_int(se), detail::to_int(ms)};
}

inline std::optional<RecSize> RecSize::from_text(std::string_view s) {
  if (s.size() != 12 || s[3] != ':') return std::nullopt;
  auto f = s.substr(0, 3), c = s.substr(4, 8);
  if (!detail::all_digits(f) || !detail::all_digits(c)) return std::nullopt;
  return RecSize{detail::to_int(f), static_cast<std::uint32_t>(detail::to_u64(c))};
}

}  // namespace ebb
