#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace terra {

/// One PDS3 keyword value. Numbers keep their unit suffix (`0.25 <m/pixel>`
/// parses to Real 0.25 with unit "m/pixel").
struct Pds3Value {
  enum class Kind { Integer, Real, Text, Symbol, Sequence };

  Kind kind = Kind::Symbol;
  long long integer = 0;
  double real = 0.0;
  std::string text;  // Text and Symbol payload
  std::vector<Pds3Value> items;
  std::string unit;

  bool is_numeric() const { return kind == Kind::Integer || kind == Kind::Real; }
  double as_real() const;    // throws UnsupportedValue when not numeric
  long long as_int() const;  // throws UnsupportedValue when not an integer

  bool operator==(const Pds3Value& o) const;
};

struct Pds3Label {
  /// Keyword/value pairs in file order. OBJECT/GROUP markers are structural
  /// and not recorded; keywords inside objects appear flattened.
  std::vector<std::pair<std::string, Pds3Value>> entries;
  /// Byte offset of the data area: RECORD_BYTES * LABEL_RECORDS when the
  /// label declares them, otherwise the first byte after the END statement.
  size_t end_offset = 0;

  const Pds3Value* find(std::string_view keyword) const;
  const Pds3Value& require(std::string_view keyword) const;  // MalformedLabel if absent

  bool operator==(const Pds3Label& o) const {
    return entries == o.entries && end_offset == o.end_offset;
  }
};

/// Parses the label text at the start of a PDS3 product. Bytes past the END
/// statement are never interpreted.
Pds3Label parse_pds3_label(std::string_view bytes);

}  // namespace terra
