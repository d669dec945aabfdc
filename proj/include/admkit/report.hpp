#ifndef ADMKIT_REPORT_HPP
#define ADMKIT_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "admkit/asymptotics.hpp"
#include "admkit/config.hpp"
#include "admkit/conformal.hpp"
#include "admkit/verdicts.hpp"

namespace admkit {

// Insertion-ordered JSON tree with deterministic serialization: doubles are
// written with 17 significant digits so reports are byte-stable and re-read
// without precision loss.
class JsonValue {
 public:
  enum class Kind { Null, Bool, Int, UInt, Double, String, Array, Object };

  JsonValue() : kind_(Kind::Null) {}
  JsonValue(bool b) : kind_(Kind::Bool), bool_(b) {}
  JsonValue(int i) : kind_(Kind::Int), int_(i) {}
  JsonValue(std::int64_t i) : kind_(Kind::Int), int_(i) {}
  JsonValue(std::uint64_t u) : kind_(Kind::UInt), uint_(u) {}
  JsonValue(double d) : kind_(Kind::Double), double_(d) {}
  JsonValue(const char* s) : kind_(Kind::String), string_(s) {}
  JsonValue(std::string s) : kind_(Kind::String), string_(std::move(s)) {}

  static JsonValue object() { JsonValue v; v.kind_ = Kind::Object; return v; }
  static JsonValue array() { JsonValue v; v.kind_ = Kind::Array; return v; }

  JsonValue& set(const std::string& key, JsonValue value);
  JsonValue& push(JsonValue value);

  Kind kind() const { return kind_; }
  std::string dump(int indent = 2) const;

 private:
  void write(std::string& out, int indent, int depth) const;

  Kind kind_;
  bool bool_ = false;
  std::int64_t int_ = 0;
  std::uint64_t uint_ = 0;
  double double_ = 0.0;
  std::string string_;
  std::vector<JsonValue> array_;
  std::vector<std::pair<std::string, JsonValue>> object_;
};

JsonValue to_json(const LimitEstimate& estimate);
JsonValue to_json(const DecayRow& row);
JsonValue to_json(const Region& region);
JsonValue to_json(const ConditionReport& report);
JsonValue to_json(const TheoremReport& report);
JsonValue to_json(const MassAdditivityReport& report);
JsonValue to_json(const MassDifferenceReport& report);
JsonValue config_echo(const RunConfig& config);

// One plot row: a named quantity sampled at one radius.
struct CsvRow {
  std::string quantity;
  double radius = 0.0;
  double value = 0.0;
};

std::string render_csv(const std::vector<CsvRow>& rows);

// The published shape of the report JSON.
std::string report_schema_text();

}  // namespace admkit

#endif  // ADMKIT_REPORT_HPP
