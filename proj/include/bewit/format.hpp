#pragma once

#include <string>
#include <utility>
#include <vector>

namespace bewit {

/// "%.17g", with ".0" appended when the result would read as an integer.
std::string num17(double v);

/// Flat JSON object writer; keys keep insertion order.
class JsonObject {
 public:
  JsonObject& add(const std::string& key, double v);
  JsonObject& add(const std::string& key, int v);
  JsonObject& add(const std::string& key, long v);
  JsonObject& add(const std::string& key, bool v);
  JsonObject& add(const std::string& key, const std::string& v);
  JsonObject& add(const std::string& key, const char* v);
  JsonObject& add_null(const std::string& key);
  /// `json` is inserted verbatim.
  JsonObject& add_raw(const std::string& key, const std::string& json);

  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

std::string json_quote(const std::string& s);

}  // namespace bewit
