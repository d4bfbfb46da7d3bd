#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hybrid/exactfield/interval.hpp"

namespace hybrid::cli {

/// Bad command-line input; the front end maps it to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Status { pass, fail, skip };
const char* to_string(Status s);

struct Check {
  std::string name;
  Status status = Status::pass;
  /// Short label of the construction step this check mechanizes.
  std::string anchor;
  std::vector<std::pair<std::string, std::string>> exact;
  std::vector<std::pair<std::string, double>> numeric;
  std::string detail;

  Check& value(std::string key, std::string text) {
    exact.emplace_back(std::move(key), std::move(text));
    return *this;
  }
  Check& number(std::string key, double x) {
    numeric.emplace_back(std::move(key), x);
    return *this;
  }
  /// Midpoint under `key` and the enclosure under `key_interval`.
  Check& interval(const std::string& key, const RealInterval& x);
  Check& require(bool ok) {
    if (!ok) status = Status::fail;
    return *this;
  }
};

struct Certificate {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<Check> checks;

  Check& add(std::string name, std::string anchor);
  bool pass() const;
  /// Deterministic JSON (schema 1): keys in insertion order, numbers rounded
  /// to 12 significant digits.
  std::string to_json() const;
  /// Aligned human-readable table.
  std::string to_table() const;
};

/// x rounded to 12 significant digits.
double rounded(double x);

}  // namespace hybrid::cli
