#pragma once

#include <string>
#include <vector>

namespace crown::cli {

enum class Status { kPass, kFail, kFlagged };
const char* to_string(Status s);

struct Item {
  std::string name;
  Status status = Status::kPass;
  double residual = 0;
  std::string paper_anchor;
  std::string detail;  ///< omitted from JSON when empty
};

/// Suite result.  Overall status is fail iff some item fails; flagged items
/// fail only under strict mode.
struct Report {
  std::string suite;
  std::vector<Item> items;
  std::string data_json;  ///< optional JSON object with suite-specific values

  void add(std::string name, Status s, double residual, std::string anchor, std::string detail = {});
  void add_check(std::string name, bool ok, double residual, std::string anchor, std::string detail = {});
  bool failed(bool strict) const;
  std::string to_json(bool strict) const;
};

/// Writes `content` to `path` through a temporary file in the same directory
/// and a rename.  Throws std::runtime_error if the path cannot be written.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace crown::cli
