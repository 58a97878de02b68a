#include "crown_cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace crown::cli {

const char* to_string(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kFlagged: return "flagged";
  }
  return "fail";
}

void Report::add(std::string name, Status s, double residual, std::string anchor, std::string detail) {
  items.push_back({std::move(name), s, residual, std::move(anchor), std::move(detail)});
}

void Report::add_check(std::string name, bool ok, double residual, std::string anchor, std::string detail) {
  add(std::move(name), ok ? Status::kPass : Status::kFail, residual, std::move(anchor), std::move(detail));
}

bool Report::failed(bool strict) const {
  for (const auto& it : items) {
    if (it.status == Status::kFail) return true;
    if (strict && it.status == Status::kFlagged) return true;
  }
  return false;
}

std::string Report::to_json(bool strict) const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["suite"] = suite;
  j["items"] = nlohmann::ordered_json::array();
  for (const auto& it : items) {
    nlohmann::ordered_json e;
    e["name"] = it.name;
    Status s = it.status;
    if (strict && s == Status::kFlagged) s = Status::kFail;
    e["status"] = to_string(s);
    // JSON has no NaN or infinity
    if (std::isfinite(it.residual))
      e["residual"] = it.residual;
    else
      e["residual"] = nullptr;
    e["paper_anchor"] = it.paper_anchor;
    if (!it.detail.empty()) e["detail"] = it.detail;
    j["items"].push_back(std::move(e));
  }
  if (!data_json.empty()) j["data"] = nlohmann::ordered_json::parse(data_json);
  j["status"] = failed(strict) ? "fail" : "pass";
  return j.dump(2) + "\n";
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path dir = target.has_parent_path() ? target.parent_path() : fs::path(".");
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw std::runtime_error("cannot write " + path + ": no such directory");
  const fs::path tmp = dir / ("." + target.filename().string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    out.flush();
    if (!out) {
      out.close();
      fs::remove(tmp, ec);
      throw std::runtime_error("cannot write " + path);
    }
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot write " + path + ": rename failed");
  }
}

}  // namespace crown::cli
