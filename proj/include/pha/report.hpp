#pragma once

#include <string>
#include <vector>

namespace pha {

enum class Status { Pass, Fail, Skipped };

std::string status_name(Status s);

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string witness;
  bool informational = false;  // never affects ok()
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  void add(const std::string& name, bool ok, const std::string& witness = {});
  void pass(const std::string& name) { add(name, true); }
  void fail(const std::string& name, const std::string& witness) { add(name, false, witness); }
  void skip(const std::string& name, const std::string& reason);
  void info(const std::string& name, bool ok, const std::string& witness = {});
  void merge(const Report& other, const std::string& prefix = {});

  bool ok() const;
  // true when the named check exists and passed
  bool passed(const std::string& name) const;
  const Check* find(const std::string& name) const;
  const std::string& subject() const { return subject_; }
  const std::vector<Check>& checks() const { return checks_; }
  std::string first_failure() const;
  std::string text() const;

 private:
  std::string subject_;
  std::vector<Check> checks_;
};

}  // namespace pha
