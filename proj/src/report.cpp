#include "pha/report.hpp"

namespace pha {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

void Report::add(const std::string& name, bool ok, const std::string& witness) {
  checks_.push_back({name, ok ? Status::Pass : Status::Fail, ok ? std::string() : witness, false});
}

void Report::skip(const std::string& name, const std::string& reason) {
  checks_.push_back({name, Status::Skipped, reason, false});
}

void Report::info(const std::string& name, bool ok, const std::string& witness) {
  checks_.push_back({name, ok ? Status::Pass : Status::Fail, ok ? std::string() : witness, true});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (auto c : other.checks_) {
    if (!prefix.empty()) c.name = prefix + "." + c.name;
    checks_.push_back(std::move(c));
  }
}

bool Report::ok() const {
  for (const auto& c : checks_)
    if (c.status == Status::Fail && !c.informational) return false;
  return true;
}

bool Report::passed(const std::string& name) const {
  const Check* c = find(name);
  return c != nullptr && c->status == Status::Pass;
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

std::string Report::first_failure() const {
  for (const auto& c : checks_)
    if (c.status == Status::Fail && !c.informational) return c.name + (c.witness.empty() ? "" : ": " + c.witness);
  return {};
}

std::string Report::text() const {
  std::string s;
  if (!subject_.empty()) s += subject_ + "\n";
  for (const auto& c : checks_) {
    s += "  [" + status_name(c.status) + "] " + c.name;
    if (c.informational) s += " (info)";
    if (!c.witness.empty()) s += " -- " + c.witness;
    s += "\n";
  }
  return s;
}

}  // namespace pha
