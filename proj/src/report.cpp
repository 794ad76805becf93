#include "artin/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace artin {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "FAIL";
    case Status::ExpectedFail: return "xfail";
    case Status::Rejected: return "rejected";
    case Status::Skipped: return "n/a";
    case Status::Unknown: return "UNKNOWN";
  }
  return "?";
}

void Report::append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

bool Report::ok() const { return count(Status::Fail) == 0 && count(Status::Unknown) == 0; }

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

namespace {

// display width in code points, so that φ and ≺ do not skew the columns
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

void pad(std::ostringstream& out, const std::string& s, std::size_t w) {
  out << s;
  for (std::size_t i = width(s); i < w; ++i) out << ' ';
}

}  // namespace

std::string render_human(const Report& r) {
  std::ostringstream out;
  if (r.checks.empty()) {
    out << "no checks\n";
    return out.str();
  }
  std::size_t ws = 7, wp = 8, wc = 5;
  for (const Check& c : r.checks) {
    ws = std::max(ws, width(c.subject));
    wp = std::max(wp, width(c.property));
    wc = std::max(wc, std::to_string(c.cases).size());
  }
  pad(out, "subject", ws + 2);
  pad(out, "property", wp + 2);
  pad(out, "status", 10);
  pad(out, "cases", wc + 2);
  out << "detail\n";
  for (const Check& c : r.checks) {
    pad(out, c.subject, ws + 2);
    pad(out, c.property, wp + 2);
    pad(out, status_name(c.status), 10);
    const std::string n = std::to_string(c.cases);
    out << std::string(wc - n.size(), ' ') << n << "  " << c.detail;
    out << '\n';
  }
  out << r.checks.size() << (r.checks.size() == 1 ? " check: " : " checks: ") << r.count(Status::Pass) << " pass, " << r.count(Status::Fail) << " fail, "
      << r.count(Status::ExpectedFail) << " xfail, " << r.count(Status::Rejected) << " rejected, "
      << r.count(Status::Skipped) << " n/a, " << r.count(Status::Unknown) << " unknown\n";
  return out.str();
}

std::string render_records(const Report& r) {
  std::ostringstream out;
  for (const Check& c : r.checks) {
    nlohmann::ordered_json j;
    j["subject"] = c.subject;
    j["property"] = c.property;
    j["status"] = status_name(c.status);
    j["cases"] = c.cases;
    j["detail"] = c.detail;
    out << j.dump() << '\n';
  }
  return out.str();
}

}  // namespace artin
