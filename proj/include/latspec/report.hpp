#ifndef LATSPEC_REPORT_HPP
#define LATSPEC_REPORT_HPP

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

namespace latspec {

enum class Status { Pass, Fail, Skip };

inline const char* status_label(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skip: return "SKIP";
  }
  return "?";
}

/// One property checked on one subject. A FAIL always carries a witness in
/// `detail`.
struct Verdict {
  std::string subject;
  std::string property;
  Status status = Status::Pass;
  std::string detail;
};

class Report {
 public:
  void add(Verdict v) {
    if (v.status == Status::Fail && v.detail.empty()) v.detail = "no witness recorded";
    items_.push_back(std::move(v));
  }
  void pass(const std::string& subject, const std::string& property, std::string detail = {}) {
    add({subject, property, Status::Pass, std::move(detail)});
  }
  void fail(const std::string& subject, const std::string& property, std::string witness) {
    add({subject, property, Status::Fail, std::move(witness)});
  }
  void skip(const std::string& subject, const std::string& property, std::string reason) {
    add({subject, property, Status::Skip, std::move(reason)});
  }
  void check(const std::string& subject, const std::string& property, bool ok, std::string detail) {
    add({subject, property, ok ? Status::Pass : Status::Fail, std::move(detail)});
  }
  void merge(const Report& o) { items_.insert(items_.end(), o.items_.begin(), o.items_.end()); }
  void note(std::string line) { notes_.push_back(std::move(line)); }

  const std::vector<Verdict>& items() const { return items_; }
  const std::vector<std::string>& notes() const { return notes_; }
  std::size_t count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(items_.begin(), items_.end(), [s](const Verdict& v) { return v.status == s; }));
  }
  bool any_fail() const { return count(Status::Fail) > 0; }
  int exit_code() const { return any_fail() ? 1 : 0; }

  /// `subject  Property: STATUS (detail)` per verdict, notes, then a summary.
  std::string render_text() const {
    std::ostringstream out;
    for (const auto& n : notes_) out << n << '\n';
    for (const auto& v : items_) {
      out << v.subject << "  " << v.property << ": " << status_label(v.status);
      if (!v.detail.empty()) out << " (" << v.detail << ")";
      out << '\n';
    }
    out << "summary: " << count(Status::Pass) << " pass, " << count(Status::Fail) << " fail, "
        << count(Status::Skip) << " skip\n";
    return out.str();
  }

  std::string render_json() const {
    nlohmann::ordered_json j;
    j["notes"] = notes_;
    auto& arr = j["verdicts"] = nlohmann::ordered_json::array();
    for (const auto& v : items_) {
      arr.push_back(
          {{"subject", v.subject}, {"property", v.property}, {"status", status_label(v.status)}, {"detail", v.detail}});
    }
    j["summary"] = {{"pass", count(Status::Pass)}, {"fail", count(Status::Fail)}, {"skip", count(Status::Skip)}};
    return j.dump(2) + "\n";
  }

 private:
  std::vector<Verdict> items_;
  std::vector<std::string> notes_;
};

/// Worker count: LATTICE_SPECTRA_JOBS when set to a positive integer,
/// otherwise the hardware concurrency (at least 1).
inline std::size_t job_count() {
  if (const char* env = std::getenv("LATTICE_SPECTRA_JOBS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Applies fn to every item on up to `job_count()` threads; results keep the
/// input order.
template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, Fn fn) -> std::vector<decltype(fn(items.front()))> {
  using R = decltype(fn(items.front()));
  std::vector<R> out(items.size());
  const std::size_t jobs = std::min(job_count(), std::max<std::size_t>(items.size(), 1));
  if (jobs <= 1) {
    for (std::size_t k = 0; k < items.size(); ++k) out[k] = fn(items[k]);
    return out;
  }
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < jobs; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t k = t; k < items.size(); k += jobs) out[k] = fn(items[k]);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace latspec

#endif  // LATSPEC_REPORT_HPP
