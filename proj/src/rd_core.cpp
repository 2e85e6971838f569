#include "rdbound/rd_core.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <mutex>
#include <regex>
#include <set>
#include <sstream>

#include "rdbound/error.hpp"
#include "rdbound/ladder_data.hpp"
#include "rdbound/numtheory.hpp"

namespace rdbound {

namespace {

const std::map<uint32_t, int64_t> kPsu2Exceptions = {{5, 5}, {7, 7}, {9, 6}, {11, 11}};
const std::map<uint32_t, int64_t> kPsu2CompatMu = {{13, 12}, {16, 14}, {37, 36}};

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string_view family_name(Family f) { return f == Family::PSU2 ? "psu2" : "psu3"; }

Family parse_family(std::string_view s) {
  if (s == "psu2" || s == "psl2") return Family::PSU2;
  if (s == "psu3") return Family::PSU3;
  throw Error(ErrorCode::InvalidArgument, "unknown group family " + std::string(s) + " (expected psu2, psl2 or psu3)");
}

RdLadder RdLadder::parse(std::string_view text, const std::string& source) {
  static const std::regex version_re(R"(version:\s*(\d+))");
  static const std::regex value_re(R"((\d+)\s*=\s*(\d+))");
  static const std::regex rule_re(R"(from\s+(\d+)\s*:\s*n\s*-\s*(\d+))");
  static const std::regex compat_re(R"(compat\s+(\d+)\s*=\s*(\d+))");
  static const std::regex known_re(R"(known\s+(psu2|psl2|psu3)\s+(\d+)\s*=\s*(\d+))");
  RdLadder l;
  l.source_ = source;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    std::smatch m;
    if (std::regex_match(line, m, version_re)) {
      l.version_ = std::stoi(m[1]);
    } else if (std::regex_match(line, m, value_re)) {
      l.values_[std::stoll(m[1])] = std::stoll(m[2]);
    } else if (std::regex_match(line, m, rule_re)) {
      l.rules_.push_back({std::stoll(m[1]), std::stoll(m[2])});
    } else if (std::regex_match(line, m, compat_re)) {
      l.compat_[std::stoll(m[1])] = std::stoll(m[2]);
    } else if (std::regex_match(line, m, known_re)) {
      l.known_[{parse_family(m[1].str()), static_cast<uint32_t>(std::stoul(m[2]))}] = std::stoll(m[3]);
    } else {
      throw Error(ErrorCode::LadderFormat, source + ":" + std::to_string(lineno) + ": cannot parse '" + line + "'");
    }
  }
  if (l.version_ != 1) throw Error(ErrorCode::LadderFormat, source + ": missing or unsupported version");
  std::sort(l.rules_.begin(), l.rules_.end(), [](const Rule& a, const Rule& b) { return a.from < b.from; });
  l.validate();
  return l;
}

void RdLadder::validate() const {
  // Between breakpoints every piece is n - c or an explicit value, so checking breakpoints suffices.
  std::set<int64_t> points = {1, 2};
  for (const auto& [n, v] : values_) points.insert({n, n + 1});
  for (const auto& [n, v] : compat_) points.insert({n, n + 1});
  for (const auto& r : rules_) {
    if (r.offset < 1) throw Error(ErrorCode::LadderFormat, source_ + ": rule offsets must be at least 1");
    points.insert({std::max<int64_t>(1, r.from - 1), r.from, r.from + 1});
  }
  for (bool compat : {false, true}) {
    int64_t prev = 0;
    for (int64_t n : points) {
      const int64_t v = rd_upper(n, compat);
      if (v < 1) throw Error(ErrorCode::LadderFormat, source_ + ": RD(" + std::to_string(n) + ") bound below 1");
      if (n >= 2 && v > n - 1)
        throw Error(ErrorCode::LadderFormat, source_ + ": RD(" + std::to_string(n) + ") bound exceeds n - 1");
      if (v < prev) throw Error(ErrorCode::LadderFormat, source_ + ": ladder decreases at n = " + std::to_string(n));
      prev = v;
    }
  }
}

RdLadder RdLadder::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::LadderFormat, "cannot read ladder file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

const RdLadder& RdLadder::builtin() {
  static const RdLadder l = parse(detail::kDefaultLadder, "built-in ladder");
  return l;
}

const RdLadder& RdLadder::active() {
  static const RdLadder l = [] {
    const char* path = std::getenv("RDBOUND_LADDER");
    return (path && *path) ? from_file(path) : builtin();
  }();
  return l;
}

int64_t RdLadder::rd_upper(int64_t n, bool paper_compat) const {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "RD(n) needs n >= 1");
  if (paper_compat) {
    auto it = compat_.find(n);
    if (it != compat_.end()) return it->second;
  }
  auto it = values_.find(n);
  if (it != values_.end()) return it->second;
  int64_t offset = -1;
  for (const auto& r : rules_)
    if (r.from <= n) offset = r.offset;
  if (offset < 0) return std::max<int64_t>(1, n - 1);
  return n - offset;
}

std::optional<int64_t> RdLadder::known_bound(Family f, uint32_t q) const {
  auto it = known_.find({f, q});
  if (it == known_.end()) return std::nullopt;
  return it->second;
}

int64_t rd_upper(int64_t n) { return RdLadder::active().rd_upper(n); }

int64_t table_mu(Family f, uint32_t q, bool paper_compat) {
  if (!prime_power(q)) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  const int64_t Q = q;
  if (f == Family::PSU2) {
    if (q < 4) throw Error(ErrorCode::NotSimple, "PSL(2," + std::to_string(q) + ") is not simple");
    if (paper_compat) {
      auto it = kPsu2CompatMu.find(q);
      if (it != kPsu2CompatMu.end()) return it->second;
    }
    auto it = kPsu2Exceptions.find(q);
    return it != kPsu2Exceptions.end() ? it->second : Q + 1;
  }
  if (q == 2) return 9;
  if (q == 5) return 50;
  return Q * Q * Q + 1;
}

int64_t mu(Family f, uint32_t q, bool paper_compat) {
  if (f == Family::PSU3 && q == 2) throw Error(ErrorCode::NotSimple, "PSU(3,2) is not simple");
  return table_mu(f, q, paper_compat);
}

int64_t bound_by_mu(Family f, uint32_t q, const RdLadder& ladder, bool paper_compat) {
  return ladder.rd_upper(table_mu(f, q, paper_compat), paper_compat);
}

bool is_compat_flagged(Family f, uint32_t q) {
  if (f != Family::PSU2) return false;
  return q == 9 || kPsu2CompatMu.count(q) > 0;
}

}  // namespace rdbound
