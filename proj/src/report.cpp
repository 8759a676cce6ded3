#include "wha/report.hpp"

#include <sstream>

#include "wha/errors.hpp"

namespace wha {

void Report::pass(const std::string& name) {
  checks_.push_back(CheckResult{name, true, std::nullopt});
}

void Report::fail(const std::string& name, Witness w) {
  checks_.push_back(CheckResult{name, false, std::move(w)});
}

void Report::record(const std::string& name, bool ok) {
  if (ok) {
    pass(name);
  } else {
    fail(name, Witness{});
  }
}

void Report::merge(const std::string& prefix, const Report& sub) {
  for (const CheckResult& c : sub.checks_) {
    CheckResult copy = c;
    copy.name = prefix.empty() ? c.name : prefix + "." + c.name;
    checks_.push_back(std::move(copy));
  }
}

std::size_t Report::passed_count() const {
  std::size_t n = 0;
  for (const auto& c : checks_) n += c.passed ? 1 : 0;
  return n;
}

const CheckResult* Report::first_failure() const {
  for (const auto& c : checks_) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "suite: " << suite_ << "\n";
  for (const auto& c : checks_) {
    os << "check: " << c.name << ": " << (c.passed ? "pass" : "fail") << "\n";
    if (!c.passed && c.witness) {
      os << "witness: indices [";
      for (std::size_t i = 0; i < c.witness->indices.size(); ++i) {
        if (i) os << ", ";
        os << c.witness->indices[i];
      }
      os << "]; lhs " << c.witness->lhs << "; rhs " << c.witness->rhs << "\n";
    }
  }
  os << "summary: passed " << passed_count() << " failed " << failed_count()
     << "\n";
  return os.str();
}

std::string Report::summary() const {
  std::ostringstream os;
  os << suite_ << ": " << passed_count() << "/" << checks_.size()
     << " checks passed";
  if (const CheckResult* f = first_failure()) {
    os << " (first failure: " << f->name << ")";
  }
  return os.str();
}

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::size_t> parse_indices(std::string_view s) {
  // expects "[a, b, c]"
  std::vector<std::size_t> out;
  std::string inner(s.substr(1, s.size() - 2));
  std::istringstream is(inner);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    auto t = strip(tok);
    if (!t.empty()) out.push_back(std::stoul(std::string(t)));
  }
  return out;
}

}  // namespace

Report Report::parse(std::string_view text) {
  Report r;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    std::string_view l = strip(line);
    if (l.empty()) continue;
    if (l.starts_with("suite: ")) {
      r.suite_ = std::string(l.substr(7));
    } else if (l.starts_with("check: ")) {
      std::string_view rest = l.substr(7);
      std::size_t sep = rest.rfind(": ");
      if (sep == std::string_view::npos) {
        throw Error(Error::Kind::SyntaxError, "bad check line in report");
      }
      CheckResult c;
      c.name = std::string(rest.substr(0, sep));
      c.passed = rest.substr(sep + 2) == "pass";
      r.checks_.push_back(std::move(c));
    } else if (l.starts_with("witness: ")) {
      if (r.checks_.empty()) {
        throw Error(Error::Kind::SyntaxError, "witness before any check");
      }
      std::string_view rest = l.substr(9);
      // "indices [...]; lhs [...]; rhs [...]"
      std::size_t lhs_pos = rest.find("; lhs");
      std::size_t rhs_pos = rest.find("; rhs");
      if (!rest.starts_with("indices ") || lhs_pos == std::string_view::npos ||
          rhs_pos == std::string_view::npos) {
        throw Error(Error::Kind::SyntaxError, "bad witness line in report");
      }
      auto field_after = [&](std::size_t pos, std::size_t end) {
        std::size_t start = pos + 6;  // past "; xxx "
        if (start >= end) return std::string();
        return std::string(rest.substr(start, end - start));
      };
      Witness w;
      w.indices = parse_indices(rest.substr(8, lhs_pos - 8));
      w.lhs = field_after(lhs_pos, rhs_pos);
      w.rhs = field_after(rhs_pos, rest.size());
      r.checks_.back().witness = std::move(w);
    } else if (l.starts_with("summary: ")) {
      // recomputed from the checks; nothing to store
    } else {
      throw Error(Error::Kind::SyntaxError,
                  "unrecognized report line: " + std::string(l));
    }
  }
  return r;
}

}  // namespace wha
