#include "hopfalg/report.hpp"

#include <algorithm>
#include <sstream>

#include "hopfalg/errors.hpp"

namespace hopfalg {

const std::vector<std::string>& tag_registry() {
  static const std::vector<std::string> tags = {
      "Algebra/assoc", "Algebra/unit",
      "Bimodule/left-hom", "Bimodule/left-unit", "Bimodule/right-antihom", "Bimodule/right-unit",
      "Bimodule/commute",
      "Dual/1.6", "Dual/1.9", "Dual/1.10", "Dual/1.11",
      "RightDual/1.6", "RightDual/1.9", "RightDual/1.10", "RightDual/1.11",
      "Eq.9", "Coassoc", "Counit/linear", "Eq.10", "Coalg/iii", "Eq.11", "Eq.12", "Eq.13",
      "Anchor/actions",
      "Comod/linear", "Comod/coassoc", "Comod/counit", "Eq.18", "Lemma1.3.2", "Eq.19",
      "LComod/linear", "LComod/coassoc", "LComod/counit", "Eq.17.2", "Eq.17.3",
      "Lemma1.3.3", "Lemma1.3.3/roundtrip",
      "Boxtimes/well-defined",
      "Eq.24", "Eq.25", "Eq.26", "Eq.27", "Eq.29", "Eq.30", "Eq.31", "Bialg/s-antihom",
      "Bialg/t-hom", "Bialg/unit-coalg",
      "Lemma1.4.1",
      "Eq.341", "Eq.342", "Eq.343",
      "Lemma7.1/35.0", "Lemma7.1/35", "Lemma7.1/39", "Lemma7.1/41", "Lemma7.1/41b",
      "Lemma7.1/41c",
      "Prop7.1/43b", "Prop7.1/45", "Prop7.1/47",
      "OpAntipode/1", "OpAntipode/2", "Lemma7.2/a", "Lemma7.2/b", "Lemma7.2/c",
      "Prop7.2/17.2", "Prop7.2/ev", "Prop7.2/db",
      "Pres/typing", "Pres/bimodule", "Pres/closure", "Pres/theta", "Pres/rt9", "Pres/rt10", "Pres/zigzag", "Pres/projective",
      "Coend/descent", "Coend/basis-independence", "Coend/rt4", "rt13", "rt14", "rt16/cross-check", "rt16/opposite-cross-check",
      "Coend/comodule-morphism", "Coend/tensor-coaction",
      "Roundtrip/iso",
  };
  return tags;
}

bool is_registered_tag(std::string_view tag) {
  const auto& tags = tag_registry();
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

void Report::record(std::string_view tag, bool pass, std::string counterexample) {
  if (!is_registered_tag(tag)) throw Error("unregistered report tag: " + std::string(tag));
  for (auto& e : entries_) {
    if (e.tag == tag) {
      if (e.pass && !pass) {
        e.pass = false;
        e.counterexample = std::move(counterexample);
      }
      return;
    }
  }
  entries_.push_back(CheckEntry{std::string(tag), pass, pass ? std::string() : std::move(counterexample)});
}

bool Report::compare(std::string_view tag, const Mat& lhs, const Mat& rhs, std::string_view label) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    record(tag, false,
           "shape mismatch " + std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) + " vs " +
               std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols()));
    return false;
  }
  if (lhs == rhs) {
    record(tag, true);
    return true;
  }
  for (std::size_t c = 0; c < lhs.cols(); ++c) {
    Mat a = lhs.col(c);
    Mat b = rhs.col(c);
    if (!(a == b)) {
      std::ostringstream os;
      os << label << " " << c << ": lhs=" << a.transpose().to_string()
         << " rhs=" << b.transpose().to_string();
      record(tag, false, os.str());
      break;
    }
  }
  return false;
}

void Report::merge(const Report& other) {
  for (const auto& e : other.entries_) record(e.tag, e.pass, e.counterexample);
}

bool Report::ok() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const CheckEntry& e) { return e.pass; });
}

const CheckEntry* Report::find(std::string_view tag) const {
  for (const auto& e : entries_)
    if (e.tag == tag) return &e;
  return nullptr;
}

bool Report::passed(std::string_view tag) const {
  const auto* e = find(tag);
  return e != nullptr && e->pass;
}

std::vector<std::string> Report::failed_tags() const {
  std::vector<std::string> out;
  for (const auto& e : entries_)
    if (!e.pass) out.push_back(e.tag);
  return out;
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& e : entries_) {
    os << (e.pass ? "PASS " : "FAIL ") << e.tag;
    if (!e.pass && !e.counterexample.empty()) os << "  (" << e.counterexample << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace hopfalg
