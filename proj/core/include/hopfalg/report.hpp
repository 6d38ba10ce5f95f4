#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hopfalg/matrix.hpp"

namespace hopfalg {

// Every equation tag a checker may emit. Reports never carry tags outside
// this list.
const std::vector<std::string>& tag_registry();
bool is_registered_tag(std::string_view tag);

struct CheckEntry {
  std::string tag;
  bool pass = true;
  std::string counterexample;
};

class Report {
 public:
  // Records the outcome of one tag. A tag seen twice keeps the first failure.
  void record(std::string_view tag, bool pass, std::string counterexample = {});
  // Compares two matrices column by column; `label` names what the columns index.
  bool compare(std::string_view tag, const Mat& lhs, const Mat& rhs, std::string_view label = "basis");
  void merge(const Report& other);

  bool ok() const;
  const std::vector<CheckEntry>& entries() const { return entries_; }
  const CheckEntry* find(std::string_view tag) const;
  bool passed(std::string_view tag) const;
  std::vector<std::string> failed_tags() const;
  std::string to_text() const;

 private:
  std::vector<CheckEntry> entries_;
};

}  // namespace hopfalg
