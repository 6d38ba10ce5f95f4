#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopfalg/tannaka.hpp"

namespace hopfalg {

// The "coend" section, or a hand-written algebroid in the same shape. All
// maps are given on flat k-tensors.
struct StructureData {
  DoubleBimodule carrier;
  Mat coproduct;  // (dim L)^2 x dim L
  Mat counit;     // n x dim L
  std::optional<Mat> product;            // dim L x (dim L)^2
  std::optional<Mat> unit;               // dim L x n^2
  std::optional<Mat> antipode;           // (dim L)^2 x dim L
  std::optional<Mat> opposite_antipode;  // (dim L)^2 x dim L
};

struct Document {
  Field field;
  AlgebraPtr algebra;
  std::vector<std::pair<std::string, DoubleBimodule>> modules;
  std::optional<Presentation> presentation;  // present when "objects" is
  std::optional<StructureData> structure;    // present when "coend" is
};

// Throws ParseError for malformed JSON or scalars and SchemaError for
// missing fields, unknown names and shape mismatches. `field` overrides the
// file's field.
Document parse_document(std::string_view text, std::optional<Field> field = std::nullopt);

struct DualOutput {
  std::string module;
  std::optional<DualData> left;
  std::optional<DualData> right;
};

struct OutputParts {
  const Document* input = nullptr;
  const Reconstruction* reconstruction = nullptr;
  const Report* report = nullptr;
  std::vector<DualOutput> duals;
};

// Echoes the input, then "coend", "duals" and "report" when present.
std::string write_document(const OutputParts& parts);
std::string report_json(const Report& report);

// The algebroid stored in the "coend" section.
CoalgebroidPtr structure_coalgebroid(const Document& d);
BialgebroidPtr structure_bialgebroid(const Document& d, const CoalgebroidPtr& base);

}  // namespace hopfalg
